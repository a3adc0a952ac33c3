#include "gridtoll/evaluate.hpp"

#include "gridtoll/error.hpp"

#include <map>

namespace gridtoll {

std::vector<Money> shortest_path_costs(const GridInstance& g, const Pricing& p, VertexId s) {
    if (!g.in_bounds(s)) throw Error(Error::Kind::usage, "source out of range");
    const int n = g.vertex_count();

    // Adjacency with finite weights only; O(V^2) selection keeps tie-breaking
    // (and therefore every caller) deterministic.
    std::vector<std::vector<std::pair<int, Money>>> adj(n);
    for (EdgeId e : g.present_edges()) {
        const Money& w = p.at(e);
        if (w.infinite()) continue;
        int ia = g.vertex_index(e.a()), ib = g.vertex_index(e.b());
        adj[ia].push_back({ib, w});
        adj[ib].push_back({ia, w});
    }

    std::vector<Money> dist(n, Money::infinity());
    std::vector<char> done(n, 0);
    dist[g.vertex_index(s)] = Money();
    for (int iter = 0; iter < n; ++iter) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && !dist[v].infinite() && (best == -1 || dist[v] < dist[best])) best = v;
        if (best == -1) break;
        done[best] = 1;
        for (const auto& [to, w] : adj[best]) {
            if (done[to]) continue;
            Money cand = dist[best] + w;
            if (cand < dist[to]) dist[to] = std::move(cand);
        }
    }
    return dist;
}

Money shortest_path_cost(const GridInstance& g, const Pricing& p, VertexId s, VertexId t) {
    if (!g.in_bounds(t)) throw Error(Error::Kind::usage, "target out of range");
    return shortest_path_costs(g, p, s)[g.vertex_index(t)];
}

Money revenue(const GridInstance& g, const Pricing& p, const std::vector<Driver>& drivers) {
    // One SSSP per distinct source.
    std::map<VertexId, std::vector<const Driver*>> by_source;
    for (const Driver& d : drivers) by_source[d.u].push_back(&d);

    Money total;
    for (const auto& [src, group] : by_source) {
        std::vector<Money> dist = shortest_path_costs(g, p, src);
        for (const Driver* d : group) {
            const Money& cost = dist[g.vertex_index(d->v)];
            if (cost <= d->budget) total += cost;  // inclusive boundary: cost == budget pays
        }
    }
    return total;
}

Money revenue(const GridInstance& g, const Pricing& p) { return revenue(g, p, g.drivers()); }

} // namespace gridtoll
