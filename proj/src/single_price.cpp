#include "gridtoll/single_price.hpp"

#include <deque>
#include <map>
#include <set>

namespace gridtoll {

std::vector<int> hop_distances(const GridInstance& g, VertexId src) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<std::vector<int>> adj(dist.size());
    for (EdgeId e : g.present_edges()) {
        int a = g.vertex_index(e.a()), b = g.vertex_index(e.b());
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::deque<int> q;
    dist[g.vertex_index(src)] = 0;
    q.push_back(g.vertex_index(src));
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

SinglePriceResult best_single_price(const GridInstance& g, const std::vector<Driver>& drivers) {
    // Hop table from each distinct source.
    std::map<VertexId, std::vector<int>> hops;
    for (const Driver& d : drivers)
        if (!hops.count(d.u)) hops.emplace(d.u, hop_distances(g, d.u));

    struct Trip {
        unsigned long hop;
        Money budget;
    };
    std::vector<Trip> trips;
    std::set<Money> candidates;
    for (const Driver& d : drivers) {
        int h = hops.at(d.u)[static_cast<std::size_t>(g.vertex_index(d.v))];
        if (h < 1) continue;  // unreachable or zero-length trips never pay anything > 0
        trips.push_back({static_cast<unsigned long>(h), d.budget});
        candidates.insert(d.budget.div(static_cast<unsigned long>(h)));
    }
    SinglePriceResult best{Money(), Money()};
    // Descending order so equal revenues keep the larger price.
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        Money total;
        for (const Trip& t : trips) {
            Money cost = it->times(t.hop);
            if (cost <= t.budget) total += cost;
        }
        if (total > best.revenue) best = {*it, total};
    }
    return best;
}

SinglePriceResult best_single_price(const GridInstance& g) {
    return best_single_price(g, g.drivers());
}

} // namespace gridtoll
