#include "gridtoll/compression.hpp"

#include "gridtoll/error.hpp"
#include "gridtoll/evaluate.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridtoll {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::logic_error(std::string("compression invariant violated: ") + msg);
}

std::pair<int, int> norm_edge(int a, int b) { return std::minmax(a, b); }

}  // namespace

void WeightedGraph::add_edge(int a, int b, const Money& w) {
    const int n = vertex_count();
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
        throw Error(Error::Kind::usage, "bad edge endpoints");
    const auto key = norm_edge(a, b);
    auto it = weights_.find(key);
    if (it == weights_.end()) {
        weights_.emplace(key, w);
        adj_[a].emplace_back(b, w);
        adj_[b].emplace_back(a, w);
        return;
    }
    // parallel adds collapse to the lighter weight
    if (w < it->second) {
        it->second = w;
        for (auto& [v, wt] : adj_[a])
            if (v == b) wt = w;
        for (auto& [v, wt] : adj_[b])
            if (v == a) wt = w;
    }
}

const std::vector<std::pair<int, Money>>& WeightedGraph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count()) throw Error(Error::Kind::usage, "vertex out of range");
    return adj_[v];
}

bool WeightedGraph::has_edge(int a, int b) const { return weights_.count(norm_edge(a, b)) != 0; }

const Money& WeightedGraph::edge_weight(int a, int b) const {
    const auto it = weights_.find(norm_edge(a, b));
    if (it == weights_.end()) throw Error(Error::Kind::usage, "no such edge");
    return it->second;
}

DijkstraResult dijkstra(const WeightedGraph& g, int src) {
    const int n = g.vertex_count();
    if (src < 0 || src >= n) throw Error(Error::Kind::usage, "source out of range");
    DijkstraResult r;
    r.dist.assign(n, Money::infinity());
    r.parent.assign(n, -1);
    r.dist[src] = Money();
    std::set<std::pair<Money, int>> queue;
    queue.insert({Money(), src});
    while (!queue.empty()) {
        const auto [d, u] = *queue.begin();
        queue.erase(queue.begin());
        if (d != r.dist[u]) continue;  // stale entry
        for (const auto& [v, w] : g.neighbors(u)) {
            if (w.infinite()) continue;
            Money nd = d + w;
            if (nd < r.dist[v]) {
                queue.erase({r.dist[v], v});
                r.dist[v] = nd;
                r.parent[v] = u;
                queue.insert({std::move(nd), v});
            }
        }
    }
    return r;
}

std::set<int> crossing_vertices(const std::vector<int>& p, const std::vector<int>& q) {
    std::set<std::pair<int, int>> pe, qe;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) pe.insert(norm_edge(p[i], p[i + 1]));
    for (std::size_t i = 0; i + 1 < q.size(); ++i) qe.insert(norm_edge(q[i], q[i + 1]));
    // incidence counts within the shared edge set
    std::map<int, int> shared_inc;
    for (const auto& e : pe)
        if (qe.count(e)) {
            ++shared_inc[e.first];
            ++shared_inc[e.second];
        }
    const std::set<int> pv(p.begin(), p.end());
    std::set<int> out;
    for (const int v : q) {
        if (!pv.count(v)) continue;
        const auto it = shared_inc.find(v);
        // interior vertices of a shared segment touch two shared edges;
        // everything else shared is a segment endpoint
        if (it == shared_inc.end() || it->second <= 1) out.insert(v);
    }
    return out;
}

namespace {

// Cuts out any loop, keeping the first visit of each vertex.
void simplify_path(std::vector<int>& p) {
    std::vector<int> out;
    std::map<int, int> at;
    for (const int v : p) {
        const auto it = at.find(v);
        if (it != at.end()) {
            while (static_cast<int>(out.size()) > it->second + 1) {
                at.erase(out.back());
                out.pop_back();
            }
        } else {
            at[v] = static_cast<int>(out.size());
            out.push_back(v);
        }
    }
    p = std::move(out);
}

Money path_weight(const WeightedGraph& g, const std::vector<int>& p) {
    Money w;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) w += g.edge_weight(p[i], p[i + 1]);
    return w;
}

}  // namespace

PathCollection reroute_shortest_paths(const WeightedGraph& g, const std::vector<int>& terminals) {
    PathCollection coll;
    coll.terminals = terminals;
    const std::set<int> term_set(terminals.begin(), terminals.end());
    if (term_set.size() != terminals.size())
        throw Error(Error::Kind::usage, "terminals must be distinct");
    for (const int t : terminals)
        if (t < 0 || t >= g.vertex_count())
            throw Error(Error::Kind::usage, "terminal out of range");

    std::vector<DijkstraResult> from(terminals.size());
    std::vector<char> have(terminals.size(), 0);

    for (std::size_t i = 0; i < terminals.size(); ++i) {
        for (std::size_t j = i + 1; j < terminals.size(); ++j) {
            if (!have[i]) {
                from[i] = dijkstra(g, terminals[i]);
                have[i] = 1;
            }
            const Money& target = from[i].dist[terminals[j]];
            if (target.infinite()) continue;  // unreachable pair is omitted
            std::vector<int> p;
            for (int v = terminals[j]; v != -1; v = from[i].parent[v]) p.push_back(v);
            std::reverse(p.begin(), p.end());
            require(p.front() == terminals[i], "path must start at its terminal");

            for (const std::vector<int>& r : coll.paths) {
                const std::set<int> cross = crossing_vertices(p, r);
                if (cross.size() <= 2) continue;
                std::map<int, int> pos_p, pos_r;
                for (std::size_t x = 0; x < p.size(); ++x) pos_p[p[x]] = static_cast<int>(x);
                for (std::size_t x = 0; x < r.size(); ++x) pos_r[r[x]] = static_cast<int>(x);
                int first = static_cast<int>(p.size()), last = -1;
                for (const int v : cross) {
                    first = std::min(first, pos_p.at(v));
                    last = std::max(last, pos_p.at(v));
                }
                const int c1 = p[first], cq = p[last];
                const int r1 = pos_r.at(c1), r2 = pos_r.at(cq);
                std::vector<int> mid;
                if (r1 <= r2)
                    mid.assign(r.begin() + r1, r.begin() + r2 + 1);
                else
                    mid.assign(r.rbegin() + (static_cast<int>(r.size()) - 1 - r1),
                               r.rbegin() + (static_cast<int>(r.size()) - r2));
                require(!mid.empty() && mid.front() == c1 && mid.back() == cq,
                        "splice segment endpoints");
                std::vector<int> np(p.begin(), p.begin() + first + 1);
                np.insert(np.end(), mid.begin() + 1, mid.end());
                np.insert(np.end(), p.begin() + last + 1, p.end());
                simplify_path(np);
                require(np.front() == terminals[i] && np.back() == terminals[j],
                        "splice must keep the endpoints");
                require(path_weight(g, np) == target, "splice must preserve the weight");
                p = std::move(np);
            }

            coll.pairs.emplace_back(terminals[i], terminals[j]);
            coll.paths.push_back(std::move(p));

            // incremental bound on segment endpoints outside the terminals
            std::set<int> outside;
            for (std::size_t x = 0; x < coll.paths.size(); ++x)
                for (std::size_t y = x + 1; y < coll.paths.size(); ++y)
                    for (const int v : crossing_vertices(coll.paths[x], coll.paths[y]))
                        if (!term_set.count(v)) outside.insert(v);
            const std::size_t k = coll.paths.size();
            require(outside.size() <= k * (k - 1), "crossing bound violated");
        }
    }
    return coll;
}

WeightedGrid::WeightedGrid(int w, int len) : width(w), length(len) {
    if (w < 1 || len < 1) throw Error(Error::Kind::usage, "grid dimensions must be positive");
    for (int r = 0; r < len; ++r)
        for (int c = 0; c + 1 < w; ++c) weights.emplace(EdgeId::h(r, c), Money::infinity());
    for (int r = 0; r + 1 < len; ++r)
        for (int c = 0; c < w; ++c) weights.emplace(EdgeId::v(r, c), Money::infinity());
}

bool WeightedGrid::valid_edge(EdgeId e) const {
    if (e.kind == EdgeId::Kind::horizontal)
        return e.row >= 0 && e.row < length && e.col >= 0 && e.col + 1 < width;
    return e.row >= 0 && e.row + 1 < length && e.col >= 0 && e.col < width;
}

const Money& WeightedGrid::weight(EdgeId e) const {
    const auto it = weights.find(e);
    if (it == weights.end()) throw Error(Error::Kind::usage, "edge not in grid: " + e.str());
    return it->second;
}

void WeightedGrid::set(EdgeId e, Money w) {
    if (!valid_edge(e)) throw Error(Error::Kind::usage, "invalid edge: " + e.str());
    weights[e] = std::move(w);
}

void WeightedGrid::validate() const {
    if (width < 1 || length < 1)
        throw Error(Error::Kind::usage, "grid dimensions must be positive");
    const std::size_t expect = static_cast<std::size_t>(length) * (width - 1) +
                               static_cast<std::size_t>(length - 1) * width;
    if (weights.size() != expect)
        throw Error(Error::Kind::usage, "weight table does not match the grid shape");
    for (const auto& [e, w] : weights) {
        if (!valid_edge(e)) throw Error(Error::Kind::usage, "invalid edge: " + e.str());
        (void)w;
    }
}

WeightedGrid weighted_from_pricing(const GridInstance& g, const Pricing& p) {
    WeightedGrid out(g.width(), g.length());
    for (const EdgeId& e : g.all_edges()) out.set(e, p.at(e));
    return out;
}

std::vector<std::vector<Money>> first_row_distances(const WeightedGrid& wg) {
    GridInstance g(wg.width, wg.length);
    Pricing p;
    for (const EdgeId& e : g.all_edges()) p.set(e, wg.weight(e));
    std::vector<std::vector<Money>> out;
    out.reserve(wg.width);
    for (int c = 0; c < wg.width; ++c) {
        const std::vector<Money> dist = shortest_path_costs(g, p, {0, c});
        std::vector<Money> row;
        row.reserve(wg.width);
        for (int c2 = 0; c2 < wg.width; ++c2) row.push_back(dist[g.vertex_index({0, c2})]);
        out.push_back(std::move(row));
    }
    return out;
}

int compression_depth_cap(int omega) {
    if (omega < 1) throw Error(Error::Kind::usage, "grid width must be at least 1");
    long long w5 = 1;
    for (int i = 0; i < 5; ++i) w5 *= omega;
    return static_cast<int>((w5 + 3) / 4);
}

namespace {

// A band strictly between two retained rows holds only degree-2 stretches of
// the path union, so it decomposes into disjoint path components; each
// component enters/leaves the band through exactly two boundary verticals.
struct PairSame {
    int c1 = 0, c2 = 0;  // attachment columns on the shared boundary, c1 < c2
    Money w;             // whole component weight, boundary verticals included
    int turn = 0;        // nesting height; 0 turns tightest
};

struct PairThrough {
    int top = 0, bottom = 0;  // attachment columns above and below
    Money w;
    int level = -1;  // turn-row level; -1 when top == bottom (straight column)
};

struct StripContent {
    std::vector<PairSame> ups;    // both ends attach to the row above
    std::vector<PairSame> downs;  // both ends attach to the row below
    std::vector<PairThrough> crosses;

    bool empty() const { return ups.empty() && downs.empty() && crosses.empty(); }
};

struct UnionGraph {
    std::set<std::pair<int, int>> edges;
    std::map<int, std::vector<int>> adj;

    bool has(int a, int b) const { return edges.count(norm_edge(a, b)) != 0; }
};

EdgeId edge_between(int x, int y, int w) {
    const int rx = x / w, cx = x % w, ry = y / w, cy = y % w;
    if (rx == ry) {
        require(std::abs(cx - cy) == 1, "grid edge must join neighbors");
        return EdgeId::h(rx, std::min(cx, cy));
    }
    require(cx == cy && std::abs(rx - ry) == 1, "grid edge must join neighbors");
    return EdgeId::v(std::min(rx, ry), cx);
}

StripContent extract_strip(const WeightedGrid& in, const UnionGraph& gp, int a, int b) {
    const int w = in.width;
    const int m = in.length;
    const auto row_of = [w](int v) { return v / w; };
    const auto col_of = [w](int v) { return v % w; };

    StripContent out;
    std::set<int> strip;
    for (const auto& [v, ns] : gp.adj) {
        (void)ns;
        if (row_of(v) >= a && row_of(v) <= b) strip.insert(v);
    }
    const auto internal_deg = [&](int v) {
        int d = 0;
        for (const int u : gp.adj.at(v))
            if (row_of(u) >= a && row_of(u) <= b) ++d;
        return d;
    };

    std::set<int> seen;
    for (const int v0 : strip) {
        if (seen.count(v0)) continue;
        std::vector<int> comp;
        std::vector<int> stack{v0};
        seen.insert(v0);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const int u : gp.adj.at(v))
                if (row_of(u) >= a && row_of(u) <= b && seen.insert(u).second)
                    stack.push_back(u);
        }
        for (const int v : comp)
            require(gp.adj.at(v).size() == 2, "band vertex of unexpected degree");

        std::vector<int> ends;
        for (const int v : comp)
            if (internal_deg(v) <= 1) ends.push_back(v);
        std::sort(ends.begin(), ends.end());

        std::vector<int> order;
        if (comp.size() == 1) {
            require(ends.size() == 1, "single-vertex component shape");
            order = comp;
        } else {
            require(ends.size() == 2, "band component must be a path");
            order.push_back(ends[0]);
            int prev = -1, cur = ends[0];
            for (;;) {
                int nxt = -1;
                for (const int u : gp.adj.at(cur)) {
                    if (u == prev) continue;
                    if (row_of(u) < a || row_of(u) > b) continue;
                    nxt = u;
                    break;
                }
                if (nxt == -1) break;
                order.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            require(order.size() == comp.size(), "component trace must cover it");
            require(order.back() == ends[1], "component trace must end at the far end");
        }

        Money total;
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            total += in.weight(edge_between(order[i], order[i + 1], w));

        struct Attachment {
            bool up;
            int col;
        };
        std::vector<Attachment> atts;
        const auto add_attachments = [&](int v, int need) {
            int got = 0;
            if (row_of(v) == a && gp.has(v - w, v)) {
                atts.push_back({true, col_of(v)});
                total += in.weight(EdgeId::v(a - 1, col_of(v)));
                ++got;
            }
            if (row_of(v) == b && b + 1 < m && gp.has(v, v + w)) {
                atts.push_back({false, col_of(v)});
                total += in.weight(EdgeId::v(b, col_of(v)));
                ++got;
            }
            require(got == need, "component endpoint attachment count");
        };
        if (order.size() == 1) {
            add_attachments(order.front(), 2);
        } else {
            add_attachments(order.front(), 1);
            add_attachments(order.back(), 1);
        }
        require(atts.size() == 2, "every component attaches exactly twice");

        const Attachment& x = atts[0];
        const Attachment& y = atts[1];
        if (x.up && y.up) {
            require(x.col != y.col, "distinct attachment columns");
            out.ups.push_back({std::min(x.col, y.col), std::max(x.col, y.col), total, 0});
        } else if (!x.up && !y.up) {
            require(x.col != y.col, "distinct attachment columns");
            out.downs.push_back({std::min(x.col, y.col), std::max(x.col, y.col), total, 0});
        } else {
            const int top = x.up ? x.col : y.col;
            const int bottom = x.up ? y.col : x.col;
            out.crosses.push_back({top, bottom, total, -1});
        }
    }
    return out;
}

// Same-boundary pairs nest or are disjoint; nested ones must turn tighter
// (closer to their boundary) than their containers.
int assign_turns(std::vector<PairSame>& arcs) {
    std::sort(arcs.begin(), arcs.end(), [](const PairSame& x, const PairSame& y) {
        return std::make_pair(x.c2 - x.c1, x.c1) < std::make_pair(y.c2 - y.c1, y.c1);
    });
    int rows = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        arcs[i].turn = 0;
        for (std::size_t j = 0; j < i; ++j) {
            const bool nested = arcs[j].c1 > arcs[i].c1 && arcs[j].c2 < arcs[i].c2;
            const bool disjoint = arcs[j].c2 < arcs[i].c1 || arcs[j].c1 > arcs[i].c2;
            require(nested || disjoint, "same-side pairs must nest or be disjoint");
            if (nested) arcs[i].turn = std::max(arcs[i].turn, arcs[j].turn + 1);
        }
        rows = std::max(rows, arcs[i].turn + 1);
    }
    return rows;
}

// Rebuilds one over-tall band into at most width+1 rows and emits its edges
// through put(edge, weight); returns the number of rows used. krow is the
// output row of the retained row above; the rebuilt rows start at krow + 1.
int rebuild_strip(StripContent content, bool has_bottom, int krow, int w,
                  const std::function<void(EdgeId, const Money&)>& put) {
    auto& ups = content.ups;
    auto& downs = content.downs;
    auto& crosses = content.crosses;
    if (!has_bottom)
        require(downs.empty() && crosses.empty(), "tail band can only attach upward");

    const int h_up = ups.empty() ? 0 : assign_turns(ups);
    const int h_down = downs.empty() ? 0 : assign_turns(downs);

    std::sort(crosses.begin(), crosses.end(),
              [](const PairThrough& x, const PairThrough& y) { return x.top < y.top; });
    for (std::size_t i = 0; i + 1 < crosses.size(); ++i) {
        require(crosses[i].top < crosses[i + 1].top, "distinct top attachments");
        require(crosses[i].bottom < crosses[i + 1].bottom,
                "disjoint through-paths keep their left-to-right order");
    }
    for (const PairThrough& x : crosses) {
        for (const PairSame& u : ups)
            require(x.top < u.c1 || x.top > u.c2, "through-path clear of top arcs");
        for (const PairSame& d : downs)
            require(x.bottom < d.c1 || x.bottom > d.c2, "through-path clear of bottom arcs");
    }

    // Turn rows for the non-straight through-paths: whenever one path's
    // span would collide with another's vertical, order their turn rows;
    // levels of the resulting order give the rows.
    const int n = static_cast<int>(crosses.size());
    std::vector<std::vector<int>> preds(n);  // preds[v] turn strictly above v
    for (int i = 0; i < n; ++i) {
        if (crosses[i].top == crosses[i].bottom) continue;
        for (int j = i + 1; j < n; ++j) {
            if (crosses[j].top == crosses[j].bottom) continue;
            if (crosses[i].bottom >= crosses[j].top)
                preds[i].push_back(j);  // i spans over j's top: i turns below j
            else if (crosses[j].bottom <= crosses[i].top)
                preds[j].push_back(i);  // j spans back over i's top
        }
    }
    std::vector<int> level(n, -1), state(n, 0);
    const std::function<int(int)> eval = [&](int v) -> int {
        require(state[v] != 1, "cyclic turn-row constraints");
        if (state[v] == 2) return level[v];
        state[v] = 1;
        int lv = 0;
        for (const int u : preds[v]) lv = std::max(lv, eval(u) + 1);
        state[v] = 2;
        level[v] = lv;
        return lv;
    };
    int cross_rows = 0;
    for (int i = 0; i < n; ++i) {
        if (crosses[i].top == crosses[i].bottom) continue;
        crosses[i].level = eval(i);
        cross_rows = std::max(cross_rows, crosses[i].level + 1);
    }

    const int height = h_up + cross_rows + h_down;
    require(height <= w + 1, "rebuilt band exceeds its row budget");
    const int base = krow + 1;
    const Money zero;

    if (height == 0) {
        // only straight columns: one vertical each, directly joining the
        // retained rows
        for (const PairThrough& x : crosses) put(EdgeId::v(krow, x.top), x.w);
        return 0;
    }

    for (const PairSame& u : ups) {
        put(EdgeId::v(krow, u.c1), u.w);  // whole weight on the first edge
        put(EdgeId::v(krow, u.c2), zero);
        for (int r = 0; r < u.turn; ++r) {
            put(EdgeId::v(base + r, u.c1), zero);
            put(EdgeId::v(base + r, u.c2), zero);
        }
        for (int c = u.c1; c < u.c2; ++c) put(EdgeId::h(base + u.turn, c), zero);
    }
    for (const PairSame& d : downs) {
        put(EdgeId::v(base + height - 1, d.c1), d.w);
        put(EdgeId::v(base + height - 1, d.c2), zero);
        for (int r = height - 1 - d.turn; r < height - 1; ++r) {
            put(EdgeId::v(base + r, d.c1), zero);
            put(EdgeId::v(base + r, d.c2), zero);
        }
        for (int c = d.c1; c < d.c2; ++c) put(EdgeId::h(base + height - 1 - d.turn, c), zero);
    }
    for (const PairThrough& x : crosses) {
        put(EdgeId::v(krow, x.top), x.w);
        if (x.level < 0) {
            for (int r = 0; r + 1 < height; ++r) put(EdgeId::v(base + r, x.top), zero);
            put(EdgeId::v(base + height - 1, x.top), zero);
        } else {
            const int tr = h_up + x.level;
            for (int r = 0; r < tr; ++r) put(EdgeId::v(base + r, x.top), zero);
            for (int c = std::min(x.top, x.bottom); c < std::max(x.top, x.bottom); ++c)
                put(EdgeId::h(base + tr, c), zero);
            for (int r = tr; r + 1 < height; ++r) put(EdgeId::v(base + r, x.bottom), zero);
            put(EdgeId::v(base + height - 1, x.bottom), zero);
        }
    }
    return height;
}

}  // namespace

WeightedGrid compress_grid(const WeightedGrid& in) {
    in.validate();
    const int w = in.width;
    const int m = in.length;
    const int cap = compression_depth_cap(w);
    if (m <= cap) return in;

    const auto vid = [w](int r, int c) { return r * w + c; };
    const auto row_of = [w](int v) { return v / w; };

    WeightedGraph graph(w * m);
    const GridInstance shape(w, m);
    for (const EdgeId& e : shape.all_edges())
        graph.add_edge(vid(e.a().row, e.a().col), vid(e.b().row, e.b().col), in.weight(e));

    std::vector<int> terminals;
    terminals.reserve(w);
    for (int c = 0; c < w; ++c) terminals.push_back(vid(0, c));
    const PathCollection coll = reroute_shortest_paths(graph, terminals);

    UnionGraph gp;
    for (const std::vector<int>& path : coll.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            gp.edges.insert(norm_edge(path[i], path[i + 1]));
    for (const auto& [x, y] : gp.edges) {
        gp.adj[x].push_back(y);
        gp.adj[y].push_back(x);
    }
    for (auto& [v, ns] : gp.adj) {
        (void)v;
        std::sort(ns.begin(), ns.end());
    }

    // retained rows: the terminal row plus every row with a junction vertex
    std::set<int> kept_set{0};
    for (const auto& [v, ns] : gp.adj)
        if (ns.size() >= 3) kept_set.insert(row_of(v));
    const std::vector<int> kept(kept_set.begin(), kept_set.end());

    std::vector<std::pair<EdgeId, Money>> writes;
    std::set<EdgeId> written;
    const std::function<void(EdgeId, const Money&)> put = [&](EdgeId e, const Money& val) {
        require(written.insert(e).second, "edge written twice");
        writes.emplace_back(e, val);
    };

    int cursor = 0;
    for (std::size_t t = 0; t < kept.size(); ++t) {
        const int k = kept[t];
        const int krow = cursor++;
        for (int c = 0; c + 1 < w; ++c) put(EdgeId::h(krow, c), in.weight(EdgeId::h(k, c)));

        const bool has_next = t + 1 < kept.size();
        const int a = k + 1;
        const int b = has_next ? kept[t + 1] - 1 : m - 1;
        if (a > b) {
            // adjacent retained rows: keep their connecting verticals
            if (has_next)
                for (int c = 0; c < w; ++c) put(EdgeId::v(krow, c), in.weight(EdgeId::v(k, c)));
            continue;
        }

        const StripContent content = extract_strip(in, gp, a, b);
        if (!has_next && content.empty()) break;  // drop an unused tail

        if (b - a + 1 <= w + 1) {
            // short band: verbatim copy, boundary verticals included
            for (int c = 0; c < w; ++c) put(EdgeId::v(krow, c), in.weight(EdgeId::v(k, c)));
            for (int r = a; r <= b; ++r) {
                const int orow = cursor++;
                for (int c = 0; c + 1 < w; ++c)
                    put(EdgeId::h(orow, c), in.weight(EdgeId::h(r, c)));
                if (r < b)
                    for (int c = 0; c < w; ++c) put(EdgeId::v(orow, c), in.weight(EdgeId::v(r, c)));
            }
            if (has_next)
                for (int c = 0; c < w; ++c)
                    put(EdgeId::v(cursor - 1, c), in.weight(EdgeId::v(b, c)));
        } else {
            cursor += rebuild_strip(content, has_next, krow, w, put);
        }
    }

    WeightedGrid out(w, cursor);
    for (const auto& [e, val] : writes) out.set(e, val);
    require(out.length <= cap, "compressed grid exceeds the depth cap");
    require(first_row_distances(in) == first_row_distances(out),
            "first-row distances must be preserved");
    return out;
}

}  // namespace gridtoll
