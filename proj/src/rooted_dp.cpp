#include "gridtoll/rooted_dp.hpp"

#include "gridtoll/error.hpp"
#include "gridtoll/evaluate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>

namespace gridtoll {

std::uint64_t default_state_budget() {
    if (const char* env = std::getenv("GRIDTOLL_STATE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 4'000'000ULL;
}

namespace {

struct BudgetMeter {
    std::uint64_t used = 0;
    std::uint64_t cap = 0;
    void charge(std::uint64_t n) {
        used += n;
        if (used > cap)
            throw Error(Error::Kind::budget,
                        "state budget exceeded: " + std::to_string(used) + " > " +
                            std::to_string(cap) + " (raise --state-budget to go further)");
    }
};

std::vector<VertexId> row_vertices(int width, int row) {
    std::vector<VertexId> out;
    for (int c = 0; c < width; ++c) out.push_back({row, c});
    return out;
}

std::vector<VertexId> row_with_root(int width, int row, VertexId root) {
    std::vector<VertexId> out = row_vertices(width, row);
    if (root.row != row) out.push_back(root);
    std::sort(out.begin(), out.end());
    return out;
}

// Interns matrices in discovery order, then freezes into a matrix-sorted
// vector; old_to_new maps provisional ids to sorted positions.
struct Interner {
    std::map<DistanceMatrix, int> ids;
    int intern(const DistanceMatrix& m) {
        auto [it, fresh] = ids.emplace(m, static_cast<int>(ids.size()));
        (void)fresh;
        return it->second;
    }
    void freeze(std::vector<DistanceMatrix>& sorted, std::vector<int>& old_to_new) const {
        sorted.clear();
        old_to_new.assign(ids.size(), -1);
        int pos = 0;
        for (const auto& [m, old] : ids) {  // std::map iterates in matrix order
            sorted.push_back(m);
            old_to_new[old] = pos++;
        }
    }
};

struct UpperLayers {
    std::vector<std::vector<DistanceMatrix>> sets;  // per row, sorted
    std::vector<std::vector<int>> edge;             // per row i: [u * |W_i| + w] -> id in sets[i+1]
};

UpperLayers build_uppers(const GridInstance& g, VertexId root, const PriceSet& ps,
                         const std::vector<std::vector<RowTransition>>& trans,
                         BudgetMeter& meter) {
    const int m = g.length();
    UpperLayers up;
    up.sets.resize(m);
    up.edge.resize(std::max(0, m - 1));
    up.sets[0] = {DistanceMatrix::infinite(row_with_root(g.width(), 0, root))};
    meter.charge(1);
    for (int i = 0; i + 1 < m; ++i) {
        const auto& W = trans[i];
        std::vector<VertexId> target = row_with_root(g.width(), i + 1, root);
        Interner in;
        std::vector<int> provisional(up.sets[i].size() * W.size());
        meter.charge(provisional.size());
        for (std::size_t u = 0; u < up.sets[i].size(); ++u)
            for (std::size_t w = 0; w < W.size(); ++w) {
                DistanceMatrix prod = product(up.sets[i][u], W[w].matrix, target, &ps.b_max);
                provisional[u * W.size() + w] = in.intern(prod);
            }
        std::vector<int> remap;
        in.freeze(up.sets[i + 1], remap);
        meter.charge(up.sets[i + 1].size());
        up.edge[i].resize(provisional.size());
        for (std::size_t k = 0; k < provisional.size(); ++k) up.edge[i][k] = remap[provisional[k]];
    }
    return up;
}

// Bottom-row lower matrices: ladder pricings of the bottom horizontals.
struct BottomRow {
    std::vector<DistanceMatrix> mats;                 // sorted
    std::vector<std::map<EdgeId, Money>> witnesses;   // parallel to mats
};

BottomRow enumerate_bottom(const GridInstance& g, const PriceSet& ps, BudgetMeter& meter) {
    const int row = g.length() - 1;
    std::vector<EdgeId> edges;
    for (int c = 0; c + 1 < g.width(); ++c) edges.push_back(EdgeId::h(row, c));
    std::vector<std::vector<Money>> choices(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        choices[i] = g.missing().count(edges[i]) ? std::vector<Money>{Money::infinity()}
                                                 : ps.values;
    std::vector<VertexId> idx = row_vertices(g.width(), row);

    std::map<DistanceMatrix, std::map<EdgeId, Money>> found;
    std::vector<std::size_t> digit(edges.size(), 0);
    for (;;) {
        DistanceMatrix m(idx);
        // Path graph: distance is the sum of the run of horizontals between
        // the two columns.
        for (int a = 0; a < g.width(); ++a) {
            Money acc;
            for (int b = a + 1; b < g.width(); ++b) {
                acc += choices[b - 1][digit[b - 1]];
                m.set(a, b, quantize_distance(acc, ps.b_max));
            }
        }
        if (!found.count(m)) {
            std::map<EdgeId, Money> w;
            for (std::size_t i = 0; i < edges.size(); ++i) w[edges[i]] = choices[i][digit[i]];
            found.emplace(std::move(m), std::move(w));
        }
        std::size_t pos = edges.size();
        bool done = edges.empty();
        while (pos > 0) {
            --pos;
            if (++digit[pos] < choices[pos].size()) break;
            digit[pos] = 0;
            if (pos == 0) done = true;
        }
        if (done) break;
    }
    BottomRow out;
    for (auto& [m, w] : found) {
        out.mats.push_back(m);
        out.witnesses.push_back(std::move(w));
    }
    meter.charge(out.mats.size());
    return out;
}

struct Cell {
    Money value;
    int w = -1, lp = -1, up = -1;  // transition backpointer (slab, lower', upper')
    int bottom = -1;               // bottom-row witness index (bottom row only)
    bool present = false;
};

struct RowTable {
    std::vector<DistanceMatrix> lowers;  // sorted
    std::vector<Cell> cells;             // [l * u_count + u]
    std::size_t u_count = 0;
    Cell& at(std::size_t l, std::size_t u) { return cells[l * u_count + u]; }
    const Cell& at(std::size_t l, std::size_t u) const { return cells[l * u_count + u]; }
};

Money payments(const GridInstance& g, VertexId root, const PriceSet& ps,
               const std::vector<std::vector<std::pair<VertexId, Money>>>& by_row, int row,
               const DistanceMatrix& L, const DistanceMatrix& U) {
    const auto& here = by_row[row];
    if (here.empty()) return Money();
    DistanceMatrix D = product(L, U, row_with_root(g.width(), row, root), &ps.b_max);
    Money total;
    for (const auto& [v, b] : here) {
        const Money& d = D.at(root, v);
        if (d <= b) total += d;
    }
    return total;
}

// Materialized-pricing consistency: rebuild the lower/upper matrices at a row
// straight from the final pricing and compare with the DP state's claim.
DistanceMatrix realized_matrix(const GridInstance& g, const Pricing& p, const PriceSet& ps,
                               bool lower_part, int row, const std::vector<VertexId>& idx) {
    std::vector<VertexId> verts;
    int lo = lower_part ? row : 0, hi = lower_part ? g.length() - 1 : row;
    for (int r = lo; r <= hi; ++r)
        for (int c = 0; c < g.width(); ++c) verts.push_back({r, c});
    std::sort(verts.begin(), verts.end());
    auto pos = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    const int n = static_cast<int>(verts.size());
    std::vector<Money> d(static_cast<std::size_t>(n) * n, Money::infinity());
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = Money();
    for (EdgeId e : g.present_edges()) {
        if (e.a().row < lo || e.b().row > hi) continue;
        if (!lower_part && e.kind == EdgeId::Kind::horizontal && e.row == row)
            continue;  // the upper part excludes the boundary row's horizontals
        const Money& w = p.at(e);
        if (w.infinite()) continue;
        int a = pos(e.a()), b = pos(e.b());
        Money& slot = d[static_cast<std::size_t>(a) * n + b];
        if (w < slot) {
            slot = w;
            d[static_cast<std::size_t>(b) * n + a] = w;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const Money& dik = d[static_cast<std::size_t>(i) * n + k];
            if (dik.infinite()) continue;
            for (int j = 0; j < n; ++j) {
                const Money& dkj = d[static_cast<std::size_t>(k) * n + j];
                if (dkj.infinite()) continue;
                Money cand = dik + dkj;
                Money& dij = d[static_cast<std::size_t>(i) * n + j];
                if (cand < dij) dij = std::move(cand);
            }
        }
    DistanceMatrix out(idx);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            out.set(static_cast<int>(i), static_cast<int>(j),
                    quantize_distance(d[static_cast<std::size_t>(pos(idx[i])) * n + pos(idx[j])],
                                      ps.b_max));
    return out;
}

RootedResult solve_impl(const RootedInstance& inst, const PriceSet& ps,
                        const RootedOptions& opts) {
    const GridInstance& g = inst.grid;
    if (inst.root.row != 0 || inst.root.col < 0 || inst.root.col >= g.width())
        throw Error(Error::Kind::usage, "root must lie on the top row");
    for (const RootedDriver& d : inst.drivers) {
        if (!g.in_bounds(d.v)) throw Error(Error::Kind::usage, "rooted trip endpoint out of range");
        if (d.budget > ps.b_max)
            throw Error(Error::Kind::usage, "trip budget exceeds the price ladder's b_max");
    }

    auto rooted_revenue = [&](const Pricing& p) {
        std::vector<Driver> trips;
        for (const RootedDriver& d : inst.drivers) trips.push_back({inst.root, d.v, d.budget});
        return revenue(g, p, trips);
    };

    if (ps.degenerate()) {
        Pricing p = Pricing::zero(g);
        Money rev = rooted_revenue(p);
        if (!rev.zero()) throw std::logic_error("degenerate ladder must yield zero revenue");
        return {std::move(p), std::move(rev), 0};
    }

    BudgetMeter meter{0, opts.state_budget ? opts.state_budget : default_state_budget()};
    const int m = g.length();

    std::vector<std::vector<std::pair<VertexId, Money>>> by_row(m);
    for (const RootedDriver& d : inst.drivers) by_row[d.v.row].push_back({d.v, d.budget});

    std::vector<std::vector<RowTransition>> trans(std::max(0, m - 1));
    for (int i = 0; i + 1 < m; ++i) {
        trans[i] = enumerate_row_transitions(g.width(), i, ps, g.missing());
        meter.charge(trans[i].size());
    }

    UpperLayers uppers = build_uppers(g, inst.root, ps, trans, meter);
    BottomRow bottom = enumerate_bottom(g, ps, meter);

    std::vector<RowTable> table(m);

    // Bottom row: every feasible single-row lower matrix against every
    // realizable upper matrix; the cell value is just the row's payments.
    {
        RowTable& bt = table[m - 1];
        bt.lowers = bottom.mats;
        bt.u_count = uppers.sets[m - 1].size();
        bt.cells.assign(bt.lowers.size() * bt.u_count, Cell{});
        meter.charge(bt.cells.size());
        for (std::size_t l = 0; l < bt.lowers.size(); ++l)
            for (std::size_t u = 0; u < bt.u_count; ++u) {
                Cell& c = bt.at(l, u);
                c.present = true;
                c.bottom = static_cast<int>(l);
                c.value = payments(g, inst.root, ps, by_row, m - 1, bt.lowers[l],
                                   uppers.sets[m - 1][u]);
            }
    }

    // Upward sweep: glue the row below with every slab transition.
    for (int i = m - 2; i >= 0; --i) {
        const auto& W = trans[i];
        RowTable& below = table[i + 1];
        RowTable& here = table[i];
        std::vector<VertexId> Ri = row_vertices(g.width(), i);

        // lower-matrix glue results, interned
        Interner in;
        std::vector<int> lmap(W.size() * below.lowers.size());
        meter.charge(lmap.size());
        for (std::size_t w = 0; w < W.size(); ++w)
            for (std::size_t lp = 0; lp < below.lowers.size(); ++lp) {
                DistanceMatrix L = product(below.lowers[lp], W[w].matrix, Ri, &ps.b_max);
                lmap[w * below.lowers.size() + lp] = in.intern(L);
            }
        std::vector<int> remap;
        in.freeze(here.lowers, remap);
        for (int& id : lmap) id = remap[id];

        here.u_count = uppers.sets[i].size();
        here.cells.assign(here.lowers.size() * here.u_count, Cell{});
        meter.charge(here.cells.size());

        for (std::size_t u = 0; u < here.u_count; ++u)
            for (std::size_t w = 0; w < W.size(); ++w) {
                int upid = uppers.edge[i][u * W.size() + w];
                for (std::size_t lp = 0; lp < below.lowers.size(); ++lp) {
                    const Cell& src = below.at(lp, upid);
                    if (!src.present) continue;
                    int l = lmap[w * below.lowers.size() + lp];
                    Cell& dst = here.at(l, u);
                    bool better = !dst.present || src.value > dst.value;
                    if (!better && src.value == dst.value) {
                        auto cand = std::tuple<int, int, int>(static_cast<int>(w),
                                                              static_cast<int>(lp), upid);
                        auto cur = std::tuple<int, int, int>(dst.w, dst.lp, dst.up);
                        better = cand < cur;
                    }
                    if (better) {
                        dst.present = true;
                        dst.value = src.value;
                        dst.w = static_cast<int>(w);
                        dst.lp = static_cast<int>(lp);
                        dst.up = upid;
                    }
                }
            }

        for (std::size_t l = 0; l < here.lowers.size(); ++l)
            for (std::size_t u = 0; u < here.u_count; ++u) {
                Cell& c = here.at(l, u);
                if (!c.present) continue;
                c.value += payments(g, inst.root, ps, by_row, i, here.lowers[l],
                                    uppers.sets[i][u]);
            }
    }

    // Answer: best lower matrix against the all-INFINITY upper at the top.
    if (uppers.sets[0].size() != 1) throw std::logic_error("top row must hold exactly U_inf");
    const RowTable& top = table[0];
    int best_l = -1;
    for (std::size_t l = 0; l < top.lowers.size(); ++l) {
        const Cell& c = top.at(l, 0);
        if (!c.present) continue;
        if (best_l < 0 || c.value > top.at(best_l, 0).value) best_l = static_cast<int>(l);
        // equal values keep the earlier (lexicographically smaller) lower matrix
    }
    if (best_l < 0) throw std::logic_error("empty DP table at the top row");

    // Materialize the pricing along the backtrace.
    Pricing pricing = Pricing::uniform(g, Money::infinity());
    std::vector<std::pair<int, int>> trace;  // (l, u) per row
    {
        int l = best_l, u = 0;
        for (int i = 0; i < m; ++i) {
            trace.push_back({l, u});
            const Cell& c = table[i].at(l, u);
            if (i == m - 1) {
                for (const auto& [e, w] : bottom.witnesses[c.bottom]) pricing.set(e, w);
            } else {
                for (const auto& [e, w] : trans[i][c.w].pricing) pricing.set(e, w);
                l = c.lp;
                u = c.up;
            }
        }
    }

    // Self-check 1: every matrix on the trace is realized by the pricing.
    for (int i = 0; i < m; ++i) {
        auto [l, u] = trace[i];
        DistanceMatrix wantL =
            realized_matrix(g, pricing, ps, true, i, row_vertices(g.width(), i));
        if (!(wantL == table[i].lowers[l]))
            throw std::logic_error("trace lower matrix not realized at row " + std::to_string(i));
        DistanceMatrix wantU =
            realized_matrix(g, pricing, ps, false, i, row_with_root(g.width(), i, inst.root));
        if (!(wantU == uppers.sets[i][u]))
            throw std::logic_error("trace upper matrix not realized at row " + std::to_string(i));
    }

    // Self-check 2: the evaluator agrees with the DP value.
    Money value = table[0].at(best_l, 0).value;
    Money recheck = rooted_revenue(pricing);
    if (!(recheck == value))
        throw std::logic_error("DP revenue " + value.str() + " disagrees with evaluator " +
                               recheck.str());

    return {std::move(pricing), std::move(value), meter.used};
}

} // namespace

std::vector<std::vector<DistanceMatrix>> realizable_upper_sets(const GridInstance& g,
                                                               VertexId root, const PriceSet& ps,
                                                               const RootedOptions& opts) {
    if (root.row != 0 || root.col < 0 || root.col >= g.width())
        throw Error(Error::Kind::usage, "root must lie on the top row");
    BudgetMeter meter{0, opts.state_budget ? opts.state_budget : default_state_budget()};
    std::vector<std::vector<RowTransition>> trans(std::max(0, g.length() - 1));
    for (int i = 0; i + 1 < g.length(); ++i) {
        trans[i] = enumerate_row_transitions(g.width(), i, ps, g.missing());
        meter.charge(trans[i].size());
    }
    return build_uppers(g, root, ps, trans, meter).sets;
}

RootedResult solve_rooted(const RootedInstance& inst, const PriceSet& ps,
                          const RootedOptions& opts) {
    return solve_impl(inst, ps, opts);
}

RootedResult solve_rooted_incomplete(const RootedInstance& inst, const PriceSet& ps,
                                     const RootedOptions& opts) {
    return solve_impl(inst, ps, opts);
}

} // namespace gridtoll
