#include "gridtoll/block_solver.hpp"

#include "gridtoll/error.hpp"
#include "gridtoll/evaluate.hpp"
#include "gridtoll/oracle.hpp"
#include "gridtoll/rooted_dp.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace gridtoll {

namespace {

// UP group: everything strictly above the middle row, plus the one vertical
// edge entering the middle row at column s_col.
bool in_up(const EdgeId& e, int middle, int s_col) {
    if (e.kind == EdgeId::Kind::horizontal) return e.row < middle;
    if (e.row < middle - 1) return true;
    return e.row == middle - 1 && e.col == s_col;
}

// LOW group: everything strictly below the middle row, plus the one vertical
// edge leaving the middle row at column t_col.
bool in_low(const EdgeId& e, int middle, int t_col) {
    if (e.kind == EdgeId::Kind::horizontal) return e.row > middle;
    if (e.row > middle) return true;
    return e.row == middle && e.col == t_col;
}

enum class Group { up, mid, low, fence };

// Corridor partition between middle-row columns s_col and t_col: UP and LOW
// as above, MID = middle-row horizontals inside the column span, and every
// remaining edge is a fence that candidates price just beyond b_max.
Group classify(const EdgeId& e, int middle, int s_col, int t_col) {
    if (in_up(e, middle, s_col)) return Group::up;
    if (in_low(e, middle, t_col)) return Group::low;
    if (e.kind == EdgeId::Kind::horizontal && e.row == middle &&
        e.col >= std::min(s_col, t_col) && e.col + 1 <= std::max(s_col, t_col))
        return Group::mid;
    return Group::fence;
}

EdgeId shift_rows(EdgeId e, int delta) {
    e.row += delta;
    return e;
}

// Prices for the LOW group of column t_col: solve the rooted problem on the
// subgrid from the middle row down, with every middle-row horizontal and
// every non-t down-edge removed, root (0, t_col), and each driver replaced
// by its lower endpoint. The rooted prices are lifted back to original
// coordinates, keyed by the LOW edges of the full block.
std::map<EdgeId, Money> lift_low(const GridInstance& g, int middle, int t_col,
                                 const std::vector<Driver>& drivers, const PriceSet& ps,
                                 const RootedOptions& opts) {
    const int w = g.width();
    const int len = g.length();
    std::set<EdgeId> removed;
    for (int c = 0; c + 1 < w; ++c) removed.insert(EdgeId::h(middle, c));
    if (middle + 1 < len) {
        for (int c = 0; c < w; ++c)
            if (c != t_col) removed.insert(EdgeId::v(middle, c));
    }
    RootedInstance inst;
    inst.grid = restrict_rows(g, middle, len - 1, removed);
    inst.root = {0, t_col};
    inst.drivers.reserve(drivers.size());
    for (const Driver& d : drivers)
        inst.drivers.push_back({{d.v.row - middle, d.v.col}, d.budget});
    const RootedResult res = solve_rooted_incomplete(inst, ps, opts);

    std::map<EdgeId, Money> lifted;
    for (const EdgeId& e : g.all_edges())
        if (in_low(e, middle, t_col)) lifted.emplace(e, res.pricing.at(shift_rows(e, -middle)));
    return lifted;
}

// Mirror of lift_low for the UP group of column s_col, obtained by flipping
// the block upside down and rooting at (0, s_col) there.
std::map<EdgeId, Money> lift_up(const GridInstance& g, int middle, int s_col,
                                const std::vector<Driver>& drivers, const PriceSet& ps,
                                const RootedOptions& opts) {
    const int w = g.width();
    const int len = g.length();
    const FlipMap flip{len};
    const int middle_f = len - 1 - middle;
    std::set<EdgeId> removed;
    for (int c = 0; c + 1 < w; ++c) removed.insert(EdgeId::h(middle_f, c));
    if (middle_f + 1 < len) {
        for (int c = 0; c < w; ++c)
            if (c != s_col) removed.insert(EdgeId::v(middle_f, c));
    }
    RootedInstance inst;
    inst.grid = restrict_rows(flip_vertical(g), middle_f, len - 1, removed);
    inst.root = {0, s_col};
    inst.drivers.reserve(drivers.size());
    for (const Driver& d : drivers)
        inst.drivers.push_back({{middle - d.u.row, d.u.col}, d.budget});
    const RootedResult res = solve_rooted_incomplete(inst, ps, opts);

    std::map<EdgeId, Money> lifted;
    for (const EdgeId& e : g.all_edges())
        if (in_up(e, middle, s_col))
            lifted.emplace(e, res.pricing.at(shift_rows(flip(e), -middle_f)));
    return lifted;
}

enum class Shape { up = 0, mid = 1, low = 2 };

// One concrete candidate: missing edges INFINITY, fences b_max + 1, the
// active group priced (lifted rooted prices, or the designated mid edge at
// mid_price), every other group 0.
Pricing assemble(const GridInstance& g, int middle, int s_col, int t_col, Shape shape,
                 const std::map<EdgeId, Money>* lifted, const EdgeId* mid_edge,
                 const Money* mid_price, const Money& fence) {
    Pricing p;
    for (const EdgeId& e : g.all_edges()) {
        if (!g.present(e)) {
            p.set(e, Money::infinity());
            continue;
        }
        switch (classify(e, middle, s_col, t_col)) {
            case Group::fence:
                p.set(e, fence);
                break;
            case Group::up:
                p.set(e, shape == Shape::up ? lifted->at(e) : Money());
                break;
            case Group::low:
                p.set(e, shape == Shape::low ? lifted->at(e) : Money());
                break;
            case Group::mid:
                p.set(e, shape == Shape::mid && mid_edge && e == *mid_edge ? *mid_price : Money());
                break;
        }
    }
    return p;
}

}  // namespace

BlockSubproblem make_block_subproblem(GridInstance grid, int middle_row,
                                      std::vector<Driver> drivers) {
    if (middle_row < 0 || middle_row >= grid.length())
        throw Error(Error::Kind::usage, "middle row outside the grid");
    for (Driver& d : drivers) {
        if (!grid.in_bounds(d.u) || !grid.in_bounds(d.v))
            throw Error(Error::Kind::usage, "driver endpoint out of bounds");
        if (d.u.row > d.v.row) std::swap(d.u, d.v);
        if (d.u.row > middle_row || d.v.row < middle_row)
            throw Error(Error::Kind::usage, "driver does not straddle the middle row");
    }
    BlockSubproblem sub;
    sub.grid = std::move(grid);
    sub.middle_row = middle_row;
    sub.drivers = std::move(drivers);
    return sub;
}

BlockResult solve_block(const BlockSubproblem& sub, const PriceSet& ps,
                        const RootedOptions& opts) {
    const GridInstance& g = sub.grid;
    const int middle = sub.middle_row;
    const int w = g.width();
    if (middle < 0 || middle >= g.length())
        throw Error(Error::Kind::usage, "middle row outside the grid");
    for (const Driver& d : sub.drivers) {
        if (!g.in_bounds(d.u) || !g.in_bounds(d.v))
            throw Error(Error::Kind::usage, "driver endpoint out of bounds");
        if (d.u.row > middle || d.v.row < middle)
            throw Error(Error::Kind::usage, "driver does not straddle the middle row");
        if (ps.b_max < d.budget)
            throw Error(Error::Kind::usage, "driver budget exceeds the ladder's b_max");
    }

    const Money fence = ps.b_max + Money::from_int(1);

    // The mid candidate's single tolled edge only ever collects a driver's
    // full budget: 0 plus each distinct budget covers every useful price.
    std::set<Money> mid_prices;
    mid_prices.insert(Money());
    for (const Driver& d : sub.drivers) mid_prices.insert(d.budget);

    // The up half depends on s only and the low half on t only, so each
    // column's rooted subproblem is solved once and shared across pairs.
    std::vector<std::map<EdgeId, Money>> up_half(w), low_half(w);
    for (int c = 0; c < w; ++c) {
        up_half[c] = lift_up(g, middle, c, sub.drivers, ps, opts);
        low_half[c] = lift_low(g, middle, c, sub.drivers, ps, opts);
    }

    BlockResult best;
    bool have = false;
    auto consider = [&](Pricing cand) {
        Money rev = revenue(g, cand, sub.drivers);
        if (!have || rev > best.revenue) {
            best = {std::move(cand), std::move(rev)};
            have = true;
        }
    };

    for (int s_col = 0; s_col < w; ++s_col) {
        for (int t_col = 0; t_col < w; ++t_col) {
            consider(assemble(g, middle, s_col, t_col, Shape::up, &up_half[s_col], nullptr,
                              nullptr, fence));
            if (s_col != t_col) {
                const EdgeId designated = EdgeId::h(middle, std::min(s_col, t_col));
                // Descending prices with a strict improvement test keep the
                // largest price among revenue ties.
                for (auto it = mid_prices.rbegin(); it != mid_prices.rend(); ++it)
                    consider(assemble(g, middle, s_col, t_col, Shape::mid, nullptr, &designated,
                                      &*it, fence));
            } else {
                consider(assemble(g, middle, s_col, t_col, Shape::mid, nullptr, nullptr, nullptr,
                                  fence));
            }
            consider(assemble(g, middle, s_col, t_col, Shape::low, &low_half[t_col], nullptr,
                              nullptr, fence));
        }
    }
    return best;
}

BlockResult solve_last_level_block(const GridInstance& grid, const std::vector<Driver>& drivers,
                                   const PriceSet& ps, LastLevelMode mode, int edge_guard,
                                   const RootedOptions& opts) {
    if (drivers.empty()) return {Pricing::zero(grid), Money()};
    if (mode == LastLevelMode::automatic)
        mode = grid.present_edges().size() <= static_cast<std::size_t>(std::max(edge_guard, 0))
                   ? LastLevelMode::brute
                   : LastLevelMode::rowsplit;
    if (mode == LastLevelMode::brute) {
        GridInstance with = grid;
        with.drivers() = drivers;
        OracleResult res = brute_force_opt(with, ps, edge_guard);
        return {std::move(res.pricing), std::move(res.revenue)};
    }

    // Row split: each driver's class is the row of its upper endpoint, so
    // every class straddles its own row; the winner is judged by full
    // revenue over all drivers, first row on ties.
    std::map<int, std::vector<Driver>> classes;
    for (Driver d : drivers) {
        if (d.u.row > d.v.row) std::swap(d.u, d.v);
        classes[d.u.row].push_back(d);
    }
    BlockResult best;
    bool have = false;
    for (const auto& [row, cls] : classes) {
        BlockSubproblem sub = make_block_subproblem(grid, row, cls);
        BlockResult part = solve_block(sub, ps, opts);
        Money full = revenue(grid, part.pricing, drivers);
        if (!have || full > best.revenue) {
            best = {std::move(part.pricing), std::move(full)};
            have = true;
        }
    }
    return best;
}

}  // namespace gridtoll
