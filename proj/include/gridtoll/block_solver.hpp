#ifndef GRIDTOLL_BLOCK_SOLVER_HPP
#define GRIDTOLL_BLOCK_SOLVER_HPP

#include "gridtoll/grid.hpp"
#include "gridtoll/rooted_dp.hpp"
#include "gridtoll/rounding.hpp"

#include <vector>

namespace gridtoll {

// A block's extended subgrid (rows re-indexed from 0), its splitting row,
// and the block's drivers re-indexed into it. Drivers are normalized so
// u.row <= middle_row <= v.row.
struct BlockSubproblem {
    GridInstance grid;
    int middle_row = 0;
    std::vector<Driver> drivers;
};

// Normalizes driver orientation (swapping endpoints so u.row <= v.row) and
// checks the straddle invariant u.row <= middle_row <= v.row.
BlockSubproblem make_block_subproblem(GridInstance grid, int middle_row,
                                      std::vector<Driver> drivers);

struct BlockResult {
    Pricing pricing;  // total over the subproblem's grid
    Money revenue;    // exact evaluator revenue over the subproblem's drivers
};

// Candidate search over (s, t) in middle-row-vertex pairs and shape
// in {up, mid, low}:
//   - every candidate prices verticals entering the middle row from above
//     at b_max+1 except the one at s, verticals leaving it downward at
//     b_max+1 except the one at t, and middle-row horizontals outside the
//     s..t column range at b_max+1 (missing edges stay INFINITY);
//   - up: everything on/below the middle row in the remaining edges is 0,
//     the part strictly above plus the vertical at s is priced by a rooted
//     solve on the flipped upper subgrid with root s;
//   - mid: everything else 0 except one designated middle edge (leftmost in
//     the s..t range) whose price ranges over {0} + the drivers' budgets;
//   - low: mirror of up, rooted at t on the lower subgrid;
// returns the best candidate by exact evaluation, ties to the first in
// (s.col, t.col, up<mid<low) order.
BlockResult solve_block(const BlockSubproblem& sub, const PriceSet& ps,
                        const RootedOptions& opts = {});

enum class LastLevelMode { automatic, brute, rowsplit };

// Last-level blocks carry no straddle guarantee. brute = exhaustive search
// over ladder pricings (refused when present edges exceed edge_guard);
// rowsplit = partition drivers by upper-endpoint row, solve_block once per
// nonempty row with that row as the middle, keep the pricing that evaluates
// best over all the block's drivers. automatic picks brute when it fits.
BlockResult solve_last_level_block(const GridInstance& grid, const std::vector<Driver>& drivers,
                                   const PriceSet& ps, LastLevelMode mode = LastLevelMode::automatic,
                                   int edge_guard = 7, const RootedOptions& opts = {});

} // namespace gridtoll

#endif
