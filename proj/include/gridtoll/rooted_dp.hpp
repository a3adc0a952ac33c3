#ifndef GRIDTOLL_ROOTED_DP_HPP
#define GRIDTOLL_ROOTED_DP_HPP

#include "gridtoll/distmatrix.hpp"
#include "gridtoll/grid.hpp"
#include "gridtoll/rounding.hpp"

#include <cstdint>
#include <vector>

namespace gridtoll {

// All trips share one root vertex on the top row.
struct RootedInstance {
    GridInstance grid;
    VertexId root;
    std::vector<RootedDriver> drivers;
};

struct RootedOptions {
    // Upper bound on retained DP objects (transition matrices, realizable
    // sets, table cells, glue products). 0 means default_state_budget().
    std::uint64_t state_budget = 0;
};

struct RootedResult {
    Pricing pricing;
    Money revenue;
    std::uint64_t states = 0;  // budget units actually consumed
};

// GRIDTOLL_STATE_BUDGET env override, else 4,000,000.
std::uint64_t default_state_budget();

// Realizable upper matrices per row, built constructively from the top:
// row 0 holds only the all-INFINITY matrix; row i+1 holds every glue of a
// row-i matrix with a row-i slab transition, deduplicated and sorted.
std::vector<std::vector<DistanceMatrix>> realizable_upper_sets(const GridInstance& g,
                                                               VertexId root, const PriceSet& ps,
                                                               const RootedOptions& opts = {});

// Exact optimum over ladder-valued pricings of the (possibly incomplete)
// grid, by the lower/upper matrix DP. Budgets must not exceed ps.b_max.
RootedResult solve_rooted(const RootedInstance& inst, const PriceSet& ps,
                          const RootedOptions& opts = {});

// Alias kept for symmetry with the complete-grid entry point: missing edges
// are honored by pinning them INFINITY in every enumerated slab pricing.
RootedResult solve_rooted_incomplete(const RootedInstance& inst, const PriceSet& ps,
                                     const RootedOptions& opts = {});

} // namespace gridtoll

#endif
