#ifndef GRIDTOLL_ORACLE_HPP
#define GRIDTOLL_ORACLE_HPP

#include "gridtoll/grid.hpp"
#include "gridtoll/rounding.hpp"

#include <cstdint>

namespace gridtoll {

struct OracleResult {
    Pricing pricing;    // lexicographically smallest maximizer (EdgeId order, value order)
    Money revenue;
    std::uint64_t enumerated = 0;
};

// Exhaustive search over all |P|^(present edges) ladder-valued pricings
// (missing edges pinned INFINITY). Refuses instances with more present edges
// than edge_guard. threads == 0 means hardware concurrency; results are
// independent of the thread count.
OracleResult brute_force_opt(const GridInstance& g, const PriceSet& ps, int edge_guard = 8,
                             unsigned threads = 0);

// Same search, revenue restricted to rooted trips (v, root, budget).
OracleResult brute_force_rooted(const GridInstance& g, VertexId root,
                                const std::vector<RootedDriver>& drivers, const PriceSet& ps,
                                int edge_guard = 8, unsigned threads = 0);

} // namespace gridtoll

#endif
