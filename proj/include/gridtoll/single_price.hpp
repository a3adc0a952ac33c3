#ifndef GRIDTOLL_SINGLE_PRICE_HPP
#define GRIDTOLL_SINGLE_PRICE_HPP

#include "gridtoll/grid.hpp"

#include <vector>

namespace gridtoll {

struct SinglePriceResult {
    Money price;    // uniform price on every present edge
    Money revenue;  // exact revenue of that uniform pricing
};

// Hop distance (edge count over present edges) from src to every vertex;
// -1 marks unreachable. Deterministic breadth-first layers.
std::vector<int> hop_distances(const GridInstance& g, VertexId src);

// Best uniform price over the candidate set {b / hop(u,v)} of the drivers
// (finite hop >= 1 only). Under a uniform price p a driver's cheapest-path
// cost is exactly p*hop, so revenue(p) = sum of p*hop over drivers with
// p*hop <= b. Ties broken toward the larger price. No usable driver -> (0,0).
SinglePriceResult best_single_price(const GridInstance& g, const std::vector<Driver>& drivers);
SinglePriceResult best_single_price(const GridInstance& g);  // over g.drivers()

} // namespace gridtoll

#endif
