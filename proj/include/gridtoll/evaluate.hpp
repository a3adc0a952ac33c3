#ifndef GRIDTOLL_EVALUATE_HPP
#define GRIDTOLL_EVALUATE_HPP

#include "gridtoll/grid.hpp"

#include <vector>

namespace gridtoll {

// Single-source shortest-path costs under a pricing; INFINITY where
// unreachable (missing edges never relax). Index by GridInstance::vertex_index.
std::vector<Money> shortest_path_costs(const GridInstance& g, const Pricing& p, VertexId s);

Money shortest_path_cost(const GridInstance& g, const Pricing& p, VertexId s, VertexId t);

// Sum over drivers of their trip cost when it fits the budget (cost <= b pays
// cost, otherwise pays 0). u == v trips cost 0.
Money revenue(const GridInstance& g, const Pricing& p, const std::vector<Driver>& drivers);
Money revenue(const GridInstance& g, const Pricing& p);  // over g's own drivers

} // namespace gridtoll

#endif
