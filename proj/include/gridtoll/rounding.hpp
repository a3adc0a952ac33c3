#ifndef GRIDTOLL_ROUNDING_HPP
#define GRIDTOLL_ROUNDING_HPP

#include "gridtoll/grid.hpp"

#include <vector>

namespace gridtoll {

// Halving ladder {b_max / 2^t : t in 0..T} plus 0, stored descending.
// T is the smallest integer with 2^T >= 4*m*n (n counted with multiplicity).
// Degenerate when b_max == 0: the ladder collapses to {0}.
struct PriceSet {
    Money b_max;
    int exponent_cap = 0;        // T
    std::vector<Money> values;   // descending, last element 0
    Money p_min;                 // b_max / 2^T; 0 when degenerate

    bool degenerate() const { return b_max.zero(); }
    std::size_t size() const { return values.size(); }
};

PriceSet price_set(const Money& b_max, long m, long n);

// Distances above b_max can never be paid, so they collapse to INFINITY.
Money quantize_distance(const Money& d, const Money& b_max);

// Largest ladder element <= price after capping price at b_max.
Money round_down(const PriceSet& ps, const Money& price);

// Per-edge round_down; INFINITY stays INFINITY.
Pricing round_pricing(const PriceSet& ps, const GridInstance& g, const Pricing& p);

} // namespace gridtoll

#endif
