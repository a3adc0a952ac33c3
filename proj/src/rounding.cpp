#include "gridtoll/rounding.hpp"

#include "gridtoll/error.hpp"

namespace gridtoll {

PriceSet price_set(const Money& b_max, long m, long n) {
    if (b_max.infinite()) throw Error(Error::Kind::usage, "b_max must be finite");
    if (m < 1) throw Error(Error::Kind::usage, "price_set: m must be >= 1");
    PriceSet ps;
    ps.b_max = b_max;
    if (b_max.zero() || n < 1) {
        ps.b_max = b_max;  // n == 0 only happens with no drivers, i.e. b_max == 0
        ps.exponent_cap = 0;
        ps.values = {Money()};
        ps.p_min = Money();
        return ps;
    }
    // Smallest T with 2^T >= 4*m*n.
    mpz_class k = mpz_class(4) * mpz_class(m) * mpz_class(n);
    mpz_class km1 = k - 1;
    int T = static_cast<int>(mpz_sizeinbase(km1.get_mpz_t(), 2));  // bits of k-1 = ceil(log2 k)
    ps.exponent_cap = T;
    ps.values.reserve(T + 2);
    for (int t = 0; t <= T; ++t) ps.values.push_back(b_max.div_pow2(t));
    ps.values.push_back(Money());
    ps.p_min = ps.values[T];
    return ps;
}

Money quantize_distance(const Money& d, const Money& b_max) {
    if (d > b_max) return Money::infinity();
    return d;
}

Money round_down(const PriceSet& ps, const Money& price) {
    Money capped = Money::min(price, ps.b_max);
    for (const Money& v : ps.values)
        if (v <= capped) return v;  // values descend; first fit is the largest
    return Money();                 // unreachable: 0 is always present
}

Pricing round_pricing(const PriceSet& ps, const GridInstance& g, const Pricing& p) {
    Pricing out;
    for (EdgeId e : g.all_edges()) {
        const Money& v = p.at(e);
        out.set(e, v.infinite() ? Money::infinity() : round_down(ps, v));
    }
    return out;
}

} // namespace gridtoll
