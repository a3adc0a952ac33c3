#ifndef GRIDTOLL_MONEY_HPP
#define GRIDTOLL_MONEY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace gridtoll {

// Exact non-negative rational amount with a first-class infinity.
// Invariants: finite values are canonical (lowest terms, positive denominator)
// and >= 0; infinity absorbs addition and compares greater than every finite
// value. No floating point anywhere.
class Money {
public:
    Money() : inf_(false), q_(0) {}

    static Money from_int(long v);
    static Money ratio(long num, long den);          // den > 0 after sign fix, canonicalized
    static Money from_mpq(mpq_class q);              // canonicalized, must be >= 0
    static Money infinity();

    // Accepts "inf", "num/den", "123", and exact decimals like "1.25".
    // Rejects negatives and malformed text.
    static std::optional<Money> parse(std::string_view s);

    // "inf", or canonical "num/den" ("num" when den == 1).
    std::string str() const;

    bool infinite() const { return inf_; }
    bool zero() const { return !inf_ && q_ == 0; }
    const mpq_class& rat() const;                    // finite values only

    Money operator+(const Money& o) const;
    Money& operator+=(const Money& o);

    Money times(unsigned long k) const;
    Money div(unsigned long k) const;                // k > 0
    Money div_pow2(unsigned t) const;                // value / 2^t

    bool operator==(const Money& o) const;
    bool operator!=(const Money& o) const { return !(*this == o); }
    bool operator<(const Money& o) const;
    bool operator<=(const Money& o) const { return !(o < *this); }
    bool operator>(const Money& o) const { return o < *this; }
    bool operator>=(const Money& o) const { return !(*this < o); }

    static const Money& min(const Money& a, const Money& b) { return b < a ? b : a; }
    static const Money& max(const Money& a, const Money& b) { return a < b ? b : a; }

private:
    bool inf_;
    mpq_class q_;
};

} // namespace gridtoll

#endif
