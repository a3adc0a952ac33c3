#include "gridtoll/money.hpp"

#include "gridtoll/error.hpp"

#include <cctype>

namespace gridtoll {

Money Money::from_int(long v) {
    if (v < 0) throw Error(Error::Kind::usage, "money values must be non-negative");
    Money m;
    m.q_ = v;
    return m;
}

Money Money::ratio(long num, long den) {
    if (den == 0) throw Error(Error::Kind::usage, "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    if (num < 0) throw Error(Error::Kind::usage, "money values must be non-negative");
    Money m;
    m.q_ = mpq_class(num, den);
    m.q_.canonicalize();
    return m;
}

Money Money::from_mpq(mpq_class q) {
    q.canonicalize();
    if (q < 0) throw Error(Error::Kind::usage, "money values must be non-negative");
    Money m;
    m.q_ = std::move(q);
    return m;
}

Money Money::infinity() {
    Money m;
    m.inf_ = true;
    return m;
}

std::optional<Money> Money::parse(std::string_view s) {
    if (s == "inf") return infinity();
    if (s.empty()) return std::nullopt;
    auto digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!digits(num) || !digits(den)) return std::nullopt;
        mpq_class q(std::string(num) + "/" + std::string(den));
        if (q.get_den() == 0) return std::nullopt;
        q.canonicalize();
        return from_mpq(q);
    }
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (!digits(whole) || !digits(frac)) return std::nullopt;
        mpz_class num(std::string(whole) + std::string(frac));
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        mpq_class q(num, den);
        q.canonicalize();
        return from_mpq(q);
    }
    if (!digits(s)) return std::nullopt;
    return from_mpq(mpq_class(mpz_class(std::string(s))));
}

std::string Money::str() const {
    if (inf_) return "inf";
    return q_.get_str();
}

const mpq_class& Money::rat() const {
    if (inf_) throw Error(Error::Kind::usage, "infinite money has no rational value");
    return q_;
}

Money Money::operator+(const Money& o) const {
    if (inf_ || o.inf_) return infinity();
    Money m;
    m.q_ = q_ + o.q_;
    return m;
}

Money& Money::operator+=(const Money& o) {
    if (inf_ || o.inf_) {
        inf_ = true;
        q_ = 0;
    } else {
        q_ += o.q_;
    }
    return *this;
}

Money Money::times(unsigned long k) const {
    if (inf_) return infinity();
    Money m;
    m.q_ = q_ * mpq_class(static_cast<unsigned long>(k));
    return m;
}

Money Money::div(unsigned long k) const {
    if (k == 0) throw Error(Error::Kind::usage, "division by zero");
    if (inf_) return infinity();
    Money m;
    m.q_ = q_ / mpq_class(static_cast<unsigned long>(k));
    m.q_.canonicalize();
    return m;
}

Money Money::div_pow2(unsigned t) const {
    if (inf_) return infinity();
    mpq_class q = q_;
    mpz_class den = q.get_den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), t);
    mpq_class r(q.get_num(), den);
    r.canonicalize();
    Money m;
    m.q_ = std::move(r);
    return m;
}

bool Money::operator==(const Money& o) const {
    if (inf_ != o.inf_) return false;
    if (inf_) return true;
    return q_ == o.q_;
}

bool Money::operator<(const Money& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return q_ < o.q_;
}

} // namespace gridtoll
