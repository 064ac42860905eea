/**
 * @file ratfunc.hpp
 * @brief Reduced fractions of Laurent polynomials: the base field Q(v).
 *
 * Invariants: den != 0; gcd(num, den) is a unit of Z[v, v^-1]; the
 * denominator is normalized to minimal exponent 0 with positive leading
 * integer coefficient. Zero is stored as 0/1, so equality of values is
 * equality of stored representations.
 */
#pragma once

#include "icb/laurent.hpp"

namespace icb {

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True iff the value lies in Z[v, v^-1].
    bool is_laurent() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc inverted() const;  // throws division_by_zero on zero

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string() const;

    friend RatFunc bar(const RatFunc& r);

private:
    LaurentPoly num_, den_;

    void normalize_den_();  // unit-normalize only; assumes already reduced
    static RatFunc reduced_(LaurentPoly num, LaurentPoly den);  // no gcd pass
};

RatFunc bar(const RatFunc& r);

}  // namespace icb
