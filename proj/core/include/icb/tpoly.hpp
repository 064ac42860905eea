/**
 * @file tpoly.hpp
 * @brief Polynomials in the generator t with coefficients in Q(v), and the
 *        closed-form constructors for canonical-basis and minimal polynomials.
 *
 * A TPoly is semantically a finite sequence of RatFunc coefficients indexed
 * by powers of t. Internally the coefficients are held over one shared
 * denominator (num_k / den), which keeps products of quantum-integer linear
 * factors fraction-free; coefficient access reduces on demand. Values are
 * immutable and cheap to copy.
 */
#pragma once

#include "icb/ratfunc.hpp"

#include <memory>
#include <vector>

namespace icb {

class TPoly {
public:
    TPoly() : rep_(zero_rep_()) {}
    TPoly(long c) : TPoly(RatFunc(c)) {}
    TPoly(const RatFunc& c);

    /// The generator t.
    static TPoly t();

    static TPoly from_coeffs(const std::vector<RatFunc>& coeffs);

    /// Builds sum_k (nums[k]/den) t^k directly. Throws division_by_zero on den = 0.
    static TPoly from_parts(std::vector<LaurentPoly> nums, LaurentPoly den);

    bool is_zero() const { return rep_->nums.empty(); }
    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(rep_->nums.size()) - 1; }

    /// Coefficient of t^k as a reduced RatFunc.
    RatFunc coeff(std::size_t k) const;
    std::vector<RatFunc> coeffs() const;
    RatFunc leading() const;  // requires nonzero

    /// Shared-denominator view (numerators and common denominator).
    const std::vector<LaurentPoly>& raw_nums() const { return rep_->nums; }
    const LaurentPoly& raw_den() const { return rep_->den; }

    TPoly operator-() const;
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);

    /// Multiplication by a scalar of Q(v).
    TPoly scaled(const RatFunc& c) const;
    friend TPoly operator*(const TPoly& a, const RatFunc& c) { return a.scaled(c); }
    friend TPoly operator*(const RatFunc& c, const TPoly& a) { return a.scaled(c); }

    friend bool operator==(const TPoly& a, const TPoly& b);
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    struct Rep {
        std::vector<LaurentPoly> nums;
        LaurentPoly den{1};
    };
    std::shared_ptr<const Rep> rep_;

    explicit TPoly(Rep&& rep);
    static const std::shared_ptr<const Rep>& zero_rep_();
    static void normalize_(Rep& rep);
};

/// Coefficient-wise bar involution with t fixed.
TPoly bar_t(const TPoly& p);

struct TPolyDivMod {
    TPoly quotient;
    TPoly remainder;
};

/// p = quotient * m + remainder with deg remainder < deg m.
/// Throws division_by_zero when m = 0.
TPolyDivMod divmod(const TPoly& p, const TPoly& m);

/// Canonical-basis polynomial P_{0,d}: prod_{i=0}^{d-1} (t + [[d-1-2i]]) / [[d]]!.
TPoly p0(std::int64_t d);

/// Canonical-basis polynomial P_{1,m} (indexed by its degree m >= 1):
/// t * prod_{i=0}^{m-2} (t + [[m-2-2i]]) / [[m]]!.
TPoly p1(std::int64_t m);

/// Monic minimal polynomial m_d = prod_{i=0}^{d} (t + [[d-1-2i]]) of degree d+1.
TPoly minpoly(std::int64_t d);

}  // namespace icb
