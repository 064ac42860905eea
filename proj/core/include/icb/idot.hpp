/**
 * @file idot.hpp
 * @brief The modified form of the coideal subalgebra: two polynomial-ring
 *        summands with their canonical bases, change of basis, structure
 *        constants and positivity checking.
 *
 * Summand 0 is spanned by the basis elements indexed (0, d) for d even and
 * (1, m) for m odd; summand 1 by (0, d) for d odd and (1, m) for m even.
 * Within a summand there is exactly one basis index per degree, with
 * cb_poly degrees 0, 1, 2, ... and leading coefficients 1/[[deg]]!, so the
 * change of basis is triangular.
 */
#pragma once

#include "icb/tpoly.hpp"

#include <compare>
#include <map>

namespace icb {

struct summand_mismatch : std::domain_error {
    summand_mismatch() : std::domain_error("operands lie in different summands") {}
};

/// Index (eps, deg) of a canonical basis element b_{(eps, deg)}.
/// (1, 0) is admitted and designates the summand-1 unit.
struct CBIndex {
    int eps = 0;            // 0 or 1
    std::int64_t deg = 0;   // >= 0

    friend auto operator<=>(const CBIndex&, const CBIndex&) = default;
};

/// Which summand an index belongs to.
int summand_of(const CBIndex& idx);

/// The unique basis index of the given degree inside the given summand.
CBIndex basis_index(int summand, std::int64_t degree);

/// Closed polynomial form of the basis element: p0(deg) for eps = 0,
/// p1(deg) for eps = 1 with deg >= 1, and 1 for the summand-1 unit (1, 0).
TPoly cb_poly(const CBIndex& idx);

/// Element of one summand of the modified form, in t-coordinates.
class UidotElement {
public:
    UidotElement(int summand, TPoly poly);

    static UidotElement unit(int summand) { return UidotElement(summand, TPoly(1)); }
    static UidotElement basis(const CBIndex& idx) {
        return UidotElement(summand_of(idx), cb_poly(idx));
    }

    int summand() const { return summand_; }
    const TPoly& poly() const { return poly_; }

    friend bool operator==(const UidotElement& a, const UidotElement& b) {
        return a.summand_ == b.summand_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const UidotElement& a, const UidotElement& b) { return !(a == b); }

private:
    int summand_;
    TPoly poly_;
};

/// Product within a summand. Throws summand_mismatch across summands.
UidotElement multiply(const UidotElement& x, const UidotElement& y);

/// Direct-sum product: zero when the summands differ (reported in the
/// left operand's summand), the ordinary product otherwise.
UidotElement multiply_direct_sum(const UidotElement& x, const UidotElement& y);

/// Expands x in the canonical basis of its summand; the result omits zeros
/// and is supported on indices of x's summand only.
std::map<CBIndex, RatFunc> expand_cb(const UidotElement& x);

/// Inverse of expand_cb: sum c_idx * b_idx inside the given summand.
/// Throws summand_mismatch if some index lies outside that summand.
UidotElement from_cb(int summand, const std::map<CBIndex, RatFunc>& coeffs);

/// Canonical-basis expansion of b_i * b_j.
std::map<CBIndex, RatFunc> structure_constants(const CBIndex& i, const CBIndex& j);

/// True iff every coefficient lies in N[v, v^-1].
bool is_positive(const std::map<CBIndex, RatFunc>& coeffs);

}  // namespace icb
