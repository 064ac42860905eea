/**
 * @file laurent.hpp
 * @brief Exact arithmetic in Z[v, v^-1]: Laurent polynomials with
 *        arbitrary-precision integer coefficients.
 *
 * Houses the quantum integers [[n]] = (v^n - v^-n)/(v - v^-1), their
 * factorials, the bar involution v -> v^-1, exact division and gcd.
 * All values are immutable after construction and safe to share
 * between threads.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace icb {

using BigInt = mpz_class;

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero") {}
};

/// Thrown when exact_div has no solution in Z[v, v^-1]; an integrality
/// failure in callers is a bug the verification suites must surface.
struct inexact_division : std::domain_error {
    inexact_division() : std::domain_error("division not exact in Z[v, v^-1]") {}
};

/// Element of Z[v, v^-1], stored as a dense coefficient block
/// [min_exp .. min_exp + coeffs.size() - 1] with nonzero ends.
/// The zero polynomial is the empty block. Equality of canonical
/// forms is componentwise equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(BigInt(c), 0) {}
    explicit LaurentPoly(const BigInt& c) : LaurentPoly(c, 0) {}
    LaurentPoly(BigInt c, std::int64_t exp);

    static LaurentPoly from_terms(const std::map<std::int64_t, BigInt>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && min_exp_ == 0 && coeffs_[0] == 1; }
    /// True iff the value is a unit of Z[v, v^-1], i.e. +-v^k.
    bool is_unit() const {
        return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
    }

    std::int64_t min_exp() const;  // lowest exponent; requires nonzero
    std::int64_t max_exp() const;  // highest exponent; requires nonzero

    BigInt coeff(std::int64_t exp) const;           // 0 outside the support
    std::map<std::int64_t, BigInt> terms() const;   // sparse view, no zeros
    std::size_t term_count() const;

    const BigInt& leading() const;   // coefficient at max_exp; requires nonzero
    const BigInt& trailing() const;  // coefficient at min_exp; requires nonzero

    /// Multiplication by v^k.
    LaurentPoly shifted(std::int64_t k) const;
    /// In-place multiplication by v^k (adjusts the exponent offset only).
    LaurentPoly& shift(std::int64_t k);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// True iff every coefficient is a nonnegative integer (membership in N[v, v^-1]).
    bool is_nonnegative() const;

    std::string to_string() const;

    friend LaurentPoly bar(const LaurentPoly& p);

private:
    std::int64_t min_exp_ = 0;
    std::vector<BigInt> coeffs_;

    void trim_();
    friend struct laurent_detail;
};

/// Quantum integer [[n]] = (v^n - v^-n)/(v - v^-1); [[-n]] = -[[n]], [[0]] = 0.
LaurentPoly qint(std::int64_t n);

/// Quantum factorial [[n]]! = prod_{i=1..n} [[i]]. Rejects negative n.
LaurentPoly qfact(std::int64_t n);

/// Bar involution v -> v^-1 (exponent reversal); a ring automorphism.
LaurentPoly bar(const LaurentPoly& p);

/// Returns r with r*q = p, or throws inexact_division / division_by_zero.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Nonthrowing variant: returns false when no exact quotient exists.
bool try_exact_div(const LaurentPoly& p, const LaurentPoly& q, LaurentPoly& out);

/// Greatest common divisor in Z[v, v^-1], canonicalized so that
/// min_exp = 0 and the leading integer coefficient is positive.
/// gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// The quantum-integer step identity
///   [[d-1]] - [[n]]*(v^n*v^{1-d} + v^-n*v^{d-1}) = [[d-1-2n]],
/// checked as an exact identity of Laurent polynomials.
bool qstep_identity(std::int64_t d, std::int64_t n);

// Internal multiplication routes, exposed so tests can cross-check the
// Kronecker-substitution and geometric-run paths against the schoolbook path.
struct laurent_detail {
    static LaurentPoly mul_schoolbook(const LaurentPoly& a, const LaurentPoly& b);
    static LaurentPoly mul_kronecker(const LaurentPoly& a, const LaurentPoly& b);
    // requires b to be a geometric run c*v^e*(1 + v^s + ... + v^{s(k-1)})
    static LaurentPoly mul_ones_run(const LaurentPoly& a, const LaurentPoly& b);
};

}  // namespace icb
