#include "icb/idot.hpp"

namespace icb {

namespace {

void check_index(const CBIndex& idx) {
    if ((idx.eps != 0 && idx.eps != 1) || idx.deg < 0)
        throw std::domain_error("invalid canonical basis index");
}

// Inverse of a unit +-v^s of Z[v, v^-1].
LaurentPoly unit_inverse(const LaurentPoly& u) {
    if (!u.is_unit()) throw std::domain_error("expected a unit of Z[v, v^-1]");
    return LaurentPoly(u.leading(), -u.min_exp());
}

}  // namespace

int summand_of(const CBIndex& idx) {
    check_index(idx);
    return idx.eps == 0 ? static_cast<int>(idx.deg % 2) : static_cast<int>((idx.deg + 1) % 2);
}

CBIndex basis_index(int summand, std::int64_t degree) {
    if (summand != 0 && summand != 1) throw std::domain_error("invalid summand");
    if (degree < 0) throw std::domain_error("invalid basis degree");
    return CBIndex{(degree + summand) % 2 == 0 ? 0 : 1, degree};
}

TPoly cb_poly(const CBIndex& idx) {
    check_index(idx);
    if (idx.eps == 0) return p0(idx.deg);
    if (idx.deg == 0) return TPoly(1);  // summand-1 unit
    return p1(idx.deg);
}

UidotElement::UidotElement(int summand, TPoly poly) : summand_(summand), poly_(std::move(poly)) {
    if (summand_ != 0 && summand_ != 1) throw std::domain_error("invalid summand");
}

UidotElement multiply(const UidotElement& x, const UidotElement& y) {
    if (x.summand() != y.summand()) throw summand_mismatch();
    return UidotElement(x.summand(), x.poly() * y.poly());
}

UidotElement multiply_direct_sum(const UidotElement& x, const UidotElement& y) {
    if (x.summand() != y.summand()) return UidotElement(x.summand(), TPoly());
    return multiply(x, y);
}

std::map<CBIndex, RatFunc> expand_cb(const UidotElement& x) {
    std::map<CBIndex, RatFunc> out;
    if (x.poly().is_zero()) return out;
    // Back-substitution from the top degree. With r held over the common
    // denominator D and each basis numerator monic up to a unit u, the
    // update r_j -= r_k * B_j * u^{-1} stays inside Z[v, v^-1].
    std::vector<LaurentPoly> r = x.poly().raw_nums();
    const LaurentPoly& den = x.poly().raw_den();
    for (std::size_t k = r.size(); k-- > 0;) {
        if (r[k].is_zero()) continue;
        const CBIndex idx = basis_index(x.summand(), static_cast<std::int64_t>(k));
        const TPoly b = cb_poly(idx);
        const auto& bn = b.raw_nums();
        const LaurentPoly uinv = unit_inverse(bn.back());
        out.emplace(idx, RatFunc(r[k] * (b.raw_den() * uinv), den));
        const LaurentPoly factor = r[k] * uinv;
        for (std::size_t j = 0; j < k; ++j) {
            if (!bn[j].is_zero()) r[j] -= factor * bn[j];
        }
        r[k] = LaurentPoly();
    }
    return out;
}

UidotElement from_cb(int summand, const std::map<CBIndex, RatFunc>& coeffs) {
    TPoly acc;
    for (const auto& [idx, c] : coeffs) {
        if (summand_of(idx) != summand) throw summand_mismatch();
        if (c.is_zero()) continue;
        acc = acc + cb_poly(idx).scaled(c);
    }
    return UidotElement(summand, std::move(acc));
}

std::map<CBIndex, RatFunc> structure_constants(const CBIndex& i, const CBIndex& j) {
    return expand_cb(multiply(UidotElement::basis(i), UidotElement::basis(j)));
}

bool is_positive(const std::map<CBIndex, RatFunc>& coeffs) {
    for (const auto& [idx, c] : coeffs) {
        if (!c.is_laurent() || !c.num().is_nonnegative()) return false;
    }
    return true;
}

}  // namespace icb
