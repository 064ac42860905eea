#include "icb/ratfunc.hpp"

namespace icb {

void RatFunc::normalize_den_() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    const std::int64_t s = den_.min_exp();
    if (s != 0) {
        den_.shift(-s);
        num_.shift(-s);
    }
    if (den_.leading() < 0) {
        den_ = -den_;
        num_ = -num_;
    }
}

RatFunc RatFunc::reduced_(LaurentPoly num, LaurentPoly den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize_den_();
    return r;
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero();
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    normalize_den_();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverted() const {
    if (is_zero()) throw division_by_zero();
    return reduced_(den_, num_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-reduce before multiplying so the product is already reduced.
    LaurentPoly an = a.num_, bd = b.den_;
    LaurentPoly g1 = gcd(an, bd);
    if (!g1.is_one()) {
        an = exact_div(an, g1);
        bd = exact_div(bd, g1);
    }
    LaurentPoly bn = b.num_, ad = a.den_;
    LaurentPoly g2 = gcd(bn, ad);
    if (!g2.is_one()) {
        bn = exact_div(bn, g2);
        ad = exact_div(ad, g2);
    }
    return RatFunc::reduced_(an * bn, ad * bd);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        LaurentPoly t = a.num_ + b.num_;
        if (t.is_zero()) return RatFunc();
        LaurentPoly g = gcd(t, a.den_);
        if (g.is_one()) return RatFunc::reduced_(std::move(t), a.den_);
        return RatFunc::reduced_(exact_div(t, g), exact_div(a.den_, g));
    }
    LaurentPoly g = gcd(a.den_, b.den_);
    if (g.is_one())
        return RatFunc::reduced_(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    LaurentPoly da = exact_div(a.den_, g), db = exact_div(b.den_, g);
    LaurentPoly t = a.num_ * db + b.num_ * da;
    if (t.is_zero()) return RatFunc();
    LaurentPoly h = gcd(t, g);
    if (h.is_one()) return RatFunc::reduced_(std::move(t), a.den_ * db);
    return RatFunc::reduced_(exact_div(t, h), exact_div(a.den_, h) * db);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverted(); }

RatFunc bar(const RatFunc& r) {
    if (r.is_zero()) return r;
    // bar preserves reducedness (it is a ring automorphism); only the
    // denominator's unit normalization has to be redone.
    return RatFunc::reduced_(bar(r.num_), bar(r.den_));
}

std::string RatFunc::to_string() const {
    if (is_laurent()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace icb
