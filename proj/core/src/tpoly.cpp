#include "icb/tpoly.hpp"

#include <mutex>
#include <sstream>

namespace icb {

namespace {

std::vector<LaurentPoly> convolve(const std::vector<LaurentPoly>& a,
                                  const std::vector<LaurentPoly>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<LaurentPoly> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

const std::shared_ptr<const TPoly::Rep>& TPoly::zero_rep_() {
    static const std::shared_ptr<const Rep> z = std::make_shared<Rep>();
    return z;
}

TPoly::TPoly(Rep&& rep) {
    normalize_(rep);
    rep_ = std::make_shared<const Rep>(std::move(rep));
}

void TPoly::normalize_(Rep& rep) {
    if (rep.den.is_zero()) throw division_by_zero();
    while (!rep.nums.empty() && rep.nums.back().is_zero()) rep.nums.pop_back();
    if (rep.nums.empty()) {
        rep.den = LaurentPoly(1);
        return;
    }
    const std::int64_t s = rep.den.min_exp();
    if (s != 0) {
        rep.den.shift(-s);
        for (auto& n : rep.nums) n.shift(-s);
    }
    if (rep.den.leading() < 0) {
        rep.den = -rep.den;
        for (auto& n : rep.nums) n = -n;
    }
}

TPoly::TPoly(const RatFunc& c) {
    Rep rep;
    if (!c.is_zero()) {
        rep.nums.push_back(c.num());
        rep.den = c.den();
    }
    *this = TPoly(std::move(rep));
}

TPoly TPoly::t() {
    Rep rep;
    rep.nums = {LaurentPoly(), LaurentPoly(1)};
    return TPoly(std::move(rep));
}

TPoly TPoly::from_parts(std::vector<LaurentPoly> nums, LaurentPoly den) {
    Rep rep;
    rep.nums = std::move(nums);
    rep.den = std::move(den);
    return TPoly(std::move(rep));
}

TPoly TPoly::from_coeffs(const std::vector<RatFunc>& coeffs) {
    LaurentPoly lcm(1);
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        LaurentPoly g = gcd(lcm, c.den());
        lcm = lcm * exact_div(c.den(), g);
    }
    std::vector<LaurentPoly> nums(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        nums[k] = coeffs[k].num() * exact_div(lcm, coeffs[k].den());
    }
    return from_parts(std::move(nums), std::move(lcm));
}

RatFunc TPoly::coeff(std::size_t k) const {
    if (k >= rep_->nums.size() || rep_->nums[k].is_zero()) return RatFunc();
    return RatFunc(rep_->nums[k], rep_->den);
}

std::vector<RatFunc> TPoly::coeffs() const {
    std::vector<RatFunc> out;
    out.reserve(rep_->nums.size());
    for (std::size_t k = 0; k < rep_->nums.size(); ++k) out.push_back(coeff(k));
    return out;
}

RatFunc TPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return RatFunc(rep_->nums.back(), rep_->den);
}

TPoly TPoly::operator-() const {
    Rep rep;
    rep.nums.reserve(rep_->nums.size());
    for (const auto& n : rep_->nums) rep.nums.push_back(-n);
    rep.den = rep_->den;
    return TPoly(std::move(rep));
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto& A = a.rep_->nums;
    const auto& B = b.rep_->nums;
    const auto& da = a.rep_->den;
    const auto& db = b.rep_->den;
    TPoly::Rep rep;
    rep.nums.resize(std::max(A.size(), B.size()));

    LaurentPoly r;
    if (da == db) {
        rep.den = da;
        for (std::size_t k = 0; k < rep.nums.size(); ++k) {
            if (k < A.size()) rep.nums[k] = A[k];
            if (k < B.size()) rep.nums[k] += B[k];
        }
    } else if (try_exact_div(db, da, r)) {
        rep.den = db;
        for (std::size_t k = 0; k < rep.nums.size(); ++k) {
            if (k < A.size() && !A[k].is_zero()) rep.nums[k] = A[k] * r;
            if (k < B.size()) rep.nums[k] += B[k];
        }
    } else if (try_exact_div(da, db, r)) {
        rep.den = da;
        for (std::size_t k = 0; k < rep.nums.size(); ++k) {
            if (k < A.size()) rep.nums[k] = A[k];
            if (k < B.size() && !B[k].is_zero()) rep.nums[k] += B[k] * r;
        }
    } else {
        LaurentPoly g = gcd(da, db);
        LaurentPoly qa = exact_div(da, g), qb = exact_div(db, g);
        rep.den = da * qb;
        for (std::size_t k = 0; k < rep.nums.size(); ++k) {
            if (k < A.size() && !A[k].is_zero()) rep.nums[k] = A[k] * qb;
            if (k < B.size() && !B[k].is_zero()) rep.nums[k] += B[k] * qa;
        }
    }
    return TPoly(std::move(rep));
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly();
    TPoly::Rep rep;
    rep.nums = convolve(a.rep_->nums, b.rep_->nums);
    rep.den = a.rep_->den * b.rep_->den;
    return TPoly(std::move(rep));
}

TPoly TPoly::scaled(const RatFunc& c) const {
    if (is_zero() || c.is_one()) return *this;
    if (c.is_zero()) return TPoly();
    Rep rep;
    LaurentPoly r;
    if (try_exact_div(rep_->den, c.num(), r)) {
        // num/den * cn/cd = num / (den/cn * cd)
        rep.nums = rep_->nums;
        rep.den = r * c.den();
    } else if (try_exact_div(c.num(), rep_->den, r)) {
        rep.nums.reserve(rep_->nums.size());
        for (const auto& n : rep_->nums) rep.nums.push_back(n.is_zero() ? n : n * r);
        rep.den = c.den();
    } else {
        rep.nums.reserve(rep_->nums.size());
        for (const auto& n : rep_->nums) rep.nums.push_back(n.is_zero() ? n : n * c.num());
        rep.den = rep_->den * c.den();
    }
    return TPoly(std::move(rep));
}

bool operator==(const TPoly& a, const TPoly& b) {
    if (a.rep_ == b.rep_) return true;
    const auto& A = a.rep_->nums;
    const auto& B = b.rep_->nums;
    if (A.size() != B.size()) return false;
    const auto& da = a.rep_->den;
    const auto& db = b.rep_->den;
    if (da == db) return A == B;
    LaurentPoly r;
    if (try_exact_div(db, da, r)) {
        for (std::size_t k = 0; k < A.size(); ++k)
            if (A[k] * r != B[k]) return false;
        return true;
    }
    if (try_exact_div(da, db, r)) {
        for (std::size_t k = 0; k < A.size(); ++k)
            if (B[k] * r != A[k]) return false;
        return true;
    }
    for (std::size_t k = 0; k < A.size(); ++k)
        if (A[k] * db != B[k] * da) return false;
    return true;
}

TPoly bar_t(const TPoly& p) {
    if (p.is_zero()) return p;
    std::vector<LaurentPoly> nums;
    nums.reserve(p.raw_nums().size());
    for (const auto& n : p.raw_nums()) nums.push_back(bar(n));
    return TPoly::from_parts(std::move(nums), bar(p.raw_den()));
}

TPolyDivMod divmod(const TPoly& p, const TPoly& m) {
    if (m.is_zero()) throw division_by_zero();
    TPolyDivMod out;
    if (p.is_zero() || p.degree() < m.degree()) {
        out.remainder = p;
        return out;
    }
    // Fraction-free pseudo-division of the numerator vectors:
    //   lead(M)^delta * P = Q * M + R,  delta = deg P - deg M + 1,
    // then p = [Q*dm / (lead^delta*dp)] * m + R / (lead^delta*dp).
    // For the monic integer-level divisors used throughout (minpoly),
    // lead = 1 and no coefficient growth occurs.
    const auto& M = m.raw_nums();
    const LaurentPoly& lead = M.back();
    const bool monic = lead.is_one();
    std::vector<LaurentPoly> R = p.raw_nums();
    const std::size_t dm = M.size() - 1;
    const std::size_t delta = R.size() - M.size() + 1;
    std::vector<LaurentPoly> Q(delta);
    std::size_t scalings = 0;
    while (R.size() > dm) {
        if (R.back().is_zero()) {
            R.pop_back();
            continue;
        }
        const std::size_t k = R.size() - 1 - dm;  // quotient power
        LaurentPoly s = R.back();
        if (!monic) {
            for (auto& c : R)
                if (!c.is_zero()) c = c * lead;
            for (auto& c : Q)
                if (!c.is_zero()) c = c * lead;
            ++scalings;
        }
        Q[k] += s;
        for (std::size_t t = 0; t < M.size(); ++t) {
            if (M[t].is_zero()) continue;
            R[k + t] -= s * M[t];
        }
        R.pop_back();  // top cancelled exactly
    }
    LaurentPoly full_den = p.raw_den();
    if (!monic) {
        for (; scalings < delta; ++scalings) {
            for (auto& c : R)
                if (!c.is_zero()) c = c * lead;
            for (auto& c : Q)
                if (!c.is_zero()) c = c * lead;
        }
        for (std::size_t i = 0; i < delta; ++i) full_den = full_den * lead;
    }
    out.quotient = TPoly::from_parts(std::move(Q), full_den).scaled(RatFunc(m.raw_den()));
    out.remainder = TPoly::from_parts(std::move(R), std::move(full_den));
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form constructors, memoized along their two-step product chains.
// ---------------------------------------------------------------------------

namespace {

// nums * (t^2 - c^2); c is a quantum integer, so multiplying by it twice
// takes the geometric-run path instead of a dense product by c^2.
std::vector<LaurentPoly> times_t2_minus_sq(const std::vector<LaurentPoly>& nums,
                                           const LaurentPoly& c) {
    std::vector<LaurentPoly> out(nums.size() + 2);
    for (std::size_t i = 0; i < nums.size(); ++i) {
        if (nums[i].is_zero()) continue;
        out[i + 2] += nums[i];
        out[i] -= (nums[i] * c) * c;
    }
    return out;
}

// nums * (t + a)(t + b), applied as two linear-factor passes so that the
// coefficient products stay multiplications by single quantum integers.
std::vector<LaurentPoly> times_quadratic(const std::vector<LaurentPoly>& nums,
                                         const LaurentPoly& a, const LaurentPoly& b) {
    auto linear = [](const std::vector<LaurentPoly>& in, const LaurentPoly& c) {
        std::vector<LaurentPoly> out(in.size() + 1);
        for (std::size_t i = 0; i < in.size(); ++i) {
            if (in[i].is_zero()) continue;
            out[i + 1] += in[i];
            if (!c.is_zero()) out[i] += in[i] * c;
        }
        return out;
    };
    return linear(linear(nums, a), b);
}

}  // namespace

TPoly p0(std::int64_t d) {
    if (d < 0) throw std::domain_error("p0 requires d >= 0");
    static std::mutex mu;
    static std::vector<std::vector<LaurentPoly>> chain{
        {LaurentPoly(1)},                 // N_0 = 1
        {LaurentPoly(), LaurentPoly(1)},  // N_1 = t
    };
    static std::vector<TPoly> built;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<std::int64_t>(chain.size()) <= d) {
        const std::int64_t k = static_cast<std::int64_t>(chain.size());
        // N_k = N_{k-2} * (t^2 - [[k-1]]^2)
        chain.push_back(times_t2_minus_sq(chain[chain.size() - 2], qint(k - 1)));
    }
    while (static_cast<std::int64_t>(built.size()) <= d) {
        const std::size_t k = built.size();
        built.push_back(TPoly::from_parts(chain[k], qfact(static_cast<std::int64_t>(k))));
    }
    return built[static_cast<std::size_t>(d)];
}

TPoly p1(std::int64_t m) {
    if (m <= 0) throw std::domain_error("p1 requires m >= 1");
    static std::mutex mu;
    static std::vector<std::vector<LaurentPoly>> chain{
        {},                               // unused (m = 0)
        {LaurentPoly(1)},                 // prod_1 = 1
        {LaurentPoly(), LaurentPoly(1)},  // prod_2 = t
    };
    static std::vector<TPoly> built{TPoly()};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<std::int64_t>(chain.size()) <= m) {
        const std::int64_t k = static_cast<std::int64_t>(chain.size());
        // prod_k = prod_{k-2} * (t^2 - [[k-2]]^2)
        chain.push_back(times_t2_minus_sq(chain[chain.size() - 2], qint(k - 2)));
    }
    while (static_cast<std::int64_t>(built.size()) <= m) {
        const std::size_t k = built.size();
        std::vector<LaurentPoly> nums(chain[k].size() + 1);
        for (std::size_t i = 0; i < chain[k].size(); ++i) nums[i + 1] = chain[k][i];
        built.push_back(
            TPoly::from_parts(std::move(nums), qfact(static_cast<std::int64_t>(k))));
    }
    return built[static_cast<std::size_t>(m)];
}

TPoly minpoly(std::int64_t d) {
    if (d < 0) throw std::domain_error("minpoly requires d >= 0");
    static std::mutex mu;
    static std::vector<std::vector<LaurentPoly>> chain{
        {LaurentPoly(-1), LaurentPoly(1)},          // m_0 = t - 1
        {LaurentPoly(), -qint(2), LaurentPoly(1)},  // m_1 = t^2 - [[2]] t
    };
    static std::vector<TPoly> built;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<std::int64_t>(chain.size()) <= d) {
        const std::int64_t k = static_cast<std::int64_t>(chain.size());
        // m_k = m_{k-2} * (t + [[k-1]]) (t - [[k+1]])
        chain.push_back(times_quadratic(chain[chain.size() - 2], qint(k - 1), -qint(k + 1)));
    }
    while (static_cast<std::int64_t>(built.size()) <= d) {
        built.push_back(TPoly::from_parts(chain[built.size()], LaurentPoly(1)));
    }
    return built[static_cast<std::size_t>(d)];
}

std::string TPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = rep_->nums.size(); k-- > 0;) {
        RatFunc c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c.to_string();
        } else {
            if (!c.is_one()) os << "(" << c.to_string() << ")*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace icb
