#include "icb/laurent.hpp"

#include <algorithm>
#include <cstring>
#include <mutex>
#include <sstream>

namespace icb {

namespace {

constexpr int kLimbBits = 64;
static_assert(sizeof(mp_limb_t) * 8 == 64, "Kronecker packing assumes 64-bit limbs");

std::size_t bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t ceil_log2(std::size_t n) {
    std::size_t b = 0;
    while ((std::size_t{1} << b) < n) ++b;
    return b;
}

}  // namespace

LaurentPoly::LaurentPoly(BigInt c, std::int64_t exp) {
    if (c != 0) {
        min_exp_ = exp;
        coeffs_.push_back(std::move(c));
    }
}

LaurentPoly LaurentPoly::from_terms(const std::map<std::int64_t, BigInt>& terms) {
    LaurentPoly r;
    std::int64_t lo = 0, hi = 0;
    bool any = false;
    for (const auto& [e, c] : terms) {
        if (c == 0) continue;
        if (!any) {
            lo = hi = e;
            any = true;
        } else {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
    }
    if (!any) return r;
    r.min_exp_ = lo;
    r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
    for (const auto& [e, c] : terms) {
        if (c != 0) r.coeffs_[static_cast<std::size_t>(e - lo)] = c;
    }
    return r;
}

void LaurentPoly::trim_() {
    std::size_t lo = 0, hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    while (lo < hi && coeffs_[lo] == 0) ++lo;
    if (lo == hi) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    if (lo > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lo));
    coeffs_.resize(hi - lo);
    min_exp_ += static_cast<std::int64_t>(lo);
}

std::int64_t LaurentPoly::min_exp() const {
    if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
    return min_exp_;
}

std::int64_t LaurentPoly::max_exp() const {
    if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
    return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

BigInt LaurentPoly::coeff(std::int64_t exp) const {
    if (is_zero() || exp < min_exp_) return BigInt(0);
    std::int64_t i = exp - min_exp_;
    if (i >= static_cast<std::int64_t>(coeffs_.size())) return BigInt(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

std::map<std::int64_t, BigInt> LaurentPoly::terms() const {
    std::map<std::int64_t, BigInt> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) out.emplace(min_exp_ + static_cast<std::int64_t>(i), coeffs_[i]);
    }
    return out;
}

std::size_t LaurentPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

const BigInt& LaurentPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const BigInt& LaurentPoly::trailing() const {
    if (is_zero()) throw std::domain_error("trailing coefficient of zero polynomial");
    return coeffs_.front();
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_exp_ += k;
    return r;
}

LaurentPoly& LaurentPoly::shift(std::int64_t k) {
    if (!is_zero()) min_exp_ += k;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    std::int64_t lo = std::min(min_exp_, o.min_exp_);
    std::int64_t hi = std::max(min_exp_ + static_cast<std::int64_t>(coeffs_.size()),
                               o.min_exp_ + static_cast<std::int64_t>(o.coeffs_.size()));
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[static_cast<std::size_t>(min_exp_ - lo) + i] = std::move(coeffs_[i]);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(o.min_exp_ - lo) + i] += o.coeffs_[i];
    min_exp_ = lo;
    coeffs_ = std::move(out);
    trim_();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = -o;
    std::int64_t lo = std::min(min_exp_, o.min_exp_);
    std::int64_t hi = std::max(min_exp_ + static_cast<std::int64_t>(coeffs_.size()),
                               o.min_exp_ + static_cast<std::int64_t>(o.coeffs_.size()));
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[static_cast<std::size_t>(min_exp_ - lo) + i] = std::move(coeffs_[i]);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(o.min_exp_ - lo) + i] -= o.coeffs_[i];
    min_exp_ = lo;
    coeffs_ = std::move(out);
    trim_();
    return *this;
}

LaurentPoly laurent_detail::mul_schoolbook(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.min_exp_ = a.min_exp_ + b.min_exp_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[j].get_mpz_t());
        }
    }
    r.trim_();
    return r;
}

namespace {

// Scratch state reused across Kronecker multiplications; the packed
// integers at the top recursion levels are megabyte-sized, and
// reallocating them for every product dominates the runtime otherwise.
struct KroneckerScratch {
    std::vector<mp_limb_t> pos, neg, buf;
    BigInt pa, pb, prod, offset, window, half;
};

KroneckerScratch& scratch() {
    static thread_local KroneckerScratch s;
    return s;
}

// Largest s such that the support of `coeffs` lies in first + s*Z.
// Returns the index of the first nonzero coefficient through `first`.
std::size_t support_stride(const std::vector<BigInt>& coeffs, std::size_t& first) {
    first = 0;
    while (first < coeffs.size() && coeffs[first] == 0) ++first;
    std::size_t g = 0;
    for (std::size_t i = first + 1; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        std::size_t d = i - first;
        while (d) {
            std::size_t t = g % d;
            g = d;
            d = t;
        }
        if (g == 1) break;
    }
    return g == 0 ? 1 : g;
}

// Packs coefficients first, first+step, ... into windows of stride_limbs
// limbs each, as the signed integer (positive part) - (negative part).
void pack_signed(const std::vector<BigInt>& coeffs, std::size_t first, std::size_t step,
                 std::size_t count, std::size_t stride_limbs, BigInt& out) {
    auto& s = scratch();
    const std::size_t total = count * stride_limbs + 1;
    s.pos.assign(total, 0);
    s.neg.assign(total, 0);
    bool any_neg = false, any_pos = false;
    for (std::size_t i = 0; i < count; ++i) {
        const BigInt& c = coeffs[first + i * step];
        if (c == 0) continue;
        mp_limb_t* dst = (sgn(c) > 0 ? s.pos : s.neg).data() + i * stride_limbs;
        (sgn(c) > 0 ? any_pos : any_neg) = true;
        std::size_t words = 0;
        mpz_export(dst, &words, -1, sizeof(mp_limb_t), 0, 0, c.get_mpz_t());
    }
    out = 0;
    if (any_pos) mpz_import(out.get_mpz_t(), total, -1, sizeof(mp_limb_t), 0, 0, s.pos.data());
    if (any_neg) {
        static thread_local BigInt neg_tmp;
        mpz_import(neg_tmp.get_mpz_t(), total, -1, sizeof(mp_limb_t), 0, 0, s.neg.data());
        out -= neg_tmp;
    }
}

}  // namespace

LaurentPoly laurent_detail::mul_kronecker(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;

    // Both operands here are typically supported on a single parity class
    // of exponents; compressing by the common support stride halves the
    // packed size.
    std::size_t first_a = 0, first_b = 0;
    const std::size_t ga = support_stride(a.coeffs_, first_a);
    const std::size_t gb = support_stride(b.coeffs_, first_b);
    std::size_t g = ga;
    {
        std::size_t x = gb;
        while (x) {
            std::size_t t = g % x;
            g = x;
            x = t;
        }
        if (g == 0) g = 1;
    }
    const std::size_t na = (a.coeffs_.size() - 1 - first_a) / g + 1;
    const std::size_t nb = (b.coeffs_.size() - 1 - first_b) / g + 1;

    std::size_t max_a = 0, max_b = 0;
    for (const auto& c : a.coeffs_) max_a = std::max(max_a, bit_length(c));
    for (const auto& c : b.coeffs_) max_b = std::max(max_b, bit_length(c));
    // Window must hold |sum of overlap products| plus a sign bit.
    const std::size_t need = max_a + max_b + ceil_log2(std::min(na, nb)) + 2;
    const std::size_t stride_limbs = (need + kLimbBits - 1) / kLimbBits;
    const std::size_t stride_bits = stride_limbs * kLimbBits;

    auto& s = scratch();
    pack_signed(a.coeffs_, first_a, g, na, stride_limbs, s.pa);
    pack_signed(b.coeffs_, first_b, g, nb, stride_limbs, s.pb);
    s.prod = s.pa * s.pb;

    const std::size_t n_out = na + nb - 1;

    // Shift every window into [0, 2^stride) by adding half a window, so the
    // windows can be read back without borrow propagation.
    s.buf.assign(n_out * stride_limbs + 1, 0);
    for (std::size_t i = 0; i < n_out; ++i)
        s.buf[i * stride_limbs + stride_limbs - 1] = mp_limb_t{1} << (kLimbBits - 1);
    mpz_import(s.offset.get_mpz_t(), s.buf.size(), -1, sizeof(mp_limb_t), 0, 0, s.buf.data());
    s.prod += s.offset;
    if (sgn(s.prod) < 0) throw std::logic_error("kronecker window overflow");

    std::fill(s.buf.begin(), s.buf.end(), 0);
    std::size_t words = 0;
    mpz_export(s.buf.data(), &words, -1, sizeof(mp_limb_t), 0, 0, s.prod.get_mpz_t());

    mpz_set_ui(s.half.get_mpz_t(), 0);
    mpz_setbit(s.half.get_mpz_t(), static_cast<mp_bitcnt_t>(stride_bits - 1));
    r.min_exp_ = a.min_exp_ + b.min_exp_ + static_cast<std::int64_t>(first_a + first_b);
    r.coeffs_.assign((n_out - 1) * g + 1, BigInt(0));
    for (std::size_t i = 0; i < n_out; ++i) {
        mpz_import(s.window.get_mpz_t(), stride_limbs, -1, sizeof(mp_limb_t), 0, 0,
                   s.buf.data() + i * stride_limbs);
        s.window -= s.half;
        if (s.window != 0) r.coeffs_[i * g] = s.window;
    }
    r.trim_();
    return r;
}

namespace {

// b = c * v^{min_exp} * (1 + v^s + ... + v^{s(k-1)})? Quantum integers and
// their shifts have this geometric-run shape, and multiplying by it needs
// only running sums.
struct OnesRun {
    std::int64_t spacing = 0;
    std::size_t count = 0;
    const BigInt* value = nullptr;
};

bool detect_ones_run(const std::vector<BigInt>& coeffs, OnesRun& run) {
    // after trimming the first and last coefficients are nonzero
    if (coeffs.size() < 2) return false;
    const BigInt& c = coeffs.front();
    std::size_t second = 1;
    while (second < coeffs.size() && coeffs[second] == 0) ++second;
    const std::size_t s = second;
    if ((coeffs.size() - 1) % s != 0) return false;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i % s == 0) {
            if (coeffs[i] != c) return false;
        } else if (coeffs[i] != 0) {
            return false;
        }
    }
    run.spacing = static_cast<std::int64_t>(s);
    run.count = (coeffs.size() - 1) / s + 1;
    run.value = &c;
    return true;
}

}  // namespace

LaurentPoly laurent_detail::mul_ones_run(const LaurentPoly& a, const LaurentPoly& b) {
    OnesRun run;
    if (!detect_ones_run(b.coeffs_, run)) throw std::logic_error("not a ones-run operand");
    const std::size_t s = static_cast<std::size_t>(run.spacing);
    const std::size_t sk = s * run.count;
    LaurentPoly r;
    r.min_exp_ = a.min_exp_ + b.min_exp_;
    r.coeffs_.assign(a.coeffs_.size() + s * (run.count - 1), BigInt(0));
    // out[i] = out[i-s] + a[i] - a[i-s*count]
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        BigInt& out = r.coeffs_[i];
        if (i >= s) out = r.coeffs_[i - s];
        if (i < a.coeffs_.size() && a.coeffs_[i] != 0)
            mpz_add(out.get_mpz_t(), out.get_mpz_t(), a.coeffs_[i].get_mpz_t());
        if (i >= sk && a.coeffs_[i - sk] != 0)
            mpz_sub(out.get_mpz_t(), out.get_mpz_t(), a.coeffs_[i - sk].get_mpz_t());
    }
    const BigInt& c = *run.value;
    if (c != 1) {
        for (auto& x : r.coeffs_)
            if (x != 0) x *= c;
    }
    r.trim_();
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    // Monomial fast path.
    if (a.coeffs_.size() == 1 || b.coeffs_.size() == 1) {
        const LaurentPoly& mono = a.coeffs_.size() == 1 ? a : b;
        const LaurentPoly& poly = a.coeffs_.size() == 1 ? b : a;
        LaurentPoly r = poly;
        r.min_exp_ += mono.min_exp_;
        if (mono.coeffs_[0] != 1) {
            for (auto& c : r.coeffs_)
                if (c != 0) c *= mono.coeffs_[0];
        }
        return r;
    }
    {
        const LaurentPoly& small = a.coeffs_.size() <= b.coeffs_.size() ? a : b;
        const LaurentPoly& large = a.coeffs_.size() <= b.coeffs_.size() ? b : a;
        OnesRun run;
        if (detect_ones_run(small.coeffs_, run))
            return laurent_detail::mul_ones_run(large, small);
    }
    if (a.coeffs_.size() * b.coeffs_.size() <= 4096)
        return laurent_detail::mul_schoolbook(a, b);
    return laurent_detail::mul_kronecker(a, b);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool LaurentPoly::is_nonnegative() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

LaurentPoly bar(const LaurentPoly& p) {
    LaurentPoly r;
    if (p.is_zero()) return r;
    r.coeffs_.assign(p.coeffs_.rbegin(), p.coeffs_.rend());
    r.min_exp_ = -(p.min_exp_ + static_cast<std::int64_t>(p.coeffs_.size()) - 1);
    return r;
}

LaurentPoly qint(std::int64_t n) {
    if (n == 0) return LaurentPoly();
    if (n < 0) return -qint(-n);
    // v^{n-1} + v^{n-3} + ... + v^{1-n}
    std::map<std::int64_t, BigInt> t;
    for (std::int64_t e = 1 - n; e <= n - 1; e += 2) t[e] = 1;
    return LaurentPoly::from_terms(t);
}

LaurentPoly qfact(std::int64_t n) {
    if (n < 0) throw std::domain_error("qfact of negative integer");
    static std::mutex mu;
    static std::vector<LaurentPoly> cache{LaurentPoly(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<std::int64_t>(cache.size()) <= n)
        cache.push_back(cache.back() * qint(static_cast<std::int64_t>(cache.size())));
    return cache[static_cast<std::size_t>(n)];
}

namespace {

struct DivisionResult {
    bool exact = false;
    LaurentPoly quotient;
};

DivisionResult divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    DivisionResult res;
    if (p.is_zero()) {
        res.exact = true;
        return res;
    }
    auto pt = p.terms();
    auto qt = q.terms();
    std::vector<BigInt> r;
    std::vector<BigInt> d;
    r.reserve(pt.size());
    std::int64_t p_lo = p.min_exp(), q_lo = q.min_exp();
    std::size_t p_len = static_cast<std::size_t>(p.max_exp() - p_lo + 1);
    std::size_t q_len = static_cast<std::size_t>(q.max_exp() - q_lo + 1);
    if (p_len < q_len) return res;
    r.assign(p_len, BigInt(0));
    d.assign(q_len, BigInt(0));
    for (const auto& [e, c] : pt) r[static_cast<std::size_t>(e - p_lo)] = c;
    for (const auto& [e, c] : qt) d[static_cast<std::size_t>(e - q_lo)] = c;

    const std::size_t quot_len = p_len - q_len + 1;
    std::vector<BigInt> quot(quot_len, BigInt(0));
    const BigInt& dl = d.back();
    for (std::size_t j = quot_len; j-- > 0;) {
        BigInt& top = r[j + q_len - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), dl.get_mpz_t())) return res;
        BigInt f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), dl.get_mpz_t());
        for (std::size_t t = 0; t < q_len; ++t) {
            if (d[t] != 0) mpz_submul(r[j + t].get_mpz_t(), f.get_mpz_t(), d[t].get_mpz_t());
        }
        quot[j] = std::move(f);
    }
    for (const auto& c : r)
        if (c != 0) return res;

    std::map<std::int64_t, BigInt> qterm;
    for (std::size_t j = 0; j < quot_len; ++j)
        if (quot[j] != 0) qterm[p_lo - q_lo + static_cast<std::int64_t>(j)] = quot[j];
    res.exact = true;
    res.quotient = LaurentPoly::from_terms(qterm);
    return res;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw division_by_zero();
    auto res = divide_exact(p, q);
    if (!res.exact) throw inexact_division();
    return res.quotient;
}

bool try_exact_div(const LaurentPoly& p, const LaurentPoly& q, LaurentPoly& out) {
    if (q.is_zero()) return false;
    auto res = divide_exact(p, q);
    if (!res.exact) return false;
    out = std::move(res.quotient);
    return true;
}

// ---------------------------------------------------------------------------
// gcd via modular images (Brown): compute monic gcds mod word-size primes,
// CRT-combine the leading-coefficient-scaled images, verify by exact division.
// ---------------------------------------------------------------------------

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::vector<std::uint64_t> reduce_mod(const std::vector<BigInt>& a, std::uint64_t p) {
    std::vector<std::uint64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// In-place remainder: a <- a mod b over F_p. Degrees are sizes minus one.
void rem_mod(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
             std::uint64_t p) {
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t f = mulmod(a.back(), inv, p);
        if (f != 0) {
            const std::size_t off = a.size() - b.size();
            for (std::size_t t = 0; t + 1 < b.size(); ++t) {
                if (b[t] == 0) continue;
                std::uint64_t s = mulmod(f, b[t], p);
                std::uint64_t& cur = a[off + t];
                cur = (cur >= s) ? cur - s : cur + (p - s);
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() <= db) break;
    }
    (void)db;
}

std::vector<std::uint64_t> gcd_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                                   std::uint64_t p) {
    while (!b.empty()) {
        rem_mod(a, b, p);
        a.swap(b);
    }
    // normalize monic
    if (!a.empty() && a.back() != 1) {
        std::uint64_t inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

std::uint64_t next_prime_64(std::uint64_t start) {
    mpz_class s(0);
    mpz_import(s.get_mpz_t(), 1, -1, sizeof(std::uint64_t), 0, 0, &start);
    mpz_class q;
    mpz_nextprime(q.get_mpz_t(), s.get_mpz_t());
    return static_cast<std::uint64_t>(mpz_get_ui(q.get_mpz_t()));
}

BigInt positive_content(const std::vector<BigInt>& a) {
    BigInt g = 0;
    for (const auto& c : a) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly poly_from_vector(const std::vector<BigInt>& v) {
    std::map<std::int64_t, BigInt> t;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) t[static_cast<std::int64_t>(i)] = v[i];
    return LaurentPoly::from_terms(t);
}

// Canonical associate: min_exp 0, positive leading coefficient.
LaurentPoly canonical_unit_form(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly r = p.shifted(-p.min_exp());
    if (r.leading() < 0) r = -r;
    return r;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero()) return canonical_unit_form(b);
    if (b.is_zero()) return canonical_unit_form(a);

    // Shift to ordinary polynomials with nonzero constant term.
    std::vector<BigInt> A, B;
    {
        auto at = a.terms();
        auto bt = b.terms();
        A.assign(static_cast<std::size_t>(a.max_exp() - a.min_exp() + 1), BigInt(0));
        B.assign(static_cast<std::size_t>(b.max_exp() - b.min_exp() + 1), BigInt(0));
        for (const auto& [e, c] : at) A[static_cast<std::size_t>(e - a.min_exp())] = c;
        for (const auto& [e, c] : bt) B[static_cast<std::size_t>(e - b.min_exp())] = c;
    }
    BigInt ca = positive_content(A), cb = positive_content(B);
    BigInt cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    for (auto& c : A)
        if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    for (auto& c : B)
        if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());

    if (A.size() == 1 || B.size() == 1) return LaurentPoly(cg);

    BigInt glc;
    mpz_gcd(glc.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());

    LaurentPoly pa = poly_from_vector(A), pb = poly_from_vector(B);

    static std::mutex prime_mu;
    static std::vector<std::uint64_t> primes;

    BigInt modulus = 0;
    std::vector<BigInt> acc;
    std::size_t acc_deg = SIZE_MAX;

    for (std::size_t iter = 0; iter < 256; ++iter) {
        std::uint64_t p;
        {
            std::lock_guard<std::mutex> lock(prime_mu);
            while (primes.size() <= iter)
                primes.push_back(next_prime_64(primes.empty() ? (std::uint64_t{1} << 62)
                                                              : primes.back()));
            p = primes[iter];
        }
        if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 ||
            mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0)
            continue;

        auto gp = gcd_mod(reduce_mod(A, p), reduce_mod(B, p), p);
        if (gp.size() == 1) return LaurentPoly(cg);
        const std::size_t dg = gp.size() - 1;
        if (dg > acc_deg) continue;  // unlucky prime

        const std::uint64_t scale = mpz_fdiv_ui(glc.get_mpz_t(), p);
        bool changed = false;
        if (dg < acc_deg) {
            acc.assign(gp.size(), BigInt(0));
            for (std::size_t i = 0; i < gp.size(); ++i) {
                BigInt x = BigInt(mulmod(gp[i], scale, p));
                if (x > BigInt(p) / 2) x -= BigInt(p);
                acc[i] = x;
            }
            modulus = BigInt(p);
            acc_deg = dg;
            changed = true;
        } else {
            const std::uint64_t m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
            if (m_mod_p == 0) continue;
            const std::uint64_t minv = invmod(m_mod_p, p);
            BigInt new_mod = modulus * BigInt(p);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                std::uint64_t want = mulmod(i < gp.size() ? gp[i] : 0, scale, p);
                std::uint64_t have = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
                std::uint64_t diff = want >= have ? want - have : want + (p - have);
                std::uint64_t t = mulmod(diff, minv, p);
                if (t != 0) {
                    acc[i] += modulus * BigInt(t);
                    changed = true;
                }
                if (acc[i] * 2 > new_mod) acc[i] -= new_mod;
            }
            modulus = new_mod;
        }

        if (!changed) {
            std::vector<BigInt> cand = acc;
            BigInt cont = positive_content(cand);
            if (cont != 0 && cont != 1)
                for (auto& c : cand)
                    if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());
            LaurentPoly g = poly_from_vector(cand);
            if (g.is_zero()) continue;
            if (g.leading() < 0) g = -g;
            LaurentPoly tmp;
            if (try_exact_div(pa, g, tmp) && try_exact_div(pb, g, tmp))
                return LaurentPoly(cg) * g;
        }
    }
    throw std::logic_error("modular gcd failed to stabilize");
}

bool qstep_identity(std::int64_t d, std::int64_t n) {
    LaurentPoly lhs = qint(d - 1);
    LaurentPoly qn = qint(n);
    lhs -= qn.shifted(n + 1 - d) + qn.shifted(d - 1 - n);
    return lhs == qint(d - 1 - 2 * n);
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const std::int64_t e = min_exp_ + static_cast<std::int64_t>(i);
        BigInt abs_c = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << abs_c.get_str();
        } else {
            if (abs_c != 1) os << abs_c.get_str() << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace icb
