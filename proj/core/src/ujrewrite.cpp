#include "icb/ujrewrite.hpp"

#include <sstream>

namespace icb {

namespace {

bool is_kletter(char c) { return c == 'k' || c == 'K'; }
bool is_efletter(char c) { return c == 'e' || c == 'f'; }

void check_letter(char c) {
    if (!is_kletter(c) && !is_efletter(c)) throw std::domain_error("invalid generator letter");
}

// number of k/K letters standing left of some e/f letter
std::uint64_t k_inversions(const Word& w) {
    std::uint64_t inv = 0, ks = 0;
    for (char c : w) {
        if (is_kletter(c)) ++ks;
        else if (is_efletter(c)) inv += ks;
    }
    return inv;
}

std::string ef_subword(const Word& w) {
    std::string s;
    for (char c : w)
        if (is_efletter(c)) s.push_back(c);
    return s;
}

std::size_t k_count(const Word& w) {
    std::size_t n = 0;
    for (char c : w)
        if (is_kletter(c)) ++n;
    return n;
}

// -1 / 0 / +1 comparison of ef-subwords, degree first then lex with f > e.
int cmp_ef(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return a[i] == 'e' ? -1 : 1;  // f beats e
    }
    return 0;
}

}  // namespace

bool word_less(const Word& a, const Word& b) {
    const auto ia = k_inversions(a), ib = k_inversions(b);
    if (ia != ib) return ia < ib;
    const int c = cmp_ef(ef_subword(a), ef_subword(b));
    if (c != 0) return c < 0;
    return k_count(a) < k_count(b);
}

NCPoly NCPoly::from_word(const Word& w, RatFunc coeff) {
    for (char c : w) check_letter(c);
    NCPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(w, std::move(coeff));
    return p;
}

NCPoly NCPoly::generator(char letter) { return from_word(Word(1, letter)); }

void NCPoly::add_term_(const Word& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term_(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term_(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            r.add_term_(wa + wb, ca * cb);
        }
    }
    return r;
}

NCPoly NCPoly::scaled(const RatFunc& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, t] : terms_) r.terms_.emplace(w, t * c);
    return r;
}

std::string NCPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (!w.empty()) os << "*" << w;
    }
    return os.str();
}

RewriteRule::RewriteRule(std::string name_, Word lhs_, NCPoly rhs_)
    : name(std::move(name_)), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {
    for (const auto& [w, c] : rhs.terms()) {
        if (!word_less(w, lhs))
            throw std::logic_error("rewrite rule violates the termination order: " + name);
    }
}

const std::vector<RewriteRule>& rule_set() {
    static const std::vector<RewriteRule> rules = [] {
        const RatFunc v(LaurentPoly(BigInt(1), 1));
        const RatFunc vinv(LaurentPoly(BigInt(1), -1));
        const RatFunc q2(qint(2));
        auto mono = [](const Word& w, RatFunc c) { return NCPoly::from_word(w, std::move(c)); };

        std::vector<RewriteRule> r;
        r.emplace_back("kK", "kK", NCPoly::one());
        r.emplace_back("Kk", "Kk", NCPoly::one());
        r.emplace_back("ke", "ke", mono("ek", RatFunc(LaurentPoly(BigInt(1), 3))));
        r.emplace_back("kf", "kf", mono("fk", RatFunc(LaurentPoly(BigInt(1), -3))));
        r.emplace_back("Ke", "Ke", mono("eK", RatFunc(LaurentPoly(BigInt(1), -3))));
        r.emplace_back("Kf", "Kf", mono("fK", RatFunc(LaurentPoly(BigInt(1), 3))));
        // fee -> [[2]] efe - eef - [[2]] v ek - [[2]] v^-1 eK
        r.emplace_back("fee", "fee",
                       mono("efe", q2) - mono("eef", RatFunc(1)) - mono("ek", q2 * v) -
                           mono("eK", q2 * vinv));
        // ffe -> [[2]] fef - eff - [[2]] v^-2 fk - [[2]] v^2 fK
        // (the f-side Serre relation with k, K commuted to the right)
        r.emplace_back("ffe", "ffe",
                       mono("fef", q2) - mono("eff", RatFunc(1)) -
                           mono("fk", q2 * RatFunc(LaurentPoly(BigInt(1), -2))) -
                           mono("fK", q2 * RatFunc(LaurentPoly(BigInt(1), 2))));
        return r;
    }();
    return rules;
}

namespace {

// Leftmost position at which any rule matches; rules tried in order at
// each position. Returns false when w is in normal form.
bool find_redex(const Word& w, std::size_t& pos, std::size_t& rule_idx) {
    const auto& rules = rule_set();
    for (std::size_t p = 0; p < w.size(); ++p) {
        for (std::size_t ri = 0; ri < rules.size(); ++ri) {
            const Word& lhs = rules[ri].lhs;
            if (lhs.size() <= w.size() - p && w.compare(p, lhs.size(), lhs) == 0) {
                pos = p;
                rule_idx = ri;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

NCPoly reduce(const NCPoly& x, const ReduceOptions& opts) {
    NCPoly normal;
    std::map<Word, RatFunc> pending(x.terms().begin(), x.terms().end());
    std::uint64_t steps = 0;
    while (!pending.empty()) {
        auto it = pending.begin();
        const Word w = it->first;
        const RatFunc c = it->second;
        pending.erase(it);
        if (c.is_zero()) continue;

        std::size_t pos = 0, ri = 0;
        if (!find_redex(w, pos, ri)) {
            normal += NCPoly::from_word(w, c);
            continue;
        }
        if (++steps > opts.step_budget) throw step_budget_exceeded();
        const RewriteRule& rule = rule_set()[ri];

        RewriteStep* logged = nullptr;
        if (opts.log) {
            opts.log->push_back({steps, rule.name, pos, w, {}});
            logged = &opts.log->back();
        }
        for (const auto& [rw, rc] : rule.rhs.terms()) {
            Word nw = w.substr(0, pos) + rw + w.substr(pos + rule.lhs.size());
            if (logged) logged->after.emplace_back(nw, rc);
            auto [pit, inserted] = pending.try_emplace(nw, RatFunc());
            pit->second += c * rc;
            if (pit->second.is_zero()) pending.erase(pit);
        }
    }
    return normal;
}

bool validate_log(const RewriteLog& log) {
    const auto& rules = rule_set();
    for (const auto& step : log) {
        const RewriteRule* rule = nullptr;
        for (const auto& r : rules)
            if (r.name == step.rule) {
                rule = &r;
                break;
            }
        if (!rule) return false;
        const Word& w = step.before;
        if (step.position + rule->lhs.size() > w.size()) return false;
        if (w.compare(step.position, rule->lhs.size(), rule->lhs) != 0) return false;
        // The recorded substitution must be exactly prefix * rhs * suffix.
        std::map<Word, RatFunc> expect;
        for (const auto& [rw, rc] : rule->rhs.terms())
            expect[w.substr(0, step.position) + rw + w.substr(step.position + rule->lhs.size())] +=
                rc;
        std::map<Word, RatFunc> got;
        for (const auto& [gw, gc] : step.after) got[gw] += gc;
        for (auto it = expect.begin(); it != expect.end();)
            it = it->second.is_zero() ? expect.erase(it) : std::next(it);
        for (auto it = got.begin(); it != got.end();)
            it = it->second.is_zero() ? got.erase(it) : std::next(it);
        if (expect != got) return false;
    }
    return true;
}

NCPoly divided_power(char g, std::int64_t n) {
    if (g != 'e' && g != 'f') throw std::domain_error("divided power expects e or f");
    if (n < 0) throw std::domain_error("divided power of negative exponent");
    return NCPoly::from_word(Word(static_cast<std::size_t>(n), g),
                             RatFunc(LaurentPoly(1), qfact(n)));
}

LemmaAResult verify_lemma_a(std::int64_t n, const ReduceOptions& opts) {
    if (n < 0) throw std::domain_error("lemma requires n >= 0");
    const NCPoly f = NCPoly::generator('f');
    const RatFunc v(LaurentPoly(BigInt(1), 1));

    NCPoly lhs = f * divided_power('e', n + 1);

    NCPoly bracket = NCPoly::from_word("fe") - NCPoly::from_word("ef", v) -
                     NCPoly::from_word("k", RatFunc(qint(n) * LaurentPoly(BigInt(1), n))) -
                     NCPoly::from_word("K", RatFunc(qint(n) * LaurentPoly(BigInt(1), -n)));
    NCPoly rhs = divided_power('e', n) * bracket +
                 (divided_power('e', n + 1) * f).scaled(RatFunc(LaurentPoly(BigInt(1), n + 1)));

    RewriteLog local_log;
    ReduceOptions ro = opts;
    RewriteLog* log = opts.log ? opts.log : &local_log;
    ro.log = log;
    const std::size_t log_start = log->size();

    LemmaAResult res;
    res.normal_form = reduce(lhs - rhs, ro);
    res.steps = log->size() - log_start;
    res.verdict = res.normal_form.is_zero() ? LemmaVerdict::certified : LemmaVerdict::inconclusive;
    return res;
}

}  // namespace icb
