/**
 * @file ujrewrite.hpp
 * @brief The presented algebra on generators e, f, k, k^-1 as a free
 *        algebra with a terminating rewriting system, and mechanical
 *        certification of the divided-power commutation identity by
 *        reduction to zero.
 *
 * Letters: 'e', 'f', 'k', and 'K' (denoting k^-1). Reduction applies, at
 * the leftmost matching position, the first matching rule in the fixed
 * rule order; every rewrite step substitutes an equal element, so a zero
 * normal form certifies an identity regardless of confluence. A nonzero
 * normal form is inconclusive, never a refutation.
 */
#pragma once

#include "icb/ratfunc.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace icb {

struct step_budget_exceeded : std::runtime_error {
    step_budget_exceeded() : std::runtime_error("rewrite step budget exceeded") {}
};

/// Finite word over {e, f, k, K}; the empty word is the unit.
using Word = std::string;

/// Finite Q(v)-linear combination of words; no zero coefficients stored.
class NCPoly {
public:
    NCPoly() = default;
    static NCPoly one() { return from_word(Word{}); }
    static NCPoly from_word(const Word& w, RatFunc coeff = RatFunc(1));
    static NCPoly generator(char letter);

    const std::map<Word, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    /// Concatenation of words, extended bilinearly.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly scaled(const RatFunc& c) const;

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::map<Word, RatFunc> terms_;
    void add_term_(const Word& w, const RatFunc& c);
};

/// Termination order on words, compared lexicographically by
///   (1) k-inversions: number of k/K letters standing left of an e/f letter,
///   (2) degree-lexicographic order on the e/f-subword with f > e,
///   (3) total k/K count.
/// Returns true iff a is strictly smaller than b.
bool word_less(const Word& a, const Word& b);

/// Oriented rewrite rule; construction asserts that every word on the
/// right-hand side is strictly smaller than the left-hand side.
struct RewriteRule {
    std::string name;
    Word lhs;
    NCPoly rhs;

    RewriteRule(std::string name, Word lhs, NCPoly rhs);
};

/// The fixed oriented system:
///   kK -> 1, Kk -> 1,
///   ke -> v^3 ek, kf -> v^-3 fk, Ke -> v^-3 eK, Kf -> v^3 fK,
///   fee -> [[2]] efe - eef - [[2]](v ek + v^-1 eK),
///   ffe -> [[2]] fef - eff - [[2]](v^-2 fk + v^2 fK).
/// The last two are the inhomogeneous Serre relations rearranged with all
/// k/K letters commuted to the right of e/f.
const std::vector<RewriteRule>& rule_set();

/// One recorded rewrite: the rule applied to `before` at `position`,
/// producing the rule-level substitution `after`.
struct RewriteStep {
    std::uint64_t step = 0;
    std::string rule;
    std::size_t position = 0;
    Word before;
    std::vector<std::pair<Word, RatFunc>> after;
};

using RewriteLog = std::vector<RewriteStep>;

struct ReduceOptions {
    std::uint64_t step_budget = 1'000'000;
    RewriteLog* log = nullptr;
};

/// Reduces to a normal form containing no rule left-hand side as a subword.
/// Throws step_budget_exceeded when the budget runs out.
NCPoly reduce(const NCPoly& x, const ReduceOptions& opts = {});

/// Checks a recorded log step by step against rule_set(): the rule's
/// left-hand side must occur at the recorded position and the recorded
/// substitution must match the rule's right-hand side.
bool validate_log(const RewriteLog& log);

/// Divided power g^n / [[n]]! for g in {e, f}.
NCPoly divided_power(char g, std::int64_t n);

enum class LemmaVerdict { certified, inconclusive };

struct LemmaAResult {
    LemmaVerdict verdict = LemmaVerdict::inconclusive;
    NCPoly normal_form;      // zero when certified
    std::uint64_t steps = 0;  // rewrite steps spent
};

/// Certifies f e^{(n+1)} = e^{(n)}(fe - v ef - [[n]](v^n k + v^-n K)) + v^{n+1} e^{(n+1)} f
/// by reducing LHS - RHS to zero.
LemmaAResult verify_lemma_a(std::int64_t n, const ReduceOptions& opts = {});

}  // namespace icb
