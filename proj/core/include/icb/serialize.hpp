/**
 * @file serialize.hpp
 * @brief JSON and CSV wire formats.
 *
 * LaurentPoly: array of [exponent, "coefficient"] pairs sorted by exponent,
 * coefficients as decimal strings. RatFunc: {"num": ..., "den": ...}.
 * TPoly: array of RatFunc in ascending power order. Basis lists:
 * {"level": d, "basis": [{"eps": e, "deg": m, "poly": [...]}, ...]}.
 * Structure-constant tables: CSV columns
 * eps_i,deg_i,eps_j,deg_j,eps_k,deg_k,coefficient or the JSON equivalent.
 * All emitters use insertion-ordered keys so output is reproducible.
 */
#pragma once

#include "icb/schur.hpp"
#include "icb/ujrewrite.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>

namespace icb {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const ordered_json& j);

ordered_json to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const ordered_json& j);

ordered_json to_json(const TPoly& p);
TPoly tpoly_from_json(const ordered_json& j);

ordered_json to_json(const SchurElement& x);

/// {"level": d, "basis": [{"eps", "deg", "poly"}...]}
ordered_json cb_list_json(std::int64_t level);

/// Rows b_i * b_j = sum coeff * b_k over all same-summand pairs with
/// deg i, deg j <= max_deg.
ordered_json structure_table_json(std::int64_t max_deg);
void structure_table_csv(std::ostream& os, std::int64_t max_deg);

void cb_table_csv(std::ostream& os, std::int64_t level);

ordered_json to_json(const RewriteStep& step);
void write_log_jsonl(std::ostream& os, const RewriteLog& log);

}  // namespace icb
