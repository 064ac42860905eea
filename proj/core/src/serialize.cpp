#include "icb/serialize.hpp"

#include <ostream>

namespace icb {

ordered_json to_json(const LaurentPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({e, c.get_str()});
    return arr;
}

LaurentPoly laurent_from_json(const ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("Laurent polynomial: expected array");
    std::map<std::int64_t, BigInt> terms;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw std::invalid_argument("Laurent polynomial: expected [exponent, coefficient]");
        const std::int64_t e = item[0].get<std::int64_t>();
        BigInt c;
        if (item[1].is_string())
            c = BigInt(item[1].get<std::string>());
        else
            c = BigInt(item[1].get<long>());
        terms[e] += c;
    }
    return LaurentPoly::from_terms(terms);
}

ordered_json to_json(const RatFunc& r) {
    return ordered_json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

RatFunc ratfunc_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return RatFunc(j.get<long>());
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("rational function: expected {\"num\", \"den\"}");
    return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

ordered_json to_json(const TPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

TPoly tpoly_from_json(const ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial in t: expected array");
    std::vector<RatFunc> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) coeffs.push_back(ratfunc_from_json(item));
    return TPoly::from_coeffs(coeffs);
}

ordered_json to_json(const SchurElement& x) {
    return ordered_json{{"level", x.level()}, {"poly", to_json(x.rep())}};
}

ordered_json cb_list_json(std::int64_t level) {
    ordered_json basis = ordered_json::array();
    for (const auto& [idx, elt] : cb_list(level)) {
        basis.push_back(
            ordered_json{{"eps", idx.eps}, {"deg", idx.deg}, {"poly", to_json(elt.rep())}});
    }
    return ordered_json{{"level", level}, {"basis", basis}};
}

namespace {

template <typename RowFn>
void for_each_structure_row(std::int64_t max_deg, RowFn&& fn) {
    for (int s = 0; s <= 1; ++s) {
        for (std::int64_t di = 0; di <= max_deg; ++di) {
            for (std::int64_t dj = 0; dj <= max_deg; ++dj) {
                const CBIndex i = basis_index(s, di);
                const CBIndex j = basis_index(s, dj);
                for (const auto& [k, c] : structure_constants(i, j)) fn(i, j, k, c);
            }
        }
    }
}

}  // namespace

ordered_json structure_table_json(std::int64_t max_deg) {
    ordered_json rows = ordered_json::array();
    for_each_structure_row(max_deg, [&](const CBIndex& i, const CBIndex& j, const CBIndex& k,
                                        const RatFunc& c) {
        rows.push_back(ordered_json{{"eps_i", i.eps},
                                    {"deg_i", i.deg},
                                    {"eps_j", j.eps},
                                    {"deg_j", j.deg},
                                    {"eps_k", k.eps},
                                    {"deg_k", k.deg},
                                    {"coefficient", c.to_string()}});
    });
    return ordered_json{{"max_deg", max_deg}, {"rows", rows}};
}

void structure_table_csv(std::ostream& os, std::int64_t max_deg) {
    os << "eps_i,deg_i,eps_j,deg_j,eps_k,deg_k,coefficient\n";
    for_each_structure_row(max_deg, [&](const CBIndex& i, const CBIndex& j, const CBIndex& k,
                                        const RatFunc& c) {
        os << i.eps << ',' << i.deg << ',' << j.eps << ',' << j.deg << ',' << k.eps << ','
           << k.deg << ",\"" << c.to_string() << "\"\n";
    });
}

void cb_table_csv(std::ostream& os, std::int64_t level) {
    os << "eps,deg,power,coefficient\n";
    for (const auto& [idx, elt] : cb_list(level)) {
        const auto coeffs = elt.rep().coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            os << idx.eps << ',' << idx.deg << ',' << k << ",\"" << coeffs[k].to_string()
               << "\"\n";
        }
    }
}

ordered_json to_json(const RewriteStep& step) {
    ordered_json after = ordered_json::array();
    for (const auto& [w, c] : step.after)
        after.push_back(ordered_json{{"word", w}, {"coeff", c.to_string()}});
    return ordered_json{{"step", step.step},
                        {"rule", step.rule},
                        {"position", step.position},
                        {"before", step.before},
                        {"after", after}};
}

void write_log_jsonl(std::ostream& os, const RewriteLog& log) {
    for (const auto& step : log) os << to_json(step).dump() << '\n';
}

}  // namespace icb
