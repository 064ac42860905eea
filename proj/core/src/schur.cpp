#include "icb/schur.hpp"

#include <mutex>

namespace icb {

SchurElement::SchurElement(std::int64_t level, TPoly reduced_rep)
    : level_(level), rep_(std::move(reduced_rep)) {
    if (level_ < 0) throw std::domain_error("negative level");
    if (rep_.degree() > level_) throw std::domain_error("representative not reduced");
}

SchurElement project(const TPoly& p, std::int64_t level) {
    if (level < 0) throw std::domain_error("negative level");
    if (p.degree() <= level) return SchurElement(level, p);
    return SchurElement(level, divmod(p, minpoly(level)).remainder);
}

SchurElement add(const SchurElement& x, const SchurElement& y) {
    if (x.level() != y.level()) throw std::domain_error("level mismatch");
    return SchurElement(x.level(), x.rep() + y.rep());
}

SchurElement multiply(const SchurElement& x, const SchurElement& y) {
    if (x.level() != y.level()) throw std::domain_error("level mismatch");
    return project(x.rep() * y.rep(), x.level());
}

namespace {

// transfer is well defined because minpoly(d-2) divides minpoly(d);
// verified once per level rather than assumed.
void check_tower_divisibility(std::int64_t level) {
    static std::mutex mu;
    static std::vector<bool> checked(2, true);  // levels 0, 1 have no lower step
    std::lock_guard<std::mutex> lock(mu);
    if (level < static_cast<std::int64_t>(checked.size()) &&
        checked[static_cast<std::size_t>(level)])
        return;
    while (static_cast<std::int64_t>(checked.size()) <= level)
        checked.push_back(false);
    if (!checked[static_cast<std::size_t>(level)]) {
        if (!divmod(minpoly(level), minpoly(level - 2)).remainder.is_zero())
            throw std::logic_error("minimal polynomial tower divisibility failed");
        checked[static_cast<std::size_t>(level)] = true;
    }
}

}  // namespace

SchurElement transfer(const SchurElement& x) {
    if (x.level() < 2) throw std::domain_error("transfer requires level >= 2");
    check_tower_divisibility(x.level());
    return project(x.rep(), x.level() - 2);
}

std::vector<std::pair<CBIndex, SchurElement>> cb_list(std::int64_t level) {
    if (level < 0) throw std::domain_error("negative level");
    std::vector<std::pair<CBIndex, SchurElement>> out;
    out.reserve(static_cast<std::size_t>(level) + 1);
    for (std::int64_t i = 0; i <= level / 2; ++i) {
        const CBIndex top{0, level - 2 * i};
        out.emplace_back(top, project(cb_poly(top), level));
        if (level - 2 * i - 1 >= 0) {
            const CBIndex next{1, level - 2 * i - 1};
            out.emplace_back(next, project(cb_poly(next), level));
        }
    }
    return out;
}

CBImageResult cb_image_check(const CBIndex& idx, std::int64_t level) {
    CBImageResult res;
    if (summand_of(idx) != static_cast<int>(level % 2)) {
        res.verdict = CBImage::maps_to_zero;
        res.not_applicable = true;
        return res;
    }
    const SchurElement img = project(cb_poly(idx), level);
    if (img.is_zero()) {
        res.verdict = CBImage::maps_to_zero;
        return res;
    }
    for (const auto& [bidx, belt] : cb_list(level)) {
        if (img == belt) {
            res.verdict = CBImage::maps_to_cb;
            res.image = bidx;
            return res;
        }
    }
    res.verdict = CBImage::violation;
    return res;
}

}  // namespace icb
