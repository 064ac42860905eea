/**
 * @file schur.hpp
 * @brief The finite quotients Q(v)[t]/(m_d(t)) of dimension d+1, their
 *        canonical bases, the projection from the modified form, and the
 *        level-lowering transfer maps.
 *
 * Level d receives projections from the summand of matching parity
 * (d mod 2); indices of the other summand are reported as not applicable
 * rather than silently zeroed.
 */
#pragma once

#include "icb/idot.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace icb {

/// Residue class at level d, stored as the reduced representative mod m_d.
class SchurElement {
public:
    SchurElement(std::int64_t level, TPoly reduced_rep);

    std::int64_t level() const { return level_; }
    const TPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    friend bool operator==(const SchurElement& a, const SchurElement& b) {
        return a.level_ == b.level_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const SchurElement& a, const SchurElement& b) { return !(a == b); }

private:
    std::int64_t level_;
    TPoly rep_;
};

/// Class of p modulo minpoly(d); an algebra homomorphism in p.
SchurElement project(const TPoly& p, std::int64_t level);

/// Ring operations within one level (projected after multiplication).
SchurElement add(const SchurElement& x, const SchurElement& y);
SchurElement multiply(const SchurElement& x, const SchurElement& y);

/// Level-lowering transfer: class at level d to class at level d-2.
/// Throws on level < 2. The divisibility minpoly(d-2) | minpoly(d) is
/// checked (once per level) before reducing.
SchurElement transfer(const SchurElement& x);

/// The canonical basis of level d in the order P_{0,d}, P_{1,d-1},
/// P_{0,d-2}, ...: exactly d+1 classes of pairwise distinct degrees d..0.
std::vector<std::pair<CBIndex, SchurElement>> cb_list(std::int64_t level);

enum class CBImage { maps_to_cb, maps_to_zero, violation };

struct CBImageResult {
    CBImage verdict = CBImage::violation;
    /// Set when the index's summand does not match the level's parity;
    /// the projection factors through the other summand's quotient and the
    /// verdict is reported as maps_to_zero.
    bool not_applicable = false;
    /// The matched basis index when verdict == maps_to_cb.
    std::optional<CBIndex> image;
};

/// Tests whether the basis element b_idx projects onto a canonical basis
/// element of level d or onto zero; any other outcome is a violation.
CBImageResult cb_image_check(const CBIndex& idx, std::int64_t level);

}  // namespace icb
