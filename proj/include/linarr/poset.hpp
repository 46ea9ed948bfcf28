#pragma once

#include "linarr/arrangement.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace linarr {

struct PosetElement {
    enum class Kind { MPoint, LineEl, Top };
    Kind kind;
    std::size_t index = 0;  // multiple-point index or line index; unused for Top

    /// "p3", "l0" or "T".
    std::string id() const;
    friend bool operator==(const PosetElement&, const PosetElement&) = default;
};

/// Intersection poset: multiple points, lines and the ambient space T ordered
/// by inclusion. Elements are stored points first, then lines, then T.
/// `relations` holds the full strict order as pairs of element positions.
struct IntersectionPoset {
    std::vector<PosetElement> elements;
    std::set<std::pair<std::size_t, std::size_t>> relations;

    bool less(std::size_t x, std::size_t y) const { return relations.contains({x, y}); }
    std::size_t top() const { return elements.size() - 1; }
};

IntersectionPoset build_poset(const Arrangement& a);
IntersectionPoset build_poset(const Arrangement& a, const std::vector<MultiplePoint>& points);

/// t_i = number of minimal elements of P \ {T} sitting below exactly i
/// elements other than T, for i >= 2.
MultiplicityVector recover_t(const IntersectionPoset& p);

/// Number of maximal elements of P \ {T}.
std::size_t recover_d(const IntersectionPoset& p);

/// Covering pairs of the order, sorted by (lower, upper) position.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const IntersectionPoset& p);

/// Checks irreflexivity, antisymmetry and transitivity of `relations`.
bool is_strict_partial_order(const IntersectionPoset& p);

std::string hasse_dot(const IntersectionPoset& p);

}  // namespace linarr
