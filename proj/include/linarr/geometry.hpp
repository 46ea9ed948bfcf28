#pragma once

// Exact rational linear geometry in R^n. Nothing in here uses floating point.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace linarr {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

/// Parses "p/q" or "p" (optional leading '-'). Throws ParseError on anything
/// else, including a zero denominator.
Rat parse_rat(std::string_view text);
std::string format_rat(const Rat& value);

struct PointN {
    RatVec coords;

    std::size_t dim() const noexcept { return coords.size(); }
    const Rat& operator[](std::size_t i) const { return coords[i]; }
    Rat& operator[](std::size_t i) { return coords[i]; }

    friend bool operator==(const PointN&, const PointN&) = default;
};

/// Lexicographic order on coordinates; used to sort and cluster points.
bool lex_less(const PointN& a, const PointN& b);

struct PointLess {
    bool operator()(const PointN& a, const PointN& b) const { return lex_less(a, b); }
};

/// Canonical affine line: `base` is the point closest to the origin and `dir`
/// is a primitive integer vector whose first nonzero entry is positive. Two
/// lines are the same point set iff they compare equal.
struct Line {
    PointN base;
    IntVec dir;

    std::size_t dim() const noexcept { return base.dim(); }
    friend bool operator==(const Line&, const Line&) = default;
};

/// Strict weak order on canonical lines (direction first, then base point).
struct LineLess {
    bool operator()(const Line& a, const Line& b) const {
        if (a.dir != b.dir) return a.dir < b.dir;
        return lex_less(a.base, b.base);
    }
};

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
Rat dot(std::span<const Rat> a, std::span<const Int> b);
RatVec to_rat(std::span<const Int> v);
RatVec sub(const PointN& a, const PointN& b);
Rat distance_squared(const PointN& a, const PointN& b);

/// Scales a nonzero rational vector to a primitive integer vector with its
/// first nonzero entry positive.
IntVec primitive_direction(std::span<const Rat> u);

Line canonicalize_line(const PointN& p, std::span<const Rat> u);

struct Empty {
    friend bool operator==(const Empty&, const Empty&) = default;
};
struct Coincident {
    friend bool operator==(const Coincident&, const Coincident&) = default;
};
using IntersectionResult = std::variant<Empty, PointN, Coincident>;

IntersectionResult intersect_lines(const Line& a, const Line& b);

bool point_on_line(const PointN& x, const Line& l);

/// Parameter t with x = l.base + t * l.dir. Only meaningful when x lies on l.
Rat line_parameter(const PointN& x, const Line& l);

/// Squared Euclidean distance from x to l.
Rat distance_squared(const PointN& x, const Line& l);

/// Squared distance between two non-coincident lines (0 if they meet).
Rat distance_squared(const Line& a, const Line& b);

}  // namespace linarr
