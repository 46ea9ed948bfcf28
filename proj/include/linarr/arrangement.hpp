#pragma once

#include "linarr/geometry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace linarr {

/// A line as given by the user, before canonicalization.
struct RawLine {
    PointN point;
    RatVec direction;
};

/// Finite set of pairwise distinct affine lines in R^n, kept in input order.
class Arrangement {
public:
    Arrangement() = default;

    int dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return lines_.size(); }
    const std::vector<Line>& lines() const noexcept { return lines_; }
    const Line& line(std::size_t i) const { return lines_.at(i); }

    friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
    friend Arrangement build_arrangement(int n, const std::vector<RawLine>& raw);

    int dimension_ = 0;
    std::vector<Line> lines_;
};

/// Canonicalizes every input line. Throws DuplicateLine (path names the later
/// index, message names both), ZeroDirection or DimensionMismatch.
Arrangement build_arrangement(int n, const std::vector<RawLine>& raw);

struct MultiplePoint {
    PointN location;
    std::vector<std::size_t> incident;  // sorted line indices

    std::size_t multiplicity() const noexcept { return incident.size(); }
    friend bool operator==(const MultiplePoint&, const MultiplePoint&) = default;
};

/// All points lying on two or more lines, sorted lexicographically by location.
std::vector<MultiplePoint> multiple_points(const Arrangement& a);

/// Sparse i -> t_i: the number of multiple points of multiplicity exactly i.
using MultiplicityVector = std::map<std::size_t, std::int64_t>;

MultiplicityVector multiplicity_vector(const Arrangement& a);
MultiplicityVector multiplicity_vector(const std::vector<MultiplePoint>& points);

/// g = d + sum_i (i - 1) t_i.
std::int64_t genus(std::size_t line_count, const MultiplicityVector& t);
std::int64_t genus(const Arrangement& a);

/// Betti numbers b_0..b_n (the top entry is always 0 for an open n-manifold).
using BettiVector = std::vector<std::int64_t>;

/// Betti numbers of the interior of an n-ball with g trivial handles of index
/// n - 2: (1, .., g at n - 2, ..) for n >= 3 and b_0 = 1 + g for n = 2.
BettiVector handlebody_betti(int n, std::int64_t g);

struct InvariantReport {
    int dimension = 0;
    std::size_t d = 0;
    MultiplicityVector t;
    std::int64_t g = 0;
    BettiVector betti;
    std::string homotopy;
    std::optional<std::int64_t> boundary_genus;  // only for n = 3
};

InvariantReport predict_topology(const Arrangement& a);

}  // namespace linarr
