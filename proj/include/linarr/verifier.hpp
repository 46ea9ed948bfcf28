#pragma once

// Brute-force oracles that measure the topology of an arrangement complement
// without going through the genus formula.

#include "linarr/arrangement.hpp"

#include <cstdint>
#include <vector>

namespace linarr {

/// Planar subdivision of the box [-half_width, half_width] x
/// [-half_height, half_height] by the clipped lines. `faces` counts bounded cells and is obtained by tracing
/// face cycles, so vertices - edges + faces == 1 is a real check.
struct ClippedSubdivision {
    Rat half_width;
    Rat half_height;
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    std::int64_t faces = 0;

    std::int64_t euler_characteristic() const { return vertices - edges + faces; }
};

ClippedSubdivision clipped_subdivision(const Arrangement& a);

/// Number of connected components of the planar complement. Throws
/// WrongDimension unless n = 2.
std::int64_t euler_region_count(const Arrangement& a);

/// Cubical complex on an m^n grid over an axis-aligned cube. Cells use doubled
/// integer coordinates in [0, 2m]^n; a cell's dimension is its number of odd
/// coordinates. The complex is the set of free top cubes plus all their faces.
class CubicalComplex {
public:
    CubicalComplex(int dimension, int resolution, std::vector<std::uint8_t> free_top);

    int dimension() const noexcept { return dimension_; }
    int resolution() const noexcept { return resolution_; }
    const std::vector<std::uint8_t>& free_top() const noexcept { return free_top_; }
    std::size_t free_count() const;

    /// Membership over all (2m+1)^n doubled-coordinate cells.
    const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }
    std::vector<std::int64_t> cell_counts() const;

    // Geometry of the grid (unit box unless set by rasterization).
    std::vector<Rat> box_lo;
    Rat box_side = 1;

private:
    int dimension_;
    int resolution_;
    std::vector<std::uint8_t> free_top_;
    std::vector<std::uint8_t> cells_;
};

struct RasterOptions {
    bool allow_expensive = false;  // admit n = 4
};

/// Removes every grid cube whose closed cube meets a line (exact test). Throws
/// ResolutionTooCoarse when features are closer than two cube diameters,
/// WrongDimension for unsupported n, InvalidArgument for m < 2.
CubicalComplex rasterize_complement(const Arrangement& a, int m, RasterOptions options = {});

/// Betti numbers b_0..b_n over the two-element field. With `collapse` the
/// complex is first shrunk by elementary collapses, which preserve homology.
BettiVector betti_numbers(const CubicalComplex& c, bool collapse = true);

/// Rank over the two-element field of a 0/1 matrix given as sparse rows of
/// column indices. Rows are packed into 64-bit words for elimination.
std::size_t gf2_rank(const std::vector<std::vector<std::size_t>>& rows, std::size_t columns);

struct VerificationReport {
    int dimension = 0;
    int resolution = 0;
    BettiVector predicted;
    BettiVector measured;
    bool match = false;
    std::optional<std::int64_t> euler_regions;  // n = 2 only
};

VerificationReport verify_arrangement(const Arrangement& a, int m, RasterOptions options = {});

}  // namespace linarr
