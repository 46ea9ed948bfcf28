#pragma once

// Height-function sweep over a space graph: generic direction search, vertex
// events with upward/downward branch counts, and the resulting handle ledger.

#include "linarr/arrangement.hpp"
#include "linarr/error.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace linarr {

struct GraphEdge {
    enum class Kind { Segment, Ray, FullLine };
    Kind kind = Kind::FullLine;
    std::size_t from = 0;  // Segment, Ray
    std::size_t to = 0;    // Segment
    IntVec ray_dir;        // Ray: primitive, pointing away from `from`
    Line carrier;
};

/// Finite graph with possibly non-compact straight edges, embedded in R^n.
struct SpaceGraph {
    int dimension = 0;
    std::vector<PointN> vertices;
    std::vector<GraphEdge> edges;
};

/// Cuts every line at its multiple points: bounded segments between
/// consecutive points plus two rays, or one full-line edge if uncut.
SpaceGraph build_space_graph(const Arrangement& a);
SpaceGraph build_space_graph(const Arrangement& a, const std::vector<MultiplePoint>& points);

/// Incremental construction of general space graphs. `build` throws
/// InvalidGraph unless vertices are distinct and edges meet only at shared
/// endpoints.
class SpaceGraphBuilder {
public:
    explicit SpaceGraphBuilder(int dimension);

    std::size_t vertex(PointN p);
    SpaceGraphBuilder& segment(std::size_t from, std::size_t to);
    SpaceGraphBuilder& ray(std::size_t from, const RatVec& direction);
    SpaceGraphBuilder& line(const PointN& point, const RatVec& direction);

    SpaceGraph build() const;

private:
    SpaceGraph graph_;
};

void validate_space_graph(const SpaceGraph& x);

struct Violation {
    enum class Kind { PerpendicularEdge, SharedLevel };
    Kind kind;
    std::size_t edge = 0;      // PerpendicularEdge
    std::size_t vertex_a = 0;  // SharedLevel, vertex_a < vertex_b
    std::size_t vertex_b = 0;
    Rat level;                 // SharedLevel
    std::optional<Line> carrier;   // PerpendicularEdge
    std::vector<PointN> locations; // SharedLevel: the two vertices
};

std::string describe(const Violation& v);

/// nullopt when v satisfies both genericity conditions: no edge is level and
/// no two vertices share a level. Throws ZeroDirection / DimensionMismatch.
std::optional<Violation> check_direction(const SpaceGraph& x, const RatVec& v);

/// First acceptor among (1, k, k^2, ..., k^(n-1)) for k = first_k, first_k+1, ...
/// `accepted_k`, when given, receives the k that was accepted.
RatVec find_generic_direction(const SpaceGraph& x, std::int64_t first_k = 1, std::int64_t* accepted_k = nullptr);

struct SweepEvent {
    std::size_t vertex = 0;
    Rat level;
    std::int64_t up = 0;    // s(u): edges leaving upward
    std::int64_t down = 0;  // r(u): edges leaving downward
};

struct SweepPlan {
    RatVec direction;
    std::vector<SweepEvent> events;  // strictly increasing level
    std::int64_t initial_rays_down = 0;
};

/// NonGenericDirection error carrying the offending constraint.
class DirectionError : public Error {
public:
    explicit DirectionError(Violation v);
    const Violation& violation() const noexcept { return violation_; }

private:
    Violation violation_;
};

/// Throws DirectionError if check_direction rejects v.
SweepPlan sweep_events(const SpaceGraph& x, const RatVec& v);

struct HandleStep {
    SweepEvent event;
    std::int64_t handles_added = 0;
    int handle_index = 0;
    bool trivial = true;
};

struct HandleTrace {
    int dimension = 0;
    std::vector<HandleStep> steps;
    std::int64_t initial_g = 0;
    std::int64_t final_g = 0;
    bool all_trivial = true;
};

HandleTrace handle_trace(const SweepPlan& plan, int n);

/// Betti prediction implied by the trace; nullopt unless every attachment was
/// trivial.
std::optional<BettiVector> trace_betti(const HandleTrace& trace);


}  // namespace linarr
