#include "linarr/sweep.hpp"

#include "linarr/error.hpp"

#include <algorithm>
#include <numeric>

namespace linarr {

namespace {

IntVec oriented_primitive(const RatVec& u) {
    IntVec d = primitive_direction(u);
    if (dot(u, std::span<const Int>(d)) < 0) {
        for (auto& x : d) x = -x;
    }
    return d;
}

/// Parameter interval of an edge along its carrier; unbounded ends are nullopt.
struct Span {
    std::optional<Rat> lo, hi;
};

Span edge_span(const SpaceGraph& x, const GraphEdge& e) {
    switch (e.kind) {
        case GraphEdge::Kind::Segment: {
            Rat a = line_parameter(x.vertices[e.from], e.carrier);
            Rat b = line_parameter(x.vertices[e.to], e.carrier);
            if (b < a) std::swap(a, b);
            return {a, b};
        }
        case GraphEdge::Kind::Ray: {
            Rat a = line_parameter(x.vertices[e.from], e.carrier);
            // ray_dir is +/- carrier.dir
            bool forward = e.ray_dir == e.carrier.dir;
            return forward ? Span{a, std::nullopt} : Span{std::nullopt, a};
        }
        case GraphEdge::Kind::FullLine: return {};
    }
    return {};
}

bool strictly_inside(const Span& s, const Rat& t) {
    return (!s.lo || *s.lo < t) && (!s.hi || t < *s.hi);
}

bool interiors_overlap(const Span& a, const Span& b) {
    // Open intervals (lo, hi) intersect iff max(lo) < min(hi).
    std::optional<Rat> lo = a.lo, hi = a.hi;
    if (b.lo && (!lo || *lo < *b.lo)) lo = b.lo;
    if (b.hi && (!hi || *b.hi < *hi)) hi = b.hi;
    return !lo || !hi || *lo < *hi;
}

void require_direction(const SpaceGraph& x, const RatVec& v) {
    if (v.size() != static_cast<std::size_t>(x.dimension)) {
        throw Error(ErrorCode::DimensionMismatch, "direction has " + std::to_string(v.size()) +
                                                      " components, expected " + std::to_string(x.dimension));
    }
    if (std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; })) {
        throw Error(ErrorCode::ZeroDirection, "height direction is zero");
    }
}

}  // namespace

SpaceGraph build_space_graph(const Arrangement& a) {
    return build_space_graph(a, multiple_points(a));
}

SpaceGraph build_space_graph(const Arrangement& a, const std::vector<MultiplePoint>& points) {
    SpaceGraph x;
    x.dimension = a.dimension();
    for (const auto& p : points) x.vertices.push_back(p.location);

    std::vector<std::vector<std::size_t>> on_line(a.size());
    for (std::size_t v = 0; v < points.size(); ++v) {
        for (std::size_t l : points[v].incident) on_line[l].push_back(v);
    }
    for (std::size_t l = 0; l < a.size(); ++l) {
        const Line& carrier = a.line(l);
        auto& verts = on_line[l];
        if (verts.empty()) {
            x.edges.push_back({GraphEdge::Kind::FullLine, 0, 0, {}, carrier});
            continue;
        }
        std::vector<Rat> param(verts.size());
        for (std::size_t k = 0; k < verts.size(); ++k) param[k] = line_parameter(x.vertices[verts[k]], carrier);
        std::vector<std::size_t> order(verts.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return param[i] < param[j]; });

        IntVec backward = carrier.dir;
        for (auto& c : backward) c = -c;
        x.edges.push_back({GraphEdge::Kind::Ray, verts[order.front()], 0, backward, carrier});
        for (std::size_t k = 0; k + 1 < order.size(); ++k) {
            x.edges.push_back({GraphEdge::Kind::Segment, verts[order[k]], verts[order[k + 1]], {}, carrier});
        }
        x.edges.push_back({GraphEdge::Kind::Ray, verts[order.back()], 0, carrier.dir, carrier});
    }
    return x;
}

SpaceGraphBuilder::SpaceGraphBuilder(int dimension) {
    if (dimension < 2) throw Error(ErrorCode::DimensionMismatch, "ambient dimension must be at least 2");
    graph_.dimension = dimension;
}

std::size_t SpaceGraphBuilder::vertex(PointN p) {
    if (p.dim() != static_cast<std::size_t>(graph_.dimension)) {
        throw Error(ErrorCode::DimensionMismatch, "vertex dimension mismatch");
    }
    graph_.vertices.push_back(std::move(p));
    return graph_.vertices.size() - 1;
}

SpaceGraphBuilder& SpaceGraphBuilder::segment(std::size_t from, std::size_t to) {
    if (from >= graph_.vertices.size() || to >= graph_.vertices.size()) {
        throw Error(ErrorCode::InvalidGraph, "segment endpoint out of range");
    }
    if (graph_.vertices[from] == graph_.vertices[to]) {
        throw Error(ErrorCode::InvalidGraph, "segment has coincident endpoints");
    }
    Line carrier = canonicalize_line(graph_.vertices[from], sub(graph_.vertices[to], graph_.vertices[from]));
    graph_.edges.push_back({GraphEdge::Kind::Segment, from, to, {}, std::move(carrier)});
    return *this;
}

SpaceGraphBuilder& SpaceGraphBuilder::ray(std::size_t from, const RatVec& direction) {
    if (from >= graph_.vertices.size()) throw Error(ErrorCode::InvalidGraph, "ray origin out of range");
    Line carrier = canonicalize_line(graph_.vertices[from], direction);
    graph_.edges.push_back({GraphEdge::Kind::Ray, from, 0, oriented_primitive(direction), std::move(carrier)});
    return *this;
}

SpaceGraphBuilder& SpaceGraphBuilder::line(const PointN& point, const RatVec& direction) {
    graph_.edges.push_back({GraphEdge::Kind::FullLine, 0, 0, {}, canonicalize_line(point, direction)});
    return *this;
}

SpaceGraph SpaceGraphBuilder::build() const {
    validate_space_graph(graph_);
    return graph_;
}

void validate_space_graph(const SpaceGraph& x) {
    std::vector<PointN> sorted = x.vertices;
    std::sort(sorted.begin(), sorted.end(), PointLess{});
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::InvalidGraph, "graph has two vertices at the same location");
    }
    std::vector<Span> spans;
    spans.reserve(x.edges.size());
    for (const auto& e : x.edges) spans.push_back(edge_span(x, e));

    for (std::size_t i = 0; i < x.edges.size(); ++i) {
        const auto& e = x.edges[i];
        for (std::size_t v = 0; v < x.vertices.size(); ++v) {
            if (!point_on_line(x.vertices[v], e.carrier)) continue;
            if (strictly_inside(spans[i], line_parameter(x.vertices[v], e.carrier))) {
                throw Error(ErrorCode::InvalidGraph,
                            "vertex " + std::to_string(v) + " lies inside edge " + std::to_string(i));
            }
        }
        for (std::size_t j = i + 1; j < x.edges.size(); ++j) {
            const auto& f = x.edges[j];
            auto hit = intersect_lines(e.carrier, f.carrier);
            bool crossing = false;
            if (std::holds_alternative<Coincident>(hit)) {
                crossing = interiors_overlap(spans[i], spans[j]);
            } else if (const auto* p = std::get_if<PointN>(&hit)) {
                // Meeting at a point is allowed only at a vertex both edges share.
                Rat ti = line_parameter(*p, e.carrier);
                Rat tj = line_parameter(*p, f.carrier);
                bool in_i = strictly_inside(spans[i], ti) || (spans[i].lo && *spans[i].lo == ti) ||
                            (spans[i].hi && *spans[i].hi == ti);
                bool in_j = strictly_inside(spans[j], tj) || (spans[j].lo && *spans[j].lo == tj) ||
                            (spans[j].hi && *spans[j].hi == tj);
                crossing = in_i && in_j && (strictly_inside(spans[i], ti) || strictly_inside(spans[j], tj));
            }
            if (crossing) {
                throw Error(ErrorCode::InvalidGraph,
                            "edges " + std::to_string(i) + " and " + std::to_string(j) + " cross away from a vertex");
            }
        }
    }
}

std::optional<Violation> check_direction(const SpaceGraph& x, const RatVec& v) {
    require_direction(x, v);
    for (std::size_t i = 0; i < x.edges.size(); ++i) {
        if (dot(v, std::span<const Int>(x.edges[i].carrier.dir)) == 0) {
            return Violation{Violation::Kind::PerpendicularEdge, i, 0, 0, Rat(0), x.edges[i].carrier, {}};
        }
    }
    std::vector<Rat> level(x.vertices.size());
    for (std::size_t i = 0; i < x.vertices.size(); ++i) level[i] = dot(x.vertices[i].coords, v);
    std::vector<std::size_t> order(x.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return level[a] < level[b]; });
    std::optional<Violation> worst;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        std::size_t a = order[k], b = order[k + 1];
        if (level[a] != level[b]) continue;
        Violation cand{Violation::Kind::SharedLevel, 0, std::min(a, b), std::max(a, b), level[a], std::nullopt, {}};
        // Report the lexicographically smallest offending pair.
        if (!worst || std::pair(cand.vertex_a, cand.vertex_b) < std::pair(worst->vertex_a, worst->vertex_b)) {
            worst = cand;
        }
    }
    if (worst) worst->locations = {x.vertices[worst->vertex_a], x.vertices[worst->vertex_b]};
    return worst;
}

RatVec find_generic_direction(const SpaceGraph& x, std::int64_t first_k, std::int64_t* accepted_k) {
    for (std::int64_t k = std::max<std::int64_t>(first_k, 1);; ++k) {
        RatVec v(static_cast<std::size_t>(x.dimension));
        Int power = 1;
        for (auto& c : v) {
            c = Rat(power);
            power *= k;
        }
        if (!check_direction(x, v)) {
            if (accepted_k) *accepted_k = k;
            return v;
        }
    }
}

std::string describe(const Violation& v) {
    if (v.kind == Violation::Kind::PerpendicularEdge) {
        return "edge " + std::to_string(v.edge) + " is perpendicular to the height direction";
    }
    return "vertices " + std::to_string(v.vertex_a) + " and " + std::to_string(v.vertex_b) +
           " share the level " + format_rat(v.level);
}

DirectionError::DirectionError(Violation v)
    : Error(ErrorCode::NonGenericDirection, describe(v), "direction"), violation_(std::move(v)) {}

SweepPlan sweep_events(const SpaceGraph& x, const RatVec& v) {
    if (auto bad = check_direction(x, v)) throw DirectionError(*bad);
    SweepPlan plan;
    plan.direction = v;
    plan.events.resize(x.vertices.size());
    for (std::size_t i = 0; i < x.vertices.size(); ++i) {
        plan.events[i].vertex = i;
        plan.events[i].level = dot(x.vertices[i].coords, v);
    }
    auto count = [&](std::size_t vertex, const Rat& slope) {
        (slope > 0 ? plan.events[vertex].up : plan.events[vertex].down) += 1;
    };
    for (const auto& e : x.edges) {
        switch (e.kind) {
            case GraphEdge::Kind::Segment: {
                Rat rise = plan.events[e.to].level - plan.events[e.from].level;
                count(e.from, rise);
                count(e.to, -rise);
                break;
            }
            case GraphEdge::Kind::Ray: {
                Rat slope = dot(v, std::span<const Int>(e.ray_dir));
                count(e.from, slope);
                if (slope < 0) ++plan.initial_rays_down;
                break;
            }
            case GraphEdge::Kind::FullLine: ++plan.initial_rays_down; break;
        }
    }
    std::sort(plan.events.begin(), plan.events.end(),
              [](const SweepEvent& a, const SweepEvent& b) { return a.level < b.level; });
    return plan;
}

HandleTrace handle_trace(const SweepPlan& plan, int n) {
    HandleTrace trace;
    trace.dimension = n;
    trace.initial_g = plan.initial_rays_down;
    trace.final_g = trace.initial_g;
    for (const auto& ev : plan.events) {
        HandleStep step;
        step.event = ev;
        if (ev.up >= 1) {
            step.handles_added = ev.up - 1;
            step.handle_index = n - 2;
            step.trivial = true;
            trace.final_g += step.handles_added;
        } else {
            step.handles_added = 1;
            step.handle_index = n - 1;
            step.trivial = false;
            trace.all_trivial = false;
        }
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

std::optional<BettiVector> trace_betti(const HandleTrace& trace) {
    if (!trace.all_trivial) return std::nullopt;
    return handlebody_betti(trace.dimension, trace.final_g);
}

}  // namespace linarr
