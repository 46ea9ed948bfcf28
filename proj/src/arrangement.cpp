#include "linarr/arrangement.hpp"

#include "linarr/error.hpp"

#include <algorithm>

namespace linarr {

Arrangement build_arrangement(int n, const std::vector<RawLine>& raw) {
    if (n < 2) {
        throw Error(ErrorCode::DimensionMismatch, "ambient dimension must be at least 2, got " + std::to_string(n),
                    "dimension");
    }
    Arrangement a;
    a.dimension_ = n;
    a.lines_.reserve(raw.size());
    std::map<Line, std::size_t, LineLess> seen;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& r = raw[i];
        std::string path = "lines[" + std::to_string(i) + "]";
        if (r.point.dim() != static_cast<std::size_t>(n)) {
            throw Error(ErrorCode::DimensionMismatch,
                        "point has " + std::to_string(r.point.dim()) + " coordinates, expected " + std::to_string(n),
                        path + ".point");
        }
        if (r.direction.size() != static_cast<std::size_t>(n)) {
            throw Error(ErrorCode::DimensionMismatch,
                        "direction has " + std::to_string(r.direction.size()) + " coordinates, expected " +
                            std::to_string(n),
                        path + ".direction");
        }
        Line line;
        try {
            line = canonicalize_line(r.point, r.direction);
        } catch (const Error& e) {
            throw Error(e.code(), e.what(), path + ".direction");
        }
        auto [it, inserted] = seen.emplace(line, i);
        if (!inserted) {
            throw Error(ErrorCode::DuplicateLine,
                        "lines " + std::to_string(it->second) + " and " + std::to_string(i) + " are the same line",
                        path);
        }
        a.lines_.push_back(std::move(line));
    }
    return a;
}

std::vector<MultiplePoint> multiple_points(const Arrangement& a) {
    std::map<PointN, std::vector<std::size_t>, PointLess> clusters;
    const auto& lines = a.lines();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            auto hit = intersect_lines(lines[i], lines[j]);
            if (const auto* p = std::get_if<PointN>(&hit)) {
                auto& incident = clusters[*p];
                incident.push_back(i);
                incident.push_back(j);
            }
        }
    }
    std::vector<MultiplePoint> out;
    out.reserve(clusters.size());
    for (auto& [location, incident] : clusters) {
        std::sort(incident.begin(), incident.end());
        incident.erase(std::unique(incident.begin(), incident.end()), incident.end());
        out.push_back({location, std::move(incident)});
    }
    return out;
}

MultiplicityVector multiplicity_vector(const std::vector<MultiplePoint>& points) {
    MultiplicityVector t;
    for (const auto& p : points) ++t[p.multiplicity()];
    return t;
}

MultiplicityVector multiplicity_vector(const Arrangement& a) {
    return multiplicity_vector(multiple_points(a));
}

std::int64_t genus(std::size_t line_count, const MultiplicityVector& t) {
    auto g = static_cast<std::int64_t>(line_count);
    for (const auto& [i, count] : t) g += (static_cast<std::int64_t>(i) - 1) * count;
    return g;
}

std::int64_t genus(const Arrangement& a) {
    return genus(a.size(), multiplicity_vector(a));
}

BettiVector handlebody_betti(int n, std::int64_t g) {
    BettiVector b(static_cast<std::size_t>(n) + 1, 0);
    if (n == 2) {
        b[0] = 1 + g;
    } else {
        b[0] = 1;
        b[static_cast<std::size_t>(n) - 2] = g;
    }
    return b;
}

InvariantReport predict_topology(const Arrangement& a) {
    InvariantReport r;
    r.dimension = a.dimension();
    r.d = a.size();
    r.t = multiplicity_vector(a);
    r.g = genus(r.d, r.t);
    r.betti = handlebody_betti(r.dimension, r.g);
    if (r.dimension == 2) {
        r.homotopy = std::to_string(1 + r.g) + " points";
    } else {
        r.homotopy = "bouquet of " + std::to_string(r.g) + " spheres S^" + std::to_string(r.dimension - 2);
    }
    if (r.dimension == 3) r.boundary_genus = r.g;
    return r;
}

}  // namespace linarr
