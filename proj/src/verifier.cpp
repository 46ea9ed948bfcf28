#include "linarr/verifier.hpp"

#include "linarr/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <optional>

namespace linarr {

namespace {

using boost::multiprecision::abs;

// ---------------------------------------------------------------------------
// Planar subdivision

// The clipping box is [-hx, hx] x [-hy, hy] with hy = hx^2. Its corners run
// along a parabola while hx doubles, so each line can hit a corner at most
// twice and the inflation loop terminates.
struct Box {
    Rat hx, hy;
};

bool passes_through_corner(const Line& l, const Box& b) {
    for (int sx : {-1, 1}) {
        for (int sy : {-1, 1}) {
            if (point_on_line(PointN{{Rat(sx) * b.hx, Rat(sy) * b.hy}}, l)) return true;
        }
    }
    return false;
}

/// Both points where `l` crosses the boundary of the box, assuming it passes
/// through the interior and avoids the corners.
std::vector<PointN> boundary_crossings(const Line& l, const Box& b) {
    std::vector<PointN> out;
    const Rat dx(l.dir[0]), dy(l.dir[1]);
    for (int side : {-1, 1}) {
        if (dx != 0) {
            Rat edge = Rat(side) * b.hx;
            Rat t = (edge - l.base[0]) / dx;
            Rat y = l.base[1] + t * dy;
            if (abs(y) < b.hy) out.push_back(PointN{{edge, y}});
        }
        if (dy != 0) {
            Rat edge = Rat(side) * b.hy;
            Rat t = (edge - l.base[1]) / dy;
            Rat x = l.base[0] + t * dx;
            if (abs(x) < b.hx) out.push_back(PointN{{x, edge}});
        }
    }
    return out;
}

/// Position along the perimeter, counter-clockwise from (-hx, -hy).
Rat perimeter_position(const PointN& p, const Box& b) {
    const Rat& x = p[0];
    const Rat& y = p[1];
    if (y == -b.hy) return x + b.hx;
    if (x == b.hx) return 2 * b.hx + (y + b.hy);
    if (y == b.hy) return 2 * b.hx + 2 * b.hy + (b.hx - x);
    return 4 * b.hx + 2 * b.hy + (b.hy - y);
}

/// Counter-clockwise angular order of direction vectors.
bool angle_less(const RatVec& a, const RatVec& b) {
    auto half_plane = [](const RatVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

// ---------------------------------------------------------------------------
// Rasterization

/// Closed parameter interval of a line inside one slab; `full` when the line
/// runs parallel to the slab and inside it.
struct SlabHit {
    bool empty = false;
    bool full = false;
    Rat lo, hi;
};

std::vector<SlabHit> slab_hits(const Rat& q, const Int& u, int m) {
    std::vector<SlabHit> hits(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto& h = hits[static_cast<std::size_t>(i)];
        if (u == 0) {
            if (Rat(i) <= q && q <= Rat(i + 1)) {
                h.full = true;
            } else {
                h.empty = true;
            }
            continue;
        }
        Rat a = (Rat(i) - q) / Rat(u);
        Rat b = (Rat(i + 1) - q) / Rat(u);
        if (b < a) std::swap(a, b);
        h.lo = std::move(a);
        h.hi = std::move(b);
    }
    return hits;
}

/// Parameter range of a line inside the closed box, as (t_min, t_max).
std::pair<Rat, Rat> box_parameter_range(const Line& l, const std::vector<Rat>& lo, const Rat& side) {
    std::optional<Rat> tmin, tmax;
    for (std::size_t k = 0; k < l.dim(); ++k) {
        if (l.dir[k] == 0) continue;
        Rat a = (lo[k] - l.base[k]) / Rat(l.dir[k]);
        Rat b = (lo[k] + side - l.base[k]) / Rat(l.dir[k]);
        if (b < a) std::swap(a, b);
        if (!tmin || *tmin < a) tmin = a;
        if (!tmax || b < *tmax) tmax = b;
    }
    return {*tmin, *tmax};
}

PointN point_at(const Line& l, const Rat& t) {
    PointN p{RatVec(l.dim())};
    for (std::size_t k = 0; k < l.dim(); ++k) p[k] = l.base[k] + t * Rat(l.dir[k]);
    return p;
}

[[noreturn]] void too_coarse(const std::string& what) {
    throw Error(ErrorCode::ResolutionTooCoarse, what + " closer than two cube diameters");
}

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

ClippedSubdivision clipped_subdivision(const Arrangement& a) {
    if (a.dimension() != 2) {
        throw Error(ErrorCode::WrongDimension, "region counting needs a planar arrangement, got n = " +
                                                   std::to_string(a.dimension()));
    }
    const auto points = multiple_points(a);
    Rat extent = 0;
    for (const auto& p : points) {
        for (const auto& c : p.location.coords) extent = std::max(extent, Rat(abs(c)));
    }
    for (const auto& l : a.lines()) {
        for (const auto& c : l.base.coords) extent = std::max(extent, Rat(abs(c)));
    }
    Box box{extent + 2, 0};
    box.hy = box.hx * box.hx;
    auto bad_box = [&] {
        return std::any_of(a.lines().begin(), a.lines().end(),
                           [&](const Line& l) { return passes_through_corner(l, box); });
    };
    while (bad_box()) {
        box.hx *= 2;
        box.hy = box.hx * box.hx;
    }

    std::map<PointN, std::size_t, PointLess> ids;
    std::vector<PointN> where;
    auto vertex_id = [&](const PointN& p) {
        auto [it, inserted] = ids.emplace(p, where.size());
        if (inserted) where.push_back(p);
        return it->second;
    };
    std::vector<std::vector<std::size_t>> nbrs;
    std::int64_t edge_count = 0;
    auto connect = [&](std::size_t u, std::size_t w) {
        if (nbrs.size() < where.size()) nbrs.resize(where.size());
        nbrs[u].push_back(w);
        nbrs[w].push_back(u);
        ++edge_count;
    };

    std::vector<std::size_t> rim;
    for (const auto& corner : {PointN{{-box.hx, -box.hy}}, PointN{{box.hx, -box.hy}}, PointN{{box.hx, box.hy}},
                               PointN{{-box.hx, box.hy}}}) {
        rim.push_back(vertex_id(corner));
    }
    for (const auto& p : points) vertex_id(p.location);

    for (std::size_t li = 0; li < a.size(); ++li) {
        const Line& l = a.line(li);
        auto ends = boundary_crossings(l, box);
        std::vector<std::pair<Rat, std::size_t>> along;
        for (const auto& e : ends) {
            std::size_t id = vertex_id(e);
            rim.push_back(id);
            along.emplace_back(line_parameter(e, l), id);
        }
        for (const auto& p : points) {
            if (std::binary_search(p.incident.begin(), p.incident.end(), li)) {
                along.emplace_back(line_parameter(p.location, l), ids.at(p.location));
            }
        }
        std::sort(along.begin(), along.end());
        for (std::size_t k = 0; k + 1 < along.size(); ++k) connect(along[k].second, along[k + 1].second);
    }

    std::sort(rim.begin(), rim.end(), [&](std::size_t u, std::size_t w) {
        return perimeter_position(where[u], box) < perimeter_position(where[w], box);
    });
    for (std::size_t k = 0; k < rim.size(); ++k) connect(rim[k], rim[(k + 1) % rim.size()]);

    nbrs.resize(where.size());
    for (std::size_t u = 0; u < where.size(); ++u) {
        std::sort(nbrs[u].begin(), nbrs[u].end(), [&](std::size_t p, std::size_t q) {
            return angle_less(sub(where[p], where[u]), sub(where[q], where[u]));
        });
    }

    // Trace face cycles: after arriving at w from u, leave along the neighbor
    // that precedes u in w's counter-clockwise order.
    std::vector<std::size_t> offset(where.size() + 1, 0);
    for (std::size_t u = 0; u < where.size(); ++u) offset[u + 1] = offset[u] + nbrs[u].size();
    std::vector<bool> seen(offset.back(), false);
    std::int64_t cycles = 0;
    for (std::size_t u0 = 0; u0 < where.size(); ++u0) {
        for (std::size_t k0 = 0; k0 < nbrs[u0].size(); ++k0) {
            if (seen[offset[u0] + k0]) continue;
            ++cycles;
            std::size_t u = u0, k = k0;
            while (!seen[offset[u] + k]) {
                seen[offset[u] + k] = true;
                std::size_t w = nbrs[u][k];
                auto pos = static_cast<std::size_t>(std::find(nbrs[w].begin(), nbrs[w].end(), u) - nbrs[w].begin());
                u = w;
                k = (pos + nbrs[w].size() - 1) % nbrs[w].size();
            }
        }
    }

    ClippedSubdivision s;
    s.half_width = box.hx;
    s.half_height = box.hy;
    s.vertices = static_cast<std::int64_t>(where.size());
    s.edges = edge_count;
    s.faces = cycles - 1;  // drop the unbounded outer face
    return s;
}

std::int64_t euler_region_count(const Arrangement& a) {
    return clipped_subdivision(a).faces;
}

CubicalComplex::CubicalComplex(int dimension, int resolution, std::vector<std::uint8_t> free_top)
    : box_lo(static_cast<std::size_t>(dimension), Rat(0)),
      dimension_(dimension),
      resolution_(resolution),
      free_top_(std::move(free_top)) {
    const auto m = static_cast<std::size_t>(resolution);
    const std::size_t side = 2 * m + 1;
    if (free_top_.size() != ipow(m, dimension)) {
        throw Error(ErrorCode::InvalidArgument, "free cube mask has the wrong size");
    }
    cells_.assign(ipow(side, dimension), 0);

    std::vector<std::size_t> stride(static_cast<std::size_t>(dimension));
    for (int k = 0; k < dimension; ++k) stride[static_cast<std::size_t>(k)] = ipow(side, k);

    std::vector<std::size_t> cube(static_cast<std::size_t>(dimension), 0);
    const std::size_t faces = ipow(3, dimension);
    for (std::size_t flat = 0; flat < free_top_.size(); ++flat) {
        std::size_t rest = flat;
        for (auto& c : cube) {
            c = rest % m;
            rest /= m;
        }
        if (!free_top_[flat]) continue;
        // Every face of the closed cube: offsets in {-1, 0, 1} around its center.
        for (std::size_t f = 0; f < faces; ++f) {
            std::size_t code = f, idx = 0;
            for (std::size_t k = 0; k < cube.size(); ++k) {
                idx += (2 * cube[k] + (code % 3)) * stride[k];
                code /= 3;
            }
            cells_[idx] = 1;
        }
    }
}

std::size_t CubicalComplex::free_count() const {
    return static_cast<std::size_t>(std::count(free_top_.begin(), free_top_.end(), std::uint8_t{1}));
}

std::vector<std::int64_t> CubicalComplex::cell_counts() const {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(dimension_) + 1, 0);
    const std::size_t side = 2 * static_cast<std::size_t>(resolution_) + 1;
    for (std::size_t idx = 0; idx < cells_.size(); ++idx) {
        if (!cells_[idx]) continue;
        std::size_t rest = idx, dim = 0;
        for (int k = 0; k < dimension_; ++k) {
            dim += (rest % side) & 1;
            rest /= side;
        }
        ++counts[dim];
    }
    return counts;
}

CubicalComplex rasterize_complement(const Arrangement& a, int m, RasterOptions options) {
    const int n = a.dimension();
    if (n < 2 || n > 4) {
        throw Error(ErrorCode::WrongDimension, "rasterization supports n = 2, 3 (4 on request), got " +
                                                   std::to_string(n));
    }
    if (n == 4 && !options.allow_expensive) {
        throw Error(ErrorCode::WrongDimension, "n = 4 rasterization must be requested explicitly");
    }
    if (m < 2) throw Error(ErrorCode::InvalidArgument, "grid resolution must be at least 2");

    const auto points = multiple_points(a);
    const auto dim = static_cast<std::size_t>(n);

    // Bounding cube of multiple points and line base points, padded by one
    // width on every side.
    std::vector<Rat> lo(dim, Rat(0)), hi(dim, Rat(0));
    bool any = false;
    auto include = [&](const PointN& p) {
        for (std::size_t k = 0; k < dim; ++k) {
            if (!any || p[k] < lo[k]) lo[k] = p[k];
            if (!any || hi[k] < p[k]) hi[k] = p[k];
        }
        any = true;
    };
    for (const auto& p : points) include(p.location);
    for (const auto& l : a.lines()) include(l.base);
    Rat width = 0;
    for (std::size_t k = 0; k < dim; ++k) width = std::max(width, Rat(hi[k] - lo[k]));
    if (width == 0) width = 1;
    const Rat side = 3 * width;
    std::vector<Rat> box_lo(dim);
    for (std::size_t k = 0; k < dim; ++k) box_lo[k] = (lo[k] + hi[k]) / 2 - side / 2;
    const Rat cell = side / m;

    // Separation guard: anything closer than two cube diameters is rejected.
    const Rat limit = 4 * Rat(n) * cell * cell;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (distance_squared(points[i].location, points[j].location) < limit) {
                too_coarse("multiple points " + std::to_string(i) + " and " + std::to_string(j) + " are");
            }
        }
        for (std::size_t l = 0; l < a.size(); ++l) {
            if (std::binary_search(points[i].incident.begin(), points[i].incident.end(), l)) continue;
            if (distance_squared(points[i].location, a.line(l)) < limit) {
                too_coarse("multiple point " + std::to_string(i) + " and line " + std::to_string(l) + " are");
            }
        }
    }
    std::vector<std::pair<PointN, PointN>> exits;
    for (const auto& l : a.lines()) {
        auto [t0, t1] = box_parameter_range(l, box_lo, side);
        exits.emplace_back(point_at(l, t0), point_at(l, t1));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const auto who = "lines " + std::to_string(i) + " and " + std::to_string(j);
            if (!std::holds_alternative<PointN>(intersect_lines(a.line(i), a.line(j))) &&
                distance_squared(a.line(i), a.line(j)) < limit) {
                too_coarse(who + " are");
            }
            for (const auto* p : {&exits[i].first, &exits[i].second}) {
                for (const auto* q : {&exits[j].first, &exits[j].second}) {
                    if (distance_squared(*p, *q) < limit) too_coarse("box exits of " + who + " are");
                }
            }
        }
    }

    const auto mm = static_cast<std::size_t>(m);
    std::vector<std::uint8_t> free_top(ipow(mm, n), 1);
    std::vector<std::size_t> stride(dim);
    for (std::size_t k = 0; k < dim; ++k) stride[k] = ipow(mm, static_cast<int>(k));

    for (const auto& l : a.lines()) {
        // Line in grid units: q + t * dir with q = (base - box_lo) / cell.
        std::vector<std::vector<SlabHit>> hits(dim);
        for (std::size_t k = 0; k < dim; ++k) hits[k] = slab_hits((l.base[k] - box_lo[k]) / cell, l.dir[k], m);

        std::function<void(std::size_t, std::size_t, const std::optional<Rat>&, const std::optional<Rat>&)> walk =
            [&](std::size_t axis, std::size_t flat, const std::optional<Rat>& tlo, const std::optional<Rat>& thi) {
                if (axis == dim) {
                    free_top[flat] = 0;
                    return;
                }
                for (std::size_t i = 0; i < mm; ++i) {
                    const SlabHit& h = hits[axis][i];
                    if (h.empty) continue;
                    std::optional<Rat> nlo = tlo, nhi = thi;
                    if (!h.full) {
                        if (!nlo || *nlo < h.lo) nlo = h.lo;
                        if (!nhi || h.hi < *nhi) nhi = h.hi;
                        if (*nhi < *nlo) continue;
                    }
                    walk(axis + 1, flat + i * stride[axis], nlo, nhi);
                }
            };
        walk(0, 0, std::nullopt, std::nullopt);
    }

    CubicalComplex c(n, m, std::move(free_top));
    c.box_lo = std::move(box_lo);
    c.box_side = side;
    return c;
}

std::size_t gf2_rank(const std::vector<std::vector<std::size_t>>& rows, std::size_t columns) {
    const std::size_t words = (columns + 63) / 64;
    std::vector<std::vector<std::uint64_t>> pivots;
    std::vector<std::int64_t> pivot_of(columns, -1);
    std::vector<std::uint64_t> row(words);
    for (const auto& sparse : rows) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t col : sparse) row[col / 64] ^= std::uint64_t{1} << (col % 64);
        std::size_t w = 0;
        while (true) {
            while (w < words && row[w] == 0) ++w;
            if (w == words) break;
            std::size_t lead = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
            if (pivot_of[lead] < 0) {
                pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
                pivots.push_back(row);
                break;
            }
            const auto& p = pivots[static_cast<std::size_t>(pivot_of[lead])];
            // Pivot rows have no bits below their lead word.
            for (std::size_t k = w; k < words; ++k) row[k] ^= p[k];
        }
    }
    return pivots.size();
}

BettiVector betti_numbers(const CubicalComplex& c, bool collapse) {
    const int n = c.dimension();
    const auto dim = static_cast<std::size_t>(n);
    const std::size_t side = 2 * static_cast<std::size_t>(c.resolution()) + 1;
    std::vector<std::size_t> stride(dim);
    for (std::size_t k = 0; k < dim; ++k) stride[k] = ipow(side, static_cast<int>(k));
    auto coord = [&](std::size_t idx, std::size_t k) { return (idx / stride[k]) % side; };

    std::vector<std::uint8_t> alive = c.cells();

    auto for_each_face = [&](std::size_t idx, auto&& fn) {
        for (std::size_t k = 0; k < dim; ++k) {
            if (coord(idx, k) % 2 == 1) {
                fn(idx - stride[k]);
                fn(idx + stride[k]);
            }
        }
    };

    if (collapse) {
        std::deque<std::size_t> queue;
        for (std::size_t idx = 0; idx < alive.size(); ++idx) {
            if (alive[idx]) queue.push_back(idx);
        }
        while (!queue.empty()) {
            const std::size_t s = queue.front();
            queue.pop_front();
            if (!alive[s]) continue;
            std::size_t cofaces = 0, tau = 0;
            for (std::size_t k = 0; k < dim && cofaces < 2; ++k) {
                const std::size_t ck = coord(s, k);
                if (ck % 2 == 1) continue;
                if (ck > 0 && alive[s - stride[k]]) {
                    ++cofaces;
                    tau = s - stride[k];
                }
                if (ck + 1 < side && alive[s + stride[k]]) {
                    ++cofaces;
                    tau = s + stride[k];
                }
            }
            if (cofaces != 1) continue;
            // s is a free face of tau: remove the pair.
            alive[s] = 0;
            alive[tau] = 0;
            auto requeue = [&](std::size_t f) {
                if (alive[f]) queue.push_back(f);
            };
            for_each_face(tau, requeue);
            for_each_face(s, requeue);
        }
    }

    std::vector<std::vector<std::size_t>> by_dim(dim + 1);
    std::vector<std::size_t> local(alive.size(), 0);
    for (std::size_t idx = 0; idx < alive.size(); ++idx) {
        if (!alive[idx]) continue;
        std::size_t d = 0;
        for (std::size_t k = 0; k < dim; ++k) d += coord(idx, k) & 1;
        local[idx] = by_dim[d].size();
        by_dim[d].push_back(idx);
    }

    // rank[k] = rank of the boundary map from k-cells to (k-1)-cells.
    std::vector<std::size_t> rank(dim + 2, 0);
    for (std::size_t k = 1; k <= dim; ++k) {
        std::vector<std::vector<std::size_t>> rows;
        rows.reserve(by_dim[k].size());
        for (std::size_t idx : by_dim[k]) {
            std::vector<std::size_t> row;
            for_each_face(idx, [&](std::size_t f) { row.push_back(local[f]); });
            rows.push_back(std::move(row));
        }
        rank[k] = gf2_rank(rows, by_dim[k - 1].size());
    }

    BettiVector b(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) {
        b[k] = static_cast<std::int64_t>(by_dim[k].size() - rank[k] - rank[k + 1]);
    }
    return b;
}

VerificationReport verify_arrangement(const Arrangement& a, int m, RasterOptions options) {
    VerificationReport r;
    r.dimension = a.dimension();
    r.resolution = m;
    auto complex = rasterize_complement(a, m, options);
    r.predicted = predict_topology(a).betti;
    r.measured = betti_numbers(complex);
    r.match = r.predicted == r.measured;
    if (a.dimension() == 2) r.euler_regions = euler_region_count(a);
    return r;
}

}  // namespace linarr
