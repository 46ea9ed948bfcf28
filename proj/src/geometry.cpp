#include "linarr/geometry.hpp"

#include "linarr/error.hpp"

#include <algorithm>
#include <cctype>

namespace linarr {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch,
                    "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

bool is_zero(std::span<const Rat> v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(ErrorCode::ParseError, "expected rational \"p/q\" or \"p\", got \"" + std::string(text) + "\"");
    }
    Int p{std::string(num)};
    Int q{std::string(den)};
    if (q == 0) {
        throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
    }
    Rat r(p, q);
    return negative ? Rat(-r) : r;
}

std::string format_rat(const Rat& value) {
    auto num = boost::multiprecision::numerator(value);
    auto den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

bool lex_less(const PointN& a, const PointN& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
    require_same_dim(a.size(), b.size());
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Rat dot(std::span<const Rat> a, std::span<const Int> b) {
    require_same_dim(a.size(), b.size());
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * Rat(b[i]);
    return acc;
}

RatVec to_rat(std::span<const Int> v) {
    return RatVec(v.begin(), v.end());
}

RatVec sub(const PointN& a, const PointN& b) {
    require_same_dim(a.dim(), b.dim());
    RatVec out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
    return out;
}

Rat distance_squared(const PointN& a, const PointN& b) {
    auto w = sub(a, b);
    return dot(w, w);
}

IntVec primitive_direction(std::span<const Rat> u) {
    if (is_zero(u)) throw Error(ErrorCode::ZeroDirection, "direction vector is zero");
    Int common_den = 1;
    for (const auto& x : u) common_den = boost::multiprecision::lcm(common_den, boost::multiprecision::denominator(x));
    IntVec out(u.size());
    Int g = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = boost::multiprecision::numerator(u[i]) * (common_den / boost::multiprecision::denominator(u[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    g = abs(g);
    auto first = std::find_if(out.begin(), out.end(), [](const Int& x) { return x != 0; });
    if (*first < 0) g = -g;
    for (auto& x : out) x /= g;
    return out;
}

Line canonicalize_line(const PointN& p, std::span<const Rat> u) {
    require_same_dim(p.dim(), u.size());
    if (p.dim() < 2) {
        throw Error(ErrorCode::DimensionMismatch, "ambient dimension must be at least 2");
    }
    Line line;
    line.dir = primitive_direction(u);
    RatVec d = to_rat(line.dir);
    Rat t = dot(p.coords, d) / dot(d, d);
    line.base.coords.resize(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) line.base[i] = p[i] - t * d[i];
    return line;
}

IntersectionResult intersect_lines(const Line& a, const Line& b) {
    require_same_dim(a.dim(), b.dim());
    if (a == b) return Coincident{};
    // Canonical directions are parallel iff equal.
    if (a.dir == b.dir) return Empty{};

    RatVec da = to_rat(a.dir);
    RatVec db = to_rat(b.dir);
    RatVec w = sub(b.base, a.base);
    // Least squares for a.base + s*da = b.base + t*db:
    //   [da.da  -da.db] [s]   [w.da]
    //   [da.db  -db.db] [t] = [w.db]
    Rat aa = dot(da, da), ab = dot(da, db), bb = dot(db, db);
    Rat wa = dot(w, da), wb = dot(w, db);
    Rat det = -aa * bb + ab * ab;  // nonzero for non-parallel directions
    Rat s = (-wa * bb + ab * wb) / det;
    Rat t = (aa * wb - ab * wa) / det;

    PointN on_a{RatVec(a.dim())};
    PointN on_b{RatVec(a.dim())};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        on_a[i] = a.base[i] + s * da[i];
        on_b[i] = b.base[i] + t * db[i];
    }
    if (on_a == on_b) return on_a;
    return Empty{};
}

Rat line_parameter(const PointN& x, const Line& l) {
    RatVec d = to_rat(l.dir);
    return dot(sub(x, l.base), d) / dot(d, d);
}

bool point_on_line(const PointN& x, const Line& l) {
    require_same_dim(x.dim(), l.dim());
    RatVec w = sub(x, l.base);
    Rat t = line_parameter(x, l);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != t * Rat(l.dir[i])) return false;
    }
    return true;
}

Rat distance_squared(const PointN& x, const Line& l) {
    require_same_dim(x.dim(), l.dim());
    RatVec w = sub(x, l.base);
    RatVec d = to_rat(l.dir);
    Rat wd = dot(w, d);
    return dot(w, w) - wd * wd / dot(d, d);
}

Rat distance_squared(const Line& a, const Line& b) {
    require_same_dim(a.dim(), b.dim());
    if (a.dir == b.dir) return distance_squared(b.base, a);
    RatVec da = to_rat(a.dir);
    RatVec db = to_rat(b.dir);
    RatVec w = sub(b.base, a.base);
    Rat aa = dot(da, da), ab = dot(da, db), bb = dot(db, db);
    Rat wa = dot(w, da), wb = dot(w, db);
    Rat det = -aa * bb + ab * ab;
    Rat s = (-wa * bb + ab * wb) / det;
    Rat t = (aa * wb - ab * wa) / det;
    Rat acc = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Rat gap = a.base[i] + s * da[i] - b.base[i] - t * db[i];
        acc += gap * gap;
    }
    return acc;
}

}  // namespace linarr
