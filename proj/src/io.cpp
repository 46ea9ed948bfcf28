#include "linarr/io.hpp"

#include "linarr/error.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <array>
#include <cstdio>

namespace linarr {

namespace {

[[noreturn]] void parse_fail(const std::string& message, const std::string& path) {
    throw Error(ErrorCode::ParseError, message, path);
}

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        // Keep nlohmann's description of the expected token, drop its prefix.
        if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
        parse_fail(what, "line " + std::to_string(line) + ", column " + std::to_string(column));
    }
}

Rat rat_field(const Json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const Error& e) {
            parse_fail(e.what(), path);
        }
    }
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    parse_fail("expected a rational string", path);
}

RatVec rat_list(const Json& j, const std::string& path) {
    if (!j.is_array()) parse_fail("expected an array of rationals", path);
    RatVec out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rat_field(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) parse_fail("expected an object", path);
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail(std::string("missing field \"") + key + "\"", join(path, key));
    return *it;
}

int dimension_field(const Json& doc) {
    const Json& dim = member(doc, "dimension", "");
    if (!dim.is_number_integer()) parse_fail("expected an integer", "dimension");
    return dim.get<int>();
}

std::size_t index_field(const Json& j, std::size_t limit, const std::string& path) {
    if (!j.is_number_unsigned() || j.get<std::size_t>() >= limit) parse_fail("expected a vertex index", path);
    return j.get<std::size_t>();
}

Json rat_array(std::span<const Rat> v) {
    return Json(rat_strings(v));
}

Json multiplicity_json(const MultiplicityVector& t) {
    Json out = Json::object();
    for (const auto& [i, count] : t) out[std::to_string(i)] = count;
    return out;
}

Json line_json(const Line& l) {
    return Json{{"point", rat_array(l.base.coords)}, {"direction", rat_array(to_rat(l.dir))}};
}

}  // namespace

ArrangementFile parse_arrangement(std::string_view text) {
    Json doc = parse_document(text);
    if (!doc.is_object()) parse_fail("expected a JSON object", "");
    const int n = dimension_field(doc);
    const Json& lines = member(doc, "lines", "");
    if (!lines.is_array()) parse_fail("expected an array", "lines");

    std::vector<RawLine> raw;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string path = "lines[" + std::to_string(i) + "]";
        RawLine r;
        r.point.coords = rat_list(member(lines[i], "point", path), join(path, "point"));
        r.direction = rat_list(member(lines[i], "direction", path), join(path, "direction"));
        raw.push_back(std::move(r));
    }

    ArrangementFile file;
    file.arrangement = build_arrangement(n, raw);
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) parse_fail("expected a string", "name");
        file.name = it->get<std::string>();
    }
    if (auto it = doc.find("seed"); it != doc.end()) {
        if (!it->is_number_unsigned()) parse_fail("expected a non-negative integer", "seed");
        file.seed = it->get<std::uint64_t>();
    }
    return file;
}

std::string serialize_arrangement(const ArrangementFile& file) {
    Json doc;
    if (file.name) doc["name"] = *file.name;
    if (file.seed) doc["seed"] = *file.seed;
    doc["dimension"] = file.arrangement.dimension();
    doc["lines"] = Json::array();
    for (const auto& l : file.arrangement.lines()) doc["lines"].push_back(line_json(l));
    return doc.dump(2) + "\n";
}

std::string serialize_arrangement(const Arrangement& a) {
    return serialize_arrangement(ArrangementFile{a, std::nullopt, std::nullopt});
}

SpaceGraph parse_space_graph(std::string_view text) {
    Json doc = parse_document(text);
    if (!doc.is_object()) parse_fail("expected a JSON object", "");
    SpaceGraphBuilder builder(dimension_field(doc));
    const Json& vertices = member(doc, "vertices", "");
    if (!vertices.is_array()) parse_fail("expected an array", "vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        builder.vertex(PointN{rat_list(vertices[i], "vertices[" + std::to_string(i) + "]")});
    }
    const Json& edges = member(doc, "edges", "");
    if (!edges.is_array()) parse_fail("expected an array", "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string path = "edges[" + std::to_string(i) + "]";
        const Json& e = edges[i];
        try {
            if (e.contains("segment")) {
                const Json& s = e["segment"];
                if (!s.is_array() || s.size() != 2) parse_fail("expected [from, to]", path + ".segment");
                builder.segment(index_field(s[0], vertices.size(), path + ".segment[0]"),
                                index_field(s[1], vertices.size(), path + ".segment[1]"));
            } else if (e.contains("ray")) {
                const Json& r = e["ray"];
                builder.ray(index_field(member(r, "from", path + ".ray"), vertices.size(), path + ".ray.from"),
                            rat_list(member(r, "direction", path + ".ray"), path + ".ray.direction"));
            } else if (e.contains("line")) {
                const Json& l = e["line"];
                builder.line(PointN{rat_list(member(l, "point", path + ".line"), path + ".line.point")},
                             rat_list(member(l, "direction", path + ".line"), path + ".line.direction"));
            } else {
                parse_fail("expected \"segment\", \"ray\" or \"line\"", path);
            }
        } catch (const Error& err) {
            if (!err.path().empty()) throw;
            throw Error(err.code(), err.what(), path);
        }
    }
    return builder.build();
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

Profile parse_profile(std::string_view text) {
    if (text == "generic") return {Profile::Kind::Generic, 0};
    if (text == "mixed") return {Profile::Kind::Mixed, 0};
    std::string_view digits;
    if (text.starts_with("pencil(") && text.ends_with(")")) {
        digits = text.substr(7, text.size() - 8);
    } else if (text.starts_with("pencil:")) {
        digits = text.substr(7);
    }
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() < 9) {
        std::size_t k = std::stoul(std::string(digits));
        if (k >= 2) return {Profile::Kind::Pencil, k};
    }
    throw Error(ErrorCode::InvalidProfile,
                "unknown profile \"" + std::string(text) + "\" (expected generic, mixed or pencil(k) with k >= 2)",
                "profile");
}

namespace {

constexpr std::int64_t kCoordRange = 6;
constexpr std::int64_t kDirRange = 4;
constexpr int kMaxAttempts = 100000;

class Generator {
public:
    Generator(int n, std::uint64_t seed) : n_(n), rng_(seed) {}

    PointN integer_point(std::int64_t range) {
        PointN p{RatVec(static_cast<std::size_t>(n_))};
        for (auto& c : p.coords) c = Rat(rng_.uniform(-range, range));
        return p;
    }

    RatVec direction() {
        while (true) {
            RatVec u(static_cast<std::size_t>(n_));
            for (auto& c : u) c = Rat(rng_.uniform(-kDirRange, kDirRange));
            if (std::any_of(u.begin(), u.end(), [](const Rat& c) { return c != 0; })) return u;
        }
    }

    SplitMix64& rng() { return rng_; }
    const std::vector<Line>& lines() const { return lines_; }
    const std::vector<PointN>& crossings() const { return crossings_; }

    bool contains(const Line& l) const { return std::find(lines_.begin(), lines_.end(), l) != lines_.end(); }

    bool parallel_to_existing(const Line& l) const {
        return std::any_of(lines_.begin(), lines_.end(), [&](const Line& m) { return m.dir == l.dir; });
    }

    bool through_crossing(const Line& l) const {
        return std::any_of(crossings_.begin(), crossings_.end(), [&](const PointN& p) { return point_on_line(p, l); });
    }

    void accept(Line l) {
        for (const auto& m : lines_) {
            auto hit = intersect_lines(m, l);
            if (const auto* p = std::get_if<PointN>(&hit)) {
                if (std::find(crossings_.begin(), crossings_.end(), *p) == crossings_.end()) crossings_.push_back(*p);
            }
        }
        raw_.push_back({l.base, to_rat(l.dir)});
        lines_.push_back(std::move(l));
    }

    Arrangement finish() const { return build_arrangement(n_, raw_); }

private:
    int n_;
    SplitMix64 rng_;
    std::vector<Line> lines_;
    std::vector<PointN> crossings_;
    std::vector<RawLine> raw_;
};

void add_generic(Generator& gen, std::size_t count, const std::optional<PointN>& avoid) {
    for (std::size_t added = 0; added < count;) {
        int attempts = 0;
        while (true) {
            if (++attempts > kMaxAttempts) {
                throw Error(ErrorCode::InvalidProfile, "could not place a generic line", "profile");
            }
            Line l = canonicalize_line(gen.integer_point(kCoordRange), gen.direction());
            if (gen.contains(l) || gen.parallel_to_existing(l) || gen.through_crossing(l)) continue;
            if (avoid && point_on_line(*avoid, l)) continue;
            gen.accept(std::move(l));
            ++added;
            break;
        }
    }
}

void add_pencil(Generator& gen, const PointN& center, std::size_t k) {
    for (std::size_t added = 0; added < k;) {
        Line l = canonicalize_line(center, gen.direction());
        if (gen.contains(l)) continue;
        gen.accept(std::move(l));
        ++added;
    }
}

}  // namespace

Arrangement generate_random(int n, std::size_t d, const Profile& profile, std::uint64_t seed) {
    if (n < 2) throw Error(ErrorCode::DimensionMismatch, "ambient dimension must be at least 2", "dimension");
    if (d < 1) throw Error(ErrorCode::InvalidProfile, "line count must be at least 1", "count");
    Generator gen(n, seed);
    switch (profile.kind) {
        case Profile::Kind::Generic: add_generic(gen, d, std::nullopt); break;
        case Profile::Kind::Pencil: {
            if (profile.pencil_size > d) {
                throw Error(ErrorCode::InvalidProfile, "pencil size exceeds line count", "profile");
            }
            PointN center = gen.integer_point(kCoordRange);
            add_pencil(gen, center, profile.pencil_size);
            add_generic(gen, d - profile.pencil_size, center);
            break;
        }
        case Profile::Kind::Mixed: {
            std::size_t first = 1;
            if (d >= 3) first = static_cast<std::size_t>(gen.rng().uniform(2, static_cast<std::int64_t>(std::min<std::size_t>(d, 4))));
            add_pencil(gen, gen.integer_point(kCoordRange), first);
            while (gen.lines().size() < d) {
                const auto choice = gen.rng().uniform(0, 2);
                PointN anchor;
                if (choice == 0 && !gen.crossings().empty()) {
                    const auto& pts = gen.crossings();
                    anchor = pts[static_cast<std::size_t>(gen.rng().uniform(0, static_cast<std::int64_t>(pts.size()) - 1))];
                } else if (choice == 1) {
                    const auto& ls = gen.lines();
                    const Line& host = ls[static_cast<std::size_t>(gen.rng().uniform(0, static_cast<std::int64_t>(ls.size()) - 1))];
                    Rat t(gen.rng().uniform(-6, 6), 2);
                    anchor.coords.resize(host.dim());
                    for (std::size_t k = 0; k < host.dim(); ++k) anchor[k] = host.base[k] + t * Rat(host.dir[k]);
                } else {
                    anchor = gen.integer_point(kCoordRange);
                }
                Line l = canonicalize_line(anchor, gen.direction());
                if (!gen.contains(l)) gen.accept(std::move(l));
            }
            break;
        }
    }
    return gen.finish();
}

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, SHA256_DIGEST_LENGTH> digest{};
    SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), digest.data());
    std::string hex;
    hex.reserve(2 * digest.size());
    for (unsigned char c : digest) {
        char buf[3];
        std::snprintf(buf, sizeof buf, "%02x", c);
        hex += buf;
    }
    return hex;
}

std::vector<std::string> rat_strings(std::span<const Rat> v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(format_rat(x));
    return out;
}

RatVec parse_direction_list(std::string_view csv) {
    RatVec out;
    std::size_t start = 0;
    while (true) {
        auto comma = csv.find(',', start);
        auto piece = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        try {
            out.push_back(parse_rat(piece));
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, e.what(), "direction");
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Json tool_json() {
    return Json{{"name", kToolName}, {"version", kToolVersion}};
}

Json invariant_json(const InvariantReport& r, const std::vector<MultiplePoint>& points) {
    Json out;
    out["dimension"] = r.dimension;
    out["d"] = r.d;
    out["t"] = multiplicity_json(r.t);
    out["g"] = r.g;
    out["betti"] = r.betti;
    out["homotopy"] = r.homotopy;
    out["handlebody"] = {{"ball_dimension", r.dimension}, {"handles", r.g}, {"handle_index", r.dimension - 2}};
    out["boundary_genus"] = r.boundary_genus ? Json(*r.boundary_genus) : Json(nullptr);
    Json mp = Json::array();
    for (const auto& p : points) {
        mp.push_back({{"location", rat_array(p.location.coords)},
                      {"incident", p.incident},
                      {"multiplicity", p.multiplicity()}});
    }
    out["multiple_points"] = std::move(mp);
    return out;
}

Json poset_json(const IntersectionPoset& p) {
    Json out;
    Json elements = Json::array();
    for (const auto& e : p.elements) elements.push_back(e.id());
    out["elements"] = std::move(elements);
    Json edges = Json::array();
    for (const auto& [x, y] : hasse_edges(p)) edges.push_back({p.elements[x].id(), p.elements[y].id()});
    out["hasse"] = std::move(edges);
    out["recovered"] = {{"t", multiplicity_json(recover_t(p))}, {"d", recover_d(p)}};
    out["dot"] = hasse_dot(p);
    return out;
}

Json violation_json(const Violation& v) {
    Json out;
    if (v.kind == Violation::Kind::PerpendicularEdge) {
        out["condition"] = "edge_perpendicular";
        out["edge"] = v.edge;
        if (v.carrier) out["carrier"] = line_json(*v.carrier);
    } else {
        out["condition"] = "shared_level";
        out["vertices"] = {v.vertex_a, v.vertex_b};
        Json locs = Json::array();
        for (const auto& p : v.locations) locs.push_back(rat_array(p.coords));
        out["locations"] = std::move(locs);
        out["level"] = format_rat(v.level);
    }
    out["message"] = describe(v);
    return out;
}

Json sweep_json(const SpaceGraph& x, const SweepPlan& plan, const HandleTrace& trace) {
    Json out;
    out["direction"] = rat_array(plan.direction);
    Json events = Json::array();
    for (const auto& e : plan.events) {
        events.push_back({{"vertex", e.vertex},
                          {"location", rat_array(x.vertices[e.vertex].coords)},
                          {"level", format_rat(e.level)},
                          {"s", e.up},
                          {"r", e.down}});
    }
    out["plan"] = {{"events", std::move(events)}, {"initial_rays_down", plan.initial_rays_down}};
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        steps.push_back({{"vertex", s.event.vertex},
                         {"level", format_rat(s.event.level)},
                         {"handles_added", s.handles_added},
                         {"handle_index", s.handle_index},
                         {"trivial", s.trivial}});
    }
    out["trace"] = {{"initial_g", trace.initial_g},
                    {"final_g", trace.final_g},
                    {"all_trivial", trace.all_trivial},
                    {"steps", std::move(steps)}};
    auto betti = trace_betti(trace);
    out["betti_prediction"] = betti ? Json(*betti) : Json(nullptr);
    return out;
}

Json sweep_report(const SpaceGraph& x, const std::optional<RatVec>& direction, std::optional<std::int64_t> formula_g) {
    RatVec v;
    Json source;
    if (direction) {
        v = *direction;
        source = {{"kind", "user"}};
    } else {
        std::int64_t k = 0;
        v = find_generic_direction(x, 1, &k);
        source = {{"kind", "moment_curve"}, {"k", k}};
    }
    SweepPlan plan = sweep_events(x, v);
    HandleTrace trace = handle_trace(plan, x.dimension);
    Json out;
    out["direction_source"] = std::move(source);
    Json body = sweep_json(x, plan, trace);
    for (auto& [key, value] : body.items()) out[key] = value;
    if (formula_g) {
        out["self_check"] = {{"formula_g", *formula_g},
                             {"consistent", !trace.all_trivial || trace.final_g == *formula_g}};
    }
    return out;
}

Json verification_json(const VerificationReport& r) {
    Json out;
    out["dimension"] = r.dimension;
    out["grid"] = r.resolution;
    out["predicted"] = r.predicted;
    out["measured"] = r.measured;
    out["match"] = r.match;
    if (r.euler_regions) out["euler_regions"] = *r.euler_regions;
    return out;
}

Json error_json(const Error& e) {
    Json err{{"code", to_string(e.code())}, {"message", e.what()}};
    if (!e.path().empty()) err["path"] = e.path();
    if (const auto* de = dynamic_cast<const DirectionError*>(&e)) err["violation"] = violation_json(de->violation());
    return Json{{"error", std::move(err)}};
}

}  // namespace linarr
