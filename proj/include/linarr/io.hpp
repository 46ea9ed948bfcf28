#pragma once

// Arrangement file format, seeded corpus generator and JSON reports.

#include "linarr/arrangement.hpp"
#include "linarr/poset.hpp"
#include "linarr/sweep.hpp"
#include "linarr/verifier.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace linarr {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "linarr";
inline constexpr std::string_view kToolVersion = "0.3.0";

struct ArrangementFile {
    Arrangement arrangement;
    std::optional<std::string> name;
    std::optional<std::uint64_t> seed;
};

/// Parses the JSON arrangement format:
///   {"dimension": n, "lines": [{"point": [..], "direction": [..]}, ..],
///    "name": "..", "seed": 42}
/// Coordinates are rational strings ("p/q" or "p"); JSON integers are also
/// accepted. Errors carry a field path, or "line L, column C" for syntax.
ArrangementFile parse_arrangement(std::string_view text);

std::string serialize_arrangement(const ArrangementFile& file);
std::string serialize_arrangement(const Arrangement& a);

/// Parses a general space graph:
///   {"dimension": n, "vertices": [[..], ..],
///    "edges": [{"segment": [i, j]} | {"ray": {"from": i, "direction": [..]}}
///              | {"line": {"point": [..], "direction": [..]}}]}
SpaceGraph parse_space_graph(std::string_view text);

/// SplitMix64: 64-bit state advanced by 0x9E3779B97F4A7C15, output mixed with
/// multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (shifts 30, 27, 31).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform-ish integer in [lo, hi] by reduction modulo the range.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

struct Profile {
    enum class Kind { Generic, Pencil, Mixed };
    Kind kind = Kind::Generic;
    std::size_t pencil_size = 0;
};

/// "generic", "mixed", "pencil(k)" or "pencil:k". Throws InvalidProfile.
Profile parse_profile(std::string_view text);

/// Deterministic in (n, d, profile, seed).
///  - generic: no parallel pairs, no point on three lines.
///  - pencil(k): k lines through one integer point, the rest generic.
///  - mixed: a small pencil, then lines through existing multiple points,
///    through points of existing lines, or free; only duplicates rejected.
Arrangement generate_random(int n, std::size_t d, const Profile& profile, std::uint64_t seed);

std::string sha256_hex(std::string_view bytes);

std::vector<std::string> rat_strings(std::span<const Rat> v);
RatVec parse_direction_list(std::string_view csv);

Json tool_json();
Json invariant_json(const InvariantReport& r, const std::vector<MultiplePoint>& points);
Json poset_json(const IntersectionPoset& p);
Json violation_json(const Violation& v);
Json sweep_json(const SpaceGraph& x, const SweepPlan& plan, const HandleTrace& trace);
Json verification_json(const VerificationReport& r);
Json error_json(const Error& e);

/// Runs the sweep and returns its JSON. With no direction the moment-curve
/// search is used; a user direction that is not generic throws DirectionError.
/// `formula_g` adds the cross-check against the genus formula.
Json sweep_report(const SpaceGraph& x, const std::optional<RatVec>& direction,
                  std::optional<std::int64_t> formula_g = std::nullopt);

}  // namespace linarr
