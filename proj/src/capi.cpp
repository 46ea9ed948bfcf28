#include "linarr/linarr.h"

#include "linarr/error.hpp"
#include "linarr/io.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

struct linarr_arrangement {
    linarr::ArrangementFile file;
    std::string digest;
};

struct linarr_graph {
    linarr::SpaceGraph graph;
    std::string digest;
};

namespace {

thread_local std::string last_error = "{}";

linarr_status status_of(linarr::ErrorCode code) {
    using linarr::ErrorCode;
    switch (code) {
        case ErrorCode::ParseError: return LINARR_E_PARSE;
        case ErrorCode::ZeroDirection: return LINARR_E_ZERO_DIRECTION;
        case ErrorCode::DimensionMismatch: return LINARR_E_DIMENSION_MISMATCH;
        case ErrorCode::DuplicateLine: return LINARR_E_DUPLICATE_LINE;
        case ErrorCode::WrongDimension: return LINARR_E_WRONG_DIMENSION;
        case ErrorCode::ResolutionTooCoarse: return LINARR_E_RESOLUTION_TOO_COARSE;
        case ErrorCode::NonGenericDirection: return LINARR_E_NON_GENERIC_DIRECTION;
        case ErrorCode::InvalidProfile: return LINARR_E_INVALID_PROFILE;
        case ErrorCode::InvalidGraph: return LINARR_E_INVALID_GRAPH;
        case ErrorCode::InvalidArgument: return LINARR_E_INVALID_ARGUMENT;
    }
    return LINARR_E_INTERNAL;
}

char* duplicate(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <typename Fn>
linarr_status guarded(Fn&& fn) {
    try {
        last_error = "{}";
        fn();
        return LINARR_OK;
    } catch (const linarr::Error& e) {
        last_error = linarr::error_json(e).dump();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = linarr::Json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump();
        return LINARR_E_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw linarr::Error(linarr::ErrorCode::InvalidArgument, what);
}

linarr::Json envelope(const std::string& digest) {
    return linarr::Json{{"tool", linarr::tool_json()}, {"input_digest", "sha256:" + digest}};
}

void merge(linarr::Json& into, const linarr::Json& from) {
    for (const auto& [key, value] : from.items()) into[key] = value;
}

std::optional<linarr::RatVec> direction_arg(const char* direction) {
    if (direction == nullptr) return std::nullopt;
    return linarr::parse_direction_list(direction);
}

linarr::Json analyze_body(const linarr::Arrangement& a, const std::vector<linarr::MultiplePoint>& points) {
    auto report = linarr::predict_topology(a);
    return linarr::invariant_json(report, points);
}

linarr::Json sweep_body(const linarr::Arrangement& a, const std::vector<linarr::MultiplePoint>& points,
                        const char* direction) {
    auto graph = linarr::build_space_graph(a, points);
    return linarr::sweep_report(graph, direction_arg(direction),
                                linarr::genus(a.size(), linarr::multiplicity_vector(points)));
}

void emit(char** out, const linarr::Json& doc) {
    require(out != nullptr, "output pointer is null");
    *out = duplicate(doc.dump(2) + "\n");
}

}  // namespace

extern "C" {

const char* linarr_version(void) {
    return linarr::kToolVersion.data();
}

const char* linarr_status_name(linarr_status status) {
    switch (status) {
        case LINARR_OK: return "Ok";
        case LINARR_E_PARSE: return "ParseError";
        case LINARR_E_ZERO_DIRECTION: return "ZeroDirection";
        case LINARR_E_DIMENSION_MISMATCH: return "DimensionMismatch";
        case LINARR_E_DUPLICATE_LINE: return "DuplicateLine";
        case LINARR_E_WRONG_DIMENSION: return "WrongDimension";
        case LINARR_E_RESOLUTION_TOO_COARSE: return "ResolutionTooCoarse";
        case LINARR_E_NON_GENERIC_DIRECTION: return "NonGenericDirection";
        case LINARR_E_INVALID_PROFILE: return "InvalidProfile";
        case LINARR_E_INVALID_GRAPH: return "InvalidGraph";
        case LINARR_E_INVALID_ARGUMENT: return "InvalidArgument";
        case LINARR_E_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* linarr_last_error_json(void) {
    return last_error.c_str();
}

void linarr_string_free(char* text) {
    std::free(text);
}

linarr_status linarr_arrangement_parse(const char* json, size_t length, linarr_arrangement** out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        std::string_view text(json, length);
        auto handle = std::make_unique<linarr_arrangement>();
        handle->file = linarr::parse_arrangement(text);
        handle->digest = linarr::sha256_hex(text);
        *out = handle.release();
    });
}

linarr_status linarr_arrangement_generate(int dimension, size_t count, const char* profile, uint64_t seed,
                                          linarr_arrangement** out) {
    return guarded([&] {
        require(profile != nullptr && out != nullptr, "null argument");
        auto handle = std::make_unique<linarr_arrangement>();
        handle->file.arrangement = linarr::generate_random(dimension, count, linarr::parse_profile(profile), seed);
        handle->file.name = std::string(profile);
        handle->file.seed = seed;
        handle->digest = linarr::sha256_hex(linarr::serialize_arrangement(handle->file));
        *out = handle.release();
    });
}

void linarr_arrangement_free(linarr_arrangement* arrangement) {
    delete arrangement;
}

int linarr_arrangement_dimension(const linarr_arrangement* arrangement) {
    return arrangement ? arrangement->file.arrangement.dimension() : 0;
}

size_t linarr_arrangement_line_count(const linarr_arrangement* arrangement) {
    return arrangement ? arrangement->file.arrangement.size() : 0;
}

linarr_status linarr_arrangement_genus(const linarr_arrangement* arrangement, int64_t* out) {
    return guarded([&] {
        require(arrangement != nullptr && out != nullptr, "null argument");
        *out = linarr::genus(arrangement->file.arrangement);
    });
}

linarr_status linarr_arrangement_serialize(const linarr_arrangement* arrangement, char** out) {
    return guarded([&] {
        require(arrangement != nullptr && out != nullptr, "null argument");
        *out = duplicate(linarr::serialize_arrangement(arrangement->file));
    });
}

linarr_status linarr_analyze(const linarr_arrangement* arrangement, char** out) {
    return guarded([&] {
        require(arrangement != nullptr, "null arrangement");
        const auto& a = arrangement->file.arrangement;
        auto doc = envelope(arrangement->digest);
        merge(doc, analyze_body(a, linarr::multiple_points(a)));
        emit(out, doc);
    });
}

linarr_status linarr_poset(const linarr_arrangement* arrangement, char** out) {
    return guarded([&] {
        require(arrangement != nullptr, "null arrangement");
        auto doc = envelope(arrangement->digest);
        merge(doc, linarr::poset_json(linarr::build_poset(arrangement->file.arrangement)));
        emit(out, doc);
    });
}

linarr_status linarr_sweep(const linarr_arrangement* arrangement, const char* direction, char** out) {
    return guarded([&] {
        require(arrangement != nullptr, "null arrangement");
        const auto& a = arrangement->file.arrangement;
        auto doc = envelope(arrangement->digest);
        merge(doc, sweep_body(a, linarr::multiple_points(a), direction));
        emit(out, doc);
    });
}

linarr_status linarr_verify(const linarr_arrangement* arrangement, int grid, int allow_expensive, int* match,
                            char** out) {
    return guarded([&] {
        require(arrangement != nullptr, "null arrangement");
        linarr::RasterOptions options;
        options.allow_expensive = allow_expensive != 0;
        auto report = linarr::verify_arrangement(arrangement->file.arrangement, grid, options);
        if (match) *match = report.match ? 1 : 0;
        auto doc = envelope(arrangement->digest);
        merge(doc, linarr::verification_json(report));
        emit(out, doc);
    });
}

linarr_status linarr_report(const linarr_arrangement* arrangement, const char* direction, int grid, char** out) {
    return guarded([&] {
        require(arrangement != nullptr, "null arrangement");
        const auto& a = arrangement->file.arrangement;
        const auto points = linarr::multiple_points(a);
        auto doc = envelope(arrangement->digest);
        doc["analysis"] = analyze_body(a, points);
        doc["poset"] = linarr::poset_json(linarr::build_poset(a, points));
        doc["sweep"] = sweep_body(a, points, direction);
        if (grid > 0) doc["verification"] = linarr::verification_json(linarr::verify_arrangement(a, grid));
        const auto& trace = doc["sweep"]["trace"];
        doc["self_check"] = {{"formula_g", doc["analysis"]["g"]},
                             {"trace_final_g", trace["final_g"]},
                             {"consistent", !trace["all_trivial"].get<bool>() ||
                                                trace["final_g"] == doc["analysis"]["g"]}};
        emit(out, doc);
    });
}

linarr_status linarr_graph_parse(const char* json, size_t length, linarr_graph** out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        std::string_view text(json, length);
        auto handle = std::make_unique<linarr_graph>();
        handle->graph = linarr::parse_space_graph(text);
        handle->digest = linarr::sha256_hex(text);
        *out = handle.release();
    });
}

void linarr_graph_free(linarr_graph* graph) {
    delete graph;
}

linarr_status linarr_graph_sweep(const linarr_graph* graph, const char* direction, char** out) {
    return guarded([&] {
        require(graph != nullptr, "null graph");
        auto doc = envelope(graph->digest);
        merge(doc, linarr::sweep_report(graph->graph, direction_arg(direction)));
        emit(out, doc);
    });
}

}  // extern "C"
