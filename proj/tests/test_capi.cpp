#include "linarr/linarr.h"

#include <json.hpp>

#include <gtest/gtest.h>

#include <string>

using Json = nlohmann::json;

namespace {

const std::string kPencil = R"({"dimension":3,"lines":[
  {"point":["0","0","0"],"direction":["1","0","0"]},
  {"point":["0","0","0"],"direction":["0","1","0"]},
  {"point":["0","0","0"],"direction":["0","0","1"]}]})";

linarr_arrangement* parse(const std::string& text) {
    linarr_arrangement* a = nullptr;
    EXPECT_EQ(linarr_arrangement_parse(text.data(), text.size(), &a), LINARR_OK);
    return a;
}

Json take(char* text) {
    Json j = Json::parse(text);
    linarr_string_free(text);
    return j;
}

}  // namespace

TEST(CApi, VersionAndStatusNames) {
    EXPECT_STREQ(linarr_version(), "0.3.0");
    EXPECT_STREQ(linarr_status_name(LINARR_E_DUPLICATE_LINE), "DuplicateLine");
    EXPECT_STREQ(linarr_status_name(LINARR_OK), "Ok");
}

TEST(CApi, AnalyzePencil) {
    auto* a = parse(kPencil);
    ASSERT_NE(a, nullptr);
    EXPECT_EQ(linarr_arrangement_dimension(a), 3);
    EXPECT_EQ(linarr_arrangement_line_count(a), 3u);
    int64_t g = 0;
    EXPECT_EQ(linarr_arrangement_genus(a, &g), LINARR_OK);
    EXPECT_EQ(g, 5);
    char* out = nullptr;
    ASSERT_EQ(linarr_analyze(a, &out), LINARR_OK);
    auto j = take(out);
    EXPECT_EQ(j["g"], 5);
    EXPECT_EQ(j["betti"], Json::parse("[1,5,0,0]"));
    EXPECT_EQ(j["tool"]["version"], "0.3.0");
    EXPECT_EQ(j["input_digest"].get<std::string>().rfind("sha256:", 0), 0u);
    linarr_arrangement_free(a);
}

TEST(CApi, ParseErrorsReportJson) {
    linarr_arrangement* a = nullptr;
    std::string text = R"({"dimension":2,"lines":[{"point":["0","0"],"direction":["0","0"]}]})";
    EXPECT_EQ(linarr_arrangement_parse(text.data(), text.size(), &a), LINARR_E_ZERO_DIRECTION);
    EXPECT_EQ(a, nullptr);
    auto err = Json::parse(linarr_last_error_json());
    EXPECT_EQ(err["error"]["code"], "ZeroDirection");
    EXPECT_EQ(err["error"]["path"], "lines[0].direction");
    EXPECT_EQ(linarr_arrangement_parse(nullptr, 0, &a), LINARR_E_INVALID_ARGUMENT);
}

TEST(CApi, SweepAndViolation) {
    auto* a = parse(kPencil);
    char* out = nullptr;
    ASSERT_EQ(linarr_sweep(a, nullptr, &out), LINARR_OK);
    auto j = take(out);
    EXPECT_EQ(j["trace"]["final_g"], 5);
    EXPECT_EQ(j["self_check"]["consistent"], true);

    EXPECT_EQ(linarr_sweep(a, "0,0,1", &out), LINARR_E_NON_GENERIC_DIRECTION);
    auto err = Json::parse(linarr_last_error_json());
    EXPECT_EQ(err["error"]["violation"]["condition"], "edge_perpendicular");
    linarr_arrangement_free(a);
}

TEST(CApi, VerifyAndReport) {
    auto* a = parse(kPencil);
    char* out = nullptr;
    int match = 0;
    ASSERT_EQ(linarr_verify(a, 24, 0, &match, &out), LINARR_OK);
    EXPECT_EQ(match, 1);
    EXPECT_EQ(take(out)["measured"], Json::parse("[1,5,0,0]"));

    ASSERT_EQ(linarr_report(a, nullptr, 0, &out), LINARR_OK);
    auto r = take(out);
    EXPECT_TRUE(r.contains("poset"));
    EXPECT_TRUE(r.contains("sweep"));
    EXPECT_FALSE(r.contains("verification"));
    linarr_arrangement_free(a);
}

TEST(CApi, GenerateIsDeterministic) {
    linarr_arrangement *a = nullptr, *b = nullptr;
    ASSERT_EQ(linarr_arrangement_generate(3, 6, "mixed", 99, &a), LINARR_OK);
    ASSERT_EQ(linarr_arrangement_generate(3, 6, "mixed", 99, &b), LINARR_OK);
    char *sa = nullptr, *sb = nullptr;
    linarr_arrangement_serialize(a, &sa);
    linarr_arrangement_serialize(b, &sb);
    EXPECT_STREQ(sa, sb);
    linarr_string_free(sa);
    linarr_string_free(sb);
    linarr_arrangement_free(a);
    linarr_arrangement_free(b);
    EXPECT_EQ(linarr_arrangement_generate(3, 6, "bogus", 1, &a), LINARR_E_INVALID_PROFILE);
}

TEST(CApi, GraphSweepSquare) {
    std::string text = R"({"dimension":3,"vertices":[["0","0","0"],["1","0","0"],["1","1","0"],["0","1","0"]],
        "edges":[{"segment":[0,1]},{"segment":[1,2]},{"segment":[2,3]},{"segment":[3,0]}]})";
    linarr_graph* g = nullptr;
    ASSERT_EQ(linarr_graph_parse(text.data(), text.size(), &g), LINARR_OK);
    char* out = nullptr;
    ASSERT_EQ(linarr_graph_sweep(g, nullptr, &out), LINARR_OK);
    auto j = take(out);
    EXPECT_EQ(j["trace"]["all_trivial"], false);
    EXPECT_TRUE(j["betti_prediction"].is_null());
    linarr_graph_free(g);
}
