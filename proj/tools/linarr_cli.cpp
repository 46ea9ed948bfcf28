// Command-line front end over the linarr C API.
//
//   linarr analyze FILE
//   linarr poset   FILE
//   linarr sweep   FILE [--direction a,b,c] [--graph]
//   linarr verify  FILE [--grid m] [--allow-expensive]
//   linarr report  FILE [--direction a,b,c] [--grid m]
//   linarr gen     --dim n --count d --profile P --seed s
//
// FILE may be "-" for standard input. Exit status: 0 ok, 1 verification
// mismatch, 2 input error.

#include "linarr/linarr.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct ArrangementDeleter {
    void operator()(linarr_arrangement* a) const { linarr_arrangement_free(a); }
};
struct GraphDeleter {
    void operator()(linarr_graph* g) const { linarr_graph_free(g); }
};
struct StringDeleter {
    void operator()(char* s) const { linarr_string_free(s); }
};

using ArrangementPtr = std::unique_ptr<linarr_arrangement, ArrangementDeleter>;
using GraphPtr = std::unique_ptr<linarr_graph, GraphDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int fail() {
    const char* err = linarr_last_error_json();
    std::cout << err << "\n";
    std::cerr << "linarr: " << err << "\n";
    return kExitInput;
}

std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int print(StringPtr text) {
    std::cout << text.get();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topology of complements of affine line arrangements"};
    app.set_version_flag("--version", std::string(linarr_version()));
    app.require_subcommand(1);

    std::string input;
    std::string direction;
    int grid = 32;
    bool allow_expensive = false;
    bool as_graph = false;
    int dim = 3;
    std::size_t count = 3;
    std::string profile = "generic";
    std::uint64_t seed = 0;

    auto* analyze = app.add_subcommand("analyze", "Invariants and predicted topology of the complement");
    analyze->add_option("file", input, "Arrangement JSON, or - for stdin")->required();

    auto* poset = app.add_subcommand("poset", "Intersection poset, Hasse edges and recovered (t, d)");
    poset->add_option("file", input, "Arrangement JSON, or - for stdin")->required();

    auto* sweep = app.add_subcommand("sweep", "Sweep plan and handle-attachment trace");
    sweep->add_option("file", input, "Arrangement (or space graph with --graph) JSON")->required();
    sweep->add_option("--direction", direction, "Height direction a,b,c (rationals); default: searched");
    sweep->add_flag("--graph", as_graph, "Input is a general space graph");

    auto* verify = app.add_subcommand("verify", "Cubical homology check of the predicted Betti numbers");
    verify->add_option("file", input, "Arrangement JSON, or - for stdin")->required();
    verify->add_option("--grid", grid, "Grid cubes per axis")->check(CLI::Range(2, 4096));
    verify->add_flag("--allow-expensive", allow_expensive, "Admit n = 4");

    auto* report = app.add_subcommand("report", "Analysis, poset, sweep and verification in one document");
    report->add_option("file", input, "Arrangement JSON, or - for stdin")->required();
    report->add_option("--direction", direction, "Height direction a,b,c");
    report->add_option("--grid", grid, "Grid cubes per axis; 0 skips verification");

    auto* gen = app.add_subcommand("gen", "Seeded random arrangement");
    gen->add_option("--dim", dim, "Ambient dimension")->required();
    gen->add_option("--count", count, "Number of lines")->required();
    gen->add_option("--profile", profile, "generic | mixed | pencil(k)");
    gen->add_option("--seed", seed, "Generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    const char* dir_arg = direction.empty() ? nullptr : direction.c_str();
    char* out = nullptr;

    if (gen->parsed()) {
        linarr_arrangement* raw = nullptr;
        if (linarr_arrangement_generate(dim, count, profile.c_str(), seed, &raw) != LINARR_OK) return fail();
        ArrangementPtr a(raw);
        if (linarr_arrangement_serialize(a.get(), &out) != LINARR_OK) return fail();
        return print(StringPtr(out));
    }

    auto text = read_input(input);
    if (!text) {
        std::cout << R"({"error":{"code":"IoError","message":"cannot read input file"}})" << "\n";
        std::cerr << "linarr: cannot read " << input << "\n";
        return kExitInput;
    }

    if (sweep->parsed() && as_graph) {
        linarr_graph* raw = nullptr;
        if (linarr_graph_parse(text->data(), text->size(), &raw) != LINARR_OK) return fail();
        GraphPtr g(raw);
        if (linarr_graph_sweep(g.get(), dir_arg, &out) != LINARR_OK) return fail();
        return print(StringPtr(out));
    }

    linarr_arrangement* raw = nullptr;
    if (linarr_arrangement_parse(text->data(), text->size(), &raw) != LINARR_OK) return fail();
    ArrangementPtr a(raw);

    if (analyze->parsed()) {
        if (linarr_analyze(a.get(), &out) != LINARR_OK) return fail();
        return print(StringPtr(out));
    }
    if (poset->parsed()) {
        if (linarr_poset(a.get(), &out) != LINARR_OK) return fail();
        return print(StringPtr(out));
    }
    if (sweep->parsed()) {
        if (linarr_sweep(a.get(), dir_arg, &out) != LINARR_OK) return fail();
        return print(StringPtr(out));
    }
    if (verify->parsed()) {
        int match = 0;
        if (linarr_verify(a.get(), grid, allow_expensive ? 1 : 0, &match, &out) != LINARR_OK) return fail();
        print(StringPtr(out));
        return match ? kExitOk : kExitMismatch;
    }
    if (report->parsed()) {
        if (linarr_report(a.get(), dir_arg, grid, &out) != LINARR_OK) return fail();
        return print(StringPtr(out));
    }
    return kExitInput;
}
