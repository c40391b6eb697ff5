#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "bridgeland/rational.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = bridgeland::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
    std::string trimmed = text;
    while (!trimmed.empty() && trimmed.back() == '\n') trimmed.pop_back();
    return trimmed.substr(trimmed.rfind('\n') + 1);
}

void collect_rationals(const json& node, std::vector<std::string>& out) {
    if (node.is_object() || node.is_array())
        for (const auto& item : node) collect_rationals(item, out);
    else if (node.is_string()) {
        const std::string s = node.get<std::string>();
        if (!s.empty() && (s[0] == '-' || std::isdigit(static_cast<unsigned char>(s[0])))) out.push_back(s);
    }
}

}  // namespace

TEST_CASE("walls at s = 0") {
    const Result r = run({"walls", "--chern", "1,2,-1", "--at-s0", "--json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["u_values"] == json::array({"3", "1", "1/3"}));
    CHECK(run({"walls", "-n", "5", "--at-s0"}).out == "3\n1\n1/3\n");
    const json ten = json::parse(run({"walls", "-n", "10", "--json"}).out);
    REQUIRE(ten["walls"].size() == 4);
    CHECK(ten["walls"][0]["shape"]["circle"]["center"] == "-7/2");
    CHECK(ten["walls"][0]["shape"]["circle"]["radius_sq"] == "81/4");
    CHECK(ten["walls"][0]["u_at_s0"] == "8");
}

TEST_CASE("series table") {
    const Result r = run({"series", "--max", "8"});
    REQUIRE(r.code == 0);
    CHECK(last_line(r.out) == "n=8: 3 3 match=yes");
    CHECK(r.out.rfind("n=0: 0 0 match=yes\n", 0) == 0);
    CHECK(r.out.find("n=5: 3 3 match=yes") != std::string::npos);
}

TEST_CASE("transform") {
    CHECK(run({"transform", "--chern", "1,2,-1"}).out == "1,2,-1 (fixed point of Φ)\n");
    CHECK(run({"transform", "--chern", "1,2,0"}).out == "0,2,-1\n");
}

TEST_CASE("pair, threshold, chambers, n3-map") {
    CHECK(run({"pair", "--v", "1,1,1", "--w", "0,1,0"}).out.rfind("chi(v,w) = -2\n", 0) == 0);
    CHECK(run({"threshold", "-n", "7", "-k", "5"}).out == "u = 1\n");
    CHECK(run({"chambers", "-n", "5"}).out == "M_0: 3 < u\nM_1: 1 < u < 3\nM_2: 1/3 < u < 1\nM_3: 0 < u < 1/3\n");
    const Result map = run({"n3-map", "--p", "1/2,0,0,0"});
    CHECK(map.out == "determinant 1\np' = 1/2,0,0,0\nq' = 0,0,0,0\ny' = 1/2,0,0,0\nxhat' = 1/2,0,0,0\n");
    const Result back = run({"n3-map", "--inverse", "--p", "1/2,0,0,0", "--y", "1/2,0,0,0", "--xhat", "1/2,0,0,0"});
    CHECK(back.out == "determinant 1\np' = 1/2,0,0,0\nq' = 0,0,0,0\ny' = 0,0,0,0\nxhat' = 0,0,0,0\n");
}

TEST_CASE("flops table carries the flags") {
    const Result r = run({"flops", "-n", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("codim-discrepancy") != std::string::npos);
    const json doc = json::parse(run({"flops", "-n", "5", "--json"}).out);
    CHECK(doc["ambient_dim"] == 12);
    REQUIRE(doc["records"].size() == 3);
    CHECK(doc["records"][0]["codim"] == 3);
    CHECK(doc["records"][1]["codim"] == 2);
    CHECK(doc["records"][2]["e1"] == json::array({2, 1, 0}));
    const json three = json::parse(run({"flops", "-n", "3", "--json"}).out);
    CHECK(three["records"][0]["N"] == 1);
    CHECK(three["records"][0]["flags"].size() == 1);
}

TEST_CASE("pseudo-walls") {
    const Result r = run({"pseudo-walls", "--chern", "1,2,1", "--region", "-1:1", "--rank-bound", "4", "--json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["walls"].size() == 2);
    CHECK(doc["walls"][1]["shape"]["circle"]["center"] == "1/4");
    CHECK(doc["walls"][1]["shape"]["circle"]["radius_sq"] == "1/16");
    CHECK(doc["walls"][1]["sample_point"].is_object());
    const Result n2 = run({"pseudo-walls", "--chern", "1,2,2", "--region", "0:1"});
    CHECK(n2.out.find("note:") != std::string::npos);
}

TEST_CASE("diagram file output") {
    const auto path = std::filesystem::temp_directory_path() / "bridgeland_cli_fig1.svg";
    const Result r = run({"diagram", "-n", "10", "--window", "-0.1:2.2:3", "-o", path.string()});
    REQUIRE(r.code == 0);
    std::ifstream file(path);
    std::stringstream svg;
    svg << file.rdbuf();
    std::size_t paths = 0;
    for (std::size_t pos = svg.str().find("<path class=\"wall\""); pos != std::string::npos;
         pos = svg.str().find("<path class=\"wall\"", pos + 1))
        ++paths;
    CHECK(paths == 4);
    std::filesystem::remove(path);
    CHECK(run({"diagram", "-n", "10", "-o", "/nonexistent-dir/x.svg"}).code == 3);
}

TEST_CASE("validation errors exit 2 and name the flag") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"pseudo-walls", "--chern", "1,2", "--region", "0:1"}, "--chern"},
        {{"pseudo-walls", "--chern", "1,2,1", "--region", "1:0"}, "--region"},
        {{"pseudo-walls", "--chern", "1,2,1", "--region", "0:1", "--rank-bound", "0"}, "--rank-bound"},
        {{"pseudo-walls", "--chern", "1,2,1", "--region", "0:1", "--rank-bound", "x"}, "--rank-bound"},
        {{"pseudo-walls", "--chern", "1,0,1", "--region", "0:1"}, "--chern"},
        {{"walls", "--chern", "2,1,0"}, "--chern"},
        {{"walls", "-n", "-3"}, "-n"},
        {{"walls", "--unknown"}, "--unknown"},
        {{"threshold", "-n", "5", "-k", "1"}, "-k"},
        {{"diagram", "-n", "3", "--window", "1:0:1"}, "--window"},
        {{"diagram", "-n", "3", "--ppu", "0"}, "--ppu"},
        {{"n3-map", "--p", "1,2"}, "--p"},
        {{"series", "--max", "-1"}, "--max"},
    };
    for (const auto& [args, flag] : cases) {
        const Result r = run(args);
        CHECK(r.code == 2);
        CHECK(r.err.find(flag) != std::string::npos);
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
        CHECK(r.out.empty());
    }
    CHECK(run({}).code == 2);
}

TEST_CASE("json output is deterministic and rationals round trip") {
    const std::vector<std::vector<std::string>> commands{
        {"walls", "-n", "10", "--json"},
        {"pseudo-walls", "--chern", "1,2,-1", "--region", "0:1", "--json"},
        {"flops", "-n", "5", "--json"},
        {"chambers", "-n", "7", "--json"},
        {"n3-map", "--p", "1/3,-2/7,5,1/2", "--json"},
    };
    for (const auto& args : commands) {
        const Result a = run(args);
        const Result b = run(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        std::vector<std::string> values;
        collect_rationals(json::parse(a.out), values);
        CHECK_FALSE(values.empty());
        for (const std::string& text : values) CHECK(bridgeland::Rational::parse(text).to_string() == text);
    }
}
