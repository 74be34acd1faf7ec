#include "frob/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = frob::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "frob_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string run_binary(const std::string& args) {
    const char* bin = std::getenv("FROB_BIN");
    REQUIRE(bin != nullptr);
    std::string out;
    FILE* pipe = popen((std::string(bin) + " " + args).c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    CHECK(pclose(pipe) == 0);
    return out;
}

} // namespace

TEST_CASE("fpure check") {
    auto r = run({"fpure", "check", "--p", "3", "x^2+y^2"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["f_pure"] == true);
    CHECK(j["witness"] == "x^2*y^2");
    CHECK(j["tool_version"] == frob::cli::tool_version);
    CHECK(j["inputs"]["p"] == 3);
    CHECK(j["inputs"]["polynomial"] == "x^2+y^2");

    auto cusp = run({"fpure", "check", "--p", "3", "y^2-x^3"}).json();
    CHECK(cusp["f_pure"] == false);
    CHECK(cusp["witness"].is_null());
}

TEST_CASE("quotient commands") {
    auto d = run({"quotient", "decompose", "--group", "1/3(1,2)", "--p", "2", "--e", "2"});
    REQUIRE(d.code == 0);
    auto j = d.json();
    CHECK(j["q"] == 4);
    CHECK(j["pushforward"] == Json::array({6, 5, 5}));
    CHECK(j["full"] == true);
    CHECK(j["all_irreducibles"] == true);

    auto wild = run({"quotient", "decompose", "--group", "1/2(1,1)", "--p", "2", "--e", "1"});
    CHECK(wild.code == frob::cli::precondition_failure);
    CHECK(wild.out.empty());
    CHECK(wild.err.find("wild action") != std::string::npos);

    auto dot = scratch("staircases.dot");
    std::filesystem::remove(dot);
    auto g = run({"quotient", "ghilb", "--group", "1/3(1,2)", "--dot", dot.string()});
    REQUIRE(g.code == 0);
    auto gj = g.json();
    CHECK(gj["interior_rays"] == Json::parse("[[2,1],[1,2]]"));
    CHECK(gj["denominator"] == 3);
    CHECK(gj["graphs"].size() == 3);
    CHECK(gj["smooth"] == true);
    CHECK(read_file(dot).rfind("graph staircases", 0) == 0);
}

TEST_CASE("toric commands") {
    auto c = run({"toric", "compare", "--group", "1/2(1,1)", "--p", "3", "--e", "1"});
    REQUIRE(c.code == 0);
    auto j = c.json();
    CHECK(j["equal"] == true);
    CHECK(j["interior_rays"] == Json::parse("[[1,1]]"));
    CHECK(j["q"] == 3);

    auto big = run({"toric", "compare", "--group", "1/7(1,6)", "--p", "2", "--e", "3"}).json();
    CHECK(big["equal"] == true);
    CHECK(big["interior_rays"].size() == 6);

    auto dot = scratch("fan.dot");
    auto f = run({"toric", "fblowup", "--group", "1/3(1,2)", "--p", "2", "--e", "2", "--dot", dot.string()});
    REQUIRE(f.code == 0);
    CHECK(f.json()["rays_scaled"] == Json::parse("[[3,0],[2,1],[1,2],[0,3]]"));
    CHECK(read_file(dot).rfind("graph fan", 0) == 0);
}

TEST_CASE("curve commands") {
    auto e = run({"curve", "endring", "--semigroup", "3,4,5", "--p", "2", "--e", "1"});
    REQUIRE(e.code == 0);
    CHECK(e.json()["matrix_ring"] == false);

    auto e4 = run({"curve", "endring", "--semigroup", "2,3", "--p", "2", "--e", "2"}).json();
    CHECK(e4["matrix_ring"] == true);
    CHECK(e4["q"] == 4);

    auto f = run({"curve", "fiber", "--semigroup", "2,3", "--p", "2", "--e", "2"}).json();
    CHECK(f["basis"] == Json::array({0, 2, 3, 4, 5, 6, 7, 9}));
    CHECK(f["dim_vector"] == Json::array({1, 7}));

    auto s = run({"curve", "stability", "--semigroup", "2,3", "--p", "2", "--e", "2", "--alpha", "1,3"});
    REQUIRE(s.code == 0);
    auto sj = s.json();
    CHECK(sj["lambda"] == Json::array({-3, 1}));
    REQUIRE_FALSE(sj["quotients"].empty());
    for (const auto& qm : sj["quotients"]) {
        CHECK(qm["status"] == "stable");
        CHECK(qm["certificate"].is_null());
    }
}

TEST_CASE("stability check") {
    auto file = scratch("cluster.json");
    std::ofstream(file) << R"({"coeff": {"x@0": 1, "y@0": 1}})";
    auto dot = scratch("quiver.dot");
    auto r = run({"stability", "check", "--group", "1/3(1,2)", "--constellation", file.string(), "--theta", "-2,1,1",
                  "--dot", dot.string()});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["status"] == "stable");
    CHECK(j["valid"] == true);
    CHECK(read_file(dot).rfind("digraph mckay", 0) == 0);

    std::ofstream(file) << R"({"coeff": {}})";
    CHECK(run({"stability", "check", "--group", "1/3(1,2)", "--constellation", file.string(), "--theta", "-2,1,1"})
              .json()["status"] == "unstable");

    auto missing = run({"stability", "check", "--group", "1/3(1,2)", "--constellation",
                        scratch("absent.json").string(), "--theta", "-2,1,1"});
    CHECK(missing.code == frob::cli::precondition_failure);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == frob::cli::usage);
    CHECK(run({"bogus"}).code == frob::cli::usage);
    CHECK(run({"curve", "stability", "--semigroup", "2,3", "--p", "2", "--e", "1"}).code == frob::cli::usage);
    CHECK(run({"fpure", "check", "--p", "three", "x"}).code == frob::cli::usage);
    CHECK(run({"fpure", "check", "--p", "4", "x^2"}).code == frob::cli::precondition_failure);
    CHECK(run({"fpure", "check", "--p", "3", "x^2+"}).code == frob::cli::precondition_failure);
    CHECK(run({"--help"}).code == frob::cli::ok);
}

TEST_CASE("output is deterministic across processes") {
    for (const std::string args : {"toric compare --group '1/5(1,4)' --p 11 --e 1",
                                   "quotient ghilb --group '1/5(1,2)' --p 3",
                                   "curve endring --semigroup 3,5,7 --p 2 --e 3"}) {
        const auto first = run_binary(args);
        CHECK_FALSE(first.empty());
        CHECK(run_binary(args) == first);
        CHECK(Json::parse(first)["tool_version"] == "0.1.0");
    }
}
