#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = endgraph::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("endgraph_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("dist prints the dyadic distance") {
        const auto r = run({"dist", "--a", "loch_ness", "--b", "tree3"});
        CHECK(r.code == 0);
        CHECK(r.out == "exact 2^-1/2 0.7071067811865476\n");
        CHECK(run({"dist", "--a", "tree3", "--b", "tree3", "--budget", "6"}).out.starts_with("upper"));
    }

    TEST_CASE("ball renders text, dot and canonical code") {
        const auto text = run({"ball", "--spec", "tree3", "--radius", "1.5"});
        CHECK(text.code == 0);
        CHECK(text.out.find("v t0 depth=1 stubs=2") != std::string::npos);
        CHECK(run({"ball", "--spec", "ray", "--radius", "2", "--format", "dot"}).out.starts_with("graph"));
        const auto a = run({"ball", "--spec", "loch_ness", "--radius", "3", "--format", "code"});
        const auto b = run({"ball", "--spec", "gamma:3:singleton 0(1)^w", "--radius", "3", "--format", "code"});
        CHECK(a.out == b.out);
    }

    TEST_CASE("phe verdicts") {
        CHECK(run({"phe", "--a", "loch_ness", "--b", "rank=inf ends=1 loopends=1"}).out == "equivalent\n");
        CHECK(run({"phe", "--a", "loch_ness", "--b", "tree3"}).out.starts_with("not equivalent"));
        const auto path = temp_file("edge.graph", "graph g root=a\nv a\nv b\ne x a b\n");
        CHECK(run({"phe", "--a", path, "--b", "tree3"}).out == "unknown\n");
    }

    TEST_CASE("ends emits json") {
        const auto r = run({"ends", "--spec", "ray", "--depth", "3", "--horizon", "5"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["horizon"] == 5);
        CHECK(j["levels"].size() == 4);
    }

    TEST_CASE("rank and reduce") {
        CHECK(run({"rank", "--spec", "fig4_first", "--radius", "6"}).out.starts_with("rank >= 3"));
        const auto r = run({"reduce", "--closed-set", "closedset cylinders 0 11", "--k", "3", "--validate", "4"});
        CHECK(r.code == 0);
        CHECK(r.out.find("valid to depth 4") != std::string::npos);
        const auto bad = run({"reduce", "--closed-set", "closedset dfa 2 0.0=1 0,1", "--k", "3", "--validate", "3"});
        CHECK(bad.code == 1);
        CHECK(bad.out.find("violation") != std::string::npos);
    }

    TEST_CASE("realize") {
        CHECK(run({"realize", "--descriptor", "rank=inf ends=1 loopends=1", "--space", "3"}).code == 0);
        const auto r = run({"realize", "--descriptor", "rank=2 ends=2 loopends=0", "--space", "3"});
        CHECK(r.code == 1);
        CHECK(r.err.starts_with("error: unrealizable:"));
    }

    TEST_CASE("generic is deterministic") {
        const std::vector<std::string> args{"generic", "--seed", "3", "--csv", "-"};
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.find("trial,seed,rank_ball_R,in_Un,in_Vn_witness_radius") != std::string::npos);
        CHECK(run({"generic"}).code == 2);
    }

    TEST_CASE("surface") {
        const auto path = temp_file("torus.pants", "pants 0 legs=1\nglue 0.1 0.2\nbase 0\n");
        const auto g = run({"surface", "--file", path, "--genus"});
        CHECK(g.out.find("genus 1") != std::string::npos);
        CHECK(run({"surface", "--homeo", "annulus_chain", "rank=0 ends=1 loopends=0"}).out == "yes\n");
        CHECK(run({"surface", "--homeo", path, path}).out == "yes\n");
    }

    TEST_CASE("exit codes") {
        CHECK(run({}).code == 2);
        CHECK(run({"--help"}).code == 0);
        CHECK(run({"ball", "--spec", "tree3"}).code == 2);
        CHECK(run({"ball", "--spec", "nope", "--radius", "1"}).code == 1);
        CHECK(run({"ball", "--spec", "tree3", "--radius", "1", "--format", "xml"}).code == 2);
        const auto parse = run({"ball", "--spec", temp_file("bad.graph", "graph g root=a\nv a\nz\n"), "--radius", "1"});
        CHECK(parse.code == 1);
        CHECK(parse.err.find(":3:1:") != std::string::npos);
    }
}
