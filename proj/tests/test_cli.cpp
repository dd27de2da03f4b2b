#include <doctest.h>

#include <fstream>
#include <sstream>

#include "torq/cli.hpp"
#include "torq/scenario.hpp"

using namespace torq;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string root = TORQ_SOURCE_DIR;

}  // namespace

TEST_CASE("verify builtin scenarios") {
    for (const std::string& name : builtin_names()) {
        cli_result r = run_cli({"verify", name});
        CHECK(r.code == cli_ok);
        CHECK(r.out.find("overall: PASS") != std::string::npos);
    }
}

TEST_CASE("verify reports failures with witnesses") {
    std::string scn =
        "schema = 1\n"
        "category = linear_a\n"
        "n = 3\n"
        "pair = explicit\n"
        "torsion = [1,1] [2,2]\n"
        "free = [3,3]\n"
        "checks = torsion-pair\n";
    std::string path = "/tmp/torq_broken.scn";
    std::ofstream(path) << scn;
    cli_result r = run_cli({"verify", path});
    CHECK(r.code == cli_check_failed);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("[1,2]") != std::string::npos);  // the closure witness P_2
}

TEST_CASE("empty check list gives an empty passing report") {
    std::string scn =
        "schema = 1\n"
        "category = linear_a\n"
        "n = 2\n"
        "pair = explicit\n"
        "torsion = [2,2]\n"
        "free = [1,1]\n";
    std::string path = "/tmp/torq_empty.scn";
    std::ofstream(path) << scn;
    cli_result r = run_cli({"verify", path});
    CHECK(r.code == cli_ok);
    CHECK(r.out.find("check ") == std::string::npos);
}

TEST_CASE("scenario parse errors exit 2 with a location") {
    std::string path = "/tmp/torq_bad.scn";
    std::ofstream(path) << "schema = 1\ncategory = linear_a\nn = 3\npair = explicit\n"
                           "torsion = [9,9]\n";
    cli_result r = run_cli({"verify", path});
    CHECK(r.code == cli_input_error);
    CHECK(r.err.find("line 5") != std::string::npos);

    cli_result miss = run_cli({"verify", "/tmp/torq_does_not_exist.scn"});
    CHECK(miss.code == cli_input_error);
}

TEST_CASE("scenario files reproduce the builtins") {
    for (const std::string& name : builtin_names()) {
        cli_result from_file = run_cli({"verify", root + "/scenarios/" + name + ".scn"});
        cli_result from_builtin = run_cli({"verify", name});
        CHECK(from_file.code == cli_ok);
        CHECK(from_file.out == from_builtin.out);
    }
}

TEST_CASE("enumerate counts and guard") {
    cli_result r2 = run_cli({"enumerate", "--n", "2"});
    CHECK(r2.code == cli_ok);
    CHECK(r2.out.find("torsion pairs of linear_a(2): 5") != std::string::npos);
    cli_result r3 = run_cli({"enumerate", "--n", "3"});
    CHECK(r3.out.find("linear_a(3): 14") != std::string::npos);
    CHECK(r3.out.find("FAIL") == std::string::npos);
    cli_result r1 = run_cli({"enumerate", "--n", "1"});
    CHECK(r1.out.find("linear_a(1): 2") != std::string::npos);
    cli_result big = run_cli({"enumerate", "--n", "9"});
    CHECK(big.code == cli_input_error);
}

TEST_CASE("structured report runs are byte-identical") {
    cli_result a = run_cli({"verify", "a3-paper", "--format", "structured"});
    cli_result b = run_cli({"verify", "a3-paper", "--format", "structured"});
    CHECK(a.code == cli_ok);
    CHECK(a.out == b.out);
    CHECK(a.out == slurp(root + "/tests/golden/a3-paper.verify.json"));
}

TEST_CASE("figure goldens") {
    for (const std::string& name : builtin_names()) {
        cli_result r = run_cli({"figure", name});
        CHECK(r.code == cli_ok);
        CHECK(r.out == slurp(root + "/tests/golden/" + name + ".figure.txt"));
    }
}

TEST_CASE("figure with empty torsion marks everything free") {
    std::string scn =
        "schema = 1\n"
        "category = linear_a\n"
        "n = 3\n"
        "pair = explicit\n"
        "free = [1,1] [1,2] [1,3] [2,2] [2,3] [3,3]\n";
    std::string path = "/tmp/torq_allfree.scn";
    std::ofstream(path) << scn;
    cli_result r = run_cli({"figure", path});
    CHECK(r.code == cli_ok);
    // no torsion mark after the legend line
    CHECK(r.out.find('#', r.out.find("\n\n")) == std::string::npos);
    // both overlays cover all six nodes, plus one '@' per overlay legend
    size_t at_count = 0;
    for (char c : r.out)
        if (c == '@')
            ++at_count;
    CHECK(at_count == 14);
}

TEST_CASE("non-stabilized factoring exits 3") {
    std::string scn =
        "schema = 1\n"
        "category = tube\n"
        "rank = 5\n"
        "length_cap = 5\n"
        "pair = corays\n"
        "corays = 0\n"
        "wing_torsion = [1,5] [2,5] [3,5] [4,5] [5,5] [3,3]\n"
        "wing_free = [1,1] [1,2] [1,3] [1,4] [2,2] [2,3] [2,4] [4,4]\n"
        "cap = 4\n"
        "checks = ideal-identity\n";
    std::string path = "/tmp/torq_lowcap.scn";
    std::ofstream(path) << scn;
    cli_result r = run_cli({"verify", path});
    CHECK(r.code == cli_not_stabilized);
    CHECK(r.err.find("length_cap") != std::string::npos);
}

TEST_CASE("worker sharding does not change output") {
    setenv("TORQ_WORKERS", "1", 1);
    cli_result one = run_cli({"verify", "tube5-case2-paper", "--format", "structured"});
    setenv("TORQ_WORKERS", "2", 1);
    cli_result two = run_cli({"verify", "tube5-case2-paper", "--format", "structured"});
    unsetenv("TORQ_WORKERS");
    CHECK(one.code == cli_ok);
    CHECK(one.out == two.out);
}

TEST_CASE("prime knob") {
    cli_result r = run_cli({"verify", "a3-paper", "--prime", "97"});
    CHECK(r.code == cli_ok);
    cli_result t = run_cli({"verify", "tube5-case2-paper", "--prime", "97"});
    CHECK(t.code == cli_ok);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({"verify"}).code == cli_input_error);
    CHECK(run_cli({"bogus"}).code == cli_input_error);
    CHECK(run_cli({"verify", "a3-paper", "--format", "yaml"}).code == cli_input_error);
}
