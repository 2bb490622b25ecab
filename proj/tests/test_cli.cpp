// End-to-end tests of the command-line surface: exit-code contract and
// machine-readable output, exercised through the real binary.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nfkit/report.hpp"

namespace {

int run(const std::string& args, std::string* output = nullptr) {
    std::string tmp = std::string(NFKIT_BINARY_DIR) + "/cli_test_output.txt";
    std::string cmd = std::string(NFKIT_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
    int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(tmp);
        std::stringstream buf;
        buf << in.rdbuf();
        *output = buf.str();
    }
    std::remove(tmp.c_str());
    return WEXITSTATUS(status);
}

std::string records(const std::string& name) {
    return std::string(NFKIT_SOURCE_DIR) + "/data/records/" + name;
}

}  // namespace

TEST_CASE("flt check exit codes: 0 conclusive, 1 inconclusive, 2 error") {
    CHECK(run("flt check " + records("example_fields.json") +
              " --label deg5-cyclic --criterion theorem2") == 0);
    CHECK(run("flt check " + records("example_fields.json") +
              " --label deg7-tr53 --criterion theorem1 --prime 53") == 0);
    // corollary1 is inconclusive on the degree-7 field at p = 53
    CHECK(run("flt check " + records("example_fields.json") +
              " --label deg7-tr53 --criterion corollary1 --prime 53") == 1);
    // golden field: theorem2 inconclusive (unit-equation witness exists)
    CHECK(run("flt check " + records("quadratic.json") +
              " --label q-sqrt5 --criterion theorem2") == 1);
    // missing narrow class number: error
    CHECK(run("flt check " + records("example_fields.json") +
              " --label deg7-tr53 --criterion theorem2") == 2);
    // unreadable file / unknown label / unknown flag: usage errors
    CHECK(run("flt check /nonexistent.json") == 2);
    CHECK(run("flt check " + records("quadratic.json") + " --label no-such") == 2);
    CHECK(run("flt check " + records("quadratic.json") + " --no-such-flag") == 2);
    CHECK(run("no-such-command") == 2);
    CHECK(run("--help") == 0);
}

TEST_CASE("cyclotomic verify") {
    std::string out;
    CHECK(run("cyclotomic verify --p 11", &out) == 0);
    CHECK(out.find("[pass] lambda + mu = 1") != std::string::npos);
    CHECK(run("cyclotomic verify --p 13") == 0);
    CHECK(run("cyclotomic verify --p 4") == 2);
    CHECK(run("cyclotomic verify --p 3") == 2);
}

TEST_CASE("chevalley scan and uniteq search succeed with JSON output") {
    std::string out;
    CHECK(run("chevalley scan --dmin -30 --dmax 30 --json", &out) == 0);
    nfkit::ReportDocument doc = nfkit::parse_report(out);
    CHECK(doc.kind == nfkit::ReportDocument::Kind::Chevalley);
    CHECK(!doc.chevalley.empty());
    for (const auto& r : doc.chevalley) CHECK(r.match());

    CHECK(run("uniteq search " + records("quadratic.json") +
              " --label q-sqrt5 --bound 1 --json", &out) == 0);
    nfkit::ReportDocument sdoc = nfkit::parse_report(out);
    CHECK(sdoc.kind == nfkit::ReportDocument::Kind::Search);
    REQUIRE(sdoc.searches.size() == 1);
    CHECK(sdoc.searches[0].solutions.size() == 2);

    CHECK(run("uniteq search " + records("quadratic.json") +
              " --label q-sqrt5 --bound 1 --s-unit --k-bound 1 --json", &out) == 0);
    nfkit::ReportDocument s2 = nfkit::parse_report(out);
    REQUIRE(s2.searches.size() == 1);
    CHECK(s2.searches[0].solutions.size() == 11);
}

TEST_CASE("field analyze reports certified splittings") {
    std::string out;
    CHECK(run("field analyze " + records("example_fields.json") +
              " --prime 53 --prime 2 --json", &out) == 0);
    nfkit::ReportDocument doc = nfkit::parse_report(out);
    CHECK(doc.kind == nfkit::ReportDocument::Kind::Analysis);
    REQUIRE(doc.analyses.size() == 2);
    CHECK(doc.analyses[0].degree == 7);
    CHECK(doc.analyses[0].r1 == 7);
    REQUIRE(doc.analyses[0].splittings.size() == 2);
    CHECK(doc.analyses[0].splittings[0].certified);
}

TEST_CASE("identical reruns are byte-identical") {
    std::string a, b;
    int ca = run("flt check " + records("example_fields.json") +
                 " --label deg5-cyclic --json --seed 7", &a);
    int cb = run("flt check " + records("example_fields.json") +
                 " --label deg5-cyclic --json --seed 7", &b);
    CHECK(ca == 1);  // the full sweep includes inconclusive criteria
    CHECK(ca == cb);
    CHECK(a == b);
    // and the output really is the machine-readable document
    nfkit::ReportDocument doc = nfkit::parse_report(a);
    CHECK(doc.kind == nfkit::ReportDocument::Kind::Criteria);
    CHECK(!doc.criteria.empty());
}
