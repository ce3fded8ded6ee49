#include <sstream>

#include "doctest.h"

#include "cdgacalc/cli/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<const char*> args)
{
    args.insert(args.begin(), "cdgacalc");
    std::ostringstream out, err;
    const int code = cdgacalc::cli::run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("run im_emb_model prints the Betti row")
{
    const auto r = invoke({"run", "im_emb_model", "--max-degree", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("betti: 1 0 2 1 1 1 1 1 1 1 1 1 1\n") != std::string::npos);
    CHECK(r.out.find("verdict: PASS") != std::string::npos);
}

TEST_CASE("run tor_h4 names the degree-4 representative")
{
    const auto r = invoke({"run", "tor_h4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("total degree 4: dim 1, representative r*s\n") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(invoke({"run", "nope"}).code == 2);
    CHECK(invoke({"run", "im_emb_model", "--k", "0"}).code == 2);
    CHECK(invoke({"cohomology", "--spec", "missing.json"}).code == 2);
    CHECK(invoke({"run", "im_emb_model", "--format", "xml"}).code == 2);
    CHECK(invoke({"run"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"list"}).code == 0);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("list shows every preset with its anchor")
{
    const auto r = invoke({"list"});
    CHECK(r.out.find("im_emb_model") != std::string::npos);
    CHECK(r.out.find("anchor: ") != std::string::npos);
    CHECK(invoke({"list"}).out == r.out);
}

TEST_CASE("json output carries the verdict and rows")
{
    const auto r = invoke({"run", "splitting_check", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = cdgacalc::scenarios::Json::parse(r.out);
    CHECK(j["verdict"] == "PASS");
    CHECK(j["rows"].size() == 2);
    CHECK(j["engine_version"] == cdgacalc::cli::engine_version);
}

TEST_CASE("export produces a runnable spec")
{
    const auto r = invoke({"export", "fiber_z2"});
    CHECK(r.code == 0);
    const auto j = cdgacalc::scenarios::Json::parse(r.out);
    CHECK(j["name"] == "fiber_z2");
    CHECK(j["format_version"] == 1);
}

}
