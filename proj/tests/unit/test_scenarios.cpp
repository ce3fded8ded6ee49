#include "doctest.h"

#include "cdgacalc/cli/cli.hpp"
#include "cdgacalc/errors.hpp"
#include "cdgacalc/scenarios/scenarios.hpp"

using namespace cdgacalc;
using namespace cdgacalc::scenarios;

namespace {

std::vector<std::size_t> series(const Verdict& v, const std::string& name)
{
    for (const auto& [n, s] : v.series)
        if (n == name)
            return s;
    FAIL("missing series " << name);
    return {};
}

RunOptions with_k(const std::string& k, int n = 12)
{
    RunOptions o;
    o.k = k;
    o.max_degree = n;
    return o;
}

}  // namespace

TEST_SUITE("scenarios") {

TEST_CASE("catalog lists every preset in a stable order")
{
    const auto list = list_presets();
    REQUIRE(list.size() >= 12);
    CHECK(list.front().name == "symp_m_model");
    std::vector<std::string> names;
    for (const auto& p : list) {
        names.push_back(p.name);
        CHECK_FALSE(p.anchor.empty());
    }
    for (const char* required : {"im_emb_model", "tor_h4", "emb_model", "splitting_check", "zp_dimension_match"})
        CHECK(std::find(names.begin(), names.end(), required) != names.end());
    CHECK_THROWS_AS(find_preset("nope"), InputError);
}

TEST_CASE("every built-in preset passes at its default range")
{
    for (const auto& p : builtin_presets()) {
        CAPTURE(p.name);
        const auto v = run(p, {});
        CHECK(v.pass());
        CHECK(cli::verdict_word(v) == "PASS");
    }
}

TEST_CASE("expected entries without provenance are refused")
{
    auto doc = find_preset("symp_m_model").source;
    doc["expected"]["betti"][3].erase("provenance");
    CHECK_THROWS_AS(parse_preset(doc), InputError);
    auto bad_tag = find_preset("symp_m_model").source;
    bad_tag["expected"]["betti"][0]["provenance"] = "folklore";
    CHECK_THROWS_AS(parse_preset(bad_tag), InputError);
    auto untagged_cup = find_preset("im_emb_model").source;
    untagged_cup["cup_checks"][0].erase("provenance");
    CHECK_THROWS_AS(parse_preset(untagged_cup), InputError);
}

TEST_CASE("format version is checked")
{
    auto doc = find_preset("symp_m_model").source;
    doc["format_version"] = 2;
    CHECK_THROWS_AS(parse_preset(doc), InputError);
}

TEST_CASE("k must be nonzero in the working field")
{
    CHECK_THROWS_AS(run_preset("im_emb_model", with_k("0")), InputError);
    RunOptions o = with_k("3");
    o.field = exact::FieldSpec::prime(3);
    CHECK_THROWS_AS(run_preset("pontryagin_tilde", o), InputError);
    o.k = "2";
    CHECK_NOTHROW(run_preset("pontryagin_tilde", o));
}

TEST_CASE("fields outside a preset's list are rejected")
{
    RunOptions o;
    o.field = exact::FieldSpec::rationals();
    CHECK_THROWS_AS(run_preset("fiber_z2", o), InputError);
    o.field = exact::FieldSpec::prime(3);
    CHECK_THROWS_AS(run_preset("fiber_z2", o), InputError);
    o.field = exact::FieldSpec::prime(2);
    CHECK(run_preset("fiber_z2", o).pass());
}

TEST_CASE("k-invariance of the model cohomology")
{
    for (const char* name : {"im_emb_model", "emb_model"}) {
        const auto base = series(run_preset(name, with_k("1")), "betti");
        for (const char* k : {"2", "-3", "7/2"})
            CHECK(series(run_preset(name, with_k(k)), "betti") == base);
    }
}

TEST_CASE("cross-oracle: Tor agrees with im_emb through degree 4")
{
    const auto tor = series(run_preset("tor_h4", with_k("1", 4)), "total_dims");
    const auto betti = series(run_preset("im_emb_model", with_k("1", 4)), "betti");
    CHECK(tor == betti);
}

TEST_CASE("torsion evidence: F2 dimensions dominate the rational ones")
{
    const auto split = series(run_preset("im_emb_z2_split", {}), "dims");
    const auto betti = series(run_preset("im_emb_model", {}), "betti");
    int first = -1;
    for (std::size_t n = 0; n < split.size(); ++n) {
        CHECK(split[n] >= betti[n]);
        if (first < 0 && split[n] > betti[n])
            first = static_cast<int>(n);
    }
    CHECK(first == 4);
}

TEST_CASE("reports are deterministic")
{
    RunOptions o;
    o.representatives = true;
    o.seed = 9;
    for (const char* name : {"im_emb_model", "tor_h4", "pontryagin_tilde"}) {
        const auto a = cli::report_json(run_preset(name, o)).dump();
        const auto b = cli::report_json(run_preset(name, o)).dump();
        CHECK(a == b);
    }
}

TEST_CASE("round trip through spec file text")
{
    for (const auto& p : builtin_presets()) {
        CAPTURE(p.name);
        const auto again = parse_preset_text(p.source.dump(2));
        CHECK(cli::report_text(run(again, {})) == cli::report_text(run(p, {})));
    }
}

TEST_CASE("s_n cocycle check")
{
    const auto v = s_n_cocycle_check(3);
    CHECK(v.pass());
    CHECK(v.rows.size() == 6);
    CHECK(v.notes.at(0).find("s_1 = ") == 0);
    CHECK_THROWS_AS(s_n_cocycle_check(0), InputError);
}

TEST_CASE("a failing expectation is reported, not hidden")
{
    auto doc = find_preset("symp_m_model").source;
    doc["expected"]["betti"][4]["value"] = 4;
    const auto v = run(parse_preset(doc), {});
    CHECK_FALSE(v.pass());
    CHECK(v.failures() == 1);
    CHECK(cli::verdict_word(v) == "FAIL");
}

TEST_CASE("a differential with d^2 != 0 is an input error")
{
    auto doc = find_preset("im_emb_model").source;
    doc["differential"]["h"] = "a*e";
    CHECK_THROWS_AS(run(parse_preset(doc), {}), InputError);
}

TEST_CASE("expression errors are located in the spec file text")
{
    auto doc = find_preset("im_emb_model").source;
    doc["differential"]["h"] = "k*b*)g";
    const auto p = parse_preset_text(doc.dump(2));
    try {
        run(p, {});
        FAIL("expected an input error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line ") == 0);
    }
}

}
