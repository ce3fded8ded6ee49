// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cdgacalc/koszul/koszul.hpp"
#include "cdgacalc/scenarios/scenarios.hpp"

using namespace cdgacalc;
using namespace cdgacalc::scenarios;
using Series = std::vector<std::size_t>;

namespace {

// Runtime limits in seconds. All numeric comparisons are exact.
constexpr double criterion1_limit = 10.0;
constexpr double criterion5_limit = 5.0;
constexpr double criterion10_limit = 60.0;

const Series im_emb_betti{1, 0, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

RunOptions opts(int n, std::string k = "1", std::optional<std::string> field = std::nullopt)
{
    RunOptions o;
    o.max_degree = n;
    o.k = std::move(k);
    if (field)
        o.field = exact::FieldSpec::parse(*field);
    return o;
}

Series series(const Verdict& v, const std::string& name)
{
    for (const auto& [n, s] : v.series)
        if (n == name)
            return s;
    return {};
}

std::string show(const Series& s)
{
    return fmt::format("{}", fmt::join(s, ","));
}

const Row* find_row(const Verdict& v, const std::string& check)
{
    for (const auto& r : v.rows)
        if (r.check == check)
            return &r;
    return nullptr;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void check_series(Outcome& out, const Verdict& v, const std::string& name, const Series& want, const std::string& label)
{
    out.require(v.pass(), label + ": verdict has failing rows");
    const Series got = series(v, name);
    out.require(got == want, fmt::format("{}: {} = {} (want {})", label, name, show(got), show(want)));
}

Outcome criterion1()
{
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const auto v = run_preset("im_emb_model", opts(12));
    const double t = seconds_since(t0);
    check_series(out, v, "betti", im_emb_betti, "im_emb_model");
    for (int d : {3, 4, 7, 11})
        out.require(series(v, "betti").at(static_cast<std::size_t>(d)) == 1, fmt::format("degree {} is not 1", d));
    out.require(t < criterion1_limit, fmt::format("runtime {:.2f} s", t));
    if (out.ok)
        out.detail = fmt::format("{:.2f} s", t);
    return out;
}

Outcome criterion2()
{
    Outcome out;
    for (const std::string name : {"im_emb_model", "emb_model"}) {
        const Series base = series(run_preset(name, opts(12, "1")), "betti");
        for (const std::string k : {"2", "-3", "7/2"}) {
            const auto v = run_preset(name, opts(12, k));
            out.require(v.pass(), fmt::format("{} k={}: failing rows", name, k));
            out.require(series(v, "betti") == base, fmt::format("{} k={}: {} differs from {}", name, k,
                                                                 show(series(v, "betti")), show(base)));
        }
    }
    out.require(series(run_preset("im_emb_model", opts(12)), "betti") == im_emb_betti, "k=1 series changed");
    return out;
}

Outcome criterion3()
{
    Outcome out;
    const auto v = run_preset("relative_model", opts(9));
    const Series want{1, 1, 0, 2, 3, 1, 1, 3, 3, 1};
    check_series(out, v, "betti", want, "relative_model");
    check_series(out, v, "quotient_betti", want, "quotient");
    const Row* zero = find_row(v, "quotient_zero_differential");
    out.require(zero && zero->computed == true, "quotient differential is not zero");
    return out;
}

Outcome criterion4()
{
    Outcome out;
    const auto v = run_preset("emb_model", opts(7));
    const Series got = series(v, "betti");
    const Series want{1, 0, 1, 3, 0, 2, 4};
    out.require(v.pass(), "emb_model: failing rows");
    out.require(got.size() >= want.size() && Series(got.begin(), got.begin() + 7) == want,
                fmt::format("betti = {} (want prefix {})", show(got), show(want)));
    const auto s = s_n_cocycle_check(3);
    out.require(s.pass(), "s_n cocycle check failed");
    std::size_t not_exact = 0;
    for (const auto& r : s.rows)
        not_exact += r.check.find("not exact") != std::string::npos && r.computed == true;
    out.require(not_exact == 3, fmt::format("{} of 3 s_n are not exact", not_exact));
    return out;
}

Outcome criterion5()
{
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const auto v = run_preset("tor_h4", opts(4));
    out.require(v.pass(), "tor_h4: failing rows");
    const Series want{1, 0, 2, 1, 1};
    out.require(series(v, "total_dims") == want, "total_dims = " + show(series(v, "total_dims")));

    koszul::KoszulComplexSpec spec;
    spec.field = exact::FieldSpec::rationals();
    spec.ring_generators = {{"z", 2}, {"r", 2}, {"s", 2}};
    spec.ring_relations = {"z*r - z*s"};
    spec.exterior = {{"alpha", -1, 2, "z"}, {"beta", -1, 4, "r^2"}, {"gamma", -1, 4, "s^2"},
                     {"delta", -2, 6, "alpha*r^2 - alpha*s^2"}};
    const koszul::KoszulComplex k(spec, 6);
    const auto reps = k.tor().total_representatives(4);
    out.require(reps.size() == 1 && reps[0].to_string() == "r*s", "degree-4 representative is not r*s");
    out.require(k.closedness_probe({k.parse("delta"), k.parse("alpha*beta"), k.parse("alpha*gamma")}).empty(),
                "probe on delta, alpha*beta, alpha*gamma is not zero");
    out.require(Series(im_emb_betti.begin(), im_emb_betti.begin() + 5) == want &&
                    series(run_preset("im_emb_model", opts(4)), "betti") == want,
                "degrees 0..4 disagree with im_emb_model");
    const double t = seconds_since(t0);
    out.require(t < criterion5_limit, fmt::format("runtime {:.2f} s", t));
    if (out.ok)
        out.detail = fmt::format("{:.2f} s", t);
    return out;
}

Outcome criterion6()
{
    Outcome out;
    for (const std::string f : {"Q", "Fp:2", "Fp:3", "Fp:5"})
        check_series(out, run_preset("pontryagin_tilde", opts(8, "1", f)), "dims",
                     Series{1, 3, 4, 4, 4, 4, 4, 4, 4}, "pontryagin_tilde over " + f);
    const auto full = run_preset("pontryagin_full", opts(10, "1", "Q"));
    check_series(out, full, "dims", Series{1, 1, 0, 2, 3, 1, 1, 3, 3, 1, 1}, "pontryagin_full");
    out.require(series(full, "closed_form") == series(full, "dims"), "closed form differs");
    return out;
}

Outcome criterion7()
{
    Outcome out;
    check_series(out, run_preset("fiber_z2", opts(8)), "dims", Series{1, 0, 0, 1, 1, 1, 2, 3, 4}, "fiber_z2");
    const auto v = run_preset("im_emb_z2_split", opts(12));
    out.require(v.pass(), "im_emb_z2_split: failing rows");
    const Series base{1, 0, 2, 0, 1};
    const Series fiber = series(run_preset("fiber_z2", opts(12)), "dims");
    Series conv(13, 0);
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = 0; i + j < conv.size(); ++j)
            conv[i + j] += base[i] * fiber.at(j);
    out.require(series(v, "dims") == conv, fmt::format("dims {} != convolution {}", show(series(v, "dims")), show(conv)));
    return out;
}

Outcome criterion8()
{
    Outcome out;
    const Series rational = series(run_preset("im_emb_model", opts(12)), "betti");
    for (const std::string f : {"Fp:3", "Fp:5"})
        check_series(out, run_preset("zp_dimension_match", opts(12, "1", f)), "dims", rational,
                     "zp_dimension_match over " + f);
    return out;
}

Outcome criterion9()
{
    Outcome out;
    const auto v = run_preset("splitting_check", opts(12));
    out.require(v.pass(), "splitting_check: failing rows");
    const Row* r = find_row(v, "generator_degrees");
    out.require(r && r->computed == Json::array({2, 2, 3, 3, 3, 4}),
                "generator degrees = " + (r ? r->computed.dump() : std::string("missing")));
    return out;
}

Outcome criterion10()
{
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const std::string cmd = std::string(PROPERTY_TESTS_PATH) + " --minimal > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const double t = seconds_since(t0);
    out.require(status == 0, fmt::format("property suite exited with status {}", status));
    out.require(t < criterion10_limit, fmt::format("runtime {:.2f} s", t));
    if (out.ok)
        out.detail = fmt::format("{:.2f} s", t);
    return out;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"im_emb_model Betti series over Q, N=12", criterion1},
        {"Betti series invariant in k", criterion2},
        {"relative_model and its quotient, N=9", criterion3},
        {"emb_model Betti series N=7 and s_1..s_3", criterion4},
        {"tor_h4 dims, representative rs, probe, cross-check", criterion5},
        {"pontryagin_tilde over Q, F2, F3, F5 and pontryagin_full", criterion6},
        {"fiber_z2 and the F2 splitting convolution", criterion7},
        {"zp_dimension_match over F3, F5 equals the rational series", criterion8},
        {"splitting_check generator degrees", criterion9},
        {"property suites", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.ok;
        std::cout << fmt::format("{} criterion {:>2}: {}{}\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                                 o.detail.empty() ? "" : " (" + o.detail + ")");
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
