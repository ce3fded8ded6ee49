#include <algorithm>

#include <fmt/format.h>

#include "cdgacalc/amalgam/amalgam.hpp"
#include "cdgacalc/errors.hpp"
#include "cdgacalc/koszul/koszul.hpp"
#include "scenarios/context.hpp"

namespace cdgacalc::scenarios::detail {

namespace {

using graded::AlgebraSpec;
using graded::Element;

std::vector<std::string> strings(const Json& list)
{
    std::vector<std::string> out;
    for (const auto& s : list)
        out.push_back(s.get<std::string>());
    return out;
}

Json string_list(const std::vector<Element>& elements)
{
    Json out = Json::array();
    for (const auto& e : elements)
        out.push_back(e.to_string());
    return out;
}

std::vector<std::size_t> indices(const AlgebraSpec& a, const Json& names)
{
    std::vector<std::size_t> out;
    for (const auto& n : strings(names))
        out.push_back(a.index_of(n));
    return out;
}

std::vector<std::size_t> module_dims(const AlgebraSpec& a, const std::vector<std::size_t>& sub, int n_max)
{
    std::vector<std::size_t> dims;
    for (int n = 0; n <= n_max; ++n)
        dims.push_back(graded::module_quotient_right(a, sub, n));
    return dims;
}

// A factor of an amalgam: a presented algebra that must be
// finite-dimensional below its truncation.
amalgam::AugmentedAlgebra factor(const Context& ctx, const Json& obj)
{
    int truncation = 0;
    if (obj.contains("truncation")) {
        truncation = obj["truncation"].get<int>();
    } else {
        int top = 0, widest = 0;
        for (const auto& g : ctx.at(obj, "generators")) {
            top += g.at("degree").get<int>();
            widest = std::max(widest, g.at("degree").get<int>());
        }
        truncation = top + widest;
    }
    const AlgebraSpec a = ctx.algebra(obj, truncation);
    return amalgam::AugmentedAlgebra::from_quotient(a, ctx.relations(a, obj));
}

amalgam::AlgebraMap map_of(const Context& ctx, const amalgam::AugmentedAlgebra& c,
                           const amalgam::AugmentedAlgebra& target, const Json& images)
{
    std::map<std::string, Element> parsed;
    for (const auto& [name, expr] : images.items())
        parsed.emplace(name, ctx.parse(*target.presentation(), expr.get<std::string>()));
    return amalgam::extend_map(c, target, parsed);
}

Json blocks_of(const Json& obj)
{
    if (obj.contains("blocks"))
        return obj["blocks"];
    Json block;
    block["mode"] = obj.value("mode", std::string{"gc"});
    block["generators"] = obj["generators"];
    return Json::array({block});
}

void convolution_identity(Context& ctx)
{
    const Json& left = ctx.at("left");
    const Json& right = ctx.at("right");
    const AlgebraSpec la = ctx.algebra(left, ctx.n_max);
    const auto left_dims = graded::hilbert(la, ctx.relations(la, left), ctx.n_max);
    const AlgebraSpec ra = ctx.algebra(right, ctx.n_max);
    const auto right_dims = module_dims(ra, indices(ra, ctx.at(right, "sub_generators")), ctx.n_max);

    Json combined;
    combined["blocks"] = blocks_of(left);
    for (const auto& b : blocks_of(right))
        combined["blocks"].push_back(b);
    const AlgebraSpec ca = ctx.algebra(combined, ctx.n_max);
    graded::IdealSpec ideal = ctx.relations(ca, left);
    for (const auto& g : strings(ctx.at(right, "sub_generators")))
        ideal.right.push_back(Element::generator(ca, g));
    const auto dims = graded::hilbert(ca, ideal, ctx.n_max);

    ctx.verdict.series.emplace_back("left", left_dims);
    ctx.verdict.series.emplace_back("right", right_dims);
    ctx.compare_series("dims", dims);
    const auto conv = graded::convolve(left_dims, right_dims, ctx.n_max);
    for (int n = 0; n <= ctx.n_max; ++n)
        ctx.live_row("convolution", n, dims[static_cast<std::size_t>(n)], conv[static_cast<std::size_t>(n)], "derived",
                     "product of the left and right series");

    if (ctx.doc().contains("dominates")) {
        const Json& dom = ctx.doc()["dominates"];
        const auto other = ctx.at(dom, "preset").get<std::string>();
        const auto rational = builtin_series(other, "betti", ctx.n_max);
        std::optional<int> first;
        bool dominates = true;
        for (int n = 0; n <= ctx.n_max; ++n) {
            const auto i = static_cast<std::size_t>(n);
            dominates = dominates && dims[i] >= rational[i];
            if (!first && dims[i] > rational[i])
                first = n;
        }
        ctx.verdict.series.emplace_back(other + " betti", rational);
        ctx.tagged_row("dominates " + other, std::nullopt, dominates, true, dom);
        const int expected_first = ctx.at(dom, "first_strict_excess").get<int>();
        if (expected_first <= ctx.n_max)
            ctx.tagged_row("first strict excess", std::nullopt, first ? Json(*first) : Json(nullptr), expected_first, dom);
    }
}

// Dimensions of the subalgebra of A/I generated by the listed elements;
// "{i}" in a family expression runs over i = 1, 2, ... within range.
void subalgebra_identity(Context& ctx)
{
    const Json& obj = ctx.at("algebra");
    const AlgebraSpec a = ctx.algebra(obj, ctx.n_max);
    const graded::IdealSpec ideal = ctx.relations(a, obj);

    std::vector<Element> gens;
    for (const auto& g : strings(ctx.at("subalgebra_generators")))
        gens.push_back(ctx.parse(a, g));
    if (ctx.doc().contains("subalgebra_families")) {
        for (const auto& family : strings(ctx.doc()["subalgebra_families"])) {
            const auto pos = family.find("{i}");
            if (pos == std::string::npos)
                throw InputError("subalgebra family \"" + family + "\" has no {i}");
            for (int i = 1;; ++i) {
                std::string text = family;
                text.replace(pos, 3, std::to_string(i));
                const Element e = ctx.parse(a, text);
                if (e.truncation_lost())
                    break;
                gens.push_back(e);
            }
        }
    }

    std::vector<graded::QuotientSlice> slices;
    for (int n = 0; n <= ctx.n_max; ++n)
        slices.push_back(graded::quotient_basis(a, ideal, n));
    std::vector<std::vector<Element>> span(static_cast<std::size_t>(ctx.n_max) + 1, std::vector<Element>{});
    span[0].push_back(Element::one(a));
    std::vector<std::size_t> dims{1};
    for (int n = 1; n <= ctx.n_max; ++n) {
        const auto& slice = slices[static_cast<std::size_t>(n)];
        exact::SparseEchelon echelon(ctx.field);
        for (const auto& g : gens) {
            if (!g.degree() || *g.degree() > n)
                continue;
            for (const auto& s : span[static_cast<std::size_t>(n - *g.degree())]) {
                Element p = slice.normal_form(g * s);
                if (!p.is_zero() && echelon.insert(exact::to_sparse(slice.coordinates(p))))
                    span[static_cast<std::size_t>(n)].push_back(std::move(p));
            }
        }
        dims.push_back(echelon.rank());
    }
    ctx.compare_series("dims", dims);
    if (ctx.options.representatives)
        for (int n = 0; n <= ctx.n_max; ++n)
            for (const auto& e : span[static_cast<std::size_t>(n)])
                ctx.verdict.representatives[n].push_back(e.to_string());

    if (ctx.doc().contains("compare_with")) {
        const auto other = ctx.at(ctx.doc()["compare_with"], "preset").get<std::string>();
        const auto rational = builtin_series(other, "betti", ctx.n_max);
        ctx.verdict.series.emplace_back(other + " betti", rational);
        for (int n = 0; n <= ctx.n_max; ++n)
            ctx.live_row("matches " + other, n, dims[static_cast<std::size_t>(n)], rational[static_cast<std::size_t>(n)],
                         "derived", "rational Betti number computed in the same run");
    }
}

}  // namespace

void run_amalgam(Context& ctx)
{
    const auto a = factor(ctx, ctx.at("A"));
    const auto b = factor(ctx, ctx.at("B"));
    const auto c = factor(ctx, ctx.at("C"));
    auto phi_a = map_of(ctx, c, a, ctx.at("phi_A"));
    auto phi_b = map_of(ctx, c, b, ctx.at("phi_B"));
    const amalgam::AmalgamSpec spec(a, b, c, std::move(phi_a), std::move(phi_b));
    const auto result = amalgam::amalgam_hilbert(spec, ctx.n_max);
    ctx.compare_series("dims", result.dims);
    if (ctx.options.representatives)
        for (int n = 0; n <= ctx.n_max; ++n)
            for (const auto& w : result.representatives[static_cast<std::size_t>(n)])
                ctx.verdict.representatives[n].push_back(amalgam::word_string(spec, w));

    if (ctx.doc().contains("closed_form")) {
        const Json& closed = ctx.doc()["closed_form"];
        const AlgebraSpec q = ctx.algebra(closed, ctx.n_max);
        const auto dims = graded::hilbert(q, ctx.relations(q, closed), ctx.n_max);
        ctx.verdict.series.emplace_back("closed_form", dims);
        for (int n = 0; n <= ctx.n_max; ++n)
            ctx.live_row("closed form", n, result.dims[static_cast<std::size_t>(n)], dims[static_cast<std::size_t>(n)],
                         "derived", "Hilbert series of the closed-form quotient");
    }
}

void run_koszul(Context& ctx)
{
    koszul::KoszulComplexSpec spec;
    spec.field = ctx.field;
    spec.parameters = ctx.params;
    const Json& ring = ctx.at("ring");
    const AlgebraSpec ring_alg = ctx.algebra(ring, 1);
    spec.ring_generators = ring_alg.generators();
    if (ring.contains("relations"))
        spec.ring_relations = strings(ring["relations"]);
    for (const auto& e : ctx.at("exterior"))
        spec.exterior.push_back({ctx.at(e, "name").get<std::string>(), ctx.at(e, "external").get<int>(),
                                 ctx.at(e, "internal").get<int>(), ctx.at(e, "d").get<std::string>()});
    spec.external_floor = ctx.doc().value("external_floor", spec.external_floor);

    const koszul::KoszulComplex complex(spec, ctx.n_max);
    const auto violation = complex.check_d_squared(ctx.options.seed.value_or(1));
    ctx.live_row("d_squared", std::nullopt,
                 violation ? Json(violation->where + ": " + violation->value.to_string()) : Json("ok"), "ok", "immediate",
                 "generators and sampled slice elements");
    if (violation)
        return;

    const auto tor = complex.tor();
    ctx.compare_series("total_dims", tor.total_dims);
    for (int n = 0; n <= ctx.n_max; ++n) {
        const auto reps = tor.total_representatives(n);
        const auto dim = tor.total_dims[static_cast<std::size_t>(n)];
        std::string line = fmt::format("total degree {}: dim {}", n, dim);
        if (!reps.empty()) {
            std::vector<std::string> texts;
            for (const auto& r : reps)
                texts.push_back(r.to_string());
            line += fmt::format(", representative{} {}", reps.size() > 1 ? "s" : "", fmt::join(texts, "; "));
        }
        ctx.verdict.notes.push_back(line);
        if (ctx.options.representatives)
            for (const auto& r : reps)
                ctx.verdict.representatives[n].push_back(r.to_string());
        if (auto it = ctx.preset.expected.find("representatives"); it != ctx.preset.expected.end())
            for (const auto& e : it->second)
                if (e.index == n)
                    ctx.verdict.rows.push_back({"representatives", n, string_list(reps), e.value,
                                                std::string(to_string(e.provenance)), e.note,
                                                string_list(reps) == e.value ? Status::pass : Status::fail});
    }
    for (const auto& e : tor.euler)
        ctx.live_row("euler characteristic", e.internal, e.homology, e.chains, "immediate",
                     "alternating sum over external degree, chains vs homology");

    if (ctx.doc().contains("probes")) {
        for (const auto& probe : ctx.doc()["probes"]) {
            std::vector<Element> span;
            for (const auto& s : strings(ctx.at(probe, "span")))
                span.push_back(complex.parse(s));
            const auto closed = complex.closedness_probe(span);
            ctx.tagged_row("closed span of " + ctx.at(probe, "name").get<std::string>(), std::nullopt, string_list(closed),
                           ctx.at(probe, "closed"), probe);
        }
    }
    if (ctx.doc().contains("cross_check") && ctx.field.is_rational()) {
        const Json& cross = ctx.doc()["cross_check"];
        const auto other = ctx.at(cross, "preset").get<std::string>();
        const int through = std::min(ctx.n_max, ctx.at(cross, "through").get<int>());
        const auto betti = builtin_series(other, "betti", through);
        for (int n = 0; n <= through; ++n)
            ctx.live_row("matches " + other, n, tor.total_dims[static_cast<std::size_t>(n)],
                         betti[static_cast<std::size_t>(n)], "derived", "Betti number computed in the same run");
    }
}

void run_tensor_module(Context& ctx)
{
    const AlgebraSpec a = ctx.algebra(ctx.at("algebra"), ctx.n_max);
    ctx.compare_series("dims", module_dims(a, indices(a, ctx.at("sub_generators")), ctx.n_max));
}

void run_series_identity(Context& ctx)
{
    const auto identity = ctx.at("identity").get<std::string>();
    if (identity == "convolution")
        convolution_identity(ctx);
    else if (identity == "subalgebra")
        subalgebra_identity(ctx);
    else
        throw InputError("unknown series identity \"" + identity + "\"");
}

void run_splitting(Context& ctx)
{
    const Preset& model = find_preset(ctx.at("model").get<std::string>());
    std::vector<int> degrees;
    for (const auto& g : ctx.at(model.source, "generators"))
        degrees.push_back(g.at("degree").get<int>());
    std::vector<int> split;
    for (const char* key : {"base_degrees", "fiber_degrees"})
        for (const auto& d : ctx.at(key))
            split.push_back(d.get<int>());
    std::sort(degrees.begin(), degrees.end());
    std::sort(split.begin(), split.end());
    ctx.compare_value("generator_degrees", degrees);
    ctx.live_row("union of base and fiber degrees", std::nullopt, split, degrees, "immediate",
                 "multiset union against the model's generator degrees");
    ctx.verdict.notes.push_back(fmt::format("{{{}}} = {{{}}} u {{{}}}", fmt::join(degrees, ","),
                                            fmt::join(ctx.at("base_degrees").get<std::vector<int>>(), ","),
                                            fmt::join(ctx.at("fiber_degrees").get<std::vector<int>>(), ",")));
}

}  // namespace cdgacalc::scenarios::detail
