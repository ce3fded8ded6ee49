#include <random>

#include <fmt/format.h>

#include "cdgacalc/cdga/cohomology.hpp"
#include "cdgacalc/cdga/constructions.hpp"
#include "cdgacalc/errors.hpp"
#include "scenarios/context.hpp"

namespace cdgacalc::scenarios::detail {

namespace {

using cdga::Differential;
using graded::AlgebraSpec;
using graded::Element;

Differential differential(const Context& ctx, const AlgebraSpec& a)
{
    std::map<std::string, Element> images;
    if (ctx.doc().contains("differential"))
        for (const auto& [name, expr] : ctx.doc()["differential"].items())
            images.emplace(name, ctx.parse(a, expr.get<std::string>()));
    for (const auto& [name, image] : images)
        a.index_of(name);
    return Differential(a, images);
}

void require_d_squared(const Context& ctx, const Differential& d)
{
    if (auto v = cdga::check_d_squared(d))
        throw InputError(fmt::format("preset {}: d(d({})) = {} is not zero", ctx.preset.name, v->generator,
                                     v->value.to_string()));
}

Element power(const Element& x, int e)
{
    Element out = Element::one(x.algebra());
    for (int i = 0; i < e; ++i)
        out = out * x;
    return out;
}

Element random_element(const AlgebraSpec& a, int n, std::mt19937_64& rng)
{
    const auto& basis = a.basis(n).monomials;
    Element u(a);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (const auto& m : basis)
        if (int c = coeff(rng); c != 0 && rng() % 2 == 0)
            u.add_term(m, exact::Scalar::from_int(a.field(), c));
    return u;
}

// Leibniz rule and d^2 = 0 on random pairs of homogeneous elements.
void sample_identities(Context& ctx, const Differential& d, std::uint64_t seed)
{
    const AlgebraSpec& a = d.algebra();
    const int top = a.truncation() - 1;  // |u| + |v| + 1 must stay representable
    std::mt19937_64 rng(seed);
    constexpr int samples = 64;
    int leibniz = 0, square = 0;
    for (int s = 0; s < samples; ++s) {
        const int p = static_cast<int>(rng() % static_cast<std::uint64_t>(top + 1));
        const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(top - p + 1));
        const Element u = random_element(a, p, rng);
        const Element v = random_element(a, q, rng);
        Element rhs = d.apply(u) * v;
        Element second = u * d.apply(v);
        rhs += (p % 2 == 0) ? second : -second;
        if (d.apply(u * v) == rhs)
            ++leibniz;
        if (d.apply(d.apply(u)).is_zero())
            ++square;
    }
    const std::string note = fmt::format("{} random samples, seed {}", samples, seed);
    ctx.live_row("sampled_leibniz", std::nullopt, leibniz, samples, "immediate", note);
    ctx.live_row("sampled_d_squared", std::nullopt, square, samples, "immediate", note);
}

void cup_checks(Context& ctx, const cdga::CohomologyReport& report)
{
    const AlgebraSpec& a = report.algebra();
    for (const auto& check : ctx.doc()["cup_checks"]) {
        const auto left_text = ctx.at(check, "left").get<std::string>();
        const auto right_text = ctx.at(check, "right").get<std::string>();
        const Element left = ctx.parse(a, left_text);
        const Element right = ctx.parse(a, right_text);
        if (left.truncation_lost() || right.truncation_lost())
            continue;
        if (!left.degree() || !right.degree())
            throw InputError("cup check operands must be nonzero and homogeneous");
        const int n = *left.degree() + *right.degree();
        if (n > ctx.n_max)
            continue;
        report.express_class(left, *left.degree());
        report.express_class(right, *right.degree());
        const bool zero = report.is_boundary(left * right, n);
        ctx.tagged_row(fmt::format("cup [{}][{}] = 0", left_text, right_text), n, zero,
                       ctx.at(check, "expect_zero").get<bool>(), check);
    }
}

void quotient(Context& ctx, const Differential& d)
{
    std::vector<std::string> names;
    for (const auto& n : ctx.at(ctx.doc()["quotient"], "by"))
        names.push_back(n.get<std::string>());
    auto [qa, qd] = cdga::quotient_cdga(d, names);
    bool zero = true;
    for (std::size_t g = 0; g < qa.generators().size(); ++g)
        zero = zero && qd.image(g).is_zero();
    std::string gens;
    for (const auto& g : qa.generators())
        gens += (gens.empty() ? "" : ", ") + g.name;
    ctx.verdict.notes.push_back(fmt::format("quotient by ({}): generators {}{}", fmt::join(names, ", "), gens,
                                            zero ? ", zero differential" : ""));
    ctx.compare_value("quotient_zero_differential", zero);
    ctx.compare_series("quotient_betti", cdga::cohomology(qd, ctx.n_max).betti());
}

}  // namespace

void check_cocycle_family(Context& ctx, const Json& family, int n_max)
{
    const auto name = ctx.at(family, "name").get<std::string>();
    const auto base = ctx.at(family, "power_of").get<std::string>();
    const auto body = ctx.at(family, "body").get<std::string>();
    const AlgebraSpec a = ctx.algebra(ctx.doc(), 4 * n_max + 3);
    const Differential d = differential(ctx, a);
    require_d_squared(ctx, d);
    const Element h = ctx.parse(a, base);

    for (int n = 1; n <= n_max; ++n) {
        const graded::Parameters extra{{"n", exact::Scalar::from_int(ctx.field, n)}};
        const Element s = power(h, n - 1) * ctx.parse(a, body, extra);
        if (s.truncation_lost() || !s.degree())
            throw InputError(fmt::format("{}_{} is zero or exceeds the truncation", name, n));
        const int deg = *s.degree();
        const bool closed = d.apply(s).is_zero();

        // Not exact: s is outside the column span of d_{deg-1}.
        const auto matrix = cdga::differential_matrix(d, deg - 1).transposed();
        exact::SparseEchelon boundaries(ctx.field);
        for (std::size_t r = 0; r < matrix.rows(); ++r)
            boundaries.insert(exact::to_sparse(matrix.row(r)));
        exact::SparseVector target;
        const auto& basis = a.basis(deg);
        for (const auto& [m, c] : s.terms())
            target.emplace_back(*basis.position(m), c);
        const bool exact_form = closed && boundaries.contains(target);

        const std::string label = fmt::format("{}_{}", name, n);
        ctx.tagged_row(label + " closed", deg, closed, true, family);
        ctx.tagged_row(label + " not exact", deg, closed && !exact_form, true, family);
        ctx.verdict.notes.push_back(fmt::format("{} = {} (degree {}): {}", label, s.to_string(), deg,
                                                closed ? (exact_form ? "exact" : "closed, not exact") : "not closed"));
    }
}

void run_cdga(Context& ctx)
{
    const AlgebraSpec a = ctx.algebra(ctx.doc(), ctx.n_max + 1);
    const Differential d = differential(ctx, a);
    require_d_squared(ctx, d);

    const auto report = cdga::cohomology(d, ctx.n_max);
    ctx.compare_series("betti", report.betti());
    if (ctx.options.representatives)
        for (const auto& deg : report.degrees())
            for (const auto& r : deg.representatives)
                ctx.verdict.representatives[deg.degree].push_back(r.to_string());

    if (ctx.doc().contains("cup_checks"))
        cup_checks(ctx, report);
    if (ctx.doc().contains("candidates")) {
        cdga::PresentationTarget target{report.betti(), {}};
        for (const auto& c : ctx.doc()["candidates"])
            if (Element e = ctx.parse(a, c.get<std::string>()); !e.truncation_lost())
                target.candidates.push_back(std::move(e));
        const auto pv = cdga::compare_presentation(report, target, ctx.n_max);
        if (!pv.pass)
            ctx.verdict.notes.push_back(pv.message);
        ctx.compare_value("candidates_generate", pv.pass);
    }
    if (ctx.doc().contains("quotient"))
        quotient(ctx, d);
    if (ctx.doc().contains("cocycle_family")) {
        const Json& family = ctx.doc()["cocycle_family"];
        check_cocycle_family(ctx, family, ctx.at(family, "n_max").get<int>());
    }
    if (ctx.options.seed)
        sample_identities(ctx, d, *ctx.options.seed);
}

}  // namespace cdgacalc::scenarios::detail
