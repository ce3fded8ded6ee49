#include <fmt/format.h>

#include "cdgacalc/errors.hpp"
#include "scenarios/context.hpp"

namespace cdgacalc::scenarios {

namespace detail {

const Json& Context::at(const Json& obj, std::string_view key) const
{
    if (!obj.is_object())
        throw InputError(fmt::format("preset {}: expected an object around \"{}\"", preset.name, key));
    auto it = obj.find(key);
    if (it == obj.end())
        throw InputError(fmt::format("preset {}: missing key \"{}\"", preset.name, key));
    return *it;
}

graded::Element Context::parse(const graded::AlgebraSpec& a, const std::string& text,
                               const graded::Parameters& extra) const
{
    graded::Parameters all = params;
    for (const auto& [k, v] : extra)
        all.insert_or_assign(k, v);
    try {
        return graded::parse_element(a, text, all);
    } catch (const graded::ParseError& e) {
        if (!preset.text.empty()) {
            const auto pos = preset.text.find(Json(text).dump());
            if (pos != std::string::npos)
                throw InputError(fmt::format("{}: {} in expression \"{}\"",
                                             location(preset.text, pos + e.column()), e.detail(), text));
        }
        throw;
    }
}

graded::AlgebraSpec Context::algebra(const Json& obj, int truncation) const
{
    auto generators = [&](const Json& list) {
        if (!list.is_array())
            throw InputError(fmt::format("preset {}: \"generators\" must be an array", preset.name));
        std::vector<graded::Generator> out;
        for (const auto& g : list) {
            graded::Generator gen;
            gen.name = at(g, "name").get<std::string>();
            gen.degree = at(g, "degree").get<int>();
            if (g.contains("flavor"))
                gen.flavor = graded::parse_flavor(g["flavor"].get<std::string>());
            out.push_back(std::move(gen));
        }
        return out;
    };
    std::vector<graded::BlockSpec> blocks;
    if (obj.contains("blocks")) {
        for (const auto& b : obj["blocks"])
            blocks.push_back({graded::parse_mode(b.value("mode", std::string{"gc"})), generators(at(b, "generators"))});
    } else {
        blocks.push_back({graded::parse_mode(obj.value("mode", std::string{"gc"})), generators(at(obj, "generators"))});
    }
    return graded::AlgebraSpec::from_blocks(field, std::move(blocks), truncation);
}

graded::IdealSpec Context::relations(const graded::AlgebraSpec& a, const Json& obj) const
{
    graded::IdealSpec ideal;
    if (obj.contains("relations"))
        for (const auto& r : obj["relations"])
            ideal.two_sided.push_back(parse(a, r.get<std::string>()));
    ideal.validate(a);
    return ideal;
}

namespace {

Status judge(const Json& computed, const Json& expected)
{
    return computed == expected ? Status::pass : Status::fail;
}

}  // namespace

void Context::compare_series(const std::string& key, const std::vector<std::size_t>& series) const
{
    verdict.series.emplace_back(key, series);
    auto it = preset.expected.find(key);
    for (std::size_t n = 0; n < series.size(); ++n) {
        Row row{key, static_cast<int>(n), Json(series[n]), std::nullopt, "", "", Status::info};
        if (it != preset.expected.end()) {
            for (const auto& e : it->second) {
                if (e.index == static_cast<int>(n)) {
                    row.expected = e.value;
                    row.provenance = to_string(e.provenance);
                    row.note = e.note;
                    row.status = judge(row.computed, e.value);
                }
            }
        }
        verdict.rows.push_back(std::move(row));
    }
}

void Context::compare_value(const std::string& key, const Json& computed) const
{
    auto it = preset.expected.find(key);
    bool matched = false;
    if (it != preset.expected.end()) {
        for (const auto& e : it->second) {
            if (e.index)
                continue;
            matched = true;
            verdict.rows.push_back(
                {key, std::nullopt, computed, e.value, std::string(to_string(e.provenance)), e.note, judge(computed, e.value)});
        }
    }
    if (!matched)
        verdict.rows.push_back({key, std::nullopt, computed, std::nullopt, "", "", Status::info});
}

void Context::live_row(const std::string& check, std::optional<int> index, Json computed, Json expected,
                       std::string provenance, std::string note) const
{
    const Status s = judge(computed, expected);
    verdict.rows.push_back({check, index, std::move(computed), std::move(expected), std::move(provenance), std::move(note), s});
}

void Context::tagged_row(const std::string& check, std::optional<int> index, Json computed, Json expected,
                         const Json& tagged) const
{
    live_row(check, index, std::move(computed), std::move(expected), tagged.at("provenance").get<std::string>(),
             tagged.value("note", std::string{}));
}

std::vector<std::size_t> builtin_series(const std::string& preset, const std::string& series, int n_max)
{
    RunOptions opts;
    opts.field = exact::FieldSpec::rationals();
    opts.max_degree = n_max;
    const Verdict v = run_preset(preset, opts);
    for (const auto& [name, values] : v.series)
        if (name == series)
            return values;
    throw InputError(fmt::format("preset {} reports no series \"{}\"", preset, series));
}

}  // namespace detail

namespace {

graded::Parameters parameters(exact::FieldSpec field, const std::string& k_text)
{
    const exact::Scalar k = graded::parse_scalar(field, k_text);
    if (k.is_zero())
        throw InputError(field.is_rational() ? "k must be nonzero"
                                             : fmt::format("k = {} vanishes in {}", k_text, field.name()));
    return {{"k", k}};
}

Verdict begin(const Preset& preset, exact::FieldSpec field, const graded::Parameters& params, int n_max)
{
    Verdict v;
    v.preset = preset.name;
    v.kind = to_string(preset.kind);
    v.description = preset.description;
    v.anchor = preset.anchor;
    v.field = field.name();
    v.k = params.at("k").to_string();
    v.max_degree = n_max;
    return v;
}

exact::FieldSpec resolve_field(const Preset& preset, const RunOptions& options)
{
    const exact::FieldSpec field = options.field.value_or(preset.field);
    if (!preset.allows(field)) {
        std::string allowed;
        for (const auto& f : preset.fields)
            allowed += (allowed.empty() ? "" : ", ") + f;
        throw InputError(fmt::format("preset {} does not support field {} (allowed: {})", preset.name, field.name(), allowed));
    }
    return field;
}

}  // namespace

Verdict run(const Preset& preset, const RunOptions& options)
{
    const exact::FieldSpec field = resolve_field(preset, options);
    const graded::Parameters params = parameters(field, options.k);
    const int n_max = options.max_degree.value_or(preset.truncation);
    if (n_max < 0)
        throw InputError("max degree must be non-negative");

    Verdict verdict = begin(preset, field, params, n_max);
    detail::Context ctx{preset, field, params, n_max, options, verdict};
    switch (preset.kind) {
    case Kind::cdga: detail::run_cdga(ctx); break;
    case Kind::amalgam: detail::run_amalgam(ctx); break;
    case Kind::koszul: detail::run_koszul(ctx); break;
    case Kind::tensor_module: detail::run_tensor_module(ctx); break;
    case Kind::series_identity: detail::run_series_identity(ctx); break;
    case Kind::splitting: detail::run_splitting(ctx); break;
    }
    return verdict;
}

Verdict run_preset(std::string_view name, const RunOptions& options)
{
    return run(find_preset(name), options);
}

Verdict s_n_cocycle_check(int n_max, const RunOptions& options)
{
    if (n_max < 1)
        throw InputError("s_n check needs n_max >= 1");
    const Preset& preset = find_preset("emb_model");
    const exact::FieldSpec field = resolve_field(preset, options);
    const graded::Parameters params = parameters(field, options.k);
    Verdict verdict = begin(preset, field, params, 4 * n_max + 2);
    verdict.preset = "s_n_cocycle_check";
    detail::Context ctx{preset, field, params, verdict.max_degree, options, verdict};
    detail::check_cocycle_family(ctx, preset.source.at("cocycle_family"), n_max);
    return verdict;
}

}  // namespace cdgacalc::scenarios
