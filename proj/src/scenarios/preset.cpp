#include <algorithm>

#include <fmt/format.h>

#include "cdgacalc/errors.hpp"
#include "scenarios/context.hpp"

namespace cdgacalc::scenarios {

namespace {

constexpr int format_version = 1;

const Json& require(const Json& obj, std::string_view key, std::string_view where)
{
    if (!obj.is_object())
        throw InputError(fmt::format("{} must be an object", where));
    auto it = obj.find(key);
    if (it == obj.end())
        throw InputError(fmt::format("{}: missing key \"{}\"", where, key));
    return *it;
}

std::string require_string(const Json& obj, std::string_view key, std::string_view where)
{
    const Json& v = require(obj, key, where);
    if (!v.is_string())
        throw InputError(fmt::format("{}: \"{}\" must be a string", where, key));
    return v.get<std::string>();
}

void require_tag(const Json& obj, std::string_view where)
{
    if (!obj.is_object() || !obj.contains("provenance") || !obj["provenance"].is_string())
        throw InputError(fmt::format("{}: expectation without provenance tag", where));
    parse_provenance(obj["provenance"].get<std::string>());
}

// Expectations stored inside the payload must be tagged as well.
void check_payload_tags(const Json& doc, const std::string& name)
{
    for (const char* key : {"cup_checks", "probes"}) {
        if (doc.contains(key)) {
            if (!doc[key].is_array())
                throw InputError(fmt::format("preset {}: \"{}\" must be an array", name, key));
            for (const auto& item : doc[key])
                require_tag(item, fmt::format("preset {}: {}", name, key));
        }
    }
    for (const char* key : {"cocycle_family", "dominates"}) {
        if (doc.contains(key))
            require_tag(doc[key], fmt::format("preset {}: {}", name, key));
    }
}

}  // namespace

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::literature: return "literature";
    case Provenance::derived: return "derived";
    case Provenance::immediate: return "immediate";
    }
    return "?";
}

Provenance parse_provenance(std::string_view text)
{
    if (text == "literature")
        return Provenance::literature;
    if (text == "derived")
        return Provenance::derived;
    if (text == "immediate")
        return Provenance::immediate;
    throw InputError(fmt::format("unknown provenance tag \"{}\"", text));
}

std::string_view to_string(Kind k)
{
    switch (k) {
    case Kind::cdga: return "cdga";
    case Kind::amalgam: return "amalgam";
    case Kind::koszul: return "koszul";
    case Kind::tensor_module: return "tensor-module";
    case Kind::series_identity: return "series-identity";
    case Kind::splitting: return "splitting";
    }
    return "?";
}

Kind parse_kind(std::string_view text)
{
    for (Kind k : {Kind::cdga, Kind::amalgam, Kind::koszul, Kind::tensor_module, Kind::series_identity,
                   Kind::splitting})
        if (to_string(k) == text)
            return k;
    throw InputError(fmt::format("unknown kind \"{}\"", text));
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "FAIL";
    case Status::info: return "info";
    }
    return "?";
}

bool Preset::allows(exact::FieldSpec f) const
{
    for (const auto& pattern : fields) {
        if (pattern == "Fp:*" ? !f.is_rational() : exact::FieldSpec::parse(pattern) == f)
            return true;
    }
    return false;
}

Preset parse_preset(const Json& doc)
{
    if (!doc.is_object())
        throw InputError("spec file must contain a JSON object");
    const Json& version = require(doc, "format_version", "spec file");
    if (!version.is_number_integer() || version.get<int>() != format_version)
        throw InputError(fmt::format("unsupported format_version {} (expected {})", version.dump(), format_version));

    Preset p;
    p.name = require_string(doc, "name", "spec file");
    const std::string where = "preset " + p.name;
    p.kind = parse_kind(require_string(doc, "kind", where));
    p.description = doc.value("description", std::string{});
    p.anchor = doc.value("anchor", std::string{});
    p.field = exact::FieldSpec::parse(doc.value("field", std::string{"Q"}));
    if (doc.contains("fields")) {
        for (const auto& f : doc["fields"]) {
            if (!f.is_string())
                throw InputError(where + ": \"fields\" must list strings");
            const auto s = f.get<std::string>();
            if (s != "Fp:*")
                exact::FieldSpec::parse(s);
            p.fields.push_back(s);
        }
    } else {
        p.fields.push_back(p.field.name());
    }
    if (!p.allows(p.field))
        throw InputError(where + ": default field is not among the allowed fields");
    if (doc.contains("truncation")) {
        if (!doc["truncation"].is_number_integer() || doc["truncation"].get<int>() < 0)
            throw InputError(where + ": \"truncation\" must be a non-negative integer");
        p.truncation = doc["truncation"].get<int>();
    }
    if (doc.contains("expected")) {
        const Json& exp = doc["expected"];
        if (!exp.is_object())
            throw InputError(where + ": \"expected\" must be an object");
        for (const auto& [key, entries] : exp.items()) {
            if (!entries.is_array())
                throw InputError(fmt::format("{}: expected.{} must be an array", where, key));
            auto& list = p.expected[key];
            for (const auto& e : entries) {
                const std::string at = fmt::format("{}: expected.{}", where, key);
                require_tag(e, at);
                ExpectedEntry entry;
                entry.value = require(e, "value", at);
                entry.provenance = parse_provenance(e["provenance"].get<std::string>());
                entry.note = e.value("note", std::string{});
                if (e.contains("degree")) {
                    if (!e["degree"].is_number_integer())
                        throw InputError(at + ": \"degree\" must be an integer");
                    entry.index = e["degree"].get<int>();
                }
                list.push_back(std::move(entry));
            }
        }
    }
    check_payload_tags(doc, p.name);
    p.source = doc;
    return p;
}

Preset parse_preset_text(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw InputError(fmt::format("malformed spec file at {}: {}", detail::location(text, e.byte == 0 ? 0 : e.byte - 1),
                                     e.what()));
    }
    Preset p = parse_preset(doc);
    p.text = std::string(text);
    return p;
}

const std::vector<Preset>& builtin_presets()
{
    static const std::vector<Preset> presets = [] {
        std::vector<Preset> out;
        for (auto text : detail::preset_sources)
            out.push_back(parse_preset_text(text));
        return out;
    }();
    return presets;
}

const Preset& find_preset(std::string_view name)
{
    for (const auto& p : builtin_presets())
        if (p.name == name)
            return p;
    throw InputError(fmt::format("unknown preset \"{}\"", name));
}

std::vector<PresetSummary> list_presets()
{
    std::vector<PresetSummary> out;
    for (const auto& p : builtin_presets())
        out.push_back({p.name, std::string(to_string(p.kind)), p.description, p.anchor});
    return out;
}

bool Verdict::pass() const
{
    return failures() == 0;
}

std::size_t Verdict::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.status == Status::fail; }));
}

namespace detail {

std::string location(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return fmt::format("line {}, column {}", line, column);
}

}  // namespace detail

}  // namespace cdgacalc::scenarios
