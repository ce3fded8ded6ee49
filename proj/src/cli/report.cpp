#include <algorithm>

#include <fmt/format.h>

#include "cdgacalc/cli/cli.hpp"

namespace cdgacalc::cli {

using scenarios::Json;
using scenarios::Status;
using scenarios::Verdict;

namespace {

std::string value_text(const Json& v)
{
    if (v.is_null())
        return "-";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? ", " : "") + value_text(v[i]);
        return out + "]";
    }
    return v.dump();
}

std::string join(const std::vector<std::size_t>& xs)
{
    return fmt::format("{}", fmt::join(xs, " "));
}

}  // namespace

std::string verdict_word(const Verdict& verdict)
{
    if (verdict.failures() > 0)
        return "FAIL";
    const bool compared = std::any_of(verdict.rows.begin(), verdict.rows.end(),
                                      [](const auto& r) { return r.status == Status::pass; });
    return compared ? "PASS" : "COMPUTED";
}

Json report_json(const Verdict& v)
{
    Json out;
    out["engine"] = "cdgacalc";
    out["engine_version"] = engine_version;
    out["preset"] = v.preset;
    out["kind"] = v.kind;
    out["description"] = v.description;
    out["anchor"] = v.anchor;
    out["field"] = v.field;
    out["k"] = v.k;
    out["max_degree"] = v.max_degree;
    out["series"] = Json::object();
    for (const auto& [name, values] : v.series)
        out["series"][name] = values;
    out["rows"] = Json::array();
    for (const auto& r : v.rows) {
        Json row;
        row["check"] = r.check;
        row["degree"] = r.index ? Json(*r.index) : Json(nullptr);
        row["computed"] = r.computed;
        row["expected"] = r.expected ? *r.expected : Json(nullptr);
        row["provenance"] = r.provenance.empty() ? Json(nullptr) : Json(r.provenance);
        row["note"] = r.note;
        row["status"] = scenarios::to_string(r.status);
        out["rows"].push_back(std::move(row));
    }
    out["notes"] = v.notes;
    if (!v.representatives.empty()) {
        out["representatives"] = Json::object();
        for (const auto& [deg, reps] : v.representatives)
            out["representatives"][std::to_string(deg)] = reps;
    }
    out["failures"] = v.failures();
    out["verdict"] = verdict_word(v);
    return out;
}

std::string report_text(const Verdict& v)
{
    std::string out;
    out += fmt::format("cdgacalc {}\n", engine_version);
    out += fmt::format("preset:     {} ({})\n", v.preset, v.kind);
    if (!v.description.empty())
        out += fmt::format("about:      {}\n", v.description);
    if (!v.anchor.empty())
        out += fmt::format("anchor:     {}\n", v.anchor);
    out += fmt::format("field:      {}\nk:          {}\nmax degree: {}\n", v.field, v.k, v.max_degree);
    if (!v.series.empty()) {
        out += "\n";
        for (const auto& [name, values] : v.series)
            out += fmt::format("{}: {}\n", name, join(values));
    }
    if (!v.notes.empty()) {
        out += "\n";
        for (const auto& n : v.notes)
            out += n + "\n";
    }
    if (!v.representatives.empty()) {
        out += "\n";
        for (const auto& [deg, reps] : v.representatives)
            out += fmt::format("representatives in degree {}: {}\n", deg, fmt::join(reps, "; "));
    }

    std::vector<std::array<std::string, 7>> table;
    table.push_back({"check", "degree", "computed", "expected", "provenance", "status", "note"});
    for (const auto& r : v.rows)
        table.push_back({r.check, r.index ? std::to_string(*r.index) : "-", value_text(r.computed),
                         r.expected ? value_text(*r.expected) : "-", r.provenance.empty() ? "-" : r.provenance,
                         std::string(scenarios::to_string(r.status)), r.note});
    std::array<std::size_t, 6> width{};
    for (const auto& row : table)
        for (std::size_t c = 0; c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    if (!v.rows.empty()) {
        out += "\n";
        for (const auto& row : table) {
            std::string line;
            for (std::size_t c = 0; c < width.size(); ++c)
                line += fmt::format("{:<{}}  ", row[c], width[c]);
            line += row[6];
            while (!line.empty() && line.back() == ' ')
                line.pop_back();
            out += line + "\n";
        }
    }
    out += fmt::format("\nverdict: {} ({} rows, {} failed)\n", verdict_word(v), v.rows.size(), v.failures());
    return out;
}

Json catalog_json()
{
    Json out = Json::array();
    for (const auto& p : scenarios::list_presets()) {
        Json e;
        e["name"] = p.name;
        e["kind"] = p.kind;
        e["description"] = p.description;
        e["anchor"] = p.anchor;
        out.push_back(std::move(e));
    }
    return out;
}

std::string catalog_text()
{
    std::string out;
    for (const auto& p : scenarios::list_presets())
        out += fmt::format("{:<20} {:<16} {}\n{:<20} {:<16} anchor: {}\n", p.name, p.kind, p.description, "", "", p.anchor);
    return out;
}

}  // namespace cdgacalc::cli
