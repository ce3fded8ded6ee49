#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cdgacalc/exact/field.hpp"

namespace cdgacalc::scenarios {

using Json = nlohmann::ordered_json;

enum class Provenance { literature, derived, immediate };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

enum class Kind { cdga, amalgam, koszul, tensor_module, series_identity, splitting };

std::string_view to_string(Kind k);
Kind parse_kind(std::string_view text);

/// One expected value.  `index` is the degree for per-degree tables.
struct ExpectedEntry {
    std::optional<int> index;
    Json value;
    Provenance provenance = Provenance::derived;
    std::string note;
};

/// A declarative scenario: a spec file with a name, a kind-specific
/// payload and an expected table whose entries all carry provenance.
struct Preset {
    std::string name;
    Kind kind = Kind::cdga;
    std::string description;
    std::string anchor;
    exact::FieldSpec field;
    std::vector<std::string> fields;  // "Q", "Fp:<p>" or "Fp:*"
    int truncation = 12;
    std::map<std::string, std::vector<ExpectedEntry>> expected;
    Json source;       // the complete document, key order preserved
    std::string text;  // original text, used to locate expression errors

    bool allows(exact::FieldSpec f) const;
};

/// Validates the document shape and the expected table.  Throws
/// InputError for an unsupported format_version, a missing key or an
/// expected entry without provenance.
Preset parse_preset(const Json& document);

/// Parses JSON text; syntax errors become InputError with line and column.
Preset parse_preset_text(std::string_view text);

/// Built-in presets in catalog order.
const std::vector<Preset>& builtin_presets();

/// Throws InputError for an unknown name.
const Preset& find_preset(std::string_view name);

struct PresetSummary {
    std::string name;
    std::string kind;
    std::string description;
    std::string anchor;
};

std::vector<PresetSummary> list_presets();

struct RunOptions {
    std::optional<exact::FieldSpec> field;
    std::string k = "1";
    std::optional<int> max_degree;
    bool representatives = false;
    std::optional<std::uint64_t> seed;
};

enum class Status { pass, fail, info };

std::string_view to_string(Status s);

/// One comparison.  Rows without an expectation are informational.
struct Row {
    std::string check;
    std::optional<int> index;
    Json computed;
    std::optional<Json> expected;
    std::string provenance;
    std::string note;
    Status status = Status::info;
};

struct Verdict {
    std::string preset;
    std::string kind;
    std::string description;
    std::string anchor;
    std::string field;
    std::string k;
    int max_degree = 0;
    /// Named degreewise series, e.g. {"betti", [1, 0, 2, ...]}.
    std::vector<std::pair<std::string, std::vector<std::size_t>>> series;
    std::vector<Row> rows;
    /// Human-readable findings, e.g. a representative per degree.
    std::vector<std::string> notes;
    /// Representatives per degree, filled when requested.
    std::map<int, std::vector<std::string>> representatives;

    bool pass() const;
    std::size_t failures() const;
};

/// Runs a preset.  Throws InputError for an illegal field, k = 0 (or
/// k = 0 in F_p), a negative degree, or an invalid payload.
Verdict run(const Preset& preset, const RunOptions& options);
Verdict run_preset(std::string_view name, const RunOptions& options);

/// d(s_n) = 0 and s_n not exact for 1 <= n <= n_max in emb_model, with
/// s_n = h^(n-1)(h dab + n k e g).  Uses truncation 4 n_max + 3.
Verdict s_n_cocycle_check(int n_max, const RunOptions& options = {});

}  // namespace cdgacalc::scenarios
