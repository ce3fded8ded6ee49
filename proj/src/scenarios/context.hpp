#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cdgacalc/graded/ideal.hpp"
#include "cdgacalc/graded/parser.hpp"
#include "cdgacalc/scenarios/scenarios.hpp"

namespace cdgacalc::scenarios::detail {

/// Embedded preset documents, generated at build time.
extern const std::vector<std::string_view> preset_sources;

/// "line L, column C" of a 0-based byte offset.
std::string location(std::string_view text, std::size_t offset);

/// Everything a kind runner needs: the preset, the resolved options and
/// the verdict under construction.
struct Context {
    const Preset& preset;
    exact::FieldSpec field;
    graded::Parameters params;
    int n_max;
    const RunOptions& options;
    Verdict& verdict;

    const Json& doc() const { return preset.source; }
    const Json& at(const Json& obj, std::string_view key) const;
    const Json& at(std::string_view key) const { return at(doc(), key); }

    /// Parses an expression; syntax errors are reported at their position
    /// in the spec file when the preset came from text.
    graded::Element parse(const graded::AlgebraSpec& a, const std::string& text,
                          const graded::Parameters& extra = {}) const;

    /// Builds {mode, generators} or {blocks: [...]} at the given truncation.
    graded::AlgebraSpec algebra(const Json& obj, int truncation) const;
    graded::IdealSpec relations(const graded::AlgebraSpec& a, const Json& obj) const;

    /// Adds one row per degree 0..n_max for `series`, compared against the
    /// expected table `key` when it has an entry for that degree.
    void compare_series(const std::string& key, const std::vector<std::size_t>& series) const;
    /// Compares a single value against every unindexed entry of `key`.
    void compare_value(const std::string& key, const Json& computed) const;
    /// Row against an expectation computed during the run.
    void live_row(const std::string& check, std::optional<int> index, Json computed, Json expected,
                  std::string provenance, std::string note) const;
    /// Row against an expectation stored next to the payload.
    void tagged_row(const std::string& check, std::optional<int> index, Json computed, Json expected,
                    const Json& tagged) const;
};

/// Runs another built-in preset over Q with k = 1 and returns a series.
std::vector<std::size_t> builtin_series(const std::string& preset, const std::string& series, int n_max);

void run_cdga(Context& ctx);
void run_amalgam(Context& ctx);
void run_koszul(Context& ctx);
void run_tensor_module(Context& ctx);
void run_series_identity(Context& ctx);
void run_splitting(Context& ctx);

/// The s_n-style family check shared by cdga presets and
/// s_n_cocycle_check.
void check_cocycle_family(Context& ctx, const Json& family, int n_max);

}  // namespace cdgacalc::scenarios::detail
