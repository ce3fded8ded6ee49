#pragma once

#include <iosfwd>
#include <string>

#include "cdgacalc/scenarios/scenarios.hpp"

namespace cdgacalc::cli {

inline constexpr const char* engine_version = "0.1.0";

enum class Format { text, json };

/// Report as JSON in a fixed key order (see docs/report.schema.json).
scenarios::Json report_json(const scenarios::Verdict& verdict);
std::string report_text(const scenarios::Verdict& verdict);

/// Overall verdict word: PASS, FAIL, or COMPUTED when nothing was compared.
std::string verdict_word(const scenarios::Verdict& verdict);

scenarios::Json catalog_json();
std::string catalog_text();

/// Entry point.  Writes the report to `out` in one piece, diagnostics to
/// `err`, and returns 0 (pass or nothing compared), 1 (a comparison
/// failed) or 2 (input error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cdgacalc::cli
