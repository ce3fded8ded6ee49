#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdgacalc/cdga/cohomology.hpp"

namespace cdgacalc::cdga {

/// One bracket [b_i, b_j] = value, with value linear in generators of
/// degree |b_i| + |b_j| - 1.
struct WhiteheadEntry {
    std::string left;
    std::string right;
    Element value;
};

struct WhiteheadTable {
    std::vector<WhiteheadEntry> entries;
};

/// Quadratic differential d b_k = sum over ordered pairs (i, j) of
/// <b_k, [b_i, b_j]> b_i b_j.  A bracket missing from the table in one
/// orientation is filled in by [b_j, b_i] = (-1)^{|b_i||b_j|} [b_i, b_j].
Differential duality_differential(const AlgebraSpec& a, const WhiteheadTable& table);

/// Quotient of (A, d) by the ideal generated by the named generators.
/// Throws AlgebraError unless d maps the ideal into itself.
std::pair<AlgebraSpec, Differential> quotient_cdga(const Differential& d,
                                                   const std::vector<std::string>& generators);

struct PresentationTarget {
    std::vector<std::size_t> series;
    /// Optional cocycles that should generate cohomology as an algebra.
    std::vector<Element> candidates;
};

struct PresentationVerdict {
    bool pass = true;
    std::optional<int> first_mismatch;
    std::string message;
};

PresentationVerdict compare_presentation(const CohomologyReport& report, const PresentationTarget& target,
                                         int n_max);

}  // namespace cdgacalc::cdga
