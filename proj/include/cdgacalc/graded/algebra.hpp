#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdgacalc/exact/field.hpp"

namespace cdgacalc::graded {

using exact::FieldSpec;

enum class Mode { graded_commutative, tensor };
enum class Flavor { koszul, exterior, divided_power };

std::string_view to_string(Mode m);
std::string_view to_string(Flavor f);
Mode parse_mode(std::string_view text);
Flavor parse_flavor(std::string_view text);

struct Generator {
    std::string name;
    int degree = 1;
    Flavor flavor = Flavor::koszul;
};

/// A run of generators sharing one multiplication rule.  A product
/// algebra is a list of blocks that graded-commute past each other.
struct BlockSpec {
    Mode mode = Mode::graded_commutative;
    std::vector<Generator> generators;
};

class AlgebraSpec;

/// A basis monomial of the free algebra.  Stored as a letter word in
/// canonical form: blocks in order; inside a commutative block letters
/// are sorted, an exponent is a repeated letter, and a divided-power
/// element x_i is i copies of x's letter.  Tensor blocks keep the word.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<std::uint16_t> letters, int degree)
        : letters_(std::move(letters)), degree_(degree) {}

    const std::vector<std::uint16_t>& letters() const { return letters_; }
    int degree() const { return degree_; }
    bool is_unit() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    /// Graded order: degree first, then lexicographic on letters.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.degree_ <=> b.degree_; c != 0)
            return c;
        return a.letters_ <=> b.letters_;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.letters_ == b.letters_; }

private:
    std::vector<std::uint16_t> letters_;
    int degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Basis of one degree, with a reverse index.
struct DegreeBasis {
    std::vector<Monomial> monomials;
    /// Index of m in `monomials` (binary search; the list is sorted).
    std::optional<std::size_t> position(const Monomial& m) const;
};

/// A presented free graded algebra truncated at degree N.  Copies share
/// one immutable description; two handles denote the same algebra iff
/// they were produced by the same construction call.
class AlgebraSpec {
public:
    static AlgebraSpec commutative(FieldSpec field, std::vector<Generator> gens, int truncation);
    static AlgebraSpec tensor(FieldSpec field, std::vector<Generator> gens, int truncation);
    static AlgebraSpec from_blocks(FieldSpec field, std::vector<BlockSpec> blocks, int truncation);

    FieldSpec field() const;
    int truncation() const;
    const std::vector<Generator>& generators() const;
    const std::vector<BlockSpec>& blocks() const;
    std::size_t block_of(std::size_t generator) const;
    std::size_t block_begin(std::size_t block) const;
    /// Mode of the single block, or tensor if any block is a tensor block.
    Mode mode() const;
    bool has_tensor_block() const;

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws InputError

    /// Same presentation at another truncation (a distinct algebra).
    AlgebraSpec with_truncation(int truncation) const;

    int letter_degree(std::uint16_t letter) const;
    /// Monomial for a single generator.
    Monomial generator_monomial(std::size_t generator) const;
    /// Builds a monomial from letters that are already canonical.
    Monomial make_monomial(std::vector<std::uint16_t> letters) const;

    /// Complete canonically ordered basis of degree n of the free algebra.
    /// Throws DegreeError for n outside 0..truncation.
    const DegreeBasis& basis(int n) const;
    std::size_t dimension(int n) const { return basis(n).monomials.size(); }

    std::string monomial_string(const Monomial& m) const;

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) { return a.impl_ == b.impl_; }

private:
    struct Impl;
    explicit AlgebraSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Graded tensor product; blocks of a precede blocks of b.  The truncation
/// is the smaller of the two.  Throws AlgebraError on field mismatch.
AlgebraSpec tensor_product(const AlgebraSpec& a, const AlgebraSpec& b);

}  // namespace cdgacalc::graded
