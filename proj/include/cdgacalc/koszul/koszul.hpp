#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdgacalc/cdga/differential.hpp"
#include "cdgacalc/graded/ideal.hpp"
#include "cdgacalc/graded/parser.hpp"

namespace cdgacalc::koszul {

using cdga::Differential;
using graded::AlgebraSpec;
using graded::Element;
using graded::Monomial;

/// Exterior generator of bidegree (external, internal); external < 0.
struct ExteriorGenerator {
    std::string name;
    int external = -1;
    int internal = 0;
    std::string differential;  // expression over all generators
};

/// Exterior algebra over R = k[ring generators]/(ring relations) with an
/// R-linear differential of bidegree (+1, 0).
struct KoszulComplexSpec {
    exact::FieldSpec field;
    std::vector<graded::Generator> ring_generators;
    std::vector<std::string> ring_relations;
    std::vector<ExteriorGenerator> exterior;
    int external_floor = -6;
    graded::Parameters parameters;
};

struct Bidegree {
    int p = 0;  // external, <= 0
    int q = 0;  // internal, >= 0
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

struct EulerCheck {
    int internal = 0;
    long chains = 0;     // sum_p (-1)^p dim C(p, q)
    long homology = 0;   // sum_p (-1)^p dim Tor(p, q)
};

struct TorReport {
    int total_max = 0;
    std::map<Bidegree, std::size_t> bidegree_dims;  // every computed slice
    std::map<Bidegree, std::vector<Element>> representatives;
    std::vector<std::size_t> total_dims;
    std::vector<EulerCheck> euler;

    /// Representatives of total degree n, highest external degree first.
    std::vector<Element> total_representatives(int n) const;
};

struct KoszulViolation {
    std::string where;  // generator name or sampled element
    Element value;
};

class KoszulComplex {
public:
    /// Builds the complex with enough room for Tor through total degree
    /// total_max.  Throws AlgebraError if the differential is not
    /// bihomogeneous of bidegree (+1, 0).
    KoszulComplex(const KoszulComplexSpec& spec, int total_max);

    const AlgebraSpec& algebra() const { return alg_; }
    const Differential& differential() const { return d_; }
    int total_max() const { return total_max_; }

    int external_degree(const Monomial& m) const;
    int internal_degree(const Monomial& m) const;

    Element parse(std::string_view text) const;
    /// Reduces the polynomial part modulo the ring relations.
    Element normal_form(const Element& u) const;
    /// Normal basis of the (p, q) slice.
    std::vector<Monomial> slice_basis(Bidegree b) const;

    /// d^2 = 0 on every generator and on `samples` random slice elements.
    std::optional<KoszulViolation> check_d_squared(std::uint64_t seed = 1, std::size_t samples = 64) const;

    TorReport tor() const;

    /// Closed combinations of the given bihomogeneous elements of equal
    /// total degree, as an echelon basis (empty if only 0 is closed).
    std::vector<Element> closedness_probe(const std::vector<Element>& span) const;

private:
    const graded::QuotientSlice& slice(int total) const;
    exact::ExactMatrix d_matrix(Bidegree from) const;

    KoszulComplexSpec spec_;
    int total_max_;
    AlgebraSpec alg_;
    Differential d_;
    std::vector<int> external_;
    std::vector<int> internal_;
    std::vector<graded::QuotientSlice> slices_;
};

}  // namespace cdgacalc::koszul
