#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cdgacalc/cdga/differential.hpp"
#include "cdgacalc/exact/linalg.hpp"

namespace cdgacalc::cdga {

struct DegreeCohomology {
    int degree = 0;
    std::size_t cochains = 0;       // dim C^n
    std::size_t cocycles = 0;       // dim ker d_n
    std::size_t boundary_rank = 0;  // rank d_{n-1}
    std::size_t betti = 0;
    /// Echelon-normalized cocycles, one per class.
    std::vector<Element> representatives;
};

class CohomologyReport {
public:
    const Differential& differential() const { return *d_; }
    const AlgebraSpec& algebra() const { return d_->algebra(); }
    int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }
    const std::vector<DegreeCohomology>& degrees() const { return degrees_; }
    const DegreeCohomology& at(int n) const;
    std::vector<std::size_t> betti() const;

    /// Coordinates of the class of a degree-n cocycle in the representative
    /// basis.  Throws AlgebraError if z is not a cocycle of degree n.
    exact::Vector express_class(const Element& z, int n) const;
    /// True if the degree-n cocycle z is a coboundary.
    bool is_boundary(const Element& z, int n) const;

private:
    friend CohomologyReport cohomology(const Differential& d, int n_max);

    struct Slice {
        exact::SparseEchelon boundaries;
        std::vector<exact::SparseVector> reps;  // rref, free of boundary pivots
        std::vector<std::size_t> leads;
    };

    std::shared_ptr<const Differential> d_;
    std::vector<DegreeCohomology> degrees_;
    std::vector<Slice> slices_;
};

/// Degreewise cohomology for n = 0..n_max.  Throws DegreeError unless
/// n_max <= N - 1.  Slices are computed in parallel.
CohomologyReport cohomology(const Differential& d, int n_max);

/// Product of two classes, expressed in the representatives of degree
/// |a| + |b|.  Throws DegreeError when that degree is outside the report.
exact::Vector cup(const CohomologyReport& report, int deg_a, std::size_t class_a, int deg_b,
                  std::size_t class_b);

}  // namespace cdgacalc::cdga
