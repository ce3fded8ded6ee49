#include "cdgacalc/cdga/cohomology.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include "cdgacalc/errors.hpp"
#include "common/parallel.hpp"

namespace cdgacalc::cdga {

namespace {

exact::SparseVector column(const exact::ExactMatrix& m, std::size_t c)
{
    exact::SparseVector v;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m(r, c).is_zero())
            v.emplace_back(r, m(r, c));
    return v;
}

Element to_element(const AlgebraSpec& a, int n, const exact::SparseVector& v)
{
    const auto& mons = a.basis(n).monomials;
    Element e(a);
    for (const auto& [i, c] : v)
        e.add_term(mons[i], c);
    return e;
}

exact::SparseVector to_vector(const AlgebraSpec& a, int n, const Element& z)
{
    const auto& basis = a.basis(n);
    exact::SparseVector v;
    for (const auto& [m, c] : z.terms()) {
        if (m.degree() != n)
            throw AlgebraError("element is not homogeneous of degree " + std::to_string(n));
        v.emplace_back(*basis.position(m), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
}

}  // namespace

const DegreeCohomology& CohomologyReport::at(int n) const
{
    if (n < 0 || n > max_degree())
        throw DegreeError("degree " + std::to_string(n) + " is not covered by the report");
    return degrees_[static_cast<std::size_t>(n)];
}

std::vector<std::size_t> CohomologyReport::betti() const
{
    std::vector<std::size_t> out;
    for (const auto& d : degrees_)
        out.push_back(d.betti);
    return out;
}

bool CohomologyReport::is_boundary(const Element& z, int n) const
{
    at(n);
    return slices_[static_cast<std::size_t>(n)].boundaries.contains(to_vector(algebra(), n, z));
}

exact::Vector CohomologyReport::express_class(const Element& z, int n) const
{
    const auto& info = at(n);
    if (!d_->apply(z).is_zero())
        throw AlgebraError("element " + z.to_string() + " is not a cocycle");
    const auto& slice = slices_[static_cast<std::size_t>(n)];
    exact::SparseVector v = slice.boundaries.reduce(to_vector(algebra(), n, z));
    exact::Vector coords = exact::zero_vector(algebra().field(), info.betti);
    for (std::size_t i = 0; i < slice.reps.size(); ++i) {
        Scalar c = Scalar::zero(algebra().field());
        for (const auto& [col, s] : v)
            if (col == slice.leads[i])
                c = s;
        if (c.is_zero())
            continue;
        coords[i] = c;
        // v -= c * rep_i
        std::map<std::size_t, Scalar> acc;
        for (const auto& [col, s] : v)
            acc.emplace(col, s);
        for (const auto& [col, s] : slice.reps[i]) {
            auto [it, fresh] = acc.try_emplace(col, -(c * s));
            if (!fresh)
                it->second -= c * s;
        }
        v.clear();
        for (auto& [col, s] : acc)
            if (!s.is_zero())
                v.emplace_back(col, s);
    }
    if (!v.empty())
        throw AlgebraError("cocycle is not spanned by the representatives");
    return coords;
}

CohomologyReport cohomology(const Differential& d, int n_max)
{
    const AlgebraSpec& a = d.algebra();
    if (n_max < 0)
        throw DegreeError("negative degree bound");
    if (n_max > a.truncation() - 1)
        throw DegreeError("cohomology through degree " + std::to_string(n_max) + " needs truncation at least " +
                          std::to_string(n_max + 1) + " (have " + std::to_string(a.truncation()) + ")");

    const auto count = static_cast<std::size_t>(n_max) + 1;
    std::vector<std::optional<exact::ExactMatrix>> mats(count);
    detail::parallel_for(n_max + 1, [&](int n) { mats[static_cast<std::size_t>(n)] = differential_matrix(d, n); });

    CohomologyReport report;
    report.d_ = std::make_shared<const Differential>(d);
    report.degrees_.resize(count);
    report.slices_.resize(count, CohomologyReport::Slice{exact::SparseEchelon(a.field()), {}, {}});

    detail::parallel_for(n_max + 1, [&](int n) {
        const auto idx = static_cast<std::size_t>(n);
        auto& info = report.degrees_[idx];
        auto& slice = report.slices_[idx];
        info.degree = n;
        info.cochains = a.dimension(n);

        if (n > 0) {
            const auto& prev = *mats[idx - 1];
            for (std::size_t c = 0; c < prev.cols(); ++c)
                slice.boundaries.insert(column(prev, c));
        }
        info.boundary_rank = slice.boundaries.rank();

        const auto kernel = exact::kernel_basis(*mats[idx]);
        info.cocycles = kernel.size();
        std::vector<exact::Vector> remainders;
        for (const auto& k : kernel) {
            auto r = slice.boundaries.reduce(exact::to_sparse(k));
            if (!r.empty())
                remainders.push_back(exact::to_dense(a.field(), r, info.cochains));
        }
        if (!remainders.empty()) {
            const auto rr = exact::rref(exact::ExactMatrix::from_rows(a.field(), info.cochains, remainders));
            for (std::size_t i = 0; i < rr.rank; ++i) {
                slice.reps.push_back(exact::to_sparse(rr.reduced.row(i)));
                slice.leads.push_back(rr.pivots[i]);
                info.representatives.push_back(to_element(a, n, slice.reps.back()));
            }
        }
        info.betti = info.cocycles - info.boundary_rank;
        if (info.betti != info.representatives.size())
            throw AlgebraError("inconsistent cohomology in degree " + std::to_string(n) +
                               " (is d^2 = 0?)");
    });
    return report;
}

exact::Vector cup(const CohomologyReport& report, int deg_a, std::size_t class_a, int deg_b, std::size_t class_b)
{
    const auto& a = report.at(deg_a);
    const auto& b = report.at(deg_b);
    const int n = deg_a + deg_b;
    if (n > report.max_degree())
        throw DegreeError("cup product lands in degree " + std::to_string(n) + ", beyond the report");
    if (class_a >= a.representatives.size() || class_b >= b.representatives.size())
        throw InputError("class index out of range");
    return report.express_class(a.representatives[class_a] * b.representatives[class_b], n);
}

}  // namespace cdgacalc::cdga
