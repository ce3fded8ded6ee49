#include "cdgacalc/koszul/koszul.hpp"

#include <random>

#include "cdgacalc/errors.hpp"
#include "common/parallel.hpp"

namespace cdgacalc::koszul {

namespace {

AlgebraSpec build_algebra(const KoszulComplexSpec& spec, int total_max)
{
    if (total_max < 0)
        throw DegreeError("negative total degree bound");
    std::vector<graded::Generator> gens;
    for (const auto& e : spec.exterior) {
        if (e.external >= 0)
            throw InputError("exterior generator '" + e.name + "' needs negative external degree");
        if (e.external < spec.external_floor)
            throw InputError("exterior generator '" + e.name + "' lies below the external floor");
        const int total = e.external + e.internal;
        if (total < 1)
            throw InputError("exterior generator '" + e.name + "' needs positive total degree");
        gens.push_back({e.name, total, graded::Flavor::exterior});
    }
    for (const auto& g : spec.ring_generators) {
        if (g.flavor != graded::Flavor::koszul)
            throw InputError("ring generator '" + g.name + "' must be a polynomial (koszul) generator");
        gens.push_back(g);
    }
    return AlgebraSpec::commutative(spec.field, std::move(gens), total_max + 1);
}

Differential build_differential(const AlgebraSpec& a, const KoszulComplexSpec& spec)
{
    std::map<std::string, Element> images;
    for (const auto& e : spec.exterior)
        images.emplace(e.name, graded::parse_element(a, e.differential, spec.parameters));
    return Differential(a, images);
}

}  // namespace

std::vector<Element> TorReport::total_representatives(int n) const
{
    std::vector<Element> out;
    for (auto it = representatives.rbegin(); it != representatives.rend(); ++it)
        if (it->first.p + it->first.q == n)
            out.insert(out.end(), it->second.begin(), it->second.end());
    return out;
}

KoszulComplex::KoszulComplex(const KoszulComplexSpec& spec, int total_max)
    : spec_(spec),
      total_max_(total_max),
      alg_(build_algebra(spec, total_max)),
      d_(build_differential(alg_, spec))
{
    for (const auto& e : spec.exterior) {
        external_.push_back(e.external);
        internal_.push_back(e.internal);
    }
    for (const auto& g : spec.ring_generators) {
        external_.push_back(0);
        internal_.push_back(g.degree);
    }

    for (std::size_t g = 0; g < spec.exterior.size(); ++g) {
        for (const auto& [m, c] : d_.image(g).terms()) {
            if (external_degree(m) != external_[g] + 1 || internal_degree(m) != internal_[g])
                throw AlgebraError("d(" + spec.exterior[g].name + ") has a term " + alg_.monomial_string(m) +
                                   " of bidegree (" + std::to_string(external_degree(m)) + "," +
                                   std::to_string(internal_degree(m)) + "), expected (" +
                                   std::to_string(external_[g] + 1) + "," + std::to_string(internal_[g]) + ")");
        }
    }

    graded::IdealSpec ideal;
    for (const auto& r : spec.ring_relations)
        ideal.two_sided.push_back(graded::parse_element(alg_, r, spec.parameters));
    for (int t = 0; t <= alg_.truncation(); ++t)
        slices_.push_back(graded::quotient_basis(alg_, ideal, t));

    for (const auto& s : slices_)
        for (const auto& m : s.normal_monomials())
            if (external_degree(m) < spec.external_floor)
                throw DegreeError("nonzero slice below the external floor " + std::to_string(spec.external_floor) +
                                  " (monomial " + alg_.monomial_string(m) + ")");
}

int KoszulComplex::external_degree(const Monomial& m) const
{
    int p = 0;
    for (auto l : m.letters())
        p += external_[l];
    return p;
}

int KoszulComplex::internal_degree(const Monomial& m) const
{
    int q = 0;
    for (auto l : m.letters())
        q += internal_[l];
    return q;
}

Element KoszulComplex::parse(std::string_view text) const
{
    return graded::parse_element(alg_, text, spec_.parameters);
}

const graded::QuotientSlice& KoszulComplex::slice(int total) const
{
    if (total < 0 || total >= static_cast<int>(slices_.size()))
        throw DegreeError("total degree " + std::to_string(total) + " is outside the complex");
    return slices_[static_cast<std::size_t>(total)];
}

Element KoszulComplex::normal_form(const Element& u) const
{
    std::map<int, Element> parts;
    for (const auto& [m, c] : u.terms()) {
        auto [it, fresh] = parts.try_emplace(m.degree(), Element(alg_));
        it->second.add_term(m, c);
    }
    Element out(alg_);
    for (const auto& [t, part] : parts)
        out += slice(t).normal_form(part);
    return out;
}

std::vector<Monomial> KoszulComplex::slice_basis(Bidegree b) const
{
    std::vector<Monomial> out;
    const int total = b.p + b.q;
    if (total < 0)
        return out;
    for (const auto& m : slice(total).normal_monomials())
        if (external_degree(m) == b.p)
            out.push_back(m);
    return out;
}

exact::ExactMatrix KoszulComplex::d_matrix(Bidegree from) const
{
    const auto src = slice_basis(from);
    const Bidegree to{from.p + 1, from.q};
    const auto tgt = to.p > 0 ? std::vector<Monomial>{} : slice_basis(to);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < tgt.size(); ++i)
        index.emplace(tgt[i], i);

    exact::ExactMatrix m(alg_.field(), tgt.size(), src.size());
    const exact::Scalar one = exact::Scalar::one(alg_.field());
    for (std::size_t c = 0; c < src.size(); ++c) {
        const Element img = normal_form(d_.apply(Element::monomial(alg_, src[c], one)));
        for (const auto& [mono, coeff] : img.terms()) {
            auto it = index.find(mono);
            if (it == index.end())
                throw AlgebraError("d maps slice (" + std::to_string(from.p) + "," + std::to_string(from.q) +
                                   ") outside (" + std::to_string(to.p) + "," + std::to_string(to.q) + ")");
            m(it->second, c) = coeff;
        }
    }
    return m;
}

std::optional<KoszulViolation> KoszulComplex::check_d_squared(std::uint64_t seed, std::size_t samples) const
{
    const int top = alg_.truncation();
    for (std::size_t g = 0; g < spec_.exterior.size(); ++g) {
        if (alg_.generators()[g].degree + 2 > top)
            continue;
        Element dd = normal_form(d_.apply(d_.image(g)));
        if (!dd.is_zero())
            return KoszulViolation{spec_.exterior[g].name, std::move(dd)};
    }

    std::vector<std::vector<Monomial>> pools;
    for (int t = 0; t + 2 <= top; ++t)
        for (int p = spec_.external_floor; p <= 0; ++p) {
            auto basis = slice_basis({p, t - p});
            if (!basis.empty())
                pools.push_back(std::move(basis));
        }
    if (pools.empty())
        return std::nullopt;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto& pool = pools[rng() % pools.size()];
        Element x(alg_);
        for (const auto& m : pool)
            x.add_term(m, exact::Scalar::from_int(alg_.field(), coeff(rng)));
        Element dd = normal_form(d_.apply(d_.apply(x)));
        if (!dd.is_zero())
            return KoszulViolation{"sample " + x.to_string(), std::move(dd)};
    }
    return std::nullopt;
}

TorReport KoszulComplex::tor() const
{
    TorReport report;
    report.total_max = total_max_;
    std::vector<Bidegree> cells;
    for (int n = 0; n <= total_max_; ++n)
        for (int p = 0; p >= spec_.external_floor; --p)
            cells.push_back({p, n - p});

    struct Cell {
        std::size_t chains = 0;
        std::size_t dim = 0;
        std::vector<Element> reps;
    };
    std::vector<Cell> out(cells.size());
    const exact::FieldSpec field = alg_.field();

    detail::parallel_for(static_cast<int>(cells.size()), [&](int i) {
        const Bidegree b = cells[static_cast<std::size_t>(i)];
        Cell& cell = out[static_cast<std::size_t>(i)];
        const auto basis = slice_basis(b);
        cell.chains = basis.size();
        if (basis.empty())
            return;
        exact::SparseEchelon boundaries(field);
        if (b.p - 1 >= spec_.external_floor && b.p + b.q - 1 >= 0) {
            const auto in = d_matrix({b.p - 1, b.q});
            for (std::size_t c = 0; c < in.cols(); ++c) {
                exact::SparseVector v;
                for (std::size_t r = 0; r < in.rows(); ++r)
                    if (!in(r, c).is_zero())
                        v.emplace_back(r, in(r, c));
                boundaries.insert(std::move(v));
            }
        }
        std::vector<exact::Vector> remainders;
        for (const auto& k : exact::kernel_basis(d_matrix(b))) {
            auto r = boundaries.reduce(exact::to_sparse(k));
            if (!r.empty())
                remainders.push_back(exact::to_dense(field, r, basis.size()));
        }
        if (remainders.empty())
            return;
        const auto rr = exact::rref(exact::ExactMatrix::from_rows(field, basis.size(), remainders));
        for (std::size_t r = 0; r < rr.rank; ++r) {
            Element e(alg_);
            for (std::size_t c = 0; c < basis.size(); ++c)
                e.add_term(basis[c], rr.reduced(r, c));
            cell.reps.push_back(std::move(e));
        }
        cell.dim = rr.rank;
    });

    report.total_dims.assign(static_cast<std::size_t>(total_max_) + 1, 0);
    std::map<int, EulerCheck> euler;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Bidegree b = cells[i];
        report.bidegree_dims[b] = out[i].dim;
        if (!out[i].reps.empty())
            report.representatives[b] = out[i].reps;
        report.total_dims[static_cast<std::size_t>(b.p + b.q)] += out[i].dim;
        if (b.q <= total_max_) {
            auto& e = euler[b.q];
            e.internal = b.q;
            const long sign = (b.p % 2 == 0) ? 1 : -1;
            e.chains += sign * static_cast<long>(out[i].chains);
            e.homology += sign * static_cast<long>(out[i].dim);
        }
    }
    for (const auto& [q, e] : euler)
        report.euler.push_back(e);
    return report;
}

std::vector<Element> KoszulComplex::closedness_probe(const std::vector<Element>& span) const
{
    if (span.empty())
        return {};
    std::vector<Element> normal;
    std::optional<int> total;
    for (const auto& s : span) {
        Element n = normal_form(s);
        std::optional<Bidegree> bd;
        for (const auto& [m, c] : n.terms()) {
            const Bidegree here{external_degree(m), internal_degree(m)};
            if (bd && !(*bd == here))
                throw InputError("probe element " + s.to_string() + " is not bihomogeneous");
            bd = here;
        }
        if (bd) {
            if (total && *total != bd->p + bd->q)
                throw InputError("probe elements must share one total degree");
            total = bd->p + bd->q;
        }
        normal.push_back(std::move(n));
    }
    if (!total)
        return {};
    if (*total > total_max_)
        throw DegreeError("probe degree exceeds the complex bound");

    const auto& target = slice(*total + 1);
    std::vector<exact::Vector> columns;
    for (const auto& s : normal)
        columns.push_back(target.coordinates(normal_form(d_.apply(s))));
    const auto kernel =
        exact::kernel_basis(exact::ExactMatrix::from_columns(alg_.field(), target.dimension(), columns));

    const auto& source = slice(*total);
    std::vector<exact::Vector> closed;
    for (const auto& k : kernel) {
        Element e(alg_);
        for (std::size_t i = 0; i < k.size(); ++i)
            e += normal[i] * k[i];
        auto coords = source.coordinates(e);
        if (!exact::is_zero(coords))
            closed.push_back(std::move(coords));
    }
    std::vector<Element> out;
    if (closed.empty())
        return out;
    const auto rr = exact::rref(exact::ExactMatrix::from_rows(alg_.field(), source.dimension(), closed));
    for (std::size_t r = 0; r < rr.rank; ++r) {
        exact::Vector row(rr.reduced.row(r).begin(), rr.reduced.row(r).end());
        out.push_back(source.element(row));
    }
    return out;
}

}  // namespace cdgacalc::koszul
