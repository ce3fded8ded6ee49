#include "cdgacalc/graded/element.hpp"

#include <algorithm>

#include "cdgacalc/errors.hpp"

namespace cdgacalc::graded {

namespace {

struct Segment {
    std::size_t begin = 0, end = 0;
    int degree = 0;
};

// Splits a canonical word into per-block segments.
std::vector<Segment> split_blocks(const AlgebraSpec& a, const Monomial& m)
{
    const std::size_t nblocks = a.blocks().size();
    std::vector<Segment> seg(nblocks);
    const auto& w = m.letters();
    std::size_t i = 0;
    for (std::size_t b = 0; b < nblocks; ++b) {
        seg[b].begin = i;
        while (i < w.size() && a.block_of(w[i]) == b) {
            seg[b].degree += a.letter_degree(w[i]);
            ++i;
        }
        seg[b].end = i;
    }
    return seg;
}

Scalar binomial(exact::FieldSpec field, unsigned long n, unsigned long k)
{
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Scalar::from_mpz(field, c);
}

}  // namespace

MonomialProduct multiply(const AlgebraSpec& a, const Monomial& u, const Monomial& v)
{
    const exact::FieldSpec field = a.field();
    const int degree = u.degree() + v.degree();
    if (degree > a.truncation())
        return {Scalar::zero(field), Monomial{}, true};
    if (u.is_unit())
        return {Scalar::one(field), v, false};
    if (v.is_unit())
        return {Scalar::one(field), u, false};

    const auto su = split_blocks(a, u);
    const auto sv = split_blocks(a, v);
    const auto& wu = u.letters();
    const auto& wv = v.letters();
    const std::size_t nblocks = su.size();

    // Moving v's block b past u's blocks b' > b.
    long parity = 0;
    int u_after = 0;
    for (std::size_t b = nblocks; b-- > 0;) {
        parity += static_cast<long>(sv[b].degree % 2) * (u_after % 2);
        u_after += su[b].degree;
    }

    Scalar coeff = Scalar::one(field);
    std::vector<std::uint16_t> out;
    out.reserve(wu.size() + wv.size());

    for (std::size_t b = 0; b < nblocks; ++b) {
        const auto& block = a.blocks()[b];
        if (block.mode == Mode::tensor) {
            out.insert(out.end(), wu.begin() + su[b].begin, wu.begin() + su[b].end);
            out.insert(out.end(), wv.begin() + sv[b].begin, wv.begin() + sv[b].end);
            continue;
        }
        // Sign: each odd y in v passes the odd x in u with x > y.
        std::size_t i = su[b].begin, j = sv[b].begin;
        long odd_u_remaining = 0;
        for (std::size_t t = su[b].begin; t < su[b].end; ++t)
            odd_u_remaining += a.letter_degree(wu[t]) % 2;
        const std::size_t mark = out.size();
        while (i < su[b].end || j < sv[b].end) {
            if (j == sv[b].end || (i < su[b].end && wu[i] <= wv[j])) {
                odd_u_remaining -= a.letter_degree(wu[i]) % 2;
                out.push_back(wu[i++]);
            } else {
                if (a.letter_degree(wv[j]) % 2)
                    parity += odd_u_remaining;
                out.push_back(wv[j++]);
            }
        }
        // Exponent rules on runs of equal letters.
        for (std::size_t r = mark; r < out.size();) {
            std::size_t s = r;
            while (s < out.size() && out[s] == out[r])
                ++s;
            const std::size_t run = s - r;
            if (run > 1) {
                const Generator& g = a.generators()[out[r]];
                const bool square_zero =
                    g.flavor == Flavor::exterior ||
                    (g.flavor == Flavor::koszul && g.degree % 2 != 0 && field.characteristic() != 2);
                if (square_zero)
                    return {Scalar::zero(field), Monomial{}, false};
                if (g.flavor == Flavor::divided_power) {
                    const auto in_u = static_cast<unsigned long>(
                        std::count(wu.begin() + su[b].begin, wu.begin() + su[b].end, out[r]));
                    coeff *= binomial(field, run, in_u);
                    if (coeff.is_zero())
                        return {Scalar::zero(field), Monomial{}, false};
                }
            }
            r = s;
        }
    }
    if (parity % 2)
        coeff = -coeff;
    return {std::move(coeff), Monomial(std::move(out), degree), false};
}

Element Element::one(const AlgebraSpec& a) { return constant(a, Scalar::one(a.field())); }

Element Element::constant(const AlgebraSpec& a, const Scalar& c)
{
    Element e(a);
    e.add_term(Monomial{}, c);
    return e;
}

Element Element::generator(const AlgebraSpec& a, std::string_view name)
{
    return generator(a, a.index_of(name));
}

Element Element::generator(const AlgebraSpec& a, std::size_t index)
{
    if (index >= a.generators().size())
        throw AlgebraError("generator index out of range");
    if (a.generators()[index].degree > a.truncation())
        throw DegreeError("generator '" + a.generators()[index].name + "' lies above the truncation");
    return monomial(a, a.generator_monomial(index), Scalar::one(a.field()));
}

Element Element::monomial(const AlgebraSpec& a, const Monomial& m, const Scalar& c)
{
    Element e(a);
    e.add_term(m, c);
    return e;
}

std::optional<int> Element::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d)
            return std::nullopt;
    return d;
}

bool Element::is_homogeneous() const
{
    return terms_.empty() || degree().has_value();
}

Scalar Element::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(alg_.field()) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c)
{
    if (c.is_rational() != alg_.field().is_rational())
        throw AlgebraError("coefficient field does not match the algebra");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Element::require_same_algebra(const Element& other) const
{
    if (!(alg_ == other.alg_))
        throw AlgebraError("operation on elements of different algebras");
}

Element& Element::operator+=(const Element& rhs)
{
    require_same_algebra(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    lossy_ = lossy_ || rhs.lossy_;
    return *this;
}

Element& Element::operator-=(const Element& rhs)
{
    require_same_algebra(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    lossy_ = lossy_ || rhs.lossy_;
    return *this;
}

Element& Element::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, s] : terms_)
        s *= c;
    return *this;
}

Element Element::operator-() const
{
    Element out(*this);
    for (auto& [m, s] : out.terms_)
        s = -s;
    return out;
}

Element operator*(const Element& a, const Element& b)
{
    a.require_same_algebra(b);
    Element out(a.alg_);
    out.lossy_ = a.lossy_ || b.lossy_;
    for (const auto& [mu, cu] : a.terms_) {
        for (const auto& [mv, cv] : b.terms_) {
            auto p = multiply(a.alg_, mu, mv);
            if (p.truncated) {
                out.lossy_ = true;
                continue;
            }
            if (p.coeff.is_zero())
                continue;
            out.add_term(p.mono, p.coeff * cu * cv);
        }
    }
    return out;
}

Element multiply(const Element& u, const Element& v) { return u * v; }

bool operator==(const Element& a, const Element& b)
{
    return a.alg_ == b.alg_ && a.terms_ == b.terms_;
}

std::string Element::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar mag = c;
        bool negative = false;
        if (c.is_rational() && sgn(c.rational()) < 0) {
            negative = true;
            mag = -c;
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (m.is_unit())
            out += mag.to_string();
        else if (mag.is_one())
            out += alg_.monomial_string(m);
        else
            out += mag.to_string() + "*" + alg_.monomial_string(m);
    }
    return out;
}

Element embed(const Element& u, const AlgebraSpec& target, std::size_t offset)
{
    Element out(target);
    for (const auto& [m, c] : u.terms()) {
        std::vector<std::uint16_t> letters(m.letters());
        for (auto& l : letters)
            l = static_cast<std::uint16_t>(l + offset);
        Monomial shifted = target.make_monomial(std::move(letters));
        if (shifted.degree() > target.truncation()) {
            out.mark_truncation_lost();
            continue;
        }
        out.add_term(shifted, c);
    }
    if (u.truncation_lost())
        out.mark_truncation_lost();
    return out;
}

}  // namespace cdgacalc::graded
