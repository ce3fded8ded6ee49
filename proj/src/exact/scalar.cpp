#include "cdgacalc/exact/scalar.hpp"

#include "cdgacalc/errors.hpp"

namespace cdgacalc::exact {

namespace {

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0)
        t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar Scalar::zero(FieldSpec field)
{
    if (field.is_rational())
        return Scalar{};
    return Scalar{Residue{0, field.characteristic()}};
}

Scalar Scalar::one(FieldSpec field) { return from_int(field, 1); }

Scalar Scalar::from_int(FieldSpec field, long long value)
{
    if (field.is_rational())
        return Scalar{mpq_class(mpz_class(std::to_string(value)))};
    const auto p = static_cast<long long>(field.characteristic());
    long long r = value % p;
    if (r < 0)
        r += p;
    return Scalar{Residue{static_cast<std::uint32_t>(r), field.characteristic()}};
}

Scalar Scalar::from_mpz(FieldSpec field, const mpz_class& value)
{
    if (field.is_rational())
        return Scalar{mpq_class(value)};
    return Scalar{Residue{reduce_mpz(value, field.characteristic()), field.characteristic()}};
}

Scalar Scalar::from_ratio(FieldSpec field, const mpz_class& num, const mpz_class& den)
{
    if (field.is_rational()) {
        if (den == 0)
            throw InputError("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar{std::move(q)};
    }
    Scalar d = from_mpz(field, den);
    if (d.is_zero())
        throw InputError("denominator " + den.get_str() + " vanishes in " + field.name());
    return from_mpz(field, num) / d;
}

Scalar Scalar::from_rational(FieldSpec field, const mpq_class& value)
{
    return from_ratio(field, value.get_num(), value.get_den());
}

FieldSpec Scalar::field() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return FieldSpec::prime(r->modulus);
    return FieldSpec::rationals();
}

bool Scalar::is_zero() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return r->value == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return r->value == 1;
    return std::get<mpq_class>(v_) == 1;
}

void Scalar::require_same_field(const Scalar& other) const
{
    const auto* a = std::get_if<Residue>(&v_);
    const auto* b = std::get_if<Residue>(&other.v_);
    if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus))
        throw AlgebraError("scalar arithmetic across different fields");
}

Scalar Scalar::operator-() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return Scalar{Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus}};
    return Scalar{mpq_class(-std::get<mpq_class>(v_))};
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&v_)) {
        std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(rhs.v_).value;
        r->value = static_cast<std::uint32_t>(s % r->modulus);
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(rhs.v_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&v_)) {
        std::uint64_t s = std::uint64_t{r->value} + r->modulus - std::get<Residue>(rhs.v_).value;
        r->value = static_cast<std::uint32_t>(s % r->modulus);
    } else {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(rhs.v_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&v_)) {
        std::uint64_t s = std::uint64_t{r->value} * std::get<Residue>(rhs.v_).value;
        r->value = static_cast<std::uint32_t>(s % r->modulus);
    } else {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(rhs.v_);
    }
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw AlgebraError("division by zero");
    if (const auto* r = std::get_if<Residue>(&v_))
        return Scalar{Residue{inverse_mod(r->value, r->modulus), r->modulus}};
    return Scalar{mpq_class(1 / std::get<mpq_class>(v_))};
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.v_ == b.v_;
}

std::string Scalar::to_string() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return std::to_string(r->value);
    return std::get<mpq_class>(v_).get_str();
}

bool Scalar::is_canonical() const
{
    if (const auto* r = std::get_if<Residue>(&v_))
        return r->value < r->modulus;
    const auto& q = std::get<mpq_class>(v_);
    if (sgn(q.get_den()) <= 0)
        return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return g == 1;
}

}  // namespace cdgacalc::exact
