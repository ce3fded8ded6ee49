#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "cdgacalc/exact/field.hpp"

namespace cdgacalc::exact {

/// Canonical representative 0..p-1 of a residue class mod p.
struct Residue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 2;
    friend bool operator==(const Residue&, const Residue&) = default;
};

/// An exact field element.  Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in 0..p-1.
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;

    static Scalar zero(FieldSpec field);
    static Scalar one(FieldSpec field);
    static Scalar from_int(FieldSpec field, long long value);
    static Scalar from_mpz(FieldSpec field, const mpz_class& value);
    /// Throws InputError when den is zero in the field.
    static Scalar from_ratio(FieldSpec field, const mpz_class& num, const mpz_class& den);
    /// Maps a rational into the field; throws InputError when the
    /// denominator is divisible by p.
    static Scalar from_rational(FieldSpec field, const mpq_class& value);

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::uint32_t residue() const { return std::get<Residue>(v_).value; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    /// Throws AlgebraError on division by zero.
    Scalar& operator/=(const Scalar& rhs);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "3", "-7/2", or the residue for prime fields.
    std::string to_string() const;

    /// True when the stored form is canonical (lowest terms, positive
    /// denominator, residue below the modulus).
    bool is_canonical() const;

private:
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(Residue r) : v_(r) {}
    void require_same_field(const Scalar& other) const;

    std::variant<mpq_class, Residue> v_;
};

}  // namespace cdgacalc::exact
