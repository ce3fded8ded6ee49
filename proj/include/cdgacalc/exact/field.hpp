#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cdgacalc::exact {

enum class FieldKind { rationals, prime };

/// Coefficient field: the rationals, or F_p for a prime p.
class FieldSpec {
public:
    constexpr FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec{}; }
    /// Throws InputError unless p is prime.
    static FieldSpec prime(std::uint32_t p);
    /// Accepts "Q", "q", "Fp:<p>", "fp:<p>" (case-insensitive prefix).
    static FieldSpec parse(std::string_view text);

    FieldKind kind() const { return p_ == 0 ? FieldKind::rationals : FieldKind::prime; }
    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    /// Canonical text form, "Q" or "Fp:<p>"; round-trips through parse().
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit constexpr FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace cdgacalc::exact
