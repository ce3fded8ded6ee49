#include "cdgacalc/exact/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "cdgacalc/errors.hpp"

namespace cdgacalc::exact {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "q")
        return rationals();
    if (lower.rfind("fp:", 0) == 0) {
        std::uint32_t p = 0;
        const char* first = lower.data() + 3;
        const char* last = lower.data() + lower.size();
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec != std::errc{} || ptr != last || first == last)
            throw InputError("malformed field '" + std::string(text) + "'");
        return prime(p);
    }
    throw InputError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string FieldSpec::name() const
{
    return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

}  // namespace cdgacalc::exact
