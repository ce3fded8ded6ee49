#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "cdgacalc/errors.hpp"
#include "cdgacalc/graded/element.hpp"

namespace cdgacalc::graded {

/// Parse failure with a 1-based column into the expression text.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t column)
        : InputError(message + " at column " + std::to_string(column)), column_(column), detail_(message) {}
    std::size_t column() const { return column_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t column_;
    std::string detail_;
};

/// Named scalar parameters usable as factors, e.g. {"k": 7/2}.
using Parameters = std::map<std::string, Scalar, std::less<>>;

/// Parses a polynomial expression:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := int ['/' int] | ident ['^' nat] | ident '[' nat ']'
///           | '(' expr ')' ['^' nat]
/// Identifiers name generators or parameters; `x[i]` is the divided-power
/// basis element x_i.  Products are normalized with Koszul signs.
Element parse_element(const AlgebraSpec& a, std::string_view text, const Parameters& params = {});

/// Parses a bare scalar such as "3", "-7/2".
Scalar parse_scalar(exact::FieldSpec field, std::string_view text);

}  // namespace cdgacalc::graded
