#include "cdgacalc/graded/parser.hpp"

#include <cctype>

namespace cdgacalc::graded {

namespace {

class Parser {
public:
    Parser(const AlgebraSpec& a, std::string_view text, const Parameters& params)
        : alg_(a), text_(text), params_(params) {}

    Element parse()
    {
        Element e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_digit()
    {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    bool at_ident()
    {
        skip_ws();
        return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
    }

    mpz_class natural()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    unsigned long small_natural(const char* what)
    {
        const std::size_t start = pos_;
        mpz_class v = natural();
        if (v > 4096) {
            pos_ = start;
            fail(std::string(what) + " too large");
        }
        return v.get_ui();
    }

    std::string ident()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Element expr()
    {
        Element out(alg_);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Element t = term();
        out += negate ? -t : t;
        while (true) {
            if (accept('+'))
                out += term();
            else if (accept('-'))
                out -= term();
            else
                break;
        }
        return out;
    }

    Element term()
    {
        Element out = factor();
        while (accept('*'))
            out = out * factor();
        return out;
    }

    Element power(const Element& base, unsigned long e)
    {
        Element out = Element::one(alg_);
        for (unsigned long i = 0; i < e; ++i)
            out = out * base;
        return out;
    }

    Element factor()
    {
        skip_ws();
        if (pos_ == text_.size())
            fail("unexpected end of expression");
        if (accept('(')) {
            Element inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            if (accept('^'))
                return power(inner, small_natural("exponent"));
            return inner;
        }
        if (at_digit()) {
            const std::size_t start = pos_;
            mpz_class num = natural();
            mpz_class den = 1;
            if (accept('/')) {
                const std::size_t den_pos = pos_;
                den = natural();
                if (den == 0) {
                    pos_ = den_pos;
                    skip_ws();
                    fail("zero denominator");
                }
            }
            try {
                return Element::constant(alg_, Scalar::from_ratio(alg_.field(), num, den));
            } catch (const InputError& e) {
                pos_ = start;
                fail(e.what());
            }
        }
        if (!at_ident())
            fail("expected a generator, parameter or number");
        const std::size_t start = pos_;
        const std::string name = ident();
        Element base(alg_);
        if (auto g = alg_.find(name)) {
            const Generator& gen = alg_.generators()[*g];
            if (accept('[')) {
                if (gen.flavor != Flavor::divided_power) {
                    pos_ = start;
                    fail("'" + name + "' is not a divided-power generator");
                }
                const unsigned long i = small_natural("divided-power index");
                if (!accept(']'))
                    fail("expected ']'");
                const int deg = static_cast<int>(i) * gen.degree;
                if (deg > alg_.truncation()) {
                    Element lost(alg_);
                    lost.mark_truncation_lost();
                    return lost;
                }
                return Element::monomial(
                    alg_, alg_.make_monomial(std::vector<std::uint16_t>(i, static_cast<std::uint16_t>(*g))),
                    Scalar::one(alg_.field()));
            }
            if (gen.degree > alg_.truncation())
                base.mark_truncation_lost();
            else
                base = Element::generator(alg_, *g);
        } else if (auto it = params_.find(name); it != params_.end()) {
            base = Element::constant(alg_, it->second);
        } else {
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        if (accept('^'))
            return power(base, small_natural("exponent"));
        return base;
    }

    const AlgebraSpec& alg_;
    std::string_view text_;
    const Parameters& params_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const AlgebraSpec& a, std::string_view text, const Parameters& params)
{
    return Parser(a, text, params).parse();
}

Scalar parse_scalar(exact::FieldSpec field, std::string_view text)
{
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto number = [&]() -> mpz_class {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected a number", pos + 1);
        return mpz_class(std::string(text.substr(start, pos - start)));
    };
    skip();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        negative = text[pos++] == '-';
    mpz_class num = number();
    mpz_class den = 1;
    skip();
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = number();
        if (den == 0)
            throw ParseError("zero denominator", pos);
    }
    skip();
    if (pos != text.size())
        throw ParseError("unexpected trailing text", pos + 1);
    if (negative)
        num = -num;
    return Scalar::from_ratio(field, num, den);
}

}  // namespace cdgacalc::graded
