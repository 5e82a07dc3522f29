#ifndef PLANAUT_PARSE_HPP
#define PLANAUT_PARSE_HPP

#include "planaut/bipoly.hpp"
#include "planaut/errors.hpp"
#include "planaut/unipoly.hpp"

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace planaut {

enum class Variables { X, XY };

class ParseError : public Error {
public:
    ParseError(std::size_t l, std::size_t c, std::set<std::string> exp, const std::string& found)
        : Error(format(l, c, exp, found)), line(l), column(c), expected(std::move(exp))
    {
    }

    std::size_t line;
    std::size_t column;
    std::set<std::string> expected;

private:
    static std::string format(std::size_t l, std::size_t c, const std::set<std::string>& exp, const std::string& found)
    {
        std::string out = "parse error at line " + std::to_string(l) + ", column " + std::to_string(c) + ": expected ";
        bool first = true;
        for (const auto& e : exp) {
            out += (first ? "" : " | ") + e;
            first = false;
        }
        return out + ", found " + found;
    }
};

struct ParsedExpression {
    std::string source;
    std::variant<BiPoly, UniPoly> value;
};

namespace detail {

// poly   := sign? term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ('^' nat)?
// atom   := int ('/' int)? | var | '(' poly ')'
// With Variables::X the variable may be spelled x or t.
class PolyParser {
public:
    PolyParser(std::string_view text, Variables vars) : text_(text), vars_(vars) {}

    BiPoly parse()
    {
        skip_space();
        BiPoly p = poly();
        if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
        return p;
    }

private:
    std::string_view text_;
    Variables vars_;
    std::size_t pos_ = 0;

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        if (peek() != c || pos_ >= text_.size()) return false;
        ++pos_;
        skip_space();
        return true;
    }

    [[noreturn]] void fail(std::set<std::string> expected) const
    {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_; ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        const std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(line, col, std::move(expected), found);
    }

    std::set<std::string> atom_start() const
    {
        if (vars_ == Variables::XY) return {"integer", "'x'", "'y'", "'('"};
        return {"integer", "'x'", "'t'", "'('"};
    }

    BiPoly poly()
    {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        BiPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    BiPoly term()
    {
        BiPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    BiPoly factor()
    {
        BiPoly base = atom();
        if (!accept('^')) return base;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"natural number"});
        const std::size_t start = pos_;
        unsigned long e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + static_cast<unsigned long>(peek() - '0');
            if (e > kMaxExponent) {
                pos_ = start;
                fail({"exponent at most " + std::to_string(kMaxExponent)});
            }
            ++pos_;
        }
        skip_space();
        return base.pow(static_cast<unsigned>(e));
    }

    Integer integer()
    {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        Integer v(std::string(text_.substr(start, pos_ - start)), 10);
        skip_space();
        return v;
    }

    BiPoly atom()
    {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Integer num = integer();
            if (!accept('/')) return BiPoly(Rational(num));
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"integer"});
            return BiPoly(make_rational(num, integer()));
        }
        if (c == 'x' || (c == 't' && vars_ == Variables::X)) {
            ++pos_;
            skip_space();
            return BiPoly::x();
        }
        if (c == 'y' && vars_ == Variables::XY) {
            ++pos_;
            skip_space();
            return BiPoly::y();
        }
        if (accept('(')) {
            BiPoly inner = poly();
            if (!accept(')')) fail({"')'", "'+'", "'-'", "'*'", "'^'"});
            return inner;
        }
        fail(atom_start());
    }

    static constexpr unsigned long kMaxExponent = 100000;
};

}  // namespace detail

/// Parses a polynomial in x (and y). Rendering a value with to_string and
/// parsing it again gives back the same polynomial.
inline ParsedExpression parse_poly(std::string_view text, Variables vars)
{
    BiPoly p = detail::PolyParser(text, vars).parse();
    ParsedExpression out{std::string(text), BiPoly()};
    if (vars == Variables::X)
        out.value = p.to_uni(Var::X);
    else
        out.value = std::move(p);
    return out;
}

inline BiPoly parse_bipoly(std::string_view text) { return std::get<BiPoly>(parse_poly(text, Variables::XY).value); }

inline UniPoly parse_unipoly(std::string_view text) { return std::get<UniPoly>(parse_poly(text, Variables::X).value); }

}  // namespace planaut

#endif
