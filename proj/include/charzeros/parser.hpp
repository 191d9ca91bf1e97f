#pragma once

/**
 * @file parser.hpp
 * @brief Text syntax for integer Laurent polynomials.
 *
 *   expression := ['+'|'-'] term (('+'|'-') term)*
 *   term       := factor ('*' factor)*
 *   factor     := integer | variable ('^' signed-integer)? | '(' expression ')'
 *
 * Whitespace is insignificant.  Error positions are 0-based byte offsets.
 */

#include <cctype>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "laurent.hpp"

namespace charzeros {

namespace detail {

/// Recursive-descent parser; the first allowed variable maps to x, the second to y.
class PolyParser {
public:
    PolyParser(std::string_view text, std::string_view vars) : text_(text), vars_(vars) {}

    BiLaurentPoly parse() {
        BiLaurentPoly p = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    std::string_view text_;
    std::string_view vars_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    BiLaurentPoly expression() {
        bool negate = false;
        if (peek('-') || peek('+')) {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        BiLaurentPoly acc = term();
        if (negate) acc = -acc;
        while (peek('+') || peek('-')) {
            const bool minus = text_[pos_] == '-';
            ++pos_;
            BiLaurentPoly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    BiLaurentPoly term() {
        BiLaurentPoly acc = factor();
        while (peek('*')) {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    BiLaurentPoly factor() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            BiLaurentPoly inner = expression();
            if (!peek(')')) fail(pos_ >= text_.size() ? "missing ')'" : "expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return BiLaurentPoly::constant(integer());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const auto slot = vars_.find(c);
            if (slot == std::string_view::npos) throw UnknownVariable(c, pos_);
            ++pos_;
            Exponent e = 1;
            if (peek('^')) {
                ++pos_;
                e = signed_exponent();
            }
            return slot == 0 ? BiLaurentPoly::monomial(1, e, 0) : BiLaurentPoly::monomial(1, 0, e);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Exponent signed_exponent() {
        skip_space();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
            skip_space();
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(pos_ >= text_.size() ? "unexpected end of input" : "expected exponent");
        const std::size_t start = pos_;
        Integer v = integer();
        if (v > Integer(std::to_string(std::numeric_limits<std::int32_t>::max())))
            throw SyntaxError("exponent out of range", start);
        const auto e = static_cast<Exponent>(v.get_si());
        return negative ? -e : e;
    }
};

}  // namespace detail

/// Parse a univariate polynomial in `var`.
inline LaurentPoly parse_laurent(std::string_view text, char var = 't') {
    const std::string vars(1, var);
    BiLaurentPoly p = detail::PolyParser(text, vars).parse();
    return p.univariate_restrict(1, 0);
}

/// Parse a polynomial in x and y.
inline BiLaurentPoly parse_bilaurent(std::string_view text) { return detail::PolyParser(text, "xy").parse(); }

}  // namespace charzeros
