/*
   Copyright 2026 The arbor Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ARBOR_PARSE_HPP
#define ARBOR_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bipoly.hpp"

namespace arbor {

/// Syntax error with a 1-based line and column.
class ParseError : public std::invalid_argument {
   public:
    ParseError(int line, int column, const std::string& msg)
        : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

namespace detail {

class BiPolyParser {
   public:
    BiPolyParser(std::string_view src, Field f) : s_(src), f_(f) {}

    BiPoly parse() {
        BiPoly out(f_);
        skip();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                advance();
                skip();
            } else if (!first) {
                fail(std::string("expected '+' or '-', found '") + peek() + "'");
            }
            out += term(sign);
            first = false;
        }
        return out;
    }

   private:
    std::string_view s_;
    Field f_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    std::uint64_t number() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        std::uint64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (v > (UINT64_MAX - 9) / 10) fail("integer too large");
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            advance();
        }
        return v;
    }

    // [int] ['*'] ['t'['^'int]] ['*'] ['x'['^'int]]
    BiPoly term(int sign) {
        std::uint64_t coeff = 1;
        bool have_coeff = false, have_t = false, have_x = false, pending_star = false;
        std::uint64_t et = 0, ex = 0;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number() % f_->p();
            have_coeff = true;
            skip();
        }
        while (!at_end()) {
            char c = peek();
            if (c == '*') {
                if (pending_star || (!have_coeff && !have_t && !have_x)) fail("unexpected '*'");
                pending_star = true;
                advance();
                skip();
                continue;
            }
            if (c != 't' && c != 'x') break;
            bool& seen = c == 't' ? have_t : have_x;
            if (seen) fail(std::string("repeated variable '") + c + "'");
            if (c == 't' && have_x) fail("'t' must precede 'x' in a term");
            seen = true;
            pending_star = false;
            advance();
            skip();
            std::uint64_t e = 1;
            if (!at_end() && peek() == '^') {
                advance();
                skip();
                e = number();
                if (e > 1u << 20) fail("exponent too large");
                skip();
            }
            (c == 't' ? et : ex) = e;
        }
        if (pending_star) fail("dangling '*'");
        if (!have_coeff && !have_t && !have_x) {
            if (at_end()) fail("expected term");
            fail(std::string("unexpected character '") + peek() + "'");
        }
        std::int64_t cv = sign * static_cast<std::int64_t>(coeff);
        return BiPoly::monomial(TPoly::monomial(Fe::from_int(f_, cv), et), ex);
    }
};

}  // namespace detail

/// Parses f(t, x), e.g. "x^3 + t*x^2 + t". Coefficients are reduced mod p.
inline BiPoly parse_bipoly(std::string_view src, Field f) { return detail::BiPolyParser(src, f).parse(); }

/// Parses a polynomial in t alone.
inline TPoly parse_tpoly(std::string_view src, Field f) {
    BiPoly b = parse_bipoly(src, f);
    if (b.degree() > 0) throw ParseError(1, 1, "unexpected variable 'x' in a polynomial in t");
    return b.coeff(0);
}

}  // namespace arbor

#endif  // ARBOR_PARSE_HPP
