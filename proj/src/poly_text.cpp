/*
   Copyright 2026 The lwcert authors

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

#include "lw/poly_text.hpp"

#include <cctype>
#include <sstream>

#include "lw/error.hpp"

namespace lw {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char ch) {
        skip_ws();
        if (pos < s.size() && s[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw domain_error("parse_poly: " + what + " at position " + std::to_string(pos) +
                           " in '" + s + "'");
    }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Int(s.substr(start, pos - start));
    }

    Rat parse_number() {
        Int n = parse_integer();
        if (eat('/')) {
            Int d = parse_integer();
            if (d == 0) fail("zero denominator");
            return make_rat(n, d);
        }
        return Rat(n);
    }

    // coefficient? ['*']? ('x' ['^' exponent])?
    RatPoly parse_term() {
        Rat coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_number();
            have_coeff = true;
        }
        bool star = have_coeff && eat('*');
        if (peek() == 'x' || peek() == 'X') {
            ++pos;
            unsigned exp = 1;
            if (eat('^')) {
                Int e = parse_integer();
                if (e < 0 || e > 4096) fail("exponent out of range");
                exp = static_cast<unsigned>(e.get_ui());
            }
            return RatPoly::monomial(coeff, exp);
        }
        if (star) fail("expected variable after '*'");
        if (!have_coeff) fail("expected term");
        return RatPoly(coeff);
    }

    RatPoly parse() {
        RatPoly acc;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            bool negative = false;
            if (eat('+')) {
            } else if (eat('-')) {
                negative = true;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            skip_ws();
            if (pos >= s.size()) fail("dangling sign");
            RatPoly term = parse_term();
            acc += negative ? -term : term;
            first = false;
        }
        if (first) fail("empty polynomial");
        return acc;
    }
};

void append_rat(std::ostream& os, const Rat& q) {
    os << q.get_str();
}

} // namespace

RatPoly parse_poly(const std::string& text) {
    Parser p{text};
    return p.parse();
}

std::string format_poly(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            append_rat(os, a);
        } else {
            if (a != 1) {
                append_rat(os, a);
                os << "*";
            }
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::string format_poly(const IntPoly& p) {
    return format_poly(p.to_rat());
}

} // namespace lw
