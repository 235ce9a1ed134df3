/*
   Copyright 2026 The qlin Authors

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

/**
 * @file parse.hpp
 * @brief Recursive-descent parser for polynomial text.
 *
 *   expr    := ['+'|'-'] term (('+'|'-') term)*
 *   term    := factor (['*'|'/'] factor)*        juxtaposition multiplies; '/' needs an x-free divisor
 *   factor  := primary ['^' integer]
 *   primary := integer | 't' | 'x' | 'g' | '(' expr ')'
 *
 * 't' is the transcendental of F_q(t); 'g' is the power-basis generator of an extension field.
 */

#ifndef QLIN_PARSE_HPP
#define QLIN_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "funcfield.hpp"
#include "poly.hpp"

namespace qlin {

namespace detail {

template <ExactField K, class Atoms>
class PolyParser {
   public:
    PolyParser(std::string_view text, const K& field, Atoms atoms) : s_(text), k_(field), atoms_(atoms) {}

    Poly<K> run() {
        skip();
        if (pos_ == s_.size()) throw parse_error("empty polynomial", pos_);
        Poly<K> p = expr();
        skip();
        if (pos_ != s_.size()) throw parse_error(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

   private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'x' || c == 'g' || c == '(';
    }

    Poly<K> expr() {
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        Poly<K> acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly<K> term() {
        Poly<K> acc = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc *= factor();
            } else if (peek('/')) {
                ++pos_;
                const std::size_t at = pos_;
                const Poly<K> d = factor();
                if (d.degree() > 0) throw parse_error("divisor must not involve x", at);
                if (d.is_zero()) throw parse_error("division by zero", at);
                acc = acc.scale(k_.inv(d.coeff(0)));
            } else if (starts_primary()) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    Poly<K> factor() {
        Poly<K> base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            const uint64_t e = integer("exponent");
            if (e > 1000000) throw parse_error("exponent too large", pos_);
            Poly<K> r = Poly<K>::constant(k_, k_.one());
            Poly<K> b = base;
            for (uint64_t n = e; n; n >>= 1) {
                if (n & 1) r *= b;
                if (n > 1) b *= b;
            }
            return r;
        }
        return base;
    }

    uint64_t integer(const char* what) {
        skip();
        const std::size_t start = pos_;
        uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (UINT64_MAX - 9) / 10) throw parse_error("integer too large", start);
            v = v * 10 + static_cast<uint64_t>(s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) throw parse_error(std::string("expected ") + what, start);
        return v;
    }

    Poly<K> primary() {
        skip();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        const char c = s_[pos_];
        const std::size_t at = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const uint64_t v = integer("integer");
            return Poly<K>::constant(k_, atoms_.integer(v));
        }
        if (c == 'x') {
            ++pos_;
            return Poly<K>::x(k_);
        }
        if (c == 't' || c == 'g') {
            ++pos_;
            auto v = c == 't' ? atoms_.t(at) : atoms_.g(at);
            return Poly<K>::constant(k_, v);
        }
        if (c == '(') {
            ++pos_;
            Poly<K> inner = expr();
            if (!peek(')')) throw parse_error("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        throw parse_error(std::string("unexpected '") + c + "'", at);
    }

    std::string_view s_;
    const K& k_;
    Atoms atoms_;
    std::size_t pos_ = 0;
};

struct RatAtoms {
    const RatFuncField* k;
    RatFunc integer(uint64_t v) const { return k->from_base(k->base().from_int(static_cast<int64_t>(v % k->characteristic()))); }
    RatFunc t(std::size_t) const { return k->t(); }
    RatFunc g(std::size_t at) const {
        if (k->base().is_prime_field()) throw parse_error("'g' needs an extension base field", at);
        return k->from_base(k->base().generator());
    }
};

struct GFAtoms {
    const GF* k;
    Elem integer(uint64_t v) const { return k->from_int(static_cast<int64_t>(v % k->characteristic())); }
    Elem t(std::size_t at) const { throw parse_error("'t' is not an element of " + k->name(), at); }
    Elem g(std::size_t at) const {
        if (k->is_prime_field()) throw parse_error("'g' needs an extension field", at);
        return k->generator();
    }
};

}  // namespace detail

/// Polynomial in x over F_q(t).
inline RatPoly parse_poly(std::string_view text, const RatFuncField& k) {
    return detail::PolyParser<RatFuncField, detail::RatAtoms>(text, k, {&k}).run();
}

/// Polynomial in x over a finite field; the generator is written g.
inline GFPoly parse_poly(std::string_view text, const GF& k) {
    return detail::PolyParser<GF, detail::GFAtoms>(text, k, {&k}).run();
}

/// Element of F_q(t) (an x-free expression).
inline RatFunc parse_ratfunc(std::string_view text, const RatFuncField& k) {
    const RatPoly p = parse_poly(text, k);
    if (p.degree() > 0) throw parse_error("expected an expression free of x", 0);
    return p.coeff(0);
}

/// Element of a finite field written in g.
inline Elem parse_element(std::string_view text, const GF& k) {
    const GFPoly p = parse_poly(text, k);
    if (p.degree() > 0) throw parse_error("expected an expression free of x", 0);
    return p.coeff(0);
}

/// Text form of a polynomial in x, highest power first, parseable by parse_poly.
template <class K>
std::string to_string(const Poly<K>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (f.field().is_zero(c[i])) continue;
        if (!s.empty()) s += " + ";
        const std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (i > 0 && f.field().equal(c[i], f.field().one())) {
            s += mono;
            continue;
        }
        std::string cs = f.field().to_string(c[i]);
        if (i > 0 && cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        s += i == 0 ? cs : cs + "*" + mono;
    }
    return s;
}

}  // namespace qlin

#endif
