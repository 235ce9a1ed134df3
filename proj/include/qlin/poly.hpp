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

#ifndef QLIN_POLY_HPP
#define QLIN_POLY_HPP

#include <concepts>
#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fieldcore.hpp"

namespace qlin {

/// A coefficient field of positive characteristic given as a context object.
template <class K>
concept ExactField = requires(const K& k, const typename K::value_type& a, const typename K::value_type& b,
                              uint64_t q) {
    typename K::value_type;
    { k.zero() } -> std::convertible_to<typename K::value_type>;
    { k.one() } -> std::convertible_to<typename K::value_type>;
    { k.add(a, b) } -> std::convertible_to<typename K::value_type>;
    { k.sub(a, b) } -> std::convertible_to<typename K::value_type>;
    { k.neg(a) } -> std::convertible_to<typename K::value_type>;
    { k.mul(a, b) } -> std::convertible_to<typename K::value_type>;
    { k.inv(a) } -> std::convertible_to<typename K::value_type>;
    { k.qth_power(a, q) } -> std::convertible_to<typename K::value_type>;
    { k.is_zero(a) } -> std::convertible_to<bool>;
    { k.equal(a, b) } -> std::convertible_to<bool>;
    { k.characteristic() } -> std::convertible_to<uint32_t>;
    { k == k } -> std::convertible_to<bool>;
};

static_assert(ExactField<GF>);

/// Dense univariate polynomial, constant term first, no trailing zeros.
template <ExactField K>
class Poly {
   public:
    using value_type = typename K::value_type;

    explicit Poly(K field) : field_(std::move(field)) {}
    Poly(K field, std::vector<value_type> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const K& f, value_type c) { return Poly(f, {std::move(c)}); }
    static Poly monomial(const K& f, value_type c, std::size_t d) {
        std::vector<value_type> v(d + 1, f.zero());
        v[d] = std::move(c);
        return Poly(f, std::move(v));
    }
    static Poly x(const K& f) { return monomial(f, f.one(), 1); }

    const K& field() const noexcept { return field_; }
    const std::vector<value_type>& coeffs() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    value_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    const value_type& lead() const {
        if (c_.empty()) throw precondition_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && field_.equal(c_.back(), field_.one()); }

    void set_coeff(std::size_t i, value_type v) {
        if (i >= c_.size()) {
            if (field_.is_zero(v)) return;
            c_.resize(i + 1, field_.zero());
        }
        c_[i] = std::move(v);
        trim();
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        if (is_monic()) return *this;
        return scale(field_.inv(c_.back()));
    }

    Poly scale(const value_type& s) const {
        if (field_.is_zero(s)) return Poly(field_);
        std::vector<value_type> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(field_.mul(a, s));
        return Poly(field_, std::move(v));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(field_);
        std::vector<value_type> v(c_.size() - 1, field_.zero());
        const uint32_t p = field_.characteristic();
        for (std::size_t i = 1; i < c_.size(); ++i) {
            const uint64_t m = i % p;
            if (m == 0 || field_.is_zero(c_[i])) continue;
            value_type acc = field_.zero();
            // m * c_i by repeated addition keeps the field interface minimal
            value_type base = c_[i];
            for (uint64_t e = m; e; e >>= 1) {
                if (e & 1) acc = field_.add(acc, base);
                base = field_.add(base, base);
            }
            v[i - 1] = acc;
        }
        return Poly(field_, std::move(v));
    }

    /// Horner evaluation at a point of the coefficient field.
    value_type eval(const value_type& a) const {
        value_type r = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, a), c_[i]);
        return r;
    }

    Poly operator+(const Poly& o) const {
        check(o);
        std::vector<value_type> v(std::max(c_.size(), o.c_.size()), field_.zero());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < c_.size() && i < o.c_.size())
                v[i] = field_.add(c_[i], o.c_[i]);
            else
                v[i] = i < c_.size() ? c_[i] : o.c_[i];
        }
        return Poly(field_, std::move(v));
    }

    Poly operator-() const {
        std::vector<value_type> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(field_.neg(a));
        return Poly(field_, std::move(v));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        check(o);
        if (c_.empty() || o.c_.empty()) return Poly(field_);
        std::vector<value_type> v(c_.size() + o.c_.size() - 1, field_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (field_.is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                if (field_.is_zero(o.c_[j])) continue;
                v[i + j] = field_.add(v[i + j], field_.mul(c_[i], o.c_[j]));
            }
        }
        return Poly(field_, std::move(v));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!(a.field_ == b.field_) || a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
        return true;
    }

    void check(const Poly& o) const {
        if (!(field_ == o.field_)) throw field_mismatch("polynomials over different coefficient fields");
    }

   private:
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    K field_;
    std::vector<value_type> c_;
};

/// (quotient, remainder) with a = quotient * b + remainder, deg remainder < deg b.
template <ExactField K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    a.check(b);
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    const K& f = a.field();
    if (a.degree() < b.degree()) return {Poly<K>(f), a};
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const auto& bc = b.coeffs();
    const bool monic = b.is_monic();
    const auto inv_lead = monic ? f.one() : f.inv(b.lead());
    std::vector<typename K::value_type> r = a.coeffs();
    std::vector<typename K::value_type> q(r.size() - db, f.zero());
    for (std::size_t d = r.size(); d-- > db;) {
        if (f.is_zero(r[d])) continue;
        const auto c = monic ? r[d] : f.mul(r[d], inv_lead);
        q[d - db] = c;
        for (std::size_t j = 0; j < db; ++j) {
            if (f.is_zero(bc[j])) continue;
            r[d - db + j] = f.sub(r[d - db + j], f.mul(c, bc[j]));
        }
        r[d] = f.zero();
    }
    r.resize(db);
    return {Poly<K>(f, std::move(q)), Poly<K>(f, std::move(r))};
}

template <ExactField K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).second;
}

template <ExactField K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).first;
}

/// Monic gcd by Euclid's algorithm.
template <ExactField K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    a.check(b);
    if (a.is_zero() && b.is_zero()) throw precondition_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <ExactField K>
Poly<K> lcm(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

template <ExactField K>
Poly<K> mulmod(const Poly<K>& a, const Poly<K>& b, const Poly<K>& m) {
    return (a * b) % m;
}

template <ExactField K>
Poly<K> powmod(Poly<K> g, u128 e, const Poly<K>& m) {
    Poly<K> r = Poly<K>::constant(m.field(), m.field().one()) % m;
    g = g % m;
    while (e) {
        if (e & 1) r = mulmod(r, g, m);
        e >>= 1;
        if (e) g = mulmod(g, g, m);
    }
    return r;
}

/// g^q mod f via (sum c_j x^j)^q = sum c_j^q x^{jq}, then a single reduction.
template <ExactField K>
Poly<K> qth_power_mod(const Poly<K>& g, const Poly<K>& f, uint64_t q) {
    const K& k = f.field();
    if (f.degree() < 1) throw precondition_error("modulus must be nonconstant");
    const Poly<K> gr = g.degree() >= f.degree() ? g % f : g;
    if (gr.is_zero()) return gr;
    // validates q
    const auto one_q = k.qth_power(k.one(), q);
    (void)one_q;
    std::vector<typename K::value_type> v(static_cast<std::size_t>(gr.degree()) * q + 1, k.zero());
    const auto& c = gr.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j)
        if (!k.is_zero(c[j])) v[j * q] = k.qth_power(c[j], q);
    return Poly<K>(k, std::move(v)) % f;
}

}  // namespace qlin

#endif
