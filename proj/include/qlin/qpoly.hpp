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
 * @file qpoly.hpp
 * @brief q-linearized polynomials sum a_i x^{q^i}, stored sparsely by q-exponent.
 */

#ifndef QLIN_QPOLY_HPP
#define QLIN_QPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "factor.hpp"
#include "fieldcore.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace qlin {

template <ExactField K>
class QPoly {
   public:
    using value_type = typename K::value_type;

    QPoly(K field, uint64_t q) : field_(std::move(field)), q_(q) { (void)field_.qth_power(field_.one(), q_); }
    QPoly(K field, uint64_t q, const std::map<unsigned, value_type>& terms) : QPoly(std::move(field), q) {
        for (const auto& [i, a] : terms) set_term(i, a);
    }

    /// The identity map x.
    static QPoly x(const K& f, uint64_t q) { return QPoly(f, q, {{0u, f.one()}}); }

    const K& field() const noexcept { return field_; }
    uint64_t q() const noexcept { return q_; }
    const std::map<unsigned, value_type>& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }
    /// -1 for the zero q-polynomial.
    int qdegree() const noexcept { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first); }
    value_type coeff(unsigned i) const {
        auto it = t_.find(i);
        return it == t_.end() ? field_.zero() : it->second;
    }
    bool is_monic() const { return !t_.empty() && field_.equal(t_.rbegin()->second, field_.one()); }

    void set_term(unsigned i, const value_type& a) {
        if (field_.is_zero(a))
            t_.erase(i);
        else
            t_[i] = a;
    }

    QPoly monic() const {
        if (t_.empty()) throw precondition_error("zero q-polynomial cannot be made monic");
        const auto inv = field_.inv(t_.rbegin()->second);
        QPoly r(field_, q_);
        for (const auto& [i, a] : t_) r.set_term(i, field_.mul(a, inv));
        return r;
    }

    /// The ordinary polynomial; refuses degrees above max_degree.
    Poly<K> to_poly(uint64_t max_degree = 1u << 22) const {
        if (t_.empty()) return Poly<K>(field_);
        uint64_t deg = 1;
        for (int i = 0; i < qdegree(); ++i) {
            deg *= q_;
            if (deg > max_degree) throw guard_exceeded("q-polynomial degree exceeds " + std::to_string(max_degree));
        }
        std::vector<value_type> c(deg + 1, field_.zero());
        uint64_t e = 1;
        for (unsigned i = 0; i <= static_cast<unsigned>(qdegree()); ++i, e *= q_) c[e] = coeff(i);
        return Poly<K>(field_, std::move(c));
    }

    friend bool operator==(const QPoly& a, const QPoly& b) {
        if (!(a.field_ == b.field_) || a.q_ != b.q_ || a.t_.size() != b.t_.size()) return false;
        for (auto i = a.t_.begin(), j = b.t_.begin(); i != a.t_.end(); ++i, ++j)
            if (i->first != j->first || !a.field_.equal(i->second, j->second)) return false;
        return true;
    }

   private:
    K field_;
    uint64_t q_;
    std::map<unsigned, value_type> t_;
};

/// L(a) = sum a_i a^{q^i} for a in the coefficient field.
template <ExactField K>
typename K::value_type qp_evaluate(const QPoly<K>& l, const typename K::value_type& a) {
    const K& f = l.field();
    auto acc = f.zero();
    auto pw = a;  // a^{q^i}
    unsigned i = 0;
    for (const auto& [e, c] : l.terms()) {
        for (; i < e; ++i) pw = f.qth_power(pw, l.q());
        acc = f.add(acc, f.mul(c, pw));
    }
    return acc;
}

/// L(e) for e in an extension of the coefficient field of L.
inline FieldElement qp_evaluate(const QPoly<GF>& l, const FieldElement& e) {
    if (l.field() == e.field()) return {e.field(), qp_evaluate(l, e.value())};
    const Embedding emb = Embedding::canonical(l.field(), e.field());
    QPoly<GF> lifted(e.field(), l.q());
    for (const auto& [i, c] : l.terms()) lifted.set_term(i, emb.apply(c));
    return {e.field(), qp_evaluate(lifted, e.value())};
}

/// sum a_i x^i for L = sum a_i x^{q^i}, after making L monic.
template <ExactField K>
Poly<K> qp_associate(const QPoly<K>& l) {
    if (l.is_zero()) throw precondition_error("associate of the zero q-polynomial");
    const QPoly<K> m = l.is_monic() ? l : l.monic();
    Poly<K> out(m.field());
    for (const auto& [i, c] : m.terms()) out.set_coeff(i, c);
    return out;
}

/// Whether f divides L as ordinary polynomials, computed without expanding L.
template <ExactField K>
bool qp_divides(const Poly<K>& f, const QPoly<K>& l) {
    if (!(f.field() == l.field())) throw field_mismatch("q-polynomial and polynomial over different fields");
    if (f.is_zero()) return l.is_zero();
    if (f.degree() == 0 || l.is_zero()) return true;
    const Poly<K> fm = f.monic();
    const K& k = f.field();
    Poly<K> r = Poly<K>::x(k) % fm;  // x^{q^i} mod f
    Poly<K> acc(k);
    unsigned i = 0;
    for (const auto& [e, c] : l.terms()) {
        for (; i < e; ++i) r = qth_power_mod(r, fm, l.q());
        acc += r.scale(c);
    }
    return acc.is_zero();
}

namespace detail {

inline void check_subfield(const GF& e, uint64_t q) {
    const unsigned r = e.log_p(q);
    if (e.degree() % r != 0) throw precondition_error(e.name() + " does not contain F_" + std::to_string(q));
}

}  // namespace detail

/// Monic q-polynomial vanishing on span_{F_q}(basis), from the Moore determinant expanded along its x column.
inline QPoly<GF> moore_qpoly_determinant(const GF& e, const std::vector<Elem>& basis, uint64_t q) {
    detail::check_subfield(e, q);
    const std::size_t n = basis.size();
    // pw[j][i] = basis_i^{q^j}, j = 0..n
    std::vector<std::vector<Elem>> pw(n + 1, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i) {
        pw[0][i] = basis[i];
        for (std::size_t j = 1; j <= n; ++j) pw[j][i] = e.qth_power(pw[j - 1][i], q);
    }
    std::vector<Elem> cof(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        Matrix<GF> minor(e, n, n);
        for (std::size_t r = 0, rr = 0; r <= n; ++r) {
            if (r == j) continue;
            for (std::size_t c = 0; c < n; ++c) minor(rr, c) = pw[r][c];
            ++rr;
        }
        const Elem d = n == 0 ? e.one() : determinant(minor);
        cof[j] = (j + n) % 2 ? e.neg(d) : d;
    }
    if (e.is_zero(cof[n])) throw precondition_error("basis elements are F_q-linearly dependent");
    const Elem inv = e.inv(cof[n]);
    QPoly<GF> out(e, q);
    for (std::size_t j = 0; j <= n; ++j) out.set_term(static_cast<unsigned>(j), e.mul(cof[j], inv));
    return out;
}

/// The same q-polynomial by the recursion M_0 = x, M_{k+1} = M_k^q - M_k(a)^{q-1} M_k.
inline QPoly<GF> moore_qpoly_product(const GF& e, const std::vector<Elem>& basis, uint64_t q) {
    detail::check_subfield(e, q);
    QPoly<GF> m = QPoly<GF>::x(e, q);
    for (const Elem& a : basis) {
        const Elem v = qp_evaluate(m, a);
        if (e.is_zero(v)) throw precondition_error("basis elements are F_q-linearly dependent");
        const Elem s = e.pow(v, q - 1);
        QPoly<GF> next(e, q);
        for (const auto& [i, c] : m.terms()) next.set_term(i + 1, e.qth_power(c, q));
        for (const auto& [i, c] : m.terms()) next.set_term(i, e.sub(next.coeff(i), e.mul(s, c)));
        m = std::move(next);
    }
    return m;
}

/// Moore q-polynomial of a basis; both constructions are computed and must agree.
inline QPoly<GF> moore_qpoly(const GF& e, const std::vector<Elem>& basis, uint64_t q) {
    QPoly<GF> a = moore_qpoly_product(e, basis, q);
    if (!(a == moore_qpoly_determinant(e, basis, q))) throw error("Moore determinant and product disagree");
    return a;
}

inline QPoly<GF> moore_qpoly(const std::vector<FieldElement>& basis, uint64_t q) {
    if (basis.empty()) throw precondition_error("empty basis needs an explicit field");
    std::vector<Elem> b;
    for (const auto& x : basis) {
        if (!(x.field() == basis.front().field())) throw field_mismatch("basis elements in different fields");
        b.push_back(x.value());
    }
    return moore_qpoly(basis.front().field(), b, q);
}

/// "x^4096 + (t^24 + t)*x^2048 + ... + x": descending q-powers, compound coefficients parenthesized.
template <class K>
std::string to_string(const QPoly<K>& l) {
    if (l.is_zero()) return "0";
    std::string s;
    uint64_t deg = 1;
    std::vector<uint64_t> degs;
    for (int i = 0; i <= l.qdegree(); ++i, deg *= l.q()) degs.push_back(deg);
    for (auto it = l.terms().rbegin(); it != l.terms().rend(); ++it) {
        if (!s.empty()) s += " + ";
        const std::string mono = degs[it->first] == 1 ? "x" : "x^" + std::to_string(degs[it->first]);
        if (l.field().equal(it->second, l.field().one())) {
            s += mono;
            continue;
        }
        std::string c = l.field().to_string(it->second);
        if (c.find(' ') != std::string::npos) c = "(" + c + ")";
        s += c + "*" + mono;
    }
    return s;
}

}  // namespace qlin

#endif
