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
 * @file minimal.hpp
 * @brief Minimal q-polynomials and m(f).
 *
 * The residues r_i = x^{q^i} mod f are generated one at a time and tested for linear dependence over the
 * coefficient field. The first dependence r_n = sum c_i r_i gives L = x^{q^n} - sum c_i x^{q^i}.
 *
 * Over F_q(t) the input is first rescaled to a monic polynomial with coefficients in F_q[t], so every r_i
 * stays polynomial in t and the elimination runs fraction-free with content removal.
 */

#ifndef QLIN_MINIMAL_HPP
#define QLIN_MINIMAL_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "funcfield.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "qpoly.hpp"

namespace qlin {

template <ExactField K>
struct LinearizationResult {
    unsigned m = 0;
    QPoly<K> L;
    /// c with x^{q^m} = sum_{i<m} c_i x^{q^i} modulo f.
    std::vector<typename K::value_type> certificate;
};

namespace detail {

/// Removes a simple factor x; rejects x^2 | f and zero derivative.
template <ExactField K>
Poly<K> strip_x_factor(const Poly<K>& f) {
    if (f.degree() < 1) throw precondition_error("minimal q-polynomial of a constant");
    if (f.derivative().is_zero()) throw precondition_error("inseparable input: derivative is zero");
    if (!f.field().is_zero(f.coeff(0))) return f;
    std::vector<typename K::value_type> c(f.coeffs().begin() + 1, f.coeffs().end());
    Poly<K> h(f.field(), std::move(c));
    if (h.degree() >= 1 && h.field().is_zero(h.coeff(0))) throw precondition_error("inseparable input: x^2 divides f");
    return h;
}

template <ExactField K>
LinearizationResult<K> assemble(const K& k, uint64_t q, const std::vector<typename K::value_type>& c) {
    LinearizationResult<K> out{static_cast<unsigned>(c.size()), QPoly<K>(k, q), c};
    out.L.set_term(out.m, k.one());
    for (std::size_t i = 0; i < c.size(); ++i) out.L.set_term(static_cast<unsigned>(i), k.neg(c[i]));
    return out;
}

}  // namespace detail

/// Minimal q-polynomial of f over a finite field containing F_q.
inline LinearizationResult<GF> minimal_qpoly(const GFPoly& f, uint64_t q) {
    const GF& k = f.field();
    detail::check_subfield(k, q);
    const GFPoly h = detail::strip_x_factor(f).monic();
    if (h.degree() == 0) return detail::assemble(k, q, {});
    if (gcd(h, h.derivative()).degree() != 0) throw precondition_error("inseparable input: repeated roots");
    const std::size_t n = static_cast<std::size_t>(h.degree());
    DependenceFinder<GF> dep(k, n);
    GFPoly r = GFPoly::x(k) % h;
    while (true) {
        std::vector<Elem> v(n, k.zero());
        for (std::size_t j = 0; j < r.coeffs().size(); ++j) v[j] = r.coeffs()[j];
        if (auto c = dep.add(v)) return detail::assemble(k, q, *c);
        r = qth_power_mod(r, h, q);
    }
}

namespace detail {

using TVec = std::vector<TPoly>;

/// Fraction-free elimination over F_q[t] that tracks each row as a combination of the inputs.
class FractionFreeEliminator {
   public:
    FractionFreeEliminator(const TRing& ring, std::size_t dim) : ring_(ring), dim_(dim) {}

    /// Returns the combination (over all inputs, the new one last) that vanishes, if v is dependent.
    std::optional<TVec> add(TVec v) {
        TVec comb(count_ + 1);
        comb[count_] = ring_.one();
        for (const Row& row : rows_) {
            const TPoly& a = v[row.piv];
            if (a.is_zero()) continue;
            const TPoly& p = row.vec[row.piv];
            const TPoly g = ring_.gcd(p, a);
            const TPoly pa = ring_.exact_div(p, g);
            const TPoly aa = ring_.exact_div(a, g);
            combine(v, pa, aa, row.vec);
            combine(comb, pa, aa, row.comb);
            strip_content(v, comb);
        }
        std::size_t piv = 0;
        while (piv < dim_ && v[piv].is_zero()) ++piv;
        ++count_;
        if (piv == dim_) return comb;
        rows_.push_back({std::move(v), std::move(comb), piv});
        return std::nullopt;
    }

   private:
    struct Row {
        TVec vec, comb;
        std::size_t piv;
    };

    // x <- pa * x - aa * y
    void combine(TVec& x, const TPoly& pa, const TPoly& aa, const TVec& y) const {
        if (x.size() < y.size()) x.resize(y.size());
        for (std::size_t j = 0; j < x.size(); ++j) {
            TPoly lhs = pa.is_one() ? std::move(x[j]) : ring_.mul(pa, x[j]);
            if (j < y.size() && !y[j].is_zero()) lhs = ring_.sub(lhs, ring_.mul(aa, y[j]));
            x[j] = std::move(lhs);
        }
    }

    void strip_content(TVec& v, TVec& comb) const {
        const TPoly* smallest = nullptr;
        for (const auto* vec : {&v, &comb})
            for (const auto& e : *vec)
                if (!e.is_zero() && (!smallest || e.degree() < smallest->degree())) smallest = &e;
        if (!smallest || smallest->degree() == 0) return;
        TPoly g = ring_.monic(*smallest);
        for (const auto* vec : {&v, &comb})
            for (const auto& e : *vec) {
                if (e.is_zero()) continue;
                g = ring_.gcd(g, e);
                if (g.degree() == 0) return;
            }
        for (auto* vec : {&v, &comb})
            for (auto& e : *vec)
                if (!e.is_zero()) e = ring_.exact_div(e, g);
    }

    const TRing& ring_;
    std::size_t dim_;
    std::size_t count_ = 0;
    std::vector<Row> rows_;
};

/// (sum v_j x^j)^q reduced modulo the monic integral g (given by its coefficients, leading 1 omitted).
inline TVec qth_power_mod_integral(const TRing& ring, const TVec& v, const TVec& g, uint64_t q) {
    const std::size_t n = g.size();
    TVec w(n == 0 ? 0 : (n - 1) * q + 1);
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) w[j * q] = ring.qth_power(v[j], q);
    for (std::size_t d = w.size(); d-- > n;) {
        if (w[d].is_zero()) continue;
        const TPoly c = std::move(w[d]);
        w[d] = TPoly{};
        for (std::size_t j = 0; j < n; ++j)
            if (!g[j].is_zero()) w[d - n + j] = ring.sub(w[d - n + j], ring.mul(c, g[j]));
    }
    w.resize(n);
    return w;
}

/// Proves separability of h over F_q(t) by finding a separable specialization of full degree.
inline bool separable_by_specialization(const RatPoly& h, const RatFuncField& k) {
    const GF& base = k.base();
    const uint32_t p = base.characteristic();
    unsigned e = 1;
    while (e < 16 && static_cast<double>(base.size()) * std::pow(static_cast<double>(p), e) < 65536.0) ++e;
    GF big = base;
    try {
        big = GF::make(p, base.degree() * e);
    } catch (const guard_exceeded&) {
        return false;
    }
    const Embedding emb = Embedding::canonical(base, big);
    std::mt19937_64 rng(0x5eed);
    for (int attempt = 0; attempt < 24; ++attempt) {
        const Elem a = big.random(rng);
        std::vector<Elem> c;
        bool pole = false;
        for (const auto& r : h.coeffs()) {
            const Elem d = k.ring().eval_at(r.den, a, emb);
            if (big.is_zero(d)) {
                pole = true;
                break;
            }
            c.push_back(big.div(k.ring().eval_at(r.num, a, emb), d));
        }
        if (pole || big.is_zero(c.back())) continue;
        const GFPoly s(big, std::move(c));
        if (gcd(s, s.derivative()).degree() == 0) return true;
    }
    return false;
}

}  // namespace detail

/**
 * Minimal q-polynomial of f over F_{q'}(t), where F_q is a subfield of F_{q'}. The returned L has
 * coefficients in F_{q'}[t] whenever f is monic with coefficients in F_{q'}[t].
 */
inline LinearizationResult<RatFuncField> minimal_qpoly(const RatPoly& f, uint64_t q) {
    const RatFuncField& k = f.field();
    detail::check_subfield(k.base(), q);
    const RatPoly h = detail::strip_x_factor(f).monic();
    if (h.degree() == 0) return detail::assemble(k, q, {});
    if (!detail::separable_by_specialization(h, k) && gcd(h, h.derivative()).degree() != 0)
        throw precondition_error("inseparable input: repeated roots");
    const TRing& ring = k.ring();
    const std::size_t n = static_cast<std::size_t>(h.degree());

    // l = lcm of denominators; g(y) = l^n h(y / l) is monic with coefficients in F_q[t]
    TPoly l = ring.one();
    for (const auto& c : h.coeffs())
        if (!c.den.is_one()) l = ring.exact_div(ring.mul(l, c.den), ring.gcd(l, c.den));
    detail::TVec g(n);
    {
        const RatFunc lr = k.from_poly(l);
        RatFunc lp = k.one();  // l^{n-j}
        for (std::size_t j = n; j-- > 0;) {
            lp = k.mul(lp, lr);
            const RatFunc c = k.mul(h.coeffs()[j], lp);
            if (!c.den.is_one()) throw error("rescaled coefficient is not integral");
            g[j] = c.num;
        }
    }

    detail::FractionFreeEliminator elim(ring, n);
    detail::TVec r(n);
    if (n == 1)
        r[0] = ring.neg(g[0]);
    else
        r[1] = ring.one();
    std::optional<detail::TVec> comb;
    while (!(comb = elim.add(r))) r = detail::qth_power_mod_integral(ring, r, g, q);

    // L_g(y) = y^{q^m} + sum (comb_j / comb_m) y^{q^j};  L_h(x) = l^{-q^m} L_g(l x)
    const unsigned m = static_cast<unsigned>(comb->size() - 1);
    const TPoly& lead = comb->back();
    std::vector<RatFunc> lpow{k.from_poly(l)};  // l^{q^j}
    for (unsigned j = 1; j <= m; ++j) lpow.push_back(l.is_one() ? lpow.back() : k.qth_power(lpow.back(), q));
    std::vector<RatFunc> cert;
    for (unsigned j = 0; j < m; ++j) {
        RatFunc b = k.normalize((*comb)[j], lead);
        if (!l.is_one()) b = k.div(k.mul(b, lpow[j]), lpow[m]);
        cert.push_back(k.neg(b));
    }
    return detail::assemble(k, q, cert);
}

/// m(f) alone.
template <class P>
unsigned linearization_degree(const P& f, uint64_t q) {
    return minimal_qpoly(f, q).m;
}

}  // namespace qlin

#endif
