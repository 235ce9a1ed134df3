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
 * @file specialize.hpp
 * @brief Specialization t -> a, cycle types from factor degrees, and the Frobenius action on root spaces
 * of specialized q-polynomials.
 */

#ifndef QLIN_SPECIALIZE_HPP
#define QLIN_SPECIALIZE_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "factor.hpp"
#include "funcfield.hpp"
#include "matrix.hpp"
#include "qpoly.hpp"

namespace qlin {

/// Irreducible factor degrees, largest first.
using CycleType = std::vector<unsigned>;

/// "(7)^3(1)^3"
inline std::string cycle_notation(const CycleType& c) {
    std::map<unsigned, unsigned, std::greater<>> mult;
    for (unsigned d : c) ++mult[d];
    std::string s;
    for (const auto& [d, m] : mult) s += "(" + std::to_string(d) + ")" + (m > 1 ? "^" + std::to_string(m) : "");
    return s;
}

inline unsigned cycle_lcm(const CycleType& c) {
    unsigned l = 1;
    for (unsigned d : c) l = std::lcm(l, d);
    return l;
}

/// Coefficient-wise evaluation at a; the result lives over a's field.
inline GFPoly specialize_poly(const RatPoly& f, const FieldElement& a) {
    const RatFuncField& k = f.field();
    const Embedding emb = Embedding::canonical(k.base(), a.field());
    std::vector<Elem> c;
    c.reserve(f.coeffs().size());
    for (const auto& r : f.coeffs()) c.push_back(rf_eval(k, r, a.value(), emb));
    return GFPoly(a.field(), std::move(c));
}

/// Factor degrees of f(x, a); requires the specialization to keep its degree and stay separable.
inline CycleType cycle_type(const RatPoly& f, const FieldElement& a, uint64_t seed = 0) {
    const GFPoly g = specialize_poly(f, a);
    if (g.degree() != f.degree())
        throw ramified_error("ramified: leading coefficient vanishes at " + a.to_string());
    if (g.derivative().is_zero() || gcd(g, g.derivative()).degree() != 0)
        throw ramified_error("ramified: f(x, " + a.to_string() + ") has repeated roots");
    return factor_degrees(g, seed);
}

namespace detail {

inline void require_polynomial_qpoly(const QPoly<RatFuncField>& l) {
    if (l.is_zero() || !l.is_monic()) throw precondition_error("q-polynomial must be monic");
    for (const auto& [i, c] : l.terms())
        if (!c.den.is_one()) throw precondition_error("coefficients must lie in F_q[t]");
    if (l.q() != l.field().base().size())
        throw precondition_error("q must equal the size of the constant field " + l.field().base().name());
}

inline Elem lambda_in_base(const RatFuncField& k, const FieldElement& lambda) {
    if (lambda.field() == k.base()) return lambda.value();
    throw precondition_error("lambda must lie in " + k.base().name());
}

}  // namespace detail

/// x^n + a_{n-1}(lambda) x^{n-1} + ... + a_0(lambda) for monic L with F_q[t] coefficients.
inline GFPoly frobenius_associate(const QPoly<RatFuncField>& l, const FieldElement& lambda) {
    detail::require_polynomial_qpoly(l);
    const RatFuncField& k = l.field();
    const GF& fq = k.base();
    const Elem lam = detail::lambda_in_base(k, lambda);
    const Embedding id(fq, fq, fq.generator());
    GFPoly out(fq);
    for (const auto& [i, c] : l.terms()) out.set_coeff(i, k.ring().eval_at(c.num, lam, id));
    if (fq.is_zero(out.coeff(0)))
        throw precondition_error("a_0(lambda) = 0 at lambda = " + lambda.to_string() + "; need a_0(lambda) != 0");
    return out;
}

struct CyclicReport {
    std::string status;  ///< "verified", "mismatch", "not cyclic" or "splitting field too large"
    unsigned n = 0;
    unsigned splitting_degree = 0;  ///< r with splitting field F_{q^r}
    unsigned root_space_dim = 0;    ///< F_q-dimension of the roots found
    std::optional<GFPoly> associate;
    std::optional<GFPoly> frobenius_minpoly;
    bool cyclic = false;
    bool matches = false;

    bool skipped() const noexcept { return status == "splitting field too large"; }
    bool passed() const noexcept { return status == "verified"; }
};

/**
 * Builds the splitting field of P = L(x, lambda) over F_q, extracts the root space V as the kernel of the
 * F_p-linear map v -> P(v), and compares the minimal polynomial of v -> v^q on V with the associate.
 */
inline CyclicReport verify_cyclic_element(const QPoly<RatFuncField>& l, const FieldElement& lambda,
                                          unsigned guard_bits = 128) {
    CyclicReport rep;
    const GFPoly assoc = frobenius_associate(l, lambda);
    const GF& fq = assoc.field();
    const uint32_t p = fq.characteristic();
    const unsigned e = fq.degree();
    const unsigned n = static_cast<unsigned>(l.qdegree());
    rep.n = n;
    rep.associate = assoc;
    if (n == 0) {
        rep.splitting_degree = 1;
        rep.frobenius_minpoly = assoc;
        rep.cyclic = rep.matches = true;
        rep.status = "verified";
        return rep;
    }

    // least r with x^{q^r} = x modulo P, tracked as q-polynomials of q-degree < n
    const auto& a = assoc.coeffs();
    std::vector<Elem> red(n, fq.zero());
    if (n > 0) red[0] = fq.one();
    const std::vector<Elem> start = red;
    const unsigned max_degree = p == 2 ? guard_bits : std::min(guard_bits, 32u);
    unsigned r = 0;
    do {
        ++r;
        if (e * r > max_degree) {
            rep.status = "splitting field too large";
            return rep;
        }
        const Elem top = red[n - 1];
        for (unsigned i = n - 1; i > 0; --i) red[i] = fq.sub(red[i - 1], fq.mul(top, a[i]));
        red[0] = fq.neg(fq.mul(top, a[0]));
    } while (red != start);
    rep.splitting_degree = r;

    GF big = fq;
    try {
        big = GF::make(p, e * r);
    } catch (const guard_exceeded&) {
        rep.status = "splitting field too large";
        return rep;
    }
    const Embedding emb = Embedding::canonical(fq, big);
    QPoly<GF> pl(big, l.q());
    for (unsigned i = 0; i < a.size(); ++i) pl.set_term(i, emb.apply(a[i]));

    const GF fp = GF::make(p, 1);
    const unsigned nbig = big.degree();
    auto fp_coords = [&](const Elem& x) {
        std::vector<Elem> v(nbig);
        const auto c = big.coords(x);
        for (unsigned i = 0; i < nbig; ++i) v[i] = Elem{c[i]};
        return v;
    };
    // matrix of v -> P(v) on the power basis of the big field
    Matrix<GF> pm(fp, nbig, nbig);
    Elem basis = big.one();
    const Elem gen = nbig == 1 ? big.one() : big.generator();
    for (unsigned j = 0; j < nbig; ++j) {
        const auto row = fp_coords(qp_evaluate(pl, basis));
        for (unsigned i = 0; i < nbig; ++i) pm(j, i) = row[i];
        basis = big.mul(basis, gen);
    }
    const Matrix<GF> ker = left_kernel(pm);
    auto element_of = [&](const std::vector<Elem>& v) {
        std::vector<uint32_t> c(nbig);
        for (unsigned i = 0; i < nbig; ++i) c[i] = static_cast<uint32_t>(v[i].v);
        return big.from_coords(c);
    };

    // F_q-basis of V from its F_p-echelon basis
    std::vector<Elem> gamma;  // images of 1, g, ..., g^{e-1} of F_q
    {
        Elem x = fq.one();
        for (unsigned i = 0; i < e; ++i) {
            gamma.push_back(emb.apply(x));
            x = fq.mul(x, fq.is_prime_field() ? fq.one() : fq.generator());
        }
    }
    DependenceFinder<GF> span(fp, nbig);
    std::vector<Elem> vb;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        const Elem v = element_of(ker.row(i));
        if (span.add(fp_coords(v))) continue;
        for (unsigned j = 1; j < e; ++j) span.add(fp_coords(big.mul(gamma[j], v)));
        vb.push_back(v);
    }
    rep.root_space_dim = static_cast<unsigned>(vb.size());
    if (vb.size() != n) {
        rep.status = "mismatch";
        return rep;
    }

    // matrix of v -> v^q in the basis vb, columns = images
    Matrix<GF> fr(fq, n, n);
    for (unsigned col = 0; col < n; ++col) {
        const auto c = span.add(fp_coords(big.qth_power(vb[col], l.q())));
        if (!c) {
            rep.status = "mismatch";
            return rep;
        }
        for (unsigned row = 0; row < n; ++row) {
            std::vector<uint32_t> cc(e);
            for (unsigned j = 0; j < e; ++j) cc[j] = static_cast<uint32_t>((*c)[row * e + j].v);
            fr(row, col) = fq.from_coords(cc);
        }
    }
    const GFPoly mu = minimal_polynomial(fr);
    rep.frobenius_minpoly = mu;
    rep.cyclic = mu.degree() == static_cast<int>(n);
    rep.matches = mu == assoc;
    rep.status = rep.matches && rep.cyclic ? "verified" : (rep.cyclic ? "mismatch" : "not cyclic");
    return rep;
}

}  // namespace qlin

#endif
