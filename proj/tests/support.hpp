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

// Random instance generators and independent oracles shared by the test suites and the acceptance binary.

#ifndef QLIN_TESTS_SUPPORT_HPP
#define QLIN_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qlin/goldens.hpp"
#include "qlin/qlin.hpp"

namespace qlin::testing {

#ifdef QLIN_TEST_CORPUS
inline const char* corpus_path() { return QLIN_TEST_CORPUS; }
#else
inline const char* corpus_path() { return "data/goldens.json"; }
#endif

/// Elements of F_q inside e, as a subfield.
inline std::vector<Elem> subfield_elements(const GF& e, uint64_t q) {
    const GF fq = GF::make(e.characteristic(), e.log_p(q));
    const Embedding emb = Embedding::canonical(fq, e);
    std::vector<Elem> out;
    for (const Elem& a : fq.elements()) out.push_back(emb.apply(a));
    return out;
}

/// All F_q-combinations of the basis, by exhaustive enumeration.
inline std::vector<Elem> span(const GF& e, const std::vector<Elem>& basis, const std::vector<Elem>& scalars) {
    std::vector<Elem> out{e.zero()};
    for (const Elem& b : basis) {
        std::vector<Elem> next;
        for (const Elem& v : out)
            for (const Elem& c : scalars) next.push_back(e.add(v, e.mul(c, b)));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Elem& a, const Elem& b) { return a.v < b.v; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct SubspaceCase {
    GF field;
    uint64_t q;
    std::vector<Elem> basis;
    std::vector<Elem> span_elements;
    GFPoly f;  ///< product of (x - v) over a spanning set of nonzero v
};

/// A random n-dimensional F_q-subspace of F_{p^d} and a random spanning set of its nonzero vectors.
inline SubspaceCase random_subspace_case(std::mt19937_64& rng, uint32_t p, unsigned d, uint64_t q, unsigned n) {
    const GF e = GF::make(p, d);
    const auto scalars = subfield_elements(e, q);
    std::vector<Elem> basis;
    std::vector<Elem> sp{e.zero()};
    while (basis.size() < n) {
        const Elem v = e.random(rng);
        if (std::binary_search(sp.begin(), sp.end(), v, [](const Elem& a, const Elem& b) { return a.v < b.v; })) continue;
        basis.push_back(v);
        sp = span(e, basis, scalars);
    }
    std::vector<Elem> chosen = basis;
    for (const Elem& v : sp)
        if (!e.is_zero(v) && rng() % 2) chosen.push_back(v);
    std::sort(chosen.begin(), chosen.end(), [](const Elem& a, const Elem& b) { return a.v < b.v; });
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    GFPoly f = GFPoly::constant(e, e.one());
    for (const Elem& v : chosen) f *= GFPoly(e, {e.neg(v), e.one()});
    return {e, q, basis, sp, f};
}

/// Draws the field parameters of criterion 9: F_{2^d} (d <= 12, q in {2, 4}) or F_{3^d} (d <= 6, q = 3).
inline SubspaceCase random_oracle_case(std::mt19937_64& rng) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 2);
    if (rng() % 2) {
        const bool q4 = rng() % 3 == 0;
        const unsigned r = q4 ? 2 : 1;
        // need d / r >= n and r | d
        const unsigned lo = n * r, hi = 12;
        unsigned d = lo + static_cast<unsigned>(rng() % (hi - lo + 1));
        d -= d % r;
        return random_subspace_case(rng, 2, d, q4 ? 4 : 2, n);
    }
    const unsigned d = n + static_cast<unsigned>(rng() % (6 - n + 1));
    return random_subspace_case(rng, 3, d, 3, n);
}

/// Irreducibility over F_q(t) of a monic f with F_q[t] coefficients: some specialization stays irreducible.
inline bool certified_irreducible(const RatPoly& f, unsigned max_ext = 2) {
    const uint32_t p = f.field().base().characteristic();
    for (unsigned e = 1; e <= max_ext; ++e) {
        const GF fe = GF::make(p, f.field().base().degree() * e);
        for (const Elem& a : fe.elements())
            if (is_irreducible(specialize_poly(f, FieldElement(fe, a)))) return true;
    }
    return false;
}

inline TPoly random_tpoly(const GF& f, int max_degree, std::mt19937_64& rng) {
    TPoly a;
    const int d = static_cast<int>(rng() % (max_degree + 1));
    for (int i = 0; i <= d; ++i) a.c.push_back(static_cast<uint32_t>(f.random(rng).v));
    TRing::trim(a);
    return a;
}

/// Larger t-degree guard for the p = 7 projective family, whose linearizations reach t-degree ~ 7^7 / 8.
inline constexpr int projective_p7_guard = 1 << 20;

/// x^{p+1} - a x - b with random nonzero a, b in F_p[t] (t-degrees at most a_degree, b_degree), certified irreducible.
inline RatPoly random_projective_poly(uint32_t p, std::mt19937_64& rng, int a_degree = 1, int b_degree = 1,
                                      int t_degree_guard = default_t_degree_guard) {
    const RatFuncField k(GF::make(p, 1), t_degree_guard);
    while (true) {
        RatPoly f(k);
        f.set_coeff(p + 1, k.one());
        f.set_coeff(1, k.neg(k.from_poly(random_tpoly(k.base(), a_degree, rng))));
        f.set_coeff(0, k.neg(k.from_poly(random_tpoly(k.base(), b_degree, rng))));
        if (k.is_zero(f.coeff(0)) || k.is_zero(f.coeff(1))) continue;
        if (certified_irreducible(f)) return f;
    }
}

struct TraceSample {
    RatPoly f;
    bool trace_zero;
    unsigned m;
    bool as_predicted;  ///< m = deg f for nonzero trace, deg f - 1 for zero trace
};

/// Random monic separable irreducible f of degree 5..8 over F_2(t), coefficients of t-degree <= 2.
inline TraceSample random_trace_sample(std::mt19937_64& rng) {
    const RatFuncField k = RatFuncField::over(2, 1);
    while (true) {
        const int n = 5 + static_cast<int>(rng() % 4);
        RatPoly f(k);
        f.set_coeff(n, k.one());
        for (int i = 0; i < n; ++i) f.set_coeff(i, k.from_poly(random_tpoly(k.base(), 2, rng)));
        if (k.is_zero(f.coeff(0)) || f.derivative().is_zero()) continue;
        if (gcd(f, f.derivative()).degree() != 0) continue;
        if (!certified_irreducible(f, 3)) continue;
        const bool tz = k.is_zero(f.coeff(n - 1));
        const unsigned m = minimal_qpoly(f, 2).m;
        return {f, tz, m, m == static_cast<unsigned>(tz ? n - 1 : n)};
    }
}

/// Corpus rows whose minimal linearization has F_q[t] coefficients and base field of size q.
inline std::vector<std::pair<GoldenRow, QPoly<RatFuncField>>> polynomial_linearizations(bool include_slow) {
    std::vector<std::pair<GoldenRow, QPoly<RatFuncField>>> out;
    for (const auto& row : load_goldens(corpus_path())) {
        if (row.slow && !include_slow) continue;
        const RatFuncField k(GF::make(row.p, row.k));
        if (row.q != k.base().size()) continue;
        const auto res = minimal_qpoly(parse_poly(row.f, k), row.q);
        bool integral = true;
        for (const auto& [i, c] : res.L.terms()) integral = integral && c.den.is_one();
        if (integral) out.emplace_back(row, res.L);
    }
    return out;
}

}  // namespace qlin::testing

#endif
