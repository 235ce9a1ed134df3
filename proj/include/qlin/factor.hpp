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
 * @file factor.hpp
 * @brief Factorization and root finding over finite fields, and subfield embeddings.
 *
 * Factorization follows the classical three stages: squarefree decomposition (with p-th root descent when
 * the derivative vanishes), distinct-degree splitting, and Cantor-Zassenhaus equal-degree splitting. In
 * characteristic 2 the equal-degree stage uses the trace map instead of the (q^d - 1)/2 power.
 */

#ifndef QLIN_FACTOR_HPP
#define QLIN_FACTOR_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace qlin {

using GFPoly = Poly<GF>;

struct Factor {
    GFPoly poly;
    unsigned multiplicity;
};

namespace detail {

/// Canonical order: by degree, then coefficient vectors lexicographically from the constant term.
inline bool poly_less(const GFPoly& a, const GFPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const GF& f = a.field();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const auto& x = a.coeffs()[i];
        const auto& y = b.coeffs()[i];
        if (x == y) continue;
        return f.lex_less(x, y);
    }
    return false;
}

inline GFPoly random_poly(const GF& f, int degree_below, std::mt19937_64& rng) {
    std::vector<Elem> c(static_cast<std::size_t>(degree_below));
    for (auto& e : c) e = f.random(rng);
    return GFPoly(f, std::move(c));
}

/// g^{|F|} mod m, by k successive p-th powers.
inline GFPoly field_power_mod(const GFPoly& g, const GFPoly& m) {
    const GF& f = m.field();
    GFPoly r = g % m;
    for (unsigned i = 0; i < f.degree(); ++i) r = qth_power_mod(r, m, f.characteristic());
    return r;
}

/// p-th root of a polynomial whose derivative vanishes: f = g(x^p) = (g^{1/p})^p.
inline GFPoly pth_root(const GFPoly& a) {
    const GF& f = a.field();
    const uint32_t p = f.characteristic();
    const unsigned back = f.degree() - 1;  // a^{1/p} = a^{p^{k-1}}
    std::vector<Elem> c;
    for (std::size_t i = 0; i < a.coeffs().size(); i += p) c.push_back(f.frobenius(a.coeffs()[i], back));
    return GFPoly(f, std::move(c));
}

}  // namespace detail

/// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
inline std::vector<Factor> squarefree_decomposition(const GFPoly& f0) {
    if (f0.degree() < 1) throw precondition_error("squarefree decomposition of a constant");
    const GF& k = f0.field();
    const uint32_t p = k.characteristic();
    std::vector<Factor> out;
    // recursive: f = prod a_i^i
    struct Frame {
        GFPoly f;
        unsigned scale;
    };
    std::vector<Frame> stack{{f0.monic(), 1}};
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        GFPoly f = fr.f;
        if (f.degree() < 1) continue;
        const GFPoly d = f.derivative();
        if (d.is_zero()) {
            stack.push_back({detail::pth_root(f), fr.scale * p});
            continue;
        }
        GFPoly c = gcd(f, d);
        GFPoly w = f / c;
        unsigned i = 1;
        while (w.degree() >= 1) {
            GFPoly y = gcd(w, c);
            GFPoly z = w / y;
            if (z.degree() >= 1) out.push_back({z.monic(), i * fr.scale});
            ++i;
            w = y;
            c = c / y;
        }
        if (c.degree() >= 1) stack.push_back({detail::pth_root(c.monic()), fr.scale * p});
    }
    // merge equal parts (possible across p-power levels)
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.multiplicity < b.multiplicity; });
    return out;
}

/// Distinct-degree splitting of a monic squarefree polynomial: (product of all degree-d factors, d).
inline std::vector<std::pair<GFPoly, unsigned>> distinct_degree_factorization(const GFPoly& f0) {
    const GF& k = f0.field();
    std::vector<std::pair<GFPoly, unsigned>> out;
    GFPoly f = f0.monic();
    GFPoly h = GFPoly::x(k) % f;
    const GFPoly x = GFPoly::x(k);
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
        h = detail::field_power_mod(h, f);
        GFPoly g = gcd(f, h - x);
        if (g.degree() >= 1) {
            out.push_back({g, d});
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() >= 1) out.push_back({f, static_cast<unsigned>(f.degree())});
    return out;
}

/// Splits a monic squarefree polynomial all of whose irreducible factors have degree d.
inline std::vector<GFPoly> equal_degree_factorization(const GFPoly& f, unsigned d, std::mt19937_64& rng) {
    const GF& k = f.field();
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == d) return {f.monic()};
    const uint32_t p = k.characteristic();
    std::vector<GFPoly> work{f.monic()}, done;
    const GFPoly one = GFPoly::constant(k, k.one());
    while (!work.empty()) {
        GFPoly g = std::move(work.back());
        work.pop_back();
        if (static_cast<unsigned>(g.degree()) == d) {
            done.push_back(std::move(g));
            continue;
        }
        while (true) {
            GFPoly h = detail::random_poly(k, g.degree(), rng);
            if (h.degree() < 1) continue;
            GFPoly w(k);
            if (p == 2) {
                // absolute trace: sum_{i < k d} h^{2^i}
                GFPoly t = h % g;
                w = t;
                for (unsigned i = 1; i < k.degree() * d; ++i) {
                    t = qth_power_mod(t, g, 2);
                    w = w + t;
                }
            } else {
                // h^{(Q^d - 1)/2} = prod_{i<d} (h^{(Q-1)/2})^{Q^i}
                const u128 half = k.order_minus_one() / 2;
                GFPoly u = powmod(h, half, g);
                GFPoly prod = u;
                for (unsigned i = 1; i < d; ++i) {
                    u = detail::field_power_mod(u, g);
                    prod = mulmod(prod, u, g);
                }
                w = prod - one;
            }
            GFPoly s = gcd(g, w.is_zero() ? g : w);
            if (s.degree() >= 1 && s.degree() < g.degree()) {
                work.push_back(g / s);
                work.push_back(s);
                break;
            }
        }
    }
    return done;
}

/// Complete factorization into monic irreducibles with multiplicities, canonically sorted.
inline std::vector<Factor> factor(const GFPoly& f, std::mt19937_64& rng) {
    if (f.degree() < 1) throw precondition_error("cannot factor a constant polynomial");
    std::vector<Factor> out;
    for (const auto& [part, mult] : squarefree_decomposition(f))
        for (const auto& [block, d] : distinct_degree_factorization(part))
            for (auto& irr : equal_degree_factorization(block, d, rng)) out.push_back({std::move(irr), mult});
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (detail::poly_less(a.poly, b.poly)) return true;
        if (detail::poly_less(b.poly, a.poly)) return false;
        return a.multiplicity < b.multiplicity;
    });
    // identical irreducibles from different squarefree levels are merged
    std::vector<Factor> merged;
    for (auto& fa : out) {
        if (!merged.empty() && merged.back().poly == fa.poly)
            merged.back().multiplicity += fa.multiplicity;
        else
            merged.push_back(std::move(fa));
    }
    return merged;
}

inline std::vector<Factor> factor(const GFPoly& f, uint64_t seed = 0) {
    std::mt19937_64 rng(seed);
    return factor(f, rng);
}

inline bool is_irreducible(const GFPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (f.derivative().is_zero() || gcd(f, f.derivative()).degree() > 0) return false;
    const auto dd = distinct_degree_factorization(f);
    return dd.size() == 1 && dd.front().second == static_cast<unsigned>(f.degree());
}

/// Sorted multiset (descending) of irreducible factor degrees, counted with multiplicity.
inline std::vector<unsigned> factor_degrees(const GFPoly& f, uint64_t seed = 0) {
    std::vector<unsigned> out;
    for (const auto& fa : factor(f, seed))
        for (unsigned i = 0; i < fa.multiplicity; ++i) out.push_back(static_cast<unsigned>(fa.poly.degree()));
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// Distinct roots of f lying in its own coefficient field, sorted lexicographically by coordinates.
inline std::vector<Elem> roots_in_field(const GFPoly& f, std::mt19937_64& rng) {
    if (f.is_zero()) throw precondition_error("roots of the zero polynomial");
    const GF& k = f.field();
    std::vector<Elem> out;
    if (f.degree() < 1) return out;
    const GFPoly x = GFPoly::x(k);
    const GFPoly fm = f.monic();
    GFPoly g = gcd(fm, detail::field_power_mod(x % fm, fm) - x);
    if (g.degree() < 1) return out;
    for (const auto& lin : equal_degree_factorization(g, 1, rng)) out.push_back(k.neg(lin.coeff(0)));
    std::sort(out.begin(), out.end(), [&k](const Elem& a, const Elem& b) { return k.lex_less(a, b); });
    return out;
}

/**
 * A field homomorphism source -> target determined by the image of the source generator. The canonical
 * embedding sends the generator to the lexicographically least root of the source modulus in the target.
 */
class Embedding {
   public:
    Embedding(GF source, GF target, Elem image_of_generator)
        : source_(std::move(source)), target_(std::move(target)), image_(image_of_generator) {
        if (source_.characteristic() != target_.characteristic() || target_.degree() % source_.degree() != 0)
            throw precondition_error("cannot embed " + source_.name() + " into " + target_.name());
        // power images g^i -> image^i
        Elem pw = target_.one();
        for (unsigned i = 0; i < source_.degree(); ++i) {
            basis_images_.push_back(pw);
            pw = target_.mul(pw, image_);
        }
        // image must be a root of the source modulus
        const auto& m = source_.modulus();
        Elem acc = target_.zero();
        for (std::size_t i = m.size(); i-- > 0;) acc = target_.add(target_.mul(acc, image_), target_.from_int(m[i]));
        if (!target_.is_zero(acc)) throw precondition_error("image of generator is not a root of the source modulus");
    }

    static Embedding canonical(const GF& source, const GF& target);

    const GF& source() const noexcept { return source_; }
    const GF& target() const noexcept { return target_; }
    const Elem& image_of_generator() const noexcept { return image_; }

    Elem apply(const Elem& e) const {
        if (source_.degree() == 1) return target_.from_int(static_cast<int64_t>(e.v));
        Elem out = target_.zero();
        const auto c = source_.coords(e);
        for (unsigned i = 0; i < c.size(); ++i) {
            if (!c[i]) continue;
            out = target_.add(out, target_.mul(target_.from_int(c[i]), basis_images_[i]));
        }
        return out;
    }

    FieldElement operator()(const FieldElement& e) const {
        if (!(e.field() == source_)) throw field_mismatch("element is not in the embedding source");
        return {target_, apply(e.value())};
    }

    GFPoly apply(const GFPoly& f) const {
        if (!(f.field() == source_)) throw field_mismatch("polynomial is not over the embedding source");
        std::vector<Elem> c;
        c.reserve(f.coeffs().size());
        for (const auto& e : f.coeffs()) c.push_back(apply(e));
        return GFPoly(target_, std::move(c));
    }

   private:
    GF source_, target_;
    Elem image_;
    std::vector<Elem> basis_images_;
};

inline Embedding Embedding::canonical(const GF& source, const GF& target) {
    if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0)
        throw precondition_error("cannot embed " + source.name() + " into " + target.name());
    if (source.degree() == 1) return Embedding(source, target, target.zero());
    std::vector<Elem> m;
    for (auto c : source.modulus()) m.push_back(target.from_int(c));
    std::mt19937_64 rng(0);
    const auto rs = roots_in_field(GFPoly(target, std::move(m)), rng);
    if (rs.empty()) throw error("source modulus has no root in target");  // impossible for k | n
    return Embedding(source, target, rs.front());
}

inline FieldElement embed(const FieldElement& e, const Embedding& emb) { return emb(e); }

/// All distinct roots of f inside F (coefficients of f may lie in a subfield of F), lexicographically sorted.
inline std::vector<Elem> roots(const GFPoly& f, const GF& field, uint64_t seed = 0) {
    std::mt19937_64 rng(seed);
    if (f.field() == field) return roots_in_field(f, rng);
    return roots_in_field(Embedding::canonical(f.field(), field).apply(f), rng);
}

}  // namespace qlin

#endif
