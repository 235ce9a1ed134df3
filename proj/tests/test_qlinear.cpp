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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"

namespace {

using namespace qlin;
using qlin::testing::polynomial_linearizations;

RatPoly P(const std::string& s, const RatFuncField& k) { return parse_poly(s, k); }

// q-polynomial from ordinary polynomial text, e.g. "x^4 + (t + 1)*x^2 + t*x".
QPoly<RatFuncField> Q(const std::string& s, const RatFuncField& k, uint64_t q) {
    const RatPoly f = P(s, k);
    QPoly<RatFuncField> l(k, q);
    uint64_t e = 1;
    for (unsigned i = 0; e < f.coeffs().size(); ++i, e *= q) l.set_term(i, f.coeffs()[e]);
    EXPECT_EQ(l.to_poly(), f) << s << " is not a q-polynomial";
    return l;
}

void check_bounds(const RatPoly& f, uint64_t q, unsigned m) {
    const int n = f.degree();
    EXPECT_LE(m, static_cast<unsigned>(n));
    EXPECT_GE(std::pow(static_cast<double>(q), m), n + 1.0) << to_string(f);
}

}  // namespace

TEST(QLinear, ArtinSchreierFamily) {
    for (auto [p, k] : std::vector<std::pair<uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {2, 3}, {5, 1}}) {
        const RatFuncField K = RatFuncField::over(p, k);
        const uint64_t q = K.base().size();
        const std::string qs = std::to_string(q), q1 = std::to_string(q - 1);
        const auto res = minimal_qpoly(P("x^" + qs + " + x + t", K), q);
        EXPECT_EQ(res.m, 2u);
        const RatPoly want = P("x^" + std::to_string(q * q) + " + (1 - t^" + q1 + ")*x^" + qs + " - t^" + q1 + "*x", K);
        EXPECT_EQ(res.L.to_poly(), want) << K.name();
    }
}

TEST(QLinear, SquareRootOfT) {
    for (uint32_t q : {3u, 5u, 7u, 11u}) {
        const RatFuncField K = RatFuncField::over(q, 1);
        const auto res = minimal_qpoly(P("x^2 - t", K), q);
        EXPECT_EQ(res.m, 1u);
        EXPECT_EQ(res.L.to_poly(), P("x^" + std::to_string(q) + " - t^" + std::to_string((q - 1) / 2) + "*x", K));
    }
}

TEST(QLinear, SmallExamples) {
    const RatFuncField K = RatFuncField::over(2, 1);
    const auto a = minimal_qpoly(P("x^2 + x", K), 2);
    EXPECT_EQ(a.m, 1u);
    EXPECT_EQ(a.L.to_poly(), P("x^2 + x", K));
    const auto g = minimal_qpoly(P("x^24 + x + t", K), 2);
    EXPECT_EQ(g.m, 12u);
    EXPECT_EQ(g.L.to_poly(), P("x^4096 + (t^24 + t)*x^2048 + t^128*x^1024 + (t^88 + t^65)*x^512 + t^16*x^32 + "
                               "t^9*x^16 + (t^40 + t^17)*x^8 + x^2 + (t^24 + t)*x",
                               K));
    EXPECT_EQ(to_string(g.L).substr(0, 28), "x^4096 + (t^24 + t)*x^2048 +");
}

TEST(QLinear, RejectsBadInput) {
    const RatFuncField K = RatFuncField::over(2, 1);
    EXPECT_THROW(minimal_qpoly(P("x^3 + t*x^2", K), 2), precondition_error);
    EXPECT_THROW(minimal_qpoly(P("x^2 + t", K), 2), precondition_error);
    EXPECT_THROW(minimal_qpoly(P("x^2 + x + t", K), 4), precondition_error);
    EXPECT_THROW(minimal_qpoly(P("1 + t", K), 2), precondition_error);
    const RatFuncField K3 = RatFuncField::over(3, 1);
    EXPECT_THROW(minimal_qpoly(P("(x + t)^2*(x + 1)", K3), 3), precondition_error);
}

TEST(QLinear, RationalCoefficients) {
    // y = t x turns x^3 + x + 1/t into y^3 + t^2 y + t^2
    const RatFuncField K = RatFuncField::over(2, 1);
    const RatPoly f = P("x^3 + x + 1/t", K);
    const auto res = minimal_qpoly(f, 2);
    EXPECT_TRUE(qp_divides(f, res.L));
    check_bounds(f, 2, res.m);
    const auto scaled = minimal_qpoly(P("x^3 + t^2*x + t^2", K), 2);
    EXPECT_EQ(scaled.m, res.m);
}

TEST(QLinear, OverFiniteFields) {
    const GF f4 = GF::make(2, 2);
    const auto res = minimal_qpoly(parse_poly("x^2 + x + 1", GF::make(2, 1)), 2);
    EXPECT_EQ(res.m, 2u);  // roots omega, omega^2 span F_4
    EXPECT_EQ(to_string(res.L.to_poly()), "x^4 + x");
    const auto r4 = minimal_qpoly(parse_poly("x^2 + x + 1", f4), 4);
    EXPECT_EQ(r4.m, 1u);
}

TEST(QLinear, MooreExamples) {
    const GF f4 = GF::make(2, 2);
    const FieldElement w{f4, f4.generator()}, one{f4, f4.one()};
    EXPECT_EQ(to_string(moore_qpoly({one, w}, 2).to_poly()), "x^4 + x");
    for (auto [p, k] : std::vector<std::pair<uint32_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}}) {
        const GF f = GF::make(p, k);
        const uint64_t q = f.size();
        const QPoly<GF> m = moore_qpoly({FieldElement(f, f.one())}, q);
        QPoly<GF> want(f, q, {{1u, f.one()}, {0u, f.neg(f.one())}});
        EXPECT_EQ(m, want);
    }
    std::mt19937_64 rng(1);
    for (uint64_t q : {2u, 4u, 8u}) {
        const GF e = GF::make(2, 12);
        const Elem a = e.random(rng);
        if (e.is_zero(a)) continue;
        QPoly<GF> want(e, q, {{1u, e.one()}, {0u, e.neg(e.pow(a, q - 1))}});
        EXPECT_EQ(moore_qpoly(e, {a}, q), want);
    }
    EXPECT_THROW(moore_qpoly({one, one}, 2), precondition_error);
}

TEST(QLinear, MooreVanishesExactlyOnSpan) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto c = qlin::testing::random_subspace_case(rng, 3, 4, 3, 2);
        const QPoly<GF> m = moore_qpoly(c.field, c.basis, 3);
        std::size_t zeros = 0;
        for (const Elem& v : c.field.elements()) zeros += c.field.is_zero(qp_evaluate(m, v));
        EXPECT_EQ(zeros, 9u);
        for (const Elem& v : c.span_elements) EXPECT_TRUE(c.field.is_zero(qp_evaluate(m, v)));
    }
}

TEST(QLinear, Evaluate) {
    const GF f4 = GF::make(2, 2);
    const QPoly<GF> l(GF::make(2, 1), 2, {{1u, Elem{1}}, {0u, Elem{1}}});
    EXPECT_EQ(qp_evaluate(l, FieldElement(f4, f4.generator())), FieldElement(f4, f4.one()));
    EXPECT_TRUE(qp_evaluate(l, FieldElement(f4, f4.zero())).is_zero());
    std::mt19937_64 rng(5);
    const GF e = GF::make(3, 7);
    const QPoly<GF> m(e, 3, {{3u, e.one()}, {1u, e.random(rng)}, {0u, e.random(rng)}});
    for (int i = 0; i < 100; ++i) {
        const Elem u = e.random(rng), v = e.random(rng);
        ASSERT_EQ(qp_evaluate(m, e.add(u, v)), e.add(qp_evaluate(m, u), qp_evaluate(m, v)));
    }
    const RatFuncField K = RatFuncField::over(2, 1);
    const auto lt = Q("x^4 + (t + 1)*x^2 + t*x", K, 2);
    const RatFunc r = parse_ratfunc("1/(t + 1)", K);
    EXPECT_EQ(qp_evaluate(lt, r), lt.to_poly().eval(r));
}

TEST(QLinear, Associate) {
    for (uint32_t q : {2u, 3u, 5u}) {
        const RatFuncField K = RatFuncField::over(q, 1);
        const std::string qs = std::to_string(q), q1 = std::to_string(q - 1);
        const auto l = Q("x^" + std::to_string(q * q) + " + (1 - t^" + q1 + ")*x^" + qs + " - t^" + q1 + "*x", K, q);
        EXPECT_EQ(qp_associate(l), P("x^2 + (1 - t^" + q1 + ")*x - t^" + q1, K));
        EXPECT_EQ(qp_associate(Q("x^" + qs + " - x", K, q)), P("x - 1", K));
    }
    const RatFuncField K = RatFuncField::over(2, 1);
    EXPECT_EQ(qp_associate(Q("x^2048 + t^64*x^512 + t^8*x^16 + t^16*x^8 + x", K, 2)),
              P("x^11 + t^64*x^9 + t^8*x^4 + t^16*x^3 + 1", K));
}

TEST(QLinear, Divides) {
    const RatFuncField K = RatFuncField::over(2, 1);
    EXPECT_TRUE(qp_divides(P("x^2 + x + t", K), Q("x^4 + (1 + t)*x^2 + t*x", K, 2)));
    EXPECT_TRUE(qp_divides(P("x", K), Q("x^4 + (1 + t)*x^2 + t*x", K, 2)));
    EXPECT_FALSE(qp_divides(P("x^2 + x + t + 1", K), Q("x^4 + (1 + t)*x^2 + t*x", K, 2)));
    const GF f2 = GF::make(2, 1);
    EXPECT_FALSE(qp_divides(parse_poly("x^2 + x + 1", f2), QPoly<GF>(f2, 2, {{1u, Elem{1}}, {0u, Elem{1}}})));
    // oracle: expand and divide
    const auto l = Q("x^4 + (1 + t)*x^2 + t*x", K, 2);
    EXPECT_TRUE((l.to_poly() % P("x^2 + x + t", K)).is_zero());
}

TEST(QLinear, GoldenInvariants) {
    for (const auto& row : load_goldens(qlin::testing::corpus_path())) {
        if (row.slow) continue;
        const RatFuncField K(GF::make(row.p, row.k));
        const RatPoly f = P(row.f, K);
        const auto res = minimal_qpoly(f, row.q);
        EXPECT_TRUE(qp_divides(f, res.L)) << row.name;
        EXPECT_TRUE((res.L.to_poly() % f).is_zero()) << row.name;
        if (!K.is_zero(f.coeff(0))) check_bounds(f, row.q, res.m);
        EXPECT_FALSE(K.is_zero(res.L.coeff(0))) << row.name;
        // certificate: x^{q^m} = sum c_i x^{q^i} mod f
        QPoly<RatFuncField> c(K, row.q);
        for (std::size_t i = 0; i < res.certificate.size(); ++i) c.set_term(static_cast<unsigned>(i), res.certificate[i]);
        c.set_term(res.m, K.neg(K.one()));
        EXPECT_TRUE(qp_divides(f, c)) << row.name;
    }
}

TEST(QLinear, BoundsOnRandomInstances) {
    std::mt19937_64 rng(41);
    for (auto [p, max_n] : std::vector<std::pair<uint32_t, int>>{{2, 9}, {3, 6}, {5, 4}}) {
        const RatFuncField K = RatFuncField::over(p, 1);
        for (int i = 0; i < 40; ++i) {
            const int n = 2 + static_cast<int>(rng() % (max_n - 1));
            RatPoly f(K);
            f.set_coeff(n, K.one());
            for (int j = 0; j < n; ++j) f.set_coeff(j, K.from_poly(qlin::testing::random_tpoly(K.base(), 2, rng)));
            if (K.is_zero(f.coeff(0)) || f.derivative().is_zero() || gcd(f, f.derivative()).degree() != 0) continue;
            const auto res = minimal_qpoly(f, p);
            check_bounds(f, p, res.m);
            ASSERT_TRUE(qp_divides(f, res.L)) << to_string(f);
            ASSERT_FALSE(K.is_zero(res.L.coeff(0)));
        }
    }
}

TEST(QLinear, ProjectiveFamily) {
    for (uint32_t p : {3u, 5u, 7u}) {
        const RatFuncField K(GF::make(p, 1), qlin::testing::projective_p7_guard);
        EXPECT_EQ(minimal_qpoly(P("x^" + std::to_string(p + 1) + " + t*x + 1", K), p).m, p);
    }
    std::mt19937_64 rng(91);
    for (uint32_t p : {3u, 5u}) {
        for (int i = 0; i < 5; ++i) {
            const RatPoly f = qlin::testing::random_projective_poly(p, rng);
            EXPECT_EQ(minimal_qpoly(f, p).m, p) << to_string(f);
        }
    }
    const RatPoly f7 = qlin::testing::random_projective_poly(7, rng, 1, 1, qlin::testing::projective_p7_guard);
    EXPECT_EQ(minimal_qpoly(f7, 7).m, 7u) << to_string(f7);
}

TEST(QLinear, ProjectiveFamilyNeedsLinearTerm) {
    // with no x term the roots of x^4 + t^2 + 1 pair up as +-r, so m drops below p
    const RatFuncField K = RatFuncField::over(3, 1);
    const RatPoly f = P("x^4 + t^2 + 1", K);
    EXPECT_TRUE(qlin::testing::certified_irreducible(f));
    EXPECT_EQ(minimal_qpoly(f, 3).m, 2u);
}

TEST(QLinear, MixedFactorsOverF3) {
    const RatFuncField K = RatFuncField::over(3, 1);
    const auto res = minimal_qpoly(P("(x^2 + x + t)*(x^3 + x + t)", K), 3);
    EXPECT_EQ(res.m, 4u);
    const RatFunc a0 = res.L.coeff(0);
    ASSERT_TRUE(a0.den.is_one());
    const TPoly t3_minus_t = K.ring().sub(TPoly{{0, 0, 0, 1}}, TPoly{{0, 1}});
    EXPECT_FALSE(a0.num.is_zero());
    EXPECT_TRUE(K.ring().rem(a0.num, t3_minus_t).is_zero());
    // hence a_0 vanishes at every lambda in F_3
    for (const Elem& lam : K.base().elements()) EXPECT_THROW(frobenius_associate(res.L, FieldElement(K.base(), lam)), precondition_error);
}

TEST(QLinear, SubspaceOracleEquivalence) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 60; ++i) {
        const auto c = qlin::testing::random_oracle_case(rng);
        const QPoly<GF> m = moore_qpoly(c.field, c.basis, c.q);
        const auto res = minimal_qpoly(c.f, c.q);
        ASSERT_EQ(res.m, c.basis.size());
        ASSERT_EQ(res.L, m) << c.field.name() << " q=" << c.q;
    }
}

TEST(QLinear, SpecializationRankBoundsDegree) {
    // the F_q-rank of specialized roots never exceeds m(f), and some point attains it
    for (const auto& row : load_goldens(qlin::testing::corpus_path())) {
        if (row.slow || row.k != 1) continue;
        const RatFuncField K = RatFuncField::over(row.p, 1);
        const RatPoly f = P(row.f, K);
        const unsigned m = minimal_qpoly(f, row.q).m;
        std::size_t best = 0;
        for (const auto& a : specialization_points(row.p, row.p == 2 ? 3 : 2)) {
            try {
                const RootSpace rs = root_space(f, a, 64);
                EXPECT_LE(rs.span_dim, m) << row.name << " at " << a.to_string();
                best = std::max(best, rs.span_dim);
            } catch (const ramified_error&) {
            } catch (const guard_exceeded&) {
            }
        }
        EXPECT_EQ(best, m) << row.name;
    }
}
