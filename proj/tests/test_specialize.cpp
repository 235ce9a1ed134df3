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

#include <numeric>
#include <set>

#include "qlin/qlin.hpp"
#include "support.hpp"

namespace {

using namespace qlin;

RatPoly P(const std::string& s, const RatFuncField& k) { return parse_poly(s, k); }

QPoly<RatFuncField> linearization(const std::string& f, const RatFuncField& k, uint64_t q) {
    return minimal_qpoly(P(f, k), q).L;
}

std::set<CycleType> cycle_types_over(const RatPoly& f, const GF& e) {
    std::set<CycleType> out;
    for (const Elem& a : e.elements()) {
        try {
            out.insert(cycle_type(f, FieldElement(e, a)));
        } catch (const ramified_error&) {
        }
    }
    return out;
}

// Multiplicative order of q modulo n: the degree of every irreducible factor of (x^n - 1) / (x - 1) for prime n.
unsigned order_mod(uint64_t q, uint64_t n) {
    uint64_t x = q % n;
    unsigned r = 1;
    while (x != 1) {
        x = x * q % n;
        ++r;
    }
    return r;
}

}  // namespace

TEST(Specialize, SpecializeExamples) {
    const RatFuncField K = RatFuncField::over(2, 1);
    const GF f2 = GF::make(2, 1);
    EXPECT_EQ(specialize_poly(P("x^24 + x + t", K), FieldElement(f2, f2.zero())), parse_poly("x^24 + x", f2));
    const RatFuncField K3 = RatFuncField::over(3, 1);
    const GF f3 = GF::make(3, 1);
    EXPECT_EQ(specialize_poly(P("x^3 + t*x + 1", K3), FieldElement(f3, f3.one())), parse_poly("x^3 + x + 1", f3));
}

TEST(Specialize, PoleIsAnError) {
    const RatFuncField K = RatFuncField::over(2, 1);
    const GF f2 = GF::make(2, 1);
    EXPECT_THROW(specialize_poly(P("x^2 + x/t + 1", K), FieldElement(f2, f2.zero())), pole_error);
    EXPECT_NO_THROW(specialize_poly(P("x^2 + x/t + 1", K), FieldElement(f2, f2.one())));
}

TEST(Specialize, CycleTypesOverF8) {
    const auto types = cycle_types_over(golay_polynomial(), GF::make(2, 3));
    EXPECT_TRUE(types.count(CycleType{23, 1}));
    EXPECT_TRUE(types.count(CycleType{7, 7, 7, 1, 1, 1}));
    EXPECT_TRUE(types.count(CycleType{11, 11, 1, 1}));
}

TEST(Specialize, CycleTypesOverF64) {
    const auto types = cycle_types_over(golay_polynomial(), GF::make(2, 6));
    EXPECT_TRUE(types.count(CycleType{12, 12}));
    EXPECT_TRUE(types.count(CycleType{8, 8, 4, 2, 1, 1}));
}

TEST(Specialize, GolayAtZeroMatchesCyclotomicOracle) {
    // x^24 + x = x (x + 1) (x^23 - 1) / (x - 1); the last factor splits into pieces of degree ord_23(2)
    const unsigned d = order_mod(2, 23);
    EXPECT_EQ(d, 11u);
    CycleType expected(22 / d, d);
    expected.push_back(1);
    expected.push_back(1);
    const GF f2 = GF::make(2, 1);
    EXPECT_EQ(cycle_type(golay_polynomial(), FieldElement(f2, f2.zero())), expected);
    EXPECT_EQ(cycle_notation(expected), "(11)^2(1)^2");
}

TEST(Specialize, RamifiedSpecializationRejected) {
    const RatFuncField K = RatFuncField::over(3, 1);
    const GF f3 = GF::make(3, 1);
    // x^2 + t has a double root at t = 0
    EXPECT_THROW(cycle_type(P("x^2 + t", K), FieldElement(f3, f3.zero())), ramified_error);
    // leading coefficient vanishes at t = 0
    EXPECT_THROW(cycle_type(P("t*x^2 + x + 1", K), FieldElement(f3, f3.zero())), ramified_error);
}

TEST(Specialize, CycleTypesSumToDegreeAndCountOrbits) {
    std::mt19937_64 rng(13);
    for (uint32_t p : {2u, 3u, 5u}) {
        const RatFuncField K = RatFuncField::over(p, 1);
        for (int i = 0; i < 20; ++i) {
            const int n = 2 + static_cast<int>(rng() % 7);
            RatPoly f(K);
            f.set_coeff(n, K.one());
            for (int j = 0; j < n; ++j) f.set_coeff(j, K.from_poly(qlin::testing::random_tpoly(K.base(), 2, rng)));
            const GF e = GF::make(p, 1 + static_cast<unsigned>(rng() % 2));
            for (const Elem& a : e.elements()) {
                const FieldElement pt(e, a);
                CycleType ct;
                try {
                    ct = cycle_type(f, pt);
                } catch (const ramified_error&) {
                    continue;
                }
                ASSERT_EQ(std::accumulate(ct.begin(), ct.end(), 0u), static_cast<unsigned>(n));
                for (unsigned d : ct) ASSERT_GE(d, 1u);
                // Frobenius orbits on the roots, counted in the splitting field
                const GFPoly g = specialize_poly(f, pt);
                const GF big = GF::make(p, e.degree() * cycle_lcm(ct));
                const auto rs = roots(g, big);
                ASSERT_EQ(rs.size(), static_cast<std::size_t>(n));
                std::set<u128> seen;
                std::size_t orbits = 0;
                for (const Elem& r : rs) {
                    if (seen.count(r.v)) continue;
                    ++orbits;
                    Elem x = r;
                    do {
                        seen.insert(x.v);
                        x = big.qth_power(x, e.size());
                    } while (!(x == r));
                }
                ASSERT_EQ(orbits, ct.size()) << to_string(f) << " at " << pt.to_string();
            }
        }
    }
}

TEST(Specialize, AssociateExamples) {
    const RatFuncField K2 = RatFuncField::over(2, 1);
    const QPoly<RatFuncField> l2 = linearization("x^2 + x + t", K2, 2);
    EXPECT_EQ(to_string(l2), "x^4 + (t + 1)*x^2 + t*x");
    const GF f2 = GF::make(2, 1);
    EXPECT_EQ(frobenius_associate(l2, FieldElement(f2, f2.one())), parse_poly("x^2 + 1", f2));
    EXPECT_THROW(frobenius_associate(l2, FieldElement(f2, f2.zero())), precondition_error);

    const RatFuncField K3 = RatFuncField::over(3, 1);
    const QPoly<RatFuncField> l3 = linearization("x^4 + (t + 1)*x^2 + 1", K3, 3);
    const GF f3 = GF::make(3, 1);
    EXPECT_EQ(frobenius_associate(l3, FieldElement(f3, f3.from_int(2))), parse_poly("x^2 + 2", f3));
}

TEST(Specialize, AssociateRejectsBadInput) {
    const RatFuncField K = RatFuncField::over(2, 1);
    const GF f4 = GF::make(2, 2);
    const QPoly<RatFuncField> l = linearization("x^2 + x + t", K, 2);
    EXPECT_THROW(frobenius_associate(l, FieldElement(f4, f4.generator())), precondition_error);
    QPoly<RatFuncField> rational(K, 2);
    rational.set_term(1, K.one());
    rational.set_term(0, parse_ratfunc("1/t", K));
    const GF f2 = GF::make(2, 1);
    EXPECT_THROW(frobenius_associate(rational, FieldElement(f2, f2.one())), precondition_error);
}

TEST(Specialize, CyclicElementExamples) {
    const RatFuncField K2 = RatFuncField::over(2, 1);
    const GF f2 = GF::make(2, 1);
    const auto rep = verify_cyclic_element(linearization("x^2 + x + t", K2, 2), FieldElement(f2, f2.one()));
    EXPECT_TRUE(rep.passed()) << rep.status;
    EXPECT_EQ(rep.n, 2u);
    EXPECT_EQ(rep.splitting_degree, 2u);
    EXPECT_EQ(rep.root_space_dim, 2u);
    ASSERT_TRUE(rep.frobenius_minpoly.has_value());
    EXPECT_EQ(*rep.frobenius_minpoly, parse_poly("x^2 + 1", f2));

    const RatFuncField K3 = RatFuncField::over(3, 1);
    const GF f3 = GF::make(3, 1);
    const auto rep3 = verify_cyclic_element(linearization("x^4 + (t + 1)*x^2 + 1", K3, 3), FieldElement(f3, f3.from_int(2)));
    EXPECT_TRUE(rep3.passed()) << rep3.status;
    ASSERT_TRUE(rep3.frobenius_minpoly.has_value());
    EXPECT_EQ(*rep3.frobenius_minpoly, parse_poly("x^2 + 2", f3));

    EXPECT_THROW(verify_cyclic_element(linearization("x^2 + x + t", K2, 2), FieldElement(f2, f2.zero())),
                 precondition_error);
}

TEST(Specialize, SplittingFieldGuardReportsSkip) {
    const RatFuncField K = RatFuncField::over(2, 1);
    const GF f2 = GF::make(2, 1);
    const auto rep = verify_cyclic_element(linearization("x^2 + x + t", K, 2), FieldElement(f2, f2.one()), 1);
    EXPECT_TRUE(rep.skipped());
    EXPECT_FALSE(rep.passed());
}

TEST(Specialize, CyclicElementOnEveryFastLinearization) {
    std::size_t checked = 0;
    for (const auto& [row, l] : qlin::testing::polynomial_linearizations(false)) {
        const GF& fq = l.field().base();
        for (const Elem& lam : fq.elements()) {
            const FieldElement pt(fq, lam);
            const RatFunc a0 = l.coeff(0);
            if (fq.is_zero(l.field().ring().eval_at(a0.num, lam, Embedding(fq, fq, fq.generator())))) {
                EXPECT_THROW(verify_cyclic_element(l, pt), precondition_error);
                continue;
            }
            const auto rep = verify_cyclic_element(l, pt);
            if (rep.skipped()) continue;
            EXPECT_TRUE(rep.passed()) << row.name << " at " << pt.to_string() << ": " << rep.status;
            EXPECT_TRUE(rep.cyclic);
            EXPECT_EQ(rep.root_space_dim, rep.n);
            ++checked;
        }
    }
    EXPECT_GT(checked, 10u);
}
