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

#include <random>

#include "qlin/qlin.hpp"

namespace {

using namespace qlin;

RatFunc R(const char* s, const RatFuncField& k) { return parse_ratfunc(s, k); }

TPoly random_tpoly(const GF& f, int degree, std::mt19937_64& rng) {
    TPoly a;
    for (int i = 0; i <= degree; ++i) a.c.push_back(static_cast<uint32_t>(f.random(rng).v));
    TRing::trim(a);
    return a;
}

RatFunc random_rf(const RatFuncField& k, std::mt19937_64& rng) {
    TPoly d = random_tpoly(k.base(), static_cast<int>(rng() % 4), rng);
    if (d.is_zero()) d = k.ring().one();
    return k.normalize(random_tpoly(k.base(), static_cast<int>(rng() % 5), rng), d);
}

// The same polynomial through the generic univariate code path.
GFPoly as_gfpoly(const GF& f, const TPoly& a) {
    std::vector<Elem> c;
    for (auto x : a.c) c.push_back({x});
    return GFPoly(f, c);
}

}  // namespace

TEST(FuncField, NormalizeExamples) {
    const RatFuncField k2 = RatFuncField::over(2, 1), k3 = RatFuncField::over(3, 1);
    const TRing& r2 = k2.ring();
    EXPECT_EQ(rf_normalize(k2, TPoly{{0, 1, 1}}, r2.t()), R("t + 1", k2));
    const RatFunc z = rf_normalize(k2, TPoly{}, TPoly{{0, 0, 0, 0, 0, 1}});
    EXPECT_TRUE(z.num.is_zero());
    EXPECT_TRUE(z.den.is_one());
    const RatFunc a = rf_normalize(k3, TPoly{{0, 2}}, TPoly{{2}});
    EXPECT_EQ(a.num, k3.ring().t());
    EXPECT_TRUE(a.den.is_one());
    EXPECT_THROW(rf_normalize(k3, TPoly{{1}}, TPoly{}), division_by_zero);
}

TEST(FuncField, ArithmeticExamples) {
    const RatFuncField k = RatFuncField::over(2, 1);
    EXPECT_TRUE(k.add(k.t(), k.t()).num.is_zero());
    EXPECT_EQ(k.mul(k.inv(k.t()), k.t()), k.one());
    EXPECT_EQ(k.add(R("t/(t + 1)", k), R("1/(t + 1)", k)), k.one());
    EXPECT_THROW(k.inv(k.zero()), division_by_zero);
}

TEST(FuncField, QthPowerExamples) {
    const RatFuncField k2 = RatFuncField::over(2, 1);
    EXPECT_EQ(rf_qth_power(k2, k2.t(), 2), R("t^2", k2));
    EXPECT_EQ(rf_qth_power(k2, R("t/(t + 1)", k2), 2), R("t^2/(t^2 + 1)", k2));
    EXPECT_EQ(rf_qth_power(k2, R("t/(t + 1)", k2), 2), R("t^2/((t + 1)^2)", k2));
    const RatFuncField k4 = RatFuncField::over(2, 2);
    for (const Elem& c : k4.base().elements()) EXPECT_EQ(rf_qth_power(k4, k4.from_base(c), 4), k4.from_base(c));
    EXPECT_THROW(rf_qth_power(k4, k4.t(), 2), precondition_error);
    // q = 2 on F_4(t) moves the constants by Frobenius
    const Elem g = k4.base().generator();
    EXPECT_EQ(k4.qth_power(k4.from_base(g), 2), k4.from_base(k4.base().add(g, k4.base().one())));
}

TEST(FuncField, EvaluationExamples) {
    for (uint32_t q : {2u, 3u, 5u}) {
        const RatFuncField k = RatFuncField::over(q, 1);
        const FieldElement one{k.base(), k.base().one()};
        EXPECT_EQ(rf_eval(k, k.pow(k.t(), q - 1), one), one);
    }
    const RatFuncField k = RatFuncField::over(2, 1);
    const GF f8 = GF::make(2, 3);
    for (const Elem& a : f8.elements()) EXPECT_EQ(rf_eval(k, k.t(), FieldElement{f8, a}).value(), a);
    EXPECT_THROW(rf_eval(k, k.inv(k.t()), FieldElement(f8, f8.zero())), pole_error);
}

TEST(FuncField, RingOperationsMatchGenericPolynomials) {
    std::mt19937_64 rng(17);
    for (auto [p, d] : std::vector<std::pair<uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {2, 4}}) {
        const GF f = GF::make(p, d);
        const TRing r(f);
        for (int i = 0; i < 100; ++i) {
            const TPoly a = random_tpoly(f, static_cast<int>(rng() % 90), rng);
            TPoly b = random_tpoly(f, static_cast<int>(rng() % 40), rng);
            if (b.is_zero()) b = r.one();
            ASSERT_EQ(as_gfpoly(f, r.mul(a, b)), as_gfpoly(f, a) * as_gfpoly(f, b));
            const auto [qq, rr] = r.divmod(a, b);
            const auto [qo, ro] = divmod(as_gfpoly(f, a), as_gfpoly(f, b));
            ASSERT_EQ(as_gfpoly(f, qq), qo);
            ASSERT_EQ(as_gfpoly(f, rr), ro);
            if (!a.is_zero())
                ASSERT_EQ(as_gfpoly(f, r.gcd(a, b)), gcd(as_gfpoly(f, a), as_gfpoly(f, b)))
                    << f.name() << " " << r.to_string(a) << " , " << r.to_string(b) << " -> " << r.to_string(r.gcd(a, b));
        }
    }
}

TEST(FuncField, LongBinaryProducts) {
    // exercise the packed carry-less path on operands spanning many words
    std::mt19937_64 rng(5);
    const GF f = GF::make(2, 1);
    const TRing r(f);
    for (int i = 0; i < 10; ++i) {
        const TPoly a = random_tpoly(f, 300 + static_cast<int>(rng() % 700), rng);
        const TPoly b = random_tpoly(f, 200 + static_cast<int>(rng() % 700), rng);
        ASSERT_EQ(as_gfpoly(f, r.mul(a, b)), as_gfpoly(f, a) * as_gfpoly(f, b));
    }
}

TEST(FuncField, LongOddPrimeProductsAndDivision) {
    std::mt19937_64 rng(23);
    for (uint32_t p : {3u, 7u, 65521u}) {
        const GF f = GF::make(p, 1);
        const TRing r(f);
        for (int i = 0; i < 12; ++i) {
            const TPoly a = random_tpoly(f, 40 + static_cast<int>(rng() % 900), rng);
            TPoly b = random_tpoly(f, 40 + static_cast<int>(rng() % 300), rng);
            if (b.is_zero()) b = r.one();
            const TPoly ab = r.mul(a, b);
            ASSERT_EQ(as_gfpoly(f, ab), as_gfpoly(f, a) * as_gfpoly(f, b)) << p;
            const auto [qq, rr] = r.divmod(a, b);
            const auto [qo, ro] = divmod(as_gfpoly(f, a), as_gfpoly(f, b));
            ASSERT_EQ(as_gfpoly(f, qq), qo) << p;
            ASSERT_EQ(as_gfpoly(f, rr), ro) << p;
            ASSERT_TRUE(r.rem(ab, b).is_zero());
            ASSERT_EQ(r.exact_div(ab, b), a);
        }
    }
}

TEST(FuncField, QthPowerIsRingEndomorphism) {
    std::mt19937_64 rng(23);
    for (auto [p, d] : std::vector<std::pair<uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {7, 1}}) {
        const RatFuncField k = RatFuncField::over(p, d);
        const uint64_t q = k.base().size();
        for (int i = 0; i < 60; ++i) {
            const RatFunc a = random_rf(k, rng), b = random_rf(k, rng);
            ASSERT_EQ(rf_qth_power(k, k.add(a, b), q), k.add(rf_qth_power(k, a, q), rf_qth_power(k, b, q)));
            ASSERT_EQ(rf_qth_power(k, k.mul(a, b), q), k.mul(rf_qth_power(k, a, q), rf_qth_power(k, b, q)));
            ASSERT_EQ(rf_qth_power(k, a, q), k.pow(a, q));
        }
    }
}

TEST(FuncField, EvaluationIsMultiplicativeAwayFromPoles) {
    std::mt19937_64 rng(29);
    const RatFuncField k = RatFuncField::over(3, 1);
    const GF e = GF::make(3, 4);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const RatFunc a = random_rf(k, rng), b = random_rf(k, rng);
        const FieldElement lam{e, e.random(rng)};
        try {
            const FieldElement va = rf_eval(k, a, lam), vb = rf_eval(k, b, lam);
            ASSERT_EQ(rf_eval(k, k.mul(a, b), lam), va * vb);
            ASSERT_EQ(rf_eval(k, k.add(a, b), lam), va + vb);
            ++checked;
        } catch (const pole_error&) {
        }
    }
    EXPECT_GT(checked, 150);
}

TEST(FuncField, NormalizeIsIdempotent) {
    std::mt19937_64 rng(31);
    const RatFuncField k = RatFuncField::over(5, 1);
    for (int i = 0; i < 200; ++i) {
        TPoly d = random_tpoly(k.base(), static_cast<int>(rng() % 5), rng);
        if (d.is_zero()) continue;
        const RatFunc once = k.normalize(random_tpoly(k.base(), static_cast<int>(rng() % 6), rng), d);
        ASSERT_EQ(k.normalize(once.num, once.den), once);
        if (!once.num.is_zero()) ASSERT_EQ(once.den.c.back(), 1u);
        ASSERT_TRUE(k.ring().gcd(once.num, once.den).is_one() || once.num.is_zero());
    }
}

TEST(FuncField, DegreeGuard) {
    const RatFuncField k(GF::make(2, 1), 1000);
    EXPECT_THROW(k.pow(k.t(), 2000), guard_exceeded);
    EXPECT_THROW(TRing(GF::make(2, 20)), guard_exceeded);
}

TEST(FuncField, Rendering) {
    const RatFuncField k = RatFuncField::over(2, 1);
    EXPECT_EQ(k.to_string(R("t^24 + t", k)), "t^24 + t");
    EXPECT_EQ(k.to_string(R("t/(t + 1)", k)), "(t)/(t + 1)");
    EXPECT_EQ(k.name(), "F_2(t)");
    const RatFuncField k4 = RatFuncField::over(2, 2);
    const RatFunc c = R("(g + 1)*t^2 + g", k4);
    EXPECT_EQ(R(k4.to_string(c).c_str(), k4), c);
}
