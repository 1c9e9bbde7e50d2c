/*
   Copyright 2026 The arbor Authors

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

#include "arbor/odoni.hpp"
#include "arbor/parse.hpp"
#include "arbor/verify.hpp"

namespace arbor {
namespace {

BiPoly P(const char* s, std::uint32_t p = 5) { return parse_bipoly(s, prime_field(p)); }
TPoly T(const char* s, std::uint32_t p = 5) { return parse_tpoly(s, prime_field(p)); }

BiPoly random_monic(Field f, int d, int dt, std::mt19937_64& rng) {
    std::vector<TPoly> cs;
    for (int i = 0; i < d; ++i) {
        std::vector<Fe> v;
        for (int j = 0; j <= dt; ++j) v.push_back(random_fe(f, rng));
        cs.emplace_back(f, v);
    }
    cs.push_back(TPoly::constant(Fe::from_int(f, 1)));
    return BiPoly(f, cs);
}

// R(r(x)) modulo m, for checking that R vanishes on the orbit value.
BiPoly compose_mod_bi(const BiPoly& R, const BiPoly& r, const BiPoly& m) {
    BiPoly acc(R.field());
    for (std::size_t i = R.size(); i-- > 0;) acc = (acc * r + BiPoly::constant(R[i])) % m;
    return acc;
}

TEST(BasicTest, Examples) {
    BasicReport r = check_basic(P("x^3 + t*x^2 + t"));
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(r.failures().empty());
    ASSERT_TRUE(r.disc);
    EXPECT_EQ(*r.disc, T("t^4 + 3*t^2"));

    BasicReport q = check_basic(P("x^2 + t"));
    EXPECT_FALSE(q.passed());
    EXPECT_FALSE(q.degree_above_two);

    BasicReport s = check_basic(P("x^3 + t*x + t", 3));
    EXPECT_FALSE(s.passed());
    EXPECT_FALSE(s.p_coprime);

    EXPECT_FALSE(check_basic(P("x^4 + t", 3)).p_coprime);
    EXPECT_FALSE(check_basic(P("2*x^3 + t")).monic);

    BasicReport red = check_basic(P("x^3 + 4*t^3"));
    EXPECT_FALSE(red.passed());
    EXPECT_TRUE(red.factorization.has_value());
}

TEST(BasicTest, DiscriminantAgreesWithSylvesterAtPoints) {
    std::mt19937_64 rng(3);
    Field F = prime_field(7);
    for (int trial = 0; trial < 20; ++trial) {
        BiPoly f = random_monic(F, 3 + trial % 2, 2, rng);
        BasicReport r = check_basic(f);
        ASSERT_TRUE(r.disc);
        for (int c = 0; c < 7; ++c) {
            Fe pt = Fe::from_int(F, c);
            EXPECT_EQ(naive::discriminant(naive::specialize(f, pt)), evaluate(*r.disc, pt));
        }
    }
}

TEST(CriticalPointsTest, Examples) {
    auto a = critical_points(P("x^3 + t*x^2 + t"));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0].minpoly, P("x"));
    EXPECT_EQ(a[0].multiplicity, 1);
    EXPECT_EQ(*a[0].root, T("0"));
    EXPECT_EQ(a[1].minpoly, P("x + 4*t"));
    EXPECT_EQ(a[1].multiplicity, 1);
    EXPECT_EQ(*a[1].root, T("t"));

    auto b = critical_points(P("x^5 + t*x^4 + t", 7));
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b[0].minpoly, P("x", 7));
    EXPECT_EQ(b[0].multiplicity, 3);
    EXPECT_EQ(b[1].minpoly, P("x + 5*t", 7));
    EXPECT_EQ(b[1].multiplicity, 1);
    EXPECT_EQ(*b[1].root, T("2*t", 7));

    auto c = critical_points(P("x^3 + t*x + t"));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].minpoly, P("x^2 + 2*t"));
    EXPECT_EQ(c[0].multiplicity, 1);
    EXPECT_FALSE(c[0].root.has_value());

    EXPECT_THROW(critical_points(P("x^5 + t")), InseparableError);
    EXPECT_THROW(critical_points(P("x^5 + t*x + t")), std::invalid_argument);
}

TEST(CriticalPointsTest, DecompositionReassembles) {
    std::mt19937_64 rng(8);
    for (std::uint32_t p : {5u, 7u}) {
        Field F = prime_field(p);
        for (int trial = 0; trial < 40; ++trial) {
            const int d = 3 + trial % 3;
            if (d % static_cast<int>(p) == 0) continue;
            BiPoly f = random_monic(F, d, 2, rng);
            auto cps = critical_points(f);
            BiPoly prod = BiPoly::constant(TPoly::constant(Fe::from_int(F, 1)));
            for (const auto& cp : cps) {
                EXPECT_TRUE(cp.minpoly.is_monic());
                EXPECT_TRUE(bp_separable_x(cp.minpoly));
                EXPECT_EQ(cp.root.has_value(), cp.degree() == 1);
                prod = prod * power(cp.minpoly, static_cast<std::uint64_t>(cp.multiplicity));
            }
            EXPECT_EQ(prod, scale(derivative(f), TPoly::constant(inv(Fe::from_int(F, d))))) << render(f);
            for (std::size_t i = 0; i < cps.size(); ++i)
                for (std::size_t j = i + 1; j < cps.size(); ++j) EXPECT_EQ(bp_gcd_x(cps[i].minpoly, cps[j].minpoly).degree(), 0);
        }
    }
}

TEST(CriticalPointsTest, RepeatedFactor) {
    // f with f' = 4 (x - t)^2 (x + 1) over F_5
    Field F = prime_field(5);
    BiPoly target = power(P("x + 4*t"), 2) * P("x + 1");
    // coefficient of x^{i+1} is 4 c_i / (i + 1)
    std::vector<TPoly> cs{T("t")};
    for (int i = 0; i <= target.degree(); ++i)
        cs.push_back(scale(target[static_cast<std::size_t>(i)], Fe::from_int(F, 4) * inv(Fe::from_int(F, i + 1))));
    BiPoly f(F, cs);
    ASSERT_TRUE(f.is_monic());
    auto cps = critical_points(f);
    ASSERT_EQ(cps.size(), 2u);
    EXPECT_EQ(cps[0].minpoly, P("x + 1"));
    EXPECT_EQ(cps[0].multiplicity, 1);
    EXPECT_EQ(cps[1].minpoly, P("x + 4*t"));
    EXPECT_EQ(cps[1].multiplicity, 2);
}

TEST(GcdTest, PthRootBranch) {
    // x^5 + t^5 = (x + t)^5 takes the p-th root branch; x^5 + t is inseparable
    auto sq = bp_squarefree_decomposition(P("x^5 + t^5"));
    ASSERT_EQ(sq.size(), 1u);
    EXPECT_EQ(sq[0].first, P("x + t"));
    EXPECT_EQ(sq[0].second, 5);
    EXPECT_THROW(bp_squarefree_decomposition(P("x^5 + t")), InseparableError);
    EXPECT_FALSE(bp_separable_x(P("x^5 + t")));
    EXPECT_EQ(bp_gcd_x(P("x^2 + 4*t^2"), P("t*x + 4*t^2")), P("x + 4*t"));
}

TEST(GcdTest, PolynomialRoots) {
    std::mt19937_64 rng(14);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        Field F = prime_field(p);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<TPoly> want;
            BiPoly h = BiPoly::constant(TPoly::constant(Fe::from_int(F, 1)));
            for (int k = 0; k < 1 + trial % 3; ++k) {
                std::vector<Fe> v;
                for (int j = 0; j <= trial % 4; ++j) v.push_back(random_fe(F, rng));
                TPoly r(F, v);
                if (std::find(want.begin(), want.end(), r) != want.end()) continue;
                want.push_back(r);
                h = h * BiPoly(F, {-r, TPoly::constant(Fe::from_int(F, 1))});
            }
            // a factor without roots in F_q[t]: x^2 - t
            if (trial % 2) h = h * BiPoly(F, {-TPoly::variable(F), TPoly(F), TPoly::constant(Fe::from_int(F, 1))});
            std::sort(want.begin(), want.end());
            auto got = bp_polynomial_roots(h);
            ASSERT_TRUE(got);
            EXPECT_EQ(*got, want) << render(h);
        }
    }
    // all specializations singular over F_3: (x - t)(x - t^3)
    auto rs = bp_polynomial_roots(P("x^2 + 2*t^3*x + 2*t*x + t^4", 3));
    ASSERT_TRUE(rs);
    EXPECT_EQ(rs->size(), 2u);
}

TEST(MorseTest, Examples) {
    MorseReport m = morse_check(P("x^3 + t*x"));
    EXPECT_TRUE(m.morse);
    EXPECT_EQ(m.critical_value_poly, P("2*x^2 + 4*t^3"));

    MorseReport n = morse_check(P("x^5 + t*x^4 + t", 7));
    EXPECT_FALSE(n.morse);
    EXPECT_FALSE(n.nondegenerate);

    EXPECT_THROW(morse_check(P("x^5 + t*x")), std::invalid_argument);
}

TEST(MorseTest, FamilyXdPlusAx) {
    for (auto [d, p] : {std::pair{3, 5}, {4, 5}, {4, 7}, {5, 7}, {5, 11}}) {
        Field F = prime_field(static_cast<std::uint32_t>(p));
        for (const char* a : {"t", "t^2 + 1", "3*t + 2"}) {
            BiPoly f = BiPoly::monomial(TPoly::constant(Fe::from_int(F, 1)), static_cast<std::size_t>(d)) +
                       BiPoly::monomial(parse_tpoly(a, F), 1);
            EXPECT_TRUE(morse_check(f).morse) << render(f) << " p=" << p;
        }
    }
}

TEST(MorseTest, TrinomialTopFamilyIsNotMorse) {
    std::mt19937_64 rng(21);
    for (auto [d, p] : {std::pair{5, 7}, {7, 11}}) {
        Field F = prime_field(static_cast<std::uint32_t>(p));
        for (int trial = 0; trial < 5; ++trial) {
            TPoly a(F, {random_fe(F, rng), Fe::from_int(F, 1 + trial)});
            TPoly b(F, {random_fe(F, rng), random_fe(F, rng)});
            BiPoly f = BiPoly::monomial(TPoly::constant(Fe::from_int(F, 1)), static_cast<std::size_t>(d)) +
                       BiPoly::monomial(a, static_cast<std::size_t>(d - 1)) + BiPoly::constant(b);
            EXPECT_FALSE(morse_check(f).morse) << render(f);
            auto cps = critical_points(f);
            ASSERT_FALSE(cps.empty());
            EXPECT_EQ(cps[0].minpoly, BiPoly::variable(F));
            EXPECT_EQ(cps[0].multiplicity, d - 2);
        }
    }
}

TEST(OrbitTest, Examples) {
    BiPoly f = P("x^3 + t*x^2 + t");
    auto cps = critical_points(f);
    EXPECT_EQ(orbit_minpoly(f, cps, 0, 1).R, P("x + 4*t"));
    EXPECT_EQ(orbit_minpoly(f, cps, 1, 1).R, P("x + 3*t^3 + 4*t"));

    BiPoly g = P("x^3 + t*x + t");
    auto gc = critical_points(g);
    // (y - t)^2 + 2t^3
    EXPECT_EQ(orbit_minpoly(g, gc, 0, 1).R, P("x^2 + 3*t*x + 2*t^3 + t^2"));
    EXPECT_THROW(orbit_minpoly(g, gc, 0, 0), std::invalid_argument);
}

TEST(OrbitTest, ResultantPathMatchesDirectEvaluation) {
    std::mt19937_64 rng(4);
    for (std::uint32_t p : {5u, 7u}) {
        Field F = prime_field(p);
        for (int trial = 0; trial < 15; ++trial) {
            BiPoly f = random_monic(F, 3, 1, rng);
            auto cps = critical_points(f);
            for (std::size_t i = 0; i < cps.size(); ++i) {
                auto stripped = cps;
                stripped[i].root.reset();
                for (int l = 1; l <= 3; ++l) {
                    BiPoly R = orbit_minpoly(f, cps, i, l).R;
                    EXPECT_EQ(R.degree(), cps[i].degree());
                    EXPECT_TRUE(R.is_monic());
                    if (cps[i].root) {
                        EXPECT_EQ(R, BiPoly::variable(F) - BiPoly::constant(bp_eval_x(bp_iterate(f, l), *cps[i].root)));
                        EXPECT_EQ(orbit_minpoly(f, stripped, i, l).R, R);
                    } else {
                        // R vanishes on f^{ol}(x) modulo the minimal polynomial
                        BiPoly r = orbit_residue(f, cps[i].minpoly, l);
                        EXPECT_TRUE(compose_mod_bi(R, r, cps[i].minpoly).is_zero());
                    }
                }
            }
        }
    }
}

TEST(SeparationTest, Examples) {
    SeparationReport a = orbit_separation(P("x^3 + t*x^2 + t"), 2);
    EXPECT_FALSE(a.separated);
    ASSERT_TRUE(a.first_collision);
    EXPECT_EQ(a.first_collision->a, 1u);  // root t
    EXPECT_EQ(a.first_collision->l, 1);
    EXPECT_EQ(a.first_collision->b, 0u);  // root 0
    EXPECT_EQ(a.first_collision->m, 2);
    EXPECT_TRUE(a.separated_conjugates);
    // both values are 2t^3 + t
    BiPoly f = P("x^3 + t*x^2 + t");
    EXPECT_EQ(orbit_value(f, T("t"), 1), T("2*t^3 + t"));
    EXPECT_EQ(orbit_value(f, T("0"), 2), T("2*t^3 + t"));

    EXPECT_TRUE(orbit_separation(P("x^3 + t*x^2 + t"), 1).separated);
    EXPECT_TRUE(orbit_separation(P("x^3 + t*x^2 + t + 1"), 2).separated);
    EXPECT_TRUE(orbit_separation(P("x^3 + t*x + t"), 1).separated);
}

TEST(SeparationTest, ConjugateCollision) {
    // An even quartic takes equal values at the conjugate critical points +-b.
    BiPoly f = P("x^4 + t*x^2 + t", 7);
    SeparationReport s = orbit_separation(f, 1);
    ASSERT_EQ(s.points.size(), 2u);
    EXPECT_EQ(s.points[1].minpoly, P("x^2 + 4*t", 7));
    EXPECT_FALSE(s.separated);
    EXPECT_FALSE(s.separated_conjugates);
    ASSERT_TRUE(s.first_conjugate_collision);
    EXPECT_EQ(s.first_conjugate_collision->a, 1u);
    EXPECT_EQ(s.first_conjugate_collision->b, 1u);
    EXPECT_TRUE(s.anchored[0]);

    // a critical point fixed by f: 0 -> 0
    SeparationReport per = orbit_separation(P("x^3 + 3*t^2*x^2"), 2);
    EXPECT_FALSE(per.separated);
    EXPECT_FALSE(per.separated_conjugates);
}

TEST(SeparationTest, Monotone) {
    std::mt19937_64 rng(9);
    Field F = prime_field(7);
    for (int trial = 0; trial < 25; ++trial) {
        BiPoly f = random_monic(F, 3, 1, rng);
        if (trial % 5 == 0) f.set_coeff(0, TPoly(F));  // fixed point 0 makes collisions likely
        bool prev = true;
        for (int n = 1; n <= 3; ++n) {
            bool s = orbit_separation(f, n).separated;
            if (!prev) {
                EXPECT_FALSE(s) << render(f);
            }
            prev = s;
        }
    }
}

TEST(PrimeDivisorTest, Examples) {
    BiPoly f = P("x^3 + t*x^2 + t");
    auto l1 = primitive_prime_divisors(f, T("0"), 1);
    ASSERT_EQ(l1.size(), 1u);
    EXPECT_EQ(l1[0].prime, T("t"));
    EXPECT_TRUE(l1[0].primitive);
    EXPECT_EQ(l1[0].valuation, 1);

    auto l2 = primitive_prime_divisors(f, T("0"), 2);
    std::vector<PrimeDivisorRecord> top;
    for (const auto& r : l2)
        if (r.level == 2) top.push_back(r);
    ASSERT_EQ(top.size(), 2u);
    EXPECT_EQ(top[0].prime, T("t"));
    EXPECT_FALSE(top[0].primitive);
    EXPECT_EQ(top[1].prime, T("t^2 + 3"));
    EXPECT_TRUE(top[1].primitive);
    EXPECT_TRUE(top[1].squarefree_primitive);
    ASSERT_TRUE(top[1].coprime_to_b.has_value());
    EXPECT_TRUE(*top[1].coprime_to_b);
    EXPECT_FALSE(*top[0].coprime_to_b);

    BiPoly g = P("x^3 + t*x^2 + t + 1");
    std::vector<PrimeDivisorRecord> gt;
    for (const auto& r : primitive_prime_divisors(g, T("0"), 2))
        if (r.level == 2) gt.push_back(r);
    ASSERT_EQ(gt.size(), 2u);
    EXPECT_EQ(gt[0].prime, T("t + 1"));
    EXPECT_FALSE(gt[0].primitive);
    EXPECT_EQ(gt[1].prime, T("t^2 + 4*t + 1"));
    EXPECT_TRUE(gt[1].primitive);
    EXPECT_EQ(orbit_value(g, T("0"), 2), scale(T("t + 1") * T("t^2 + 4*t + 1"), Fe::from_int(prime_field(5), 2)));

    EXPECT_THROW(primitive_prime_divisors(P("x^3 + t*x"), T("0"), 1), std::domain_error);
}

TEST(PrimeDivisorTest, SeedInvariantAndConsistent) {
    std::mt19937_64 rng(12);
    Field F = prime_field(5);
    for (int trial = 0; trial < 10; ++trial) {
        BiPoly f = random_monic(F, 3, 1, rng);
        if (f[0].is_zero()) continue;
        auto a = primitive_prime_divisors(f, T("0"), 3, 1);
        auto b = primitive_prime_divisors(f, T("0"), 3, 777);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(a[i].prime, b[i].prime);
            EXPECT_EQ(a[i].primitive, b[i].primitive);
            EXPECT_EQ(a[i].valuation, b[i].valuation);
        }
        // primitive iff the prime divides no earlier value
        for (const auto& r : a) {
            bool earlier = false;
            for (int j = 1; j < r.level; ++j) earlier = earlier || (orbit_value(f, T("0"), j) % r.prime).is_zero();
            EXPECT_EQ(r.primitive, !earlier);
            TPoly v = orbit_value(f, T("0"), r.level);
            EXPECT_TRUE((v % power(r.prime, static_cast<std::uint64_t>(r.valuation))).is_zero());
            EXPECT_FALSE((v % power(r.prime, static_cast<std::uint64_t>(r.valuation + 1))).is_zero());
        }
    }
}

TEST(OdoniTest, Examples) {
    Verdict a = check_odoni(P("x^3 + t*x^2 + t"), 2);
    EXPECT_EQ(a.conclusion, Verdict::Conclusion::Fails);
    ASSERT_FALSE(a.reasons.empty());
    EXPECT_NE(a.reasons[0].find("orbit separation"), std::string::npos);

    Verdict b = check_odoni(P("x^3 + t*x^2 + t + 1"), 2);
    ASSERT_EQ(b.conclusion, Verdict::Conclusion::HypothesesHold) << (b.reasons.empty() ? "" : b.reasons[0]);
    ASSERT_TRUE(b.predicted_order);
    EXPECT_EQ(*b.predicted_order, BigInt(1296));
    EXPECT_EQ(b.iterates.size(), 2u);
    ASSERT_TRUE(b.group);
    EXPECT_EQ(b.group->kind, Certificate::Kind::FullSymmetric);
    EXPECT_TRUE(b.multiplicity_one_exists);

    Verdict c = check_odoni(P("x^2 + t"), 1);
    EXPECT_EQ(c.conclusion, Verdict::Conclusion::Fails);
    EXPECT_NE(c.reasons[0].find("d > 2"), std::string::npos);

    EXPECT_THROW(check_odoni(P("x^3 + t"), 0), std::invalid_argument);
}

TEST(OdoniTest, NeverHoldsOnUnknown) {
    std::mt19937_64 rng(31);
    Field F = prime_field(7);
    CertifyBudget tiny;
    tiny.irred.max_m = 1;
    tiny.irred.max_samples = 2;
    tiny.irred.use_eisenstein = false;
    tiny.max_shift_attempts = 1;
    for (int trial = 0; trial < 12; ++trial) {
        BiPoly f = random_monic(F, 3, 1, rng);
        for (const CertifyBudget& b : {CertifyBudget{}, tiny}) {
            Verdict v = check_odoni(f, 2, b, static_cast<std::uint64_t>(trial));
            if (v.conclusion != Verdict::Conclusion::HypothesesHold) continue;
            EXPECT_TRUE(v.basic.irreducible());
            ASSERT_TRUE(v.group);
            EXPECT_TRUE(v.group->positive());
            ASSERT_EQ(v.iterates.size(), 2u);
            for (const auto& c : v.iterates) EXPECT_TRUE(c.positive());
            ASSERT_TRUE(v.separation);
            EXPECT_TRUE(v.separation->separated);
            EXPECT_TRUE(verify_certificate(f, *v.group).ok);
        }
    }
}

TEST(OdoniTest, DiscReport) {
    DiscReport r = disc_report(T("t^4 + 3*t^2"));
    EXPECT_FALSE(r.squarefree);
    EXPECT_EQ(r.squarefree_part, T("t^2 + 3"));
    EXPECT_TRUE(r.geometric_nonsquare);
    EXPECT_FALSE(disc_report(T("3*t^2")).geometric_nonsquare);
}

}  // namespace
}  // namespace arbor
