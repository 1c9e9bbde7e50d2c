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
#include <vector>

#include "arbor/ff.hpp"

namespace arbor {
namespace {

// Exhaustive root search: a degree-2 or degree-3 polynomial over F_p is
// irreducible iff it has no root.
bool has_root(const std::vector<std::uint32_t>& m, std::uint32_t p) {
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = m.size(); i-- > 0;) acc = (acc * x + m[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

TEST(FieldTest, PrimeFieldModulusIsX) {
    for (std::uint64_t seed : {0u, 7u, 123u}) {
        Field f = make_extension(5, 1, seed);
        EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{0, 1}));
        EXPECT_EQ(f->order(), 5u);
    }
}

TEST(FieldTest, SeedZeroQuadraticModuli) {
    EXPECT_EQ(make_extension(3, 2, 0)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
    EXPECT_EQ(make_extension(5, 2, 0)->modulus(), (std::vector<std::uint32_t>{2, 0, 1}));
}

TEST(FieldTest, SeededModuliAreIrreducibleAndReproducible) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        for (std::size_t k : {2u, 3u}) {
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                Field a = make_extension(p, k, seed);
                Field b = make_extension(p, k, seed);
                EXPECT_EQ(a, b);
                ASSERT_EQ(a->modulus().size(), k + 1);
                EXPECT_EQ(a->modulus().back(), 1u);
                EXPECT_FALSE(has_root(a->modulus(), p));
            }
        }
    }
}

TEST(FieldTest, RejectsBadCharacteristic) {
    EXPECT_THROW(make_extension(2, 1, 0), std::invalid_argument);
    EXPECT_THROW(make_extension(9, 1, 0), std::invalid_argument);
    EXPECT_THROW(make_extension(1, 1, 0), std::invalid_argument);
    EXPECT_THROW(FieldSpec(3, {1, 1, 1}), std::invalid_argument);  // x^2+x+1 = (x-1)^2 mod 3
}

TEST(FieldTest, SmallArithmetic) {
    Field f5 = prime_field(5);
    EXPECT_EQ(inv(Fe::from_int(f5, 2)), Fe::from_int(f5, 3));
    EXPECT_THROW(inv(Fe(f5)), std::domain_error);
    Field f9 = make_extension(3, 2, 0);
    Fe g = Fe::generator(f9);
    EXPECT_EQ(g * g, Fe::from_int(f9, 2));
    EXPECT_EQ(frobenius(g), Fe::from_int(f9, 2) * g);
    EXPECT_TRUE(frobenius(Fe(f9)).is_zero());
    EXPECT_EQ(frobenius(Fe::from_int(f9, 2)), Fe::from_int(f9, 2));
}

TEST(FieldTest, UnitGroupOrder) {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::size_t>>{{5, 1}, {3, 2}, {7, 3}, {3, 5}}) {
        Field f = make_extension(p, k, 0);
        for (std::uint64_t i = 1; i < std::min<std::uint64_t>(f->order(), 200); ++i)
            EXPECT_TRUE(pow(Fe::from_index(f, i), f->order() - 1).is_one());
    }
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, std::size_t>> {};

TEST_P(FieldAxioms, RandomTriples) {
    auto [p, k] = GetParam();
    Field f = make_extension(p, k, 3);
    std::mt19937_64 rng(p * 31 + k);
    for (int it = 0; it < 1000; ++it) {
        Fe a = random_fe(f, rng), b = random_fe(f, rng), c = random_fe(f, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a - b) + b, a);
        if (!a.is_zero()) {
            EXPECT_TRUE((inv(a) * a).is_one());
        }
        EXPECT_EQ(frobenius(a + b), frobenius(a) + frobenius(b));
        EXPECT_EQ(frobenius(a * b), frobenius(a) * frobenius(b));
        Fe fa = a;
        for (std::size_t i = 0; i < k; ++i) fa = frobenius(fa);
        EXPECT_EQ(fa, a);
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(std::make_pair(3u, std::size_t{1}), std::make_pair(5u, std::size_t{1}),
                                           std::make_pair(3u, std::size_t{2}), std::make_pair(5u, std::size_t{3}),
                                           std::make_pair(7u, std::size_t{4}), std::make_pair(1000003u, std::size_t{1}),
                                           std::make_pair(3u, std::size_t{16})));

TEST(FieldTest, IndexRoundTripAndEmbedding) {
    Field f = make_extension(5, 2, 0);
    for (std::uint64_t i = 0; i < f->order(); ++i) EXPECT_EQ(Fe::from_index(f, i).index(), i);
    Fe three = embed(Fe::from_int(prime_field(5), 3), f);
    EXPECT_EQ(three, Fe::from_int(f, 3));
    EXPECT_THROW(embed(Fe::generator(f), prime_field(5)), std::invalid_argument);
}

TEST(FieldTest, SquaresMatchEnumeration) {
    Field f = make_extension(3, 2, 0);
    std::vector<bool> sq(f->order(), false);
    for (std::uint64_t i = 0; i < f->order(); ++i) sq[(Fe::from_index(f, i) * Fe::from_index(f, i)).index()] = true;
    for (std::uint64_t i = 0; i < f->order(); ++i) EXPECT_EQ(is_square(Fe::from_index(f, i)), sq[i]) << i;
}

}  // namespace
}  // namespace arbor
