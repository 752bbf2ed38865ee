/*
   Copyright 2026 The ringtwist Authors

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

#include <vector>

#include "ringtwist/gf.hpp"
#include "ringtwist/ore.hpp"
#include "support/oracles.hpp"

using namespace ringtwist;

namespace {

OrePoly random_ore(Field f, long max_degree, Rng& g) {
    OrePoly out(f);
    for (long e = 0; e <= max_degree; ++e) out.set(e, random_element(f, g));
    return out;
}

OreMatrix mat2(Field f, OrePoly a, OrePoly b, OrePoly c, OrePoly d) {
    OreMatrix m(f, 2, 2);
    m(0, 0) = std::move(a);
    m(0, 1) = std::move(b);
    m(1, 0) = std::move(c);
    m(1, 1) = std::move(d);
    return m;
}

std::vector<std::pair<unsigned, unsigned>> fields_up_to(std::uint64_t bound) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u})
        for (unsigned k = 1;; ++k) {
            std::uint64_t q = 1;
            for (unsigned i = 0; i < k; ++i) q *= p;
            if (q > bound) break;
            out.push_back({p, k});
        }
    return out;
}

/// Smallest j whose extension F_{q^j} carries a nonzero kernel vector, searching
/// extensions with at most 2^18 elements.
std::optional<unsigned> kernel_extension(const OreMatrix& m) {
    const Field f = m.field();
    for (unsigned j = 1;; ++j) {
        std::uint64_t size = 1;
        for (unsigned i = 0; i < f.k() * j; ++i) size *= f.p();
        if (size > (1u << 18)) return std::nullopt;
        if (oracle::additive_map_bijective(m, j).kernel_vector) return j;
    }
}

}  // namespace

TEST(OreMul, CommutationRule) {
    const Field f = Field::with_default_modulus(3, 2);
    for (const auto& a : enumerate_field(f)) {
        if (a.is_zero()) continue;
        EXPECT_EQ(OrePoly::tau(f) * OrePoly::constant(a), OrePoly::monomial(a.frobenius(), 1));
    }
}

TEST(OreMul, SquareOfTauPlusOneOverF2) {
    const Field f2 = Field::with_default_modulus(2, 1);
    const OrePoly t1 = OrePoly::tau(f2) + OrePoly::one(f2);
    const OrePoly expected = OrePoly::tau(f2, 2) + OrePoly::one(f2);
    EXPECT_EQ(ore_mul(t1, t1), expected);
    const Field f16 = Field::with_default_modulus(2, 4);
    const FieldEmbedding emb(f2, f16);
    for (const auto& x : enumerate_field(f16)) EXPECT_EQ(expected(x, emb), t1(t1(x, emb), emb));
}

TEST(OreMul, UnitIsNeutral) {
    Rng g(3);
    const Field f = Field::with_default_modulus(2, 3);
    for (int t = 0; t < 20; ++t) {
        const OrePoly a = random_ore(f, 3, g);
        EXPECT_EQ(a * OrePoly::one(f), a);
        EXPECT_EQ(OrePoly::one(f) * a, a);
    }
    EXPECT_THROW(OrePoly::one(f) * OrePoly::one(Field::with_default_modulus(2, 2)), FieldMismatch);
}

TEST(OreMul, PointMapIsComposition) {
    Rng g(17);
    for (auto [p, k] : fields_up_to(32))
        for (unsigned j = 1; j <= 2; ++j) {
            const Field f = Field::with_default_modulus(p, k), big = Field::with_default_modulus(p, k * j);
            const FieldEmbedding emb(f, big);
            for (int t = 0; t < 4; ++t) {
                const OrePoly a = random_ore(f, 3, g), b = random_ore(f, 3, g);
                const OrePoly ab = ore_mul(a, b);
                for (const auto& x : enumerate_field(big)) ASSERT_EQ(ab(x, emb), a(b(x, emb), emb));
            }
        }
}

TEST(RightDivide, Examples) {
    const Field f = Field::with_default_modulus(2, 2);
    auto [q, r] = right_divide(OrePoly::tau(f, 2), OrePoly::tau(f));
    EXPECT_EQ(q, OrePoly::tau(f));
    EXPECT_TRUE(r.is_zero());
    Rng g(1);
    const OrePoly a = random_ore(f, 3, g);
    auto [q2, r2] = right_divide(a, a);
    EXPECT_EQ(q2, OrePoly::one(f));
    EXPECT_TRUE(r2.is_zero());
    EXPECT_THROW(right_divide(a, OrePoly(f)), DivisionByZero);
}

TEST(RightDivide, MultiplyBack) {
    Rng g(2);
    const Field f = Field::with_default_modulus(2, 2);
    for (int t = 0; t < 200; ++t) {
        const OrePoly a = random_ore(f, uniform_below(g, 4), g), b = random_ore(f, uniform_below(g, 4), g);
        if (b.is_zero()) continue;
        const auto [q, r] = right_divide(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_TRUE(r.is_zero() || r.degree() < b.degree());
    }
}

TEST(KernelTrivial, Examples) {
    const Field f3 = Field::with_default_modulus(3, 1);
    EXPECT_TRUE(kernel_trivial_on_closure(OrePoly::tau(f3)));
    const OrePoly artin = OrePoly::tau(f3) - OrePoly::one(f3);
    EXPECT_FALSE(kernel_trivial_on_closure(artin));
    for (const auto& x : enumerate_field(f3)) EXPECT_TRUE(artin(x).is_zero());
    const Field f4 = Field::with_default_modulus(2, 2);
    EXPECT_TRUE(kernel_trivial_on_closure(OrePoly::monomial(FieldElem::generator(f4), 3)));
    EXPECT_THROW(kernel_trivial_on_closure(OrePoly(f4)), ZeroMap);
}

TEST(KernelTrivial, MonomialsHaveNoRootsOnSmallExtensions) {
    Rng g(5);
    for (auto [p, k] : fields_up_to(16)) {
        const Field f = Field::with_default_modulus(p, k);
        for (int t = 0; t < 5; ++t) {
            FieldElem c = random_element(f, g);
            if (c.is_zero()) c = FieldElem::one(f);
            OreMatrix m(f, 1, 1);
            m(0, 0) = OrePoly::monomial(c, static_cast<long>(uniform_below(g, 4)));
            for (unsigned j = 1; j <= 3; ++j) EXPECT_TRUE(oracle::additive_map_bijective(m, j).bijective);
        }
    }
}

TEST(KernelTrivial, LinearNonMonomialsHaveRootsInSomeExtension) {
    Rng g(6);
    for (auto [p, k] : fields_up_to(9)) {
        const Field f = Field::with_default_modulus(p, k);
        for (int t = 0; t < 10; ++t) {
            OrePoly a = random_ore(f, 1, g);
            if (a.is_zero() || a.is_monomial()) continue;
            OreMatrix m(f, 1, 1);
            m(0, 0) = a;
            EXPECT_TRUE(kernel_extension(m)) << a.to_string() << " over F_" << f.order();
        }
    }
}

TEST(Triangularize, AlreadyTriangular) {
    const Field f = Field::with_default_modulus(2, 2);
    const OreMatrix m = mat2(f, OrePoly::tau(f), OrePoly::one(f), OrePoly(f), OrePoly::tau(f, 2));
    const auto tri = triangularize(m);
    EXPECT_EQ(tri.u, OreMatrix::identity(f, 2));
    EXPECT_EQ(tri.t, m);
}

TEST(Triangularize, RankDeficientExample) {
    const Field f = Field::with_default_modulus(2, 1);
    const OreMatrix m = mat2(f, OrePoly::tau(f), OrePoly::one(f), OrePoly::tau(f, 2), OrePoly::tau(f));
    const auto tri = triangularize(m);
    EXPECT_EQ(tri.u * m, tri.t);
    EXPECT_TRUE(tri.t(1, 0).is_zero());
    EXPECT_TRUE(tri.t(1, 1).is_zero());
    EXPECT_FALSE(point_bijective(m));
    const Field f4 = Field::with_default_modulus(2, 2);
    const FieldEmbedding emb(f, f4);
    for (const auto& x : enumerate_field(f4))
        for (const auto& y : enumerate_field(f4))
            EXPECT_EQ(tri.t.apply(Vec{x, y}, emb), tri.u.apply(m.apply(Vec{x, y}, emb), emb));
}

TEST(Triangularize, RandomMultiplyBack) {
    Rng g(8);
    for (auto [p, k] : fields_up_to(27)) {
        const Field f = Field::with_default_modulus(p, k);
        for (int t = 0; t < 6; ++t) {
            const std::size_t d = 1 + uniform_below(g, 3);
            const OreMatrix m = oracle::random_ore_matrix(f, d, 3, g);
            const auto tri = triangularize(m);
            ASSERT_EQ(tri.u * m, tri.t);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t c = 0; c < i; ++c) ASSERT_TRUE(tri.t(i, c).is_zero());
        }
    }
    EXPECT_THROW(triangularize(OreMatrix(Field::with_default_modulus(2, 1), 2, 3)), DimensionMismatch);
}

TEST(PointBijective, Examples) {
    const Field f = Field::with_default_modulus(3, 1);
    EXPECT_TRUE(point_bijective(OreMatrix::diagonal(f, {OrePoly::tau(f), OrePoly::tau(f, 2)})));
    const OreMatrix bad = OreMatrix::diagonal(f, {OrePoly::tau(f), OrePoly::tau(f) - OrePoly::one(f)});
    EXPECT_FALSE(point_bijective(bad));
    const auto kernel = oracle::additive_map_bijective(bad, 1);
    EXPECT_FALSE(kernel.bijective);
    ASSERT_TRUE(kernel.kernel_vector);
    EXPECT_TRUE(point_bijective(OreMatrix::identity(f, 3)));
    EXPECT_THROW(point_bijective(OreMatrix(f, 1, 2)), DimensionMismatch);
}

TEST(PointBijective, CriterionTrueMeansBijectiveOnExtensions) {
    Rng g(21);
    int positives = 0;
    for (auto [p, k] : fields_up_to(16)) {
        const Field f = Field::with_default_modulus(p, k);
        for (int t = 0; t < 30; ++t) {
            const OreMatrix m = oracle::random_ore_matrix(f, 1 + uniform_below(g, 2), 2, g);
            if (!point_bijective(m)) continue;
            ++positives;
            for (unsigned j = 1; j <= 3; ++j) ASSERT_TRUE(oracle::additive_map_bijective(m, j).bijective);
        }
    }
    EXPECT_GT(positives, 20);
}

TEST(PointBijective, CriterionFalseMeansKernelInSomeExtension) {
    Rng g(22);
    int negatives = 0;
    for (auto [p, k] : fields_up_to(4)) {
        const Field f = Field::with_default_modulus(p, k);
        for (int t = 0; t < 40; ++t) {
            const OreMatrix m = oracle::random_ore_matrix(f, 1 + uniform_below(g, 2), 1, g);
            if (point_bijective(m)) continue;
            ++negatives;
            EXPECT_TRUE(kernel_extension(m));
        }
    }
    EXPECT_GT(negatives, 20);
}

TEST(PointBijective, RankOracleMatchesEnumeration) {
    Rng g(23);
    for (auto [p, k] : fields_up_to(8)) {
        const Field f = Field::with_default_modulus(p, k);
        for (int t = 0; t < 8; ++t) {
            const OreMatrix m = oracle::random_ore_matrix(f, 1 + uniform_below(g, 2), 2, g);
            for (unsigned j = 1; j <= 2; ++j)
                ASSERT_EQ(oracle::additive_map_bijective(m, j).bijective, oracle::enumerated_bijective(m, j));
        }
    }
}

TEST(OreMatrix, ApplyIsAdditive) {
    Rng g(30);
    const Field f = Field::with_default_modulus(5, 1);
    for (int t = 0; t < 20; ++t) {
        const OreMatrix m = oracle::random_ore_matrix(f, 2, 3, g);
        const Vec x{random_element(f, g), random_element(f, g)}, y{random_element(f, g), random_element(f, g)};
        EXPECT_EQ(m.apply(x + y), m.apply(x) + m.apply(y));
    }
}

TEST(ClearDenominators, Examples) {
    const Field f = Field::with_default_modulus(2, 3);
    LaurentOreMatrix root(f, 1, 1);
    root(0, 0) = LaurentOrePoly::tau(f, -1);
    const auto c1 = clear_frobenius_denominators(root);
    EXPECT_EQ(c1.n, 1u);
    EXPECT_EQ(c1.m0(0, 0), OrePoly::one(f));

    LaurentOreMatrix plain(f, 1, 2);
    plain(0, 0) = LaurentOrePoly::monomial(FieldElem::generator(f), 2);
    plain(0, 1) = LaurentOrePoly::one(f);
    const auto c0 = clear_frobenius_denominators(plain);
    EXPECT_EQ(c0.n, 0u);
    EXPECT_EQ(c0.m0(0, 0), OrePoly::monomial(FieldElem::generator(f), 2));
    EXPECT_EQ(c0.m0(0, 1), OrePoly::one(f));

    LaurentOreMatrix two(f, 1, 1);
    two(0, 0) = LaurentOrePoly::tau(f, -2) + LaurentOrePoly::one(f);
    const auto c2 = clear_frobenius_denominators(two);
    EXPECT_EQ(c2.n, 2u);
    EXPECT_EQ(c2.m0(0, 0), OrePoly::one(f) + OrePoly::tau(f, 2));
}

TEST(ClearDenominators, PointMapsAgree) {
    Rng g(31);
    for (auto [p, k] : {std::pair{2u, 2u}, {3u, 1u}, {2u, 3u}}) {
        const Field f = Field::with_default_modulus(p, k), big = Field::with_default_modulus(p, 2 * k);
        const FieldEmbedding emb(f, big);
        for (int t = 0; t < 5; ++t) {
            LaurentOreMatrix m(f, 1, 1);
            for (long e = -2; e <= 1; ++e) m(0, 0).set(e, random_element(f, g));
            if (m(0, 0).is_zero()) continue;
            const auto c = clear_frobenius_denominators(m);
            for (const auto& x : enumerate_field(big)) {
                const Vec root{x.inverse_frobenius(c.n)};
                ASSERT_EQ(c.m0.apply(root, emb), m.apply(Vec{x}, emb));
            }
        }
    }
}

TEST(SolveAdditive, FindsPreimages) {
    Rng g(40);
    for (auto [p, k] : fields_up_to(16)) {
        const Field f = Field::with_default_modulus(p, k);
        for (int t = 0; t < 10; ++t) {
            const std::size_t d = 1 + uniform_below(g, 2);
            const OreMatrix m = oracle::random_ore_matrix(f, d, 2, g);
            Vec x(d);
            for (auto& v : x) v = random_element(f, g);
            const Vec b = m.apply(x);
            const auto sol = solve_additive_system(m, b);
            ASSERT_TRUE(sol);
            EXPECT_EQ(m.apply(*sol), b);
        }
    }
}
