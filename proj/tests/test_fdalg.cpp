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

#include <set>
#include <vector>

#include "ringtwist/fdalg.hpp"
#include "ringtwist/specfile.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace ringtwist;

namespace {

using Key = std::vector<std::uint64_t>;

Key key_of(const Vec& v) {
    Key k;
    for (const auto& x : v) k.push_back(x.code());
    return k;
}

std::uint64_t point_count(const StructAlgebra& b) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < b.dim(); ++i) n *= b.field().order();
    return n;
}

std::set<Key> span_points(Field f, std::size_t d, const std::vector<Vec>& basis) {
    std::set<Key> out;
    const auto elems = enumerate_field(f);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= f.order();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vec v = zero_vec(f, d);
        std::uint64_t r = idx;
        for (const auto& b : basis) {
            v = v + scale(elems[r % f.order()], b);
            r /= f.order();
        }
        out.insert(key_of(v));
    }
    return out;
}

std::set<Key> brute_idempotents(const StructAlgebra& b) {
    std::set<Key> out;
    const Field f = b.field();
    for (std::uint64_t idx = 0; idx < point_count(b); ++idx) {
        Vec x(b.dim());
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < b.dim(); ++i, r /= f.order()) x[i] = FieldElem(f, r % f.order());
        if (b.multiply(x, x) == x) out.insert(key_of(x));
    }
    return out;
}

AlgebraPresentation field_presentation(Field f) {
    const auto& m = f.spec().modulus();
    MPoly rel(f, 1);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) rel += FieldElem::from_int(f, m[i]) * MPoly::variable(f, 1, 0, i);
    const FieldElem root = f.k() == 1 ? -FieldElem::from_int(f, m[0]) : FieldElem::generator(f);
    return {f, {"a"}, {rel}, {root}};
}

}  // namespace

TEST(Nilradical, MatchesBruteForceOnCorpus) {
    for (const auto& e : corpus::commutative_algebras()) {
        if (point_count(e.algebra) > 4096) continue;
        const auto j = nilradical(e.algebra);
        std::set<Key> brute;
        for (const auto& x : oracle::nilpotent_elements(e.algebra)) brute.insert(key_of(x));
        EXPECT_EQ(span_points(e.algebra.field(), e.algebra.dim(), j.vectors), brute) << e.name;
    }
}

TEST(Nilradical, NonUnitalNeedsHigherExponent) {
    const Field f = Field::with_default_modulus(2, 1);
    StructAlgebra b(f, 2);
    b.set_c(1, 0, 0, FieldElem::one(f));
    EXPECT_EQ(radical_exponent(b), 2u);
    EXPECT_EQ(nilradical(b).dim(), 2u);
}

TEST(Nilradical, Examples) {
    const Field f = Field::with_default_modulus(3, 1);
    EXPECT_EQ(nilradical(corpus::quotient_algebra(f, {0, 0, 1})).dim(), 1u);
    EXPECT_EQ(nilradical(corpus::quotient_algebra(f, {0, -1, 1})).dim(), 0u);
    EXPECT_EQ(nilradical(corpus::quotient_algebra(f, {0, 0, 0, 1})).dim(), 2u);
    StructAlgebra nc(f, 2);
    nc.set_c(0, 0, 1, FieldElem::one(f));
    EXPECT_THROW(nilradical(nc), NotCommutative);
}

TEST(Idempotents, AreCompleteOrthogonalAndPrimitive) {
    for (const auto& e : corpus::commutative_algebras()) {
        if (!e.split) continue;
        const StructAlgebra& b = e.algebra;
        const auto idems = lift_idempotents(b);
        Vec sum = b.zero();
        for (std::size_t i = 0; i < idems.size(); ++i) {
            EXPECT_EQ(b.multiply(idems[i], idems[i]), idems[i]) << e.name;
            EXPECT_FALSE(is_zero(idems[i])) << e.name;
            for (std::size_t j = i + 1; j < idems.size(); ++j) EXPECT_TRUE(is_zero(b.multiply(idems[i], idems[j]))) << e.name;
            sum = sum + idems[i];
        }
        EXPECT_EQ(sum, *b.unit()) << e.name;
        if (point_count(b) > 4096) continue;
        std::set<Key> sums;
        for (std::uint64_t mask = 0; mask < (1u << idems.size()); ++mask) {
            Vec s = b.zero();
            for (std::size_t i = 0; i < idems.size(); ++i)
                if (mask >> i & 1) s = s + idems[i];
            sums.insert(key_of(s));
        }
        EXPECT_EQ(sums, brute_idempotents(b)) << e.name;
    }
}

TEST(Idempotents, NotSplitReportsMinimalPolynomial) {
    const Field f = Field::with_default_modulus(2, 1);
    try {
        lift_idempotents(corpus::quotient_algebra(f, {1, 1, 1}));
        FAIL() << "expected NotSplit";
    } catch (const NotSplit& e) {
        EXPECT_EQ(e.minimal_polynomial(), (std::vector<std::vector<unsigned>>{{1}, {1}, {1}}));
    }
    for (const auto& e : corpus::commutative_algebras())
        if (!e.split) {
            EXPECT_THROW(lift_idempotents(e.algebra), NotSplit) << e.name;
        }
}

TEST(WedderburnMalcev, ComplementIsSemisimpleAndFillsAlgebra) {
    for (const auto& e : corpus::commutative_algebras()) {
        if (!e.split) continue;
        const auto wm = wedderburn_malcev(e.algebra);
        EXPECT_EQ(wm.semisimple.dim() + wm.radical.dim(), e.algebra.dim()) << e.name;
        std::vector<Vec> all = wm.semisimple.vectors;
        all.insert(all.end(), wm.radical.vectors.begin(), wm.radical.vectors.end());
        EXPECT_TRUE(linearly_independent(e.algebra.field(), e.algebra.dim(), all)) << e.name;
        for (const auto& x : wm.semisimple.vectors)
            for (const auto& y : wm.semisimple.vectors) {
                const Vec xy = e.algebra.multiply(x, y);
                auto in = wm.semisimple.vectors;
                in.push_back(xy);
                EXPECT_FALSE(linearly_independent(e.algebra.field(), e.algebra.dim(), in) && !is_zero(xy)) << e.name;
            }
    }
}

TEST(LocalDecomposition, PiecesAreLocalWithOneHomomorphism) {
    for (const auto& e : corpus::commutative_algebras()) {
        if (!e.split) continue;
        const auto pieces = local_decomposition(e.algebra);
        std::size_t total = 0;
        for (const auto& piece : pieces) {
            total += piece.algebra.dim();
            EXPECT_TRUE(piece.algebra.valid()) << e.name;
            EXPECT_TRUE(piece.algebra.unit_valid()) << e.name;
            EXPECT_EQ(nilradical(piece.algebra).dim(), piece.algebra.dim() - 1) << e.name;
            EXPECT_EQ(algebra_homomorphisms(piece.algebra).size(), 1u) << e.name;
        }
        EXPECT_EQ(total, e.algebra.dim()) << e.name;
        EXPECT_EQ(algebra_homomorphisms(e.algebra).size(), pieces.size()) << e.name;
    }
}

TEST(LocalDecomposition, KTimesDualNumbers) {
    const Field f = Field::with_default_modulus(3, 1);
    const auto b = corpus::product(corpus::quotient_algebra(f, {-1, 1}), corpus::quotient_algebra(f, {0, 0, 1}));
    const auto pieces = local_decomposition(b);
    ASSERT_EQ(pieces.size(), 2u);
    std::multiset<std::size_t> dims;
    for (const auto& piece : pieces) dims.insert(piece.algebra.dim());
    EXPECT_EQ(dims, (std::multiset<std::size_t>{1, 2}));
}

TEST(AlgebraHomomorphisms, BoundAndUnit) {
    const Field f = Field::with_default_modulus(2, 2);
    EXPECT_THROW(algebra_homomorphisms(corpus::quotient_algebra(f, {0, 0, 0, 1}), 16), BoundExceeded);
    StructAlgebra nu(f, 1);
    EXPECT_THROW(algebra_homomorphisms(nu), NoUnit);
}

TEST(Derivations, FinitePrimeFieldExtensionsHaveNone) {
    for (unsigned p : {2u, 3u, 5u, 7u})
        for (unsigned k = 1;; ++k) {
            std::uint64_t q = 1;
            for (unsigned i = 0; i < k; ++i) q *= p;
            if (q > 64) break;
            const Field f = Field::with_default_modulus(p, k);
            EXPECT_TRUE(derivation_space(field_presentation(f)).empty()) << q;
        }
    for (unsigned q : {11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 59u, 61u})
        EXPECT_TRUE(derivation_space(field_presentation(Field::with_default_modulus(q, 1))).empty()) << q;
}

TEST(Derivations, FreeGeneratorAndFrobeniusRelation) {
    const Field f7 = Field::with_default_modulus(7, 1);
    EXPECT_EQ(derivation_space({f7, {"x"}, {}, {FieldElem::zero(f7)}}).size(), 1u);
    const Field f5 = Field::with_default_modulus(5, 1);
    const MPoly s = MPoly::variable(f5, 2, 1);
    const FieldElem two = FieldElem::from_int(f5, 2);
    const AlgebraPresentation pres{f5, {"t", "s"}, {s - MPoly::variable(f5, 2, 0, 5)}, {two, two}};
    const auto basis = derivation_space(pres);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_TRUE(basis[0][1].is_zero());
    EXPECT_FALSE(basis[0][0].is_zero());
}

TEST(Derivations, SpecFiles) {
    const std::string dir = RINGTWIST_SPEC_DIR;
    EXPECT_TRUE(derivation_space(*load_spec(dir + "/field_f64.rt").presentation).empty());
    EXPECT_EQ(derivation_space(*load_spec(dir + "/free_one_generator.rt").presentation).size(), 1u);
    EXPECT_EQ(derivation_space(*load_spec(dir + "/frobenius_relation.rt").presentation).size(), 1u);
    EXPECT_THROW(derivation_space(*load_spec(dir + "/bad_hom.rt").presentation), InvalidPresentation);
}

TEST(Derivations, LeibnizRuleAndRelationsVanish) {
    Rng g(9);
    const Field f = Field::with_default_modulus(3, 2);
    const MPoly x = MPoly::variable(f, 2, 0), y = MPoly::variable(f, 2, 1);
    const FieldElem z = FieldElem::generator(f);
    const AlgebraPresentation pres{f, {"x", "y"}, {x * x - y}, {z, z * z}};
    const auto basis = derivation_space(pres);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_TRUE(apply_derivation(pres, basis[0], pres.relations[0]).is_zero());
    auto random_poly = [&] {
        MPoly out(f, 2);
        for (unsigned a = 0; a < 3; ++a)
            for (unsigned b = 0; b < 3; ++b)
                out += random_element(f, g) * (MPoly::variable(f, 2, 0, a) * MPoly::variable(f, 2, 1, b));
        return out;
    };
    for (int t = 0; t < 20; ++t) {
        const MPoly a = random_poly(), b = random_poly();
        const FieldElem lhs = apply_derivation(pres, basis[0], a * b);
        const FieldElem rhs = a.evaluate(pres.hom) * apply_derivation(pres, basis[0], b) +
                              b.evaluate(pres.hom) * apply_derivation(pres, basis[0], a);
        EXPECT_EQ(lhs, rhs);
    }
}
