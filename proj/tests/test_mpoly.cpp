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
#include "ringtwist/linalg.hpp"
#include "ringtwist/mpoly.hpp"

using namespace ringtwist;

namespace {

MPoly random_poly(Field f, std::size_t nvars, Rng& g) {
    MPoly out(f, nvars);
    for (int t = 0; t < 4; ++t) {
        MPoly::Exponents e(nvars);
        for (auto& x : e) x = uniform_below(g, 4);
        out.add_term(e, random_element(f, g));
    }
    return out;
}

Vec random_point(Field f, std::size_t n, Rng& g) {
    Vec v(n);
    for (auto& x : v) x = random_element(f, g);
    return v;
}

}  // namespace

TEST(MPoly, NormalFormCancels) {
    const Field f = Field::with_default_modulus(3, 1);
    const MPoly x = MPoly::variable(f, 2, 0), y = MPoly::variable(f, 2, 1);
    const MPoly a = (x + y) * (x + y);
    const MPoly b = x * x + FieldElem::from_int(f, 2) * (x * y) + y * y;
    EXPECT_EQ(a, b);
    EXPECT_TRUE((a - b).is_zero());
    EXPECT_EQ(a.terms().size(), 3u);
}

TEST(MPoly, FrobeniusPowerIsTermwise) {
    for (auto [p, k] : {std::pair{2u, 2u}, {3u, 1u}, {5u, 1u}}) {
        const Field f = Field::with_default_modulus(p, k);
        Rng g(p);
        for (int t = 0; t < 20; ++t) {
            const MPoly a = random_poly(f, 2, g);
            MPoly power = MPoly::constant(f, 2, FieldElem::one(f));
            for (unsigned i = 0; i < p; ++i) power = power * a;
            EXPECT_EQ(a.frobenius_power(1), power);
        }
    }
}

TEST(MPoly, EvaluationIsRingHomomorphism) {
    const Field f = Field::with_default_modulus(2, 3);
    Rng g(9);
    for (int t = 0; t < 50; ++t) {
        const MPoly a = random_poly(f, 3, g), b = random_poly(f, 3, g);
        const Vec pt = random_point(f, 3, g);
        EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
        EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
        EXPECT_EQ(a.frobenius_power(2).evaluate(pt), a.evaluate(pt).frobenius(2));
    }
}

TEST(MPoly, EvaluationThroughEmbedding) {
    const Field small = Field::with_default_modulus(2, 2), big = Field::with_default_modulus(2, 4);
    const FieldEmbedding emb(small, big);
    Rng g(4);
    for (int t = 0; t < 30; ++t) {
        const MPoly a = random_poly(small, 2, g), b = random_poly(small, 2, g);
        const Vec pt = random_point(big, 2, g);
        EXPECT_EQ((a * b).evaluate(pt, emb), a.evaluate(pt, emb) * b.evaluate(pt, emb));
    }
}

TEST(MPoly, DerivativeReducesExponents) {
    const Field f = Field::with_default_modulus(3, 1);
    const MPoly x = MPoly::variable(f, 2, 0), y = MPoly::variable(f, 2, 1);
    const MPoly g = x * x * x * y + x * x + y;
    EXPECT_EQ(g.derivative(0), FieldElem::from_int(f, 2) * x);
    EXPECT_EQ(g.derivative(1), x * x * x + MPoly::constant(f, 2, FieldElem::one(f)));
    EXPECT_TRUE(MPoly::variable(f, 1, 0, 3).derivative(0).is_zero());
}

TEST(MPoly, LeibnizRule) {
    const Field f = Field::with_default_modulus(5, 1);
    Rng g(11);
    for (int t = 0; t < 30; ++t) {
        const MPoly a = random_poly(f, 2, g), b = random_poly(f, 2, g);
        for (std::size_t v = 0; v < 2; ++v) EXPECT_EQ((a * b).derivative(v), a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST(MPoly, FirstDifferenceAndFormatting) {
    const Field f = Field::with_default_modulus(2, 1);
    const MPoly x = MPoly::variable(f, 2, 0), y = MPoly::variable(f, 2, 1);
    EXPECT_FALSE(first_difference(x * y, y * x));
    const auto d = first_difference(x * y + x, x * y);
    ASSERT_TRUE(d);
    EXPECT_EQ(MPoly::monomial_to_string(d->exponents, {"x", "y"}), "x");
    EXPECT_TRUE(d->left.is_one());
    EXPECT_TRUE(d->right.is_zero());
    EXPECT_EQ(MPoly(f, 2).to_string({"x", "y"}), "0");
    EXPECT_THROW(x + MPoly::variable(f, 3, 0), DimensionMismatch);
    EXPECT_THROW(MPoly::variable(f, 2, 2), IndexError);
}
