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

using namespace ringtwist;

namespace {

Mat random_mat(Field f, std::size_t r, std::size_t c, Rng& g) {
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_element(f, g);
    return m;
}

Mat product(const Mat& a, const Mat& b) {
    Mat out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < b.cols(); ++k)
            for (std::size_t j = 0; j < a.cols(); ++j) out(i, k) += a(i, j) * b(j, k);
    return out;
}

}  // namespace

TEST(Linalg, RankOfKnownMatrices) {
    const Field f = Field::with_default_modulus(3, 1);
    auto e = [&](long long v) { return FieldElem::from_int(f, v); };
    EXPECT_EQ(rank(Mat::from_rows(f, 3, {{e(1), e(2), e(0)}, {e(2), e(1), e(0)}, {e(0), e(0), e(1)}})), 2u);
    EXPECT_EQ(rank(Mat::from_rows(f, 2, {{e(1), e(0)}, {e(0), e(1)}})), 2u);
    EXPECT_EQ(rank(Mat(f, 3, 4)), 0u);
}

TEST(Linalg, NullspaceVectorsAreKernelAndFillCorank) {
    Rng g(1);
    for (auto [p, k] : {std::pair{2u, 1u}, {2u, 2u}, {5u, 1u}, {3u, 2u}}) {
        const Field f = Field::with_default_modulus(p, k);
        for (int t = 0; t < 30; ++t) {
            const std::size_t r = 1 + uniform_below(g, 4), c = 1 + uniform_below(g, 5);
            Mat m = random_mat(f, r, c, g);
            if (t % 3 == 0 && r > 1)
                for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) + m(0, j);
            const auto ns = nullspace(m);
            EXPECT_EQ(ns.size() + rank(m), c);
            EXPECT_TRUE(linearly_independent(f, c, ns));
            for (const auto& v : ns) EXPECT_TRUE(is_zero(m.apply(v)));
        }
    }
}

TEST(Linalg, SolveAndInverse) {
    Rng g(2);
    const Field f = Field::with_default_modulus(7, 1);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + uniform_below(g, 4);
        const Mat m = random_mat(f, n, n, g);
        Vec x(n);
        for (auto& v : x) v = random_element(f, g);
        const Vec b = m.apply(x);
        const auto sol = solve(m, b);
        ASSERT_TRUE(sol);
        EXPECT_EQ(m.apply(*sol), b);
        const auto inv = inverse(m);
        EXPECT_EQ(inv.has_value(), rank(m) == n);
        if (inv) {
            const Mat id = product(m, *inv);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(id(i, j), i == j ? FieldElem::one(f) : FieldElem::zero(f));
        }
    }
}

TEST(Linalg, InconsistentSystemHasNoSolution) {
    const Field f = Field::with_default_modulus(2, 1);
    const auto one = FieldElem::one(f), zero = FieldElem::zero(f);
    const Mat m = Mat::from_rows(f, 2, {{one, one}, {one, one}});
    EXPECT_FALSE(solve(m, Vec{one, zero}));
    EXPECT_TRUE(solve(m, Vec{one, one}));
}

TEST(Linalg, SpanMembership) {
    const Field f = Field::with_default_modulus(5, 1);
    auto e = [&](long long v) { return FieldElem::from_int(f, v); };
    const std::vector<Vec> vs{{e(1), e(2), e(3)}, {e(2), e(4), e(1)}, {e(0), e(1), e(1)}};
    const auto basis = span_basis(f, 3, vs);
    EXPECT_EQ(basis.size(), 2u);
    for (const auto& v : vs) EXPECT_TRUE(in_span(f, 3, basis, v));
    EXPECT_FALSE(in_span(f, 3, basis, Vec{e(0), e(0), e(1)}));
    EXPECT_TRUE(in_span(f, 3, {}, zero_vec(f, 3)));
}
