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


#ifndef RINGTWIST_ORE_HPP
#define RINGTWIST_ORE_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "mpoly.hpp"

namespace ringtwist {

/// Twisted polynomial sum a_i tau^i over F_{p^k} with tau a = a^p tau. Its
/// point map is x -> sum a_i x^(p^i). With `Laurent` negative exponents are
/// allowed and act through inverse Frobenius.
template <bool Laurent>
class BasicOrePoly {
   public:
    using Terms = std::map<long, FieldElem>;

    BasicOrePoly() = default;
    explicit BasicOrePoly(Field f) : f_(f) {}

    static BasicOrePoly monomial(const FieldElem& c, long exponent) {
        BasicOrePoly out(c.field());
        out.set(exponent, c);
        return out;
    }
    static BasicOrePoly constant(const FieldElem& c) { return monomial(c, 0); }
    static BasicOrePoly one(Field f) { return constant(FieldElem::one(f)); }
    static BasicOrePoly tau(Field f, long exponent = 1) { return monomial(FieldElem::one(f), exponent); }

    Field field() const noexcept { return f_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    FieldElem coefficient(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldElem::zero(f_) : it->second;
    }
    void set(long e, const FieldElem& c) {
        if constexpr (!Laurent) {
            if (e < 0) throw IndexError("negative tau exponent in an ordinary twisted polynomial");
        }
        if (!(c.field() == f_)) throw FieldMismatch();
        if (c.is_zero())
            terms_.erase(e);
        else
            terms_[e] = c;
    }

    /// Highest tau exponent; the zero polynomial has degree LONG_MIN.
    long degree() const noexcept { return terms_.empty() ? std::numeric_limits<long>::min() : terms_.rbegin()->first; }
    /// Lowest tau exponent; the zero polynomial has valuation LONG_MAX.
    long valuation() const noexcept { return terms_.empty() ? std::numeric_limits<long>::max() : terms_.begin()->first; }
    FieldElem leading_coefficient() const { return terms_.empty() ? FieldElem::zero(f_) : terms_.rbegin()->second; }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    BasicOrePoly& operator+=(const BasicOrePoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) set(e, coefficient(e) + c);
        return *this;
    }
    BasicOrePoly& operator-=(const BasicOrePoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) set(e, coefficient(e) - c);
        return *this;
    }
    friend BasicOrePoly operator+(BasicOrePoly a, const BasicOrePoly& b) { return a += b; }
    friend BasicOrePoly operator-(BasicOrePoly a, const BasicOrePoly& b) { return a -= b; }
    BasicOrePoly operator-() const {
        BasicOrePoly out(f_);
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }

    /// Ore product; the point map of f*g is x -> f(g(x)).
    friend BasicOrePoly operator*(const BasicOrePoly& f, const BasicOrePoly& g) {
        f.check(g);
        BasicOrePoly out(f.f_);
        for (const auto& [i, a] : f.terms_) {
            for (const auto& [j, b] : g.terms_) {
                // a tau^i b tau^j = a b^(p^i) tau^(i+j)
                const FieldElem twisted = i >= 0 ? b.frobenius(static_cast<unsigned>(i))
                                                 : b.inverse_frobenius(static_cast<unsigned>(-i));
                out.set(i + j, out.coefficient(i + j) + a * twisted);
            }
        }
        return out;
    }

    FieldElem operator()(const FieldElem& x) const {
        if (!(x.field() == f_)) throw FieldMismatch();
        FieldElem acc = FieldElem::zero(f_);
        for (const auto& [e, c] : terms_) acc += c * power(x, e);
        return acc;
    }
    /// Point map on an extension field.
    FieldElem operator()(const FieldElem& x, const FieldEmbedding& emb) const {
        FieldElem acc = FieldElem::zero(emb.target());
        for (const auto& [e, c] : terms_) acc += emb(c) * power(x, e);
        return acc;
    }

    friend bool operator==(const BasicOrePoly& a, const BasicOrePoly& b) {
        return a.f_ == b.f_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            const auto& [e, c] = *it;
            if (e == 0) {
                out += ringtwist::to_string(c);
                continue;
            }
            if (!c.is_one()) out += "(" + ringtwist::to_string(c) + ")*";
            out += "tau";
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

   private:
    static FieldElem power(const FieldElem& x, long e) {
        return e >= 0 ? x.frobenius(static_cast<unsigned>(e)) : x.inverse_frobenius(static_cast<unsigned>(-e));
    }
    void check(const BasicOrePoly& o) const {
        if (!(f_ == o.f_)) throw FieldMismatch();
    }

    Field f_;
    Terms terms_;
};

using OrePoly = BasicOrePoly<false>;
using LaurentOrePoly = BasicOrePoly<true>;

inline OrePoly ore_mul(const OrePoly& f, const OrePoly& g) { return f * g; }

/// Left quotient and remainder: f = q*g + r with deg r < deg g.
inline std::pair<OrePoly, OrePoly> right_divide(const OrePoly& f, const OrePoly& g) {
    if (g.is_zero()) throw DivisionByZero();
    if (!(f.field() == g.field())) throw FieldMismatch();
    const Field fld = f.field();
    OrePoly q(fld), r = f;
    const long n = g.degree();
    const FieldElem lead = g.leading_coefficient();
    while (!r.is_zero() && r.degree() >= n) {
        const long m = r.degree();
        // (c tau^(m-n)) * (lead tau^n) = c lead^(p^(m-n)) tau^m
        const FieldElem c = r.leading_coefficient() / lead.frobenius(static_cast<unsigned>(m - n));
        const OrePoly t = OrePoly::monomial(c, m - n);
        q += t;
        r -= t * g;
    }
    return {q, r};
}

/// True iff f = c tau^v, i.e. the only root of x -> f(x) in any algebraic
/// extension is 0.
inline bool kernel_trivial_on_closure(const OrePoly& f) {
    if (f.is_zero()) throw ZeroMap();
    return f.is_monomial();
}

/// Matrix of twisted polynomials; an additive map from the cols-dimensional
/// to the rows-dimensional vector group.
template <class Poly>
class BasicOreMatrix {
   public:
    BasicOreMatrix() = default;
    BasicOreMatrix(Field f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Poly(f)) {}

    static BasicOreMatrix identity(Field f, std::size_t n) {
        BasicOreMatrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one(f);
        return m;
    }
    static BasicOreMatrix diagonal(Field f, const std::vector<Poly>& d) {
        BasicOreMatrix m(f, d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    Field field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    Poly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend BasicOreMatrix operator*(const BasicOreMatrix& a, const BasicOreMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("twisted matrix product shape mismatch");
        if (!(a.f_ == b.f_)) throw FieldMismatch();
        BasicOreMatrix out(a.f_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < b.cols_; ++k)
                for (std::size_t j = 0; j < a.cols_; ++j)
                    if (!a(i, j).is_zero() && !b(j, k).is_zero()) out(i, k) += a(i, j) * b(j, k);
        return out;
    }
    friend bool operator==(const BasicOreMatrix& a, const BasicOreMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Vec apply(const Vec& x) const {
        if (x.size() != cols_) throw DimensionMismatch("point has wrong dimension");
        Vec out = zero_vec(f_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j)(x[j]);
        return out;
    }
    Vec apply(const Vec& x, const FieldEmbedding& emb) const {
        if (x.size() != cols_) throw DimensionMismatch("point has wrong dimension");
        Vec out = zero_vec(emb.target(), rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j)(x[j], emb);
        return out;
    }

   private:
    Field f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> a_;
};

using OreMatrix = BasicOreMatrix<OrePoly>;
using LaurentOreMatrix = BasicOreMatrix<LaurentOrePoly>;

/// Applies an additive polynomial map to polynomial arguments:
/// (sum a_e tau^e)(P) = sum a_e P^(p^e).
inline std::vector<MPoly> apply_to_polys(const OreMatrix& m, const std::vector<MPoly>& x) {
    if (x.size() != m.cols()) throw DimensionMismatch("argument count mismatch");
    std::vector<MPoly> out;
    const std::size_t nv = x.empty() ? 0 : x[0].nvars();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        MPoly acc(m.field(), nv);
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& [e, c] : m(i, j).terms()) acc += c * x[j].frobenius_power(static_cast<unsigned>(e));
        out.push_back(std::move(acc));
    }
    return out;
}

/// Result of row reduction: t = u * m, u a product of elementary row
/// operations, t in row echelon form (upper triangular when m is square).
struct Triangularization {
    OreMatrix u;
    OreMatrix t;
    std::vector<std::size_t> pivot_columns;
};

/// Euclidean row reduction. In each column the pivot is the candidate with
/// least tau-degree, ties going to the lowest row index.
inline Triangularization echelon(const OreMatrix& m) {
    const Field f = m.field();
    OreMatrix t = m;
    OreMatrix u = OreMatrix::identity(f, m.rows());
    std::vector<std::size_t> pivots;

    auto swap_rows = [](OreMatrix& a, std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
    };
    // row r -= q * row s
    auto sub_row = [](OreMatrix& a, std::size_t r, std::size_t s, const OrePoly& q) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(s, j).is_zero()) a(r, j) -= q * a(s, j);
    };

    std::size_t pr = 0;
    for (std::size_t c = 0; c < t.cols() && pr < t.rows(); ++c) {
        for (;;) {
            std::size_t best = t.rows();
            for (std::size_t r = pr; r < t.rows(); ++r) {
                if (t(r, c).is_zero()) continue;
                if (best == t.rows() || t(r, c).degree() < t(best, c).degree()) best = r;
            }
            if (best == t.rows()) break;
            if (best != pr) {
                swap_rows(t, best, pr);
                swap_rows(u, best, pr);
            }
            bool clean = true;
            for (std::size_t r = pr + 1; r < t.rows(); ++r) {
                if (t(r, c).is_zero()) continue;
                auto [q, rem] = right_divide(t(r, c), t(pr, c));
                sub_row(t, r, pr, q);
                sub_row(u, r, pr, q);
                if (!rem.is_zero()) clean = false;
            }
            if (clean) {
                pivots.push_back(c);
                ++pr;
                break;
            }
        }
    }
    return {std::move(u), std::move(t), std::move(pivots)};
}

inline Triangularization triangularize(const OreMatrix& m) {
    if (!m.square()) throw DimensionMismatch("triangularize expects a square matrix");
    return echelon(m);
}

/// Every diagonal entry of the triangular form is a nonzero Frobenius
/// monomial; then the point map is bijective over every finite extension.
inline bool point_bijective(const OreMatrix& m) {
    if (!m.square()) throw DimensionMismatch("point_bijective expects a square matrix");
    const auto tri = triangularize(m);
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (tri.t(i, i).is_zero() || !tri.t(i, i).is_monomial()) return false;
    return true;
}

struct ClearedMorphism {
    unsigned n = 0;
    OreMatrix m0;
};

/// Smallest n such that m * tau^n has no negative exponents, with that
/// finite-level matrix. m(x) = m0(x^(1/p^n)) coordinatewise.
inline ClearedMorphism clear_frobenius_denominators(const LaurentOreMatrix& m) {
    long lowest = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) lowest = std::min(lowest, m(i, j).valuation());
    const long n = -lowest;
    const LaurentOrePoly shift = LaurentOrePoly::tau(m.field(), n);
    OreMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const LaurentOrePoly e = m(i, j) * shift;
            for (const auto& [k, c] : e.terms()) out(i, j).set(k, c);
        }
    }
    return {static_cast<unsigned>(n), std::move(out)};
}

namespace detail {

/// All x in the field (ascending) with f(x) = b.
inline std::vector<FieldElem> solve_additive_scalar(const OrePoly& f, const FieldElem& b, std::uint64_t bound) {
    if (f.is_monomial()) {
        const auto& [m, a] = *f.terms().begin();
        return {(b / a).inverse_frobenius(static_cast<unsigned>(m))};
    }
    std::vector<FieldElem> out;
    for (const auto& x : enumerate_field(f.field(), bound))
        if (f(x) == b) out.push_back(x);
    return out;
}

}  // namespace detail

/// Some x with m(x) = rhs over the working field, found by echelon form and
/// back substitution. Free coordinates are set to 0; non-monomial pivots are
/// solved by enumeration with backtracking.
inline std::optional<Vec> solve_additive_system(const OreMatrix& m, const Vec& rhs,
                                                std::uint64_t bound = kDefaultEnumerationBound) {
    if (rhs.size() != m.rows()) throw DimensionMismatch("right-hand side size mismatch");
    const Field f = m.field();
    const auto tri = echelon(m);
    const Vec b = tri.u.apply(rhs);
    const std::size_t rank = tri.pivot_columns.size();
    for (std::size_t r = rank; r < m.rows(); ++r)
        if (!b[r].is_zero()) return std::nullopt;
    Vec x = zero_vec(f, m.cols());
    std::function<bool(std::size_t)> back = [&](std::size_t level) -> bool {
        if (level == 0) return true;
        const std::size_t r = level - 1;
        const std::size_t c = tri.pivot_columns[r];
        FieldElem target = b[r];
        for (std::size_t j = c + 1; j < m.cols(); ++j)
            if (!tri.t(r, j).is_zero()) target -= tri.t(r, j)(x[j]);
        for (const auto& cand : detail::solve_additive_scalar(tri.t(r, c), target, bound)) {
            x[c] = cand;
            if (back(r)) return true;
        }
        x[c] = FieldElem::zero(f);
        return false;
    };
    if (!back(rank)) return std::nullopt;
    return x;
}

}  // namespace ringtwist

#endif
