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


#ifndef RINGTWIST_ALGRING_HPP
#define RINGTWIST_ALGRING_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "mpoly.hpp"
#include "ore.hpp"

namespace ringtwist {

/// Finite-dimensional algebra given by structure constants:
/// b_i b_j = sum_k c(k, i, j) b_k. Indices are 0-based.
class StructAlgebra {
   public:
    StructAlgebra() = default;
    StructAlgebra(Field f, std::size_t d) : f_(f), d_(d), c_(d * d * d, FieldElem::zero(f)) {}

    Field field() const noexcept { return f_; }
    std::size_t dim() const noexcept { return d_; }

    const FieldElem& c(std::size_t k, std::size_t i, std::size_t j) const { return c_.at((k * d_ + i) * d_ + j); }
    void set_c(std::size_t k, std::size_t i, std::size_t j, const FieldElem& v) {
        if (!(v.field() == f_)) throw FieldMismatch();
        c_.at((k * d_ + i) * d_ + j) = v;
    }

    const std::optional<Vec>& unit() const noexcept { return unit_; }
    void set_unit(std::optional<Vec> u) {
        if (u && u->size() != d_) throw DimensionMismatch("unit has wrong dimension");
        unit_ = std::move(u);
    }

    Vec basis(std::size_t i) const { return unit_vec(f_, d_, i); }
    Vec zero() const { return zero_vec(f_, d_); }

    Vec multiply(const Vec& x, const Vec& y) const {
        if (x.size() != d_ || y.size() != d_) throw DimensionMismatch("algebra element has wrong dimension");
        Vec out = zero();
        for (std::size_t i = 0; i < d_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < d_; ++j) {
                if (y[j].is_zero()) continue;
                const FieldElem xy = x[i] * y[j];
                for (std::size_t k = 0; k < d_; ++k)
                    if (!c(k, i, j).is_zero()) out[k] += xy * c(k, i, j);
            }
        }
        return out;
    }

    Vec power(const Vec& x, std::uint64_t e) const {
        if (e == 0) {
            if (!unit_) throw NoUnit("x^0 needs a unit");
            return *unit_;
        }
        Vec r = x;
        for (std::uint64_t i = 1; i < e; ++i) r = multiply(r, x);
        return r;
    }

    /// First (i, j, r, l) where (b_i b_j) b_r and b_i (b_j b_r) differ in coordinate l.
    std::optional<std::array<std::size_t, 4>> associativity_violation() const {
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                for (std::size_t r = 0; r < d_; ++r)
                    for (std::size_t l = 0; l < d_; ++l) {
                        FieldElem lhs = FieldElem::zero(f_), rhs = FieldElem::zero(f_);
                        for (std::size_t m = 0; m < d_; ++m) {
                            lhs += c(m, i, j) * c(l, m, r);
                            rhs += c(m, j, r) * c(l, i, m);
                        }
                        if (!(lhs == rhs)) return std::array<std::size_t, 4>{i, j, r, l};
                    }
        return std::nullopt;
    }
    bool is_associative() const { return !associativity_violation(); }

    bool is_commutative() const {
        for (std::size_t k = 0; k < d_; ++k)
            for (std::size_t i = 0; i < d_; ++i)
                for (std::size_t j = i + 1; j < d_; ++j)
                    if (!(c(k, i, j) == c(k, j, i))) return false;
        return true;
    }

    bool unit_valid() const {
        if (!unit_) return false;
        for (std::size_t i = 0; i < d_; ++i) {
            const Vec b = basis(i);
            if (!(multiply(*unit_, b) == b) || !(multiply(b, *unit_) == b)) return false;
        }
        return true;
    }

    /// Associative, and the unit (when present) is a two-sided identity.
    bool valid() const { return is_associative() && (!unit_ || unit_valid()); }

    /// The same algebra in the basis given by the columns of `p`.
    StructAlgebra change_basis(const Mat& p) const {
        if (p.rows() != d_ || p.cols() != d_) throw DimensionMismatch("basis change has wrong shape");
        const auto pinv = inverse(p);
        if (!pinv) throw DimensionMismatch("basis change is singular");
        StructAlgebra out(f_, d_);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j) {
                const Vec prod = pinv->apply(multiply(p.column(i), p.column(j)));
                for (std::size_t k = 0; k < d_; ++k) out.set_c(k, i, j, prod[k]);
            }
        if (unit_) out.set_unit(pinv->apply(*unit_));
        return out;
    }

    friend bool operator==(const StructAlgebra& a, const StructAlgebra& b) {
        return a.f_ == b.f_ && a.d_ == b.d_ && a.c_ == b.c_ && a.unit_ == b.unit_;
    }

   private:
    Field f_;
    std::size_t d_ = 0;
    std::vector<FieldElem> c_;
    std::optional<Vec> unit_;
};

/// One term coeff * u_left^(p^left_exp) * v_right^(p^right_exp) of output
/// coordinate `out`. Indices are 0-based.
struct MulTerm {
    std::size_t out = 0;
    std::size_t left = 0;
    unsigned left_exp = 0;
    std::size_t right = 0;
    unsigned right_exp = 0;
    FieldElem coeff;

    auto key() const { return std::make_tuple(out, left, left_exp, right, right_exp); }
};

/// Ring structure on affine d-space: componentwise addition and a
/// bi-additive multiplication built from Frobenius monomials.
class AlgebraicRing {
   public:
    AlgebraicRing() = default;
    /// Terms with equal exponent data are merged and zero terms dropped;
    /// the stored order is ascending by (out, left, left_exp, right, right_exp).
    AlgebraicRing(Field f, std::size_t d, const std::vector<MulTerm>& terms) : f_(f), d_(d) {
        std::map<std::tuple<std::size_t, std::size_t, unsigned, std::size_t, unsigned>, FieldElem> merged;
        for (const auto& t : terms) {
            if (t.out >= d || t.left >= d || t.right >= d) throw IndexError("ring term index out of range");
            if (!(t.coeff.field() == f)) throw FieldMismatch();
            auto [it, inserted] = merged.try_emplace(t.key(), t.coeff);
            if (!inserted) it->second += t.coeff;
        }
        for (const auto& [k, c] : merged) {
            if (c.is_zero()) continue;
            terms_.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), std::get<4>(k), c});
        }
    }

    Field field() const noexcept { return f_; }
    std::size_t dim() const noexcept { return d_; }
    const std::vector<MulTerm>& terms() const noexcept { return terms_; }

    std::vector<MPoly> multiply(const std::vector<MPoly>& u, const std::vector<MPoly>& v) const {
        if (u.size() != d_ || v.size() != d_) throw DimensionMismatch("ring argument has wrong dimension");
        const std::size_t nv = u.empty() ? 0 : u[0].nvars();
        std::vector<MPoly> out(d_, MPoly(f_, nv));
        for (const auto& t : terms_)
            out[t.out] += t.coeff * (u[t.left].frobenius_power(t.left_exp) * v[t.right].frobenius_power(t.right_exp));
        return out;
    }

    Vec multiply(const Vec& u, const Vec& v) const {
        if (u.size() != d_ || v.size() != d_) throw DimensionMismatch("ring argument has wrong dimension");
        Vec out = zero_vec(f_, d_);
        for (const auto& t : terms_)
            out[t.out] += t.coeff * u[t.left].frobenius(t.left_exp) * v[t.right].frobenius(t.right_exp);
        return out;
    }

    /// Multiplication on points over an extension field.
    Vec multiply(const Vec& u, const Vec& v, const FieldEmbedding& emb) const {
        if (u.size() != d_ || v.size() != d_) throw DimensionMismatch("ring argument has wrong dimension");
        Vec out = zero_vec(emb.target(), d_);
        for (const auto& t : terms_)
            out[t.out] += emb(t.coeff) * u[t.left].frobenius(t.left_exp) * v[t.right].frobenius(t.right_exp);
        return out;
    }

   private:
    Field f_;
    std::size_t d_ = 0;
    std::vector<MulTerm> terms_;
};

struct RingMorphism {
    AlgebraicRing source;
    AlgebraicRing target;
    OreMatrix map;  // target.dim() x source.dim()
};

/// Generic symbols for identity checks: block b of d variables.
inline std::vector<MPoly> symbol_block(Field f, std::size_t d, std::size_t blocks, std::size_t b) {
    std::vector<MPoly> out;
    for (std::size_t i = 0; i < d; ++i) out.push_back(MPoly::variable(f, d * blocks, b * d + i));
    return out;
}

inline std::vector<std::string> symbol_names(std::size_t d, std::size_t blocks) {
    static const char* letters[] = {"u", "v", "w"};
    std::vector<std::string> out;
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t i = 0; i < d; ++i) out.push_back(std::string(letters[b]) + std::to_string(i + 1));
    return out;
}

/// A failed polynomial identity: coordinate and first differing monomial.
struct IdentityWitness {
    std::size_t coordinate = 0;
    MonomialDifference difference;
    std::vector<std::string> names;

    std::string to_string() const {
        return "coordinate " + std::to_string(coordinate + 1) + ", monomial " +
               MPoly::monomial_to_string(difference.exponents, names) + ": " + ringtwist::to_string(difference.left) +
               " vs " + ringtwist::to_string(difference.right);
    }
};

inline std::optional<IdentityWitness> compare_polys(const std::vector<MPoly>& lhs, const std::vector<MPoly>& rhs,
                                                    const std::vector<std::string>& names) {
    for (std::size_t k = 0; k < lhs.size(); ++k)
        if (auto d = first_difference(lhs[k], rhs[k])) return IdentityWitness{k, *d, names};
    return std::nullopt;
}

struct RingAxiomReport {
    bool associative = false;
    std::optional<IdentityWitness> associativity_witness;
    bool commutative = false;
    std::optional<IdentityWitness> commutativity_witness;
    /// Bi-additive terms make both distributive laws hold identically.
    bool distributive = true;
    std::optional<Vec> unit;
};

/// Solves mu(e, v) = v = mu(v, e) for e, comparing coefficients of each
/// Frobenius monomial in v. Returns the unit only after checking it
/// symbolically.
inline std::optional<Vec> find_unit(const AlgebraicRing& a, std::uint64_t bound = kDefaultEnumerationBound) {
    const Field f = a.field();
    const std::size_t d = a.dim();
    std::map<std::tuple<int, std::size_t, std::size_t, unsigned>, std::size_t> row_of;
    auto row = [&](int side, std::size_t k, std::size_t var, unsigned e) {
        auto key = std::make_tuple(side, k, var, e);
        auto it = row_of.find(key);
        if (it != row_of.end()) return it->second;
        const std::size_t r = row_of.size();
        row_of.emplace(key, r);
        return r;
    };
    for (int side = 0; side < 2; ++side)
        for (std::size_t k = 0; k < d; ++k) row(side, k, k, 0);
    for (const auto& t : a.terms()) {
        row(0, t.out, t.right, t.right_exp);
        row(1, t.out, t.left, t.left_exp);
    }
    OreMatrix m(f, row_of.size(), d);
    Vec rhs = zero_vec(f, row_of.size());
    for (const auto& t : a.terms()) {
        // left unit: e in the left slot, v_right^(p^right_exp) survives
        m(row(0, t.out, t.right, t.right_exp), t.left) += OrePoly::monomial(t.coeff, t.left_exp);
        m(row(1, t.out, t.left, t.left_exp), t.right) += OrePoly::monomial(t.coeff, t.right_exp);
    }
    for (const auto& [key, r] : row_of)
        if (std::get<1>(key) == std::get<2>(key) && std::get<3>(key) == 0) rhs[r] = FieldElem::one(f);
    auto e = solve_additive_system(m, rhs, bound);
    if (!e) return std::nullopt;
    std::vector<MPoly> ev;
    for (const auto& x : *e) ev.push_back(MPoly::constant(f, d, x));
    const auto v = symbol_block(f, d, 1, 0);
    if (!(a.multiply(ev, v) == v) || !(a.multiply(v, ev) == v)) return std::nullopt;
    return e;
}

/// Associativity and commutativity as exact identities between normal forms
/// in generic points u, v, w; the unit from the semilinear unit equations.
inline RingAxiomReport verify_ring_axioms(const AlgebraicRing& a, std::uint64_t bound = kDefaultEnumerationBound) {
    RingAxiomReport rep;
    const Field f = a.field();
    const std::size_t d = a.dim();
    const auto u = symbol_block(f, d, 3, 0), v = symbol_block(f, d, 3, 1), w = symbol_block(f, d, 3, 2);
    const auto names3 = symbol_names(d, 3);
    rep.associativity_witness = compare_polys(a.multiply(a.multiply(u, v), w), a.multiply(u, a.multiply(v, w)), names3);
    rep.associative = !rep.associativity_witness;
    const auto u2 = symbol_block(f, d, 2, 0), v2 = symbol_block(f, d, 2, 1);
    rep.commutativity_witness = compare_polys(a.multiply(u2, v2), a.multiply(v2, u2), symbol_names(d, 2));
    rep.commutative = !rep.commutativity_witness;
    rep.unit = find_unit(a, bound);
    return rep;
}

/// The bilinear algebraic ring of B.
inline AlgebraicRing tilde(const StructAlgebra& b) {
    std::vector<MulTerm> terms;
    const std::size_t d = b.dim();
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!b.c(k, i, j).is_zero()) terms.push_back({k, i, 0, j, 0, b.c(k, i, j)});
    return AlgebraicRing(b.field(), d, terms);
}

/// Structure constants replaced by their p^n-th roots.
inline StructAlgebra frobenius_twist_algebra(const StructAlgebra& b, unsigned n) {
    StructAlgebra out(b.field(), b.dim());
    const std::size_t d = b.dim();
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) out.set_c(k, i, j, b.c(k, i, j).inverse_frobenius(n));
    if (b.unit()) {
        Vec u = *b.unit();
        for (auto& x : u) x = x.inverse_frobenius(n);
        out.set_unit(u);
    }
    return out;
}

/// Transport of tilde(B) along x_k -> x_k^(p^n_k): the ring A with
/// mu_A(u, v)_k = sum c^(p^n_k) u_i^(p^(n_k - n_i)) v_j^(p^(n_k - n_j)).
/// Throws when some needed exponent n_k - n_i would be negative.
inline AlgebraicRing twist_tilde(const StructAlgebra& b, const std::vector<unsigned>& n) {
    const std::size_t d = b.dim();
    if (n.size() != d) throw DimensionMismatch("twist vector has wrong length");
    std::vector<MulTerm> terms;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const FieldElem& c = b.c(k, i, j);
                if (c.is_zero()) continue;
                if (n[k] < n[i] || n[k] < n[j])
                    throw Error("twist vector does not give a polynomial multiplication");
                terms.push_back({k, i, n[k] - n[i], j, n[k] - n[j], c.frobenius(n[k])});
            }
    return AlgebraicRing(b.field(), d, terms);
}

enum class CenterKind { Full, Trivial, Finite, Intermediate };

inline const char* to_string(CenterKind k) {
    switch (k) {
        case CenterKind::Full: return "full";
        case CenterKind::Trivial: return "trivial";
        case CenterKind::Finite: return "finite";
        case CenterKind::Intermediate: return "intermediate";
    }
    return "?";
}

/// The center as the kernel of an additive map v -> (mu(., v) - mu(v, .)).
struct CenterDescription {
    OreMatrix map;
    /// Dimension of the kernel as a group variety: columns without pivot.
    std::size_t dimension = 0;
    CenterKind kind = CenterKind::Trivial;
    /// Basis of the kernel when every entry of `map` is a constant.
    std::optional<std::vector<Vec>> linear_basis;
};

inline CenterDescription center(const AlgebraicRing& a) {
    if (!verify_ring_axioms(a).associative) throw NotAssociative("center needs an associative ring");
    const Field f = a.field();
    const std::size_t d = a.dim();
    // rows are the u-monomials (out, var, exp) appearing on either side
    std::map<std::tuple<std::size_t, std::size_t, unsigned>, std::vector<OrePoly>> rows;
    auto row = [&](std::size_t k, std::size_t var, unsigned e) -> std::vector<OrePoly>& {
        auto [it, ins] = rows.try_emplace(std::make_tuple(k, var, e));
        if (ins) it->second.assign(d, OrePoly(f));
        return it->second;
    };
    for (const auto& t : a.terms()) {
        row(t.out, t.left, t.left_exp)[t.right] += OrePoly::monomial(t.coeff, t.right_exp);
        row(t.out, t.right, t.right_exp)[t.left] -= OrePoly::monomial(t.coeff, t.left_exp);
    }
    std::vector<std::vector<OrePoly>> nonzero;
    for (auto& [key, r] : rows) {
        bool any = false;
        for (const auto& e : r) any = any || !e.is_zero();
        if (any) nonzero.push_back(r);
    }
    CenterDescription out;
    out.map = OreMatrix(f, nonzero.size(), d);
    bool constant = true;
    for (std::size_t r = 0; r < nonzero.size(); ++r)
        for (std::size_t j = 0; j < d; ++j) {
            out.map(r, j) = nonzero[r][j];
            if (!nonzero[r][j].is_zero() && nonzero[r][j].degree() > 0) constant = false;
        }
    if (nonzero.empty()) {
        out.dimension = d;
        out.kind = CenterKind::Full;
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < d; ++i) basis.push_back(unit_vec(f, d, i));
        out.linear_basis = basis;
        return out;
    }
    const auto tri = echelon(out.map);
    out.dimension = d - tri.pivot_columns.size();
    if (out.dimension == 0) {
        bool monomial = true;
        for (std::size_t r = 0; r < tri.pivot_columns.size(); ++r)
            monomial = monomial && tri.t(r, tri.pivot_columns[r]).is_monomial();
        out.kind = monomial ? CenterKind::Trivial : CenterKind::Finite;
    } else {
        out.kind = out.dimension == d ? CenterKind::Full : CenterKind::Intermediate;
    }
    if (constant) {
        Mat lin(f, out.map.rows(), d);
        for (std::size_t r = 0; r < out.map.rows(); ++r)
            for (std::size_t j = 0; j < d; ++j) lin(r, j) = out.map(r, j).coefficient(0);
        out.linear_basis = nullspace(lin);
    }
    return out;
}

struct MorphismReport {
    bool additive = true;
    bool multiplicative = false;
    std::optional<IdentityWitness> multiplicativity_witness;
    bool point_bijective = false;

    bool all() const { return additive && multiplicative && point_bijective; }
};

inline MorphismReport verify_morphism(const RingMorphism& psi) {
    const std::size_t ds = psi.source.dim(), dt = psi.target.dim();
    if (psi.map.rows() != dt || psi.map.cols() != ds) throw DimensionMismatch("morphism matrix shape does not match rings");
    if (!(psi.source.field() == psi.target.field()) || !(psi.map.field() == psi.source.field())) throw FieldMismatch();
    const Field f = psi.source.field();
    MorphismReport rep;
    const auto u = symbol_block(f, ds, 2, 0), v = symbol_block(f, ds, 2, 1);
    const auto lhs = psi.target.multiply(apply_to_polys(psi.map, u), apply_to_polys(psi.map, v));
    const auto rhs = apply_to_polys(psi.map, psi.source.multiply(u, v));
    rep.multiplicativity_witness = compare_polys(lhs, rhs, symbol_names(ds, 2));
    rep.multiplicative = !rep.multiplicativity_witness;
    rep.point_bijective = psi.map.square() && point_bijective(psi.map);
    return rep;
}

struct UntwistResult {
    std::vector<unsigned> n;
    StructAlgebra algebra;
    RingMorphism psi;
    MorphismReport report;
};

namespace detail {

/// Union-find over coordinates carrying potentials: pot(x) = n[x] - n[root].
class OffsetUnionFind {
   public:
    explicit OffsetUnionFind(std::size_t n) : parent_(n), pot_(n, 0), adj_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        if (parent_[x] == x) return x;
        const std::size_t r = find(parent_[x]);
        pot_[x] += pot_[parent_[x]];
        parent_[x] = r;
        return r;
    }
    long potential(std::size_t x) {
        find(x);
        return pot_[x];
    }

    /// Adds n[to] - n[from] = off; on conflict returns the closing cycle.
    std::optional<std::vector<TwistConstraint>> add(const TwistConstraint& c) {
        const std::size_t rf = find(c.from), rt = find(c.to);
        if (rf == rt) {
            if (pot_[c.to] - pot_[c.from] == c.offset) return std::nullopt;
            auto cycle = tree_path(c.to, c.from);
            cycle.insert(cycle.begin(), c);
            return cycle;
        }
        // n[to] = n[from] + off  =>  pot(rt) relative to rf
        parent_[rt] = rf;
        pot_[rt] = pot_[c.from] + c.offset - pot_[c.to];
        adj_[c.from].push_back(c);
        adj_[c.to].push_back(c);
        return std::nullopt;
    }

   private:
    /// Constraints along the spanning-forest path from a to b, each oriented
    /// in the direction of travel.
    std::vector<TwistConstraint> tree_path(std::size_t a, std::size_t b) const {
        if (a == b) return {};
        std::vector<std::optional<TwistConstraint>> via(parent_.size());
        std::vector<bool> seen(parent_.size(), false);
        std::queue<std::size_t> q;
        q.push(a);
        seen[a] = true;
        while (!q.empty()) {
            const std::size_t x = q.front();
            q.pop();
            if (x == b) break;
            for (const auto& e : adj_[x]) {
                const std::size_t y = e.from == x ? e.to : e.from;
                if (seen[y]) continue;
                seen[y] = true;
                via[y] = e.from == x ? e : TwistConstraint{e.to, e.from, -e.offset};
                q.push(y);
            }
        }
        std::vector<TwistConstraint> path;
        for (std::size_t x = b; x != a; x = via[x]->from) path.push_back(*via[x]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    std::vector<std::size_t> parent_;
    std::vector<long> pot_;
    std::vector<std::vector<TwistConstraint>> adj_;
};

}  // namespace detail

/// Finds a coordinatewise Frobenius isomorphism psi: tilde(B) -> A with
/// x_k -> x_k^(p^n_k). Each term of A forces n_out - n_left = left_exp and
/// n_out - n_right = right_exp; components of the constraint graph are
/// normalized to minimum 0. The constraints are solved before the ring
/// axioms are checked.
inline UntwistResult untwist(const AlgebraicRing& a, std::uint64_t bound = kDefaultEnumerationBound) {
    if (a.terms().empty()) throw Error("untwist needs a nonzero multiplication tensor");
    const Field f = a.field();
    const std::size_t d = a.dim();
    detail::OffsetUnionFind uf(d);
    for (const auto& t : a.terms()) {
        for (const auto& c : {TwistConstraint{t.left, t.out, static_cast<long>(t.left_exp)},
                              TwistConstraint{t.right, t.out, static_cast<long>(t.right_exp)}}) {
            if (auto cycle = uf.add(c)) throw Inconsistent("twist constraints are inconsistent", *cycle);
        }
    }
    const auto axioms = verify_ring_axioms(a, bound);
    if (!axioms.associative)
        throw NotAssociative("ring is not associative: " + axioms.associativity_witness->to_string());
    if (!axioms.commutative && center(a).dimension == 0)
        throw CenterTooSmall("center of the noncommutative ring is finite");
    std::map<std::size_t, long> lowest;
    for (std::size_t x = 0; x < d; ++x) {
        const std::size_t r = uf.find(x);
        const long pot = uf.potential(x);
        auto [it, ins] = lowest.try_emplace(r, pot);
        if (!ins) it->second = std::min(it->second, pot);
    }
    std::vector<unsigned> n(d);
    for (std::size_t x = 0; x < d; ++x) n[x] = static_cast<unsigned>(uf.potential(x) - lowest[uf.find(x)]);

    StructAlgebra b(f, d);
    for (const auto& t : a.terms())
        b.set_c(t.out, t.left, t.right, b.c(t.out, t.left, t.right) + t.coeff.inverse_frobenius(n[t.out]));
    if (axioms.unit) {
        Vec e = *axioms.unit;
        for (std::size_t k = 0; k < d; ++k) e[k] = e[k].inverse_frobenius(n[k]);
        b.set_unit(e);
    }
    std::vector<OrePoly> diag;
    for (std::size_t k = 0; k < d; ++k) diag.push_back(OrePoly::tau(f, n[k]));
    RingMorphism psi{tilde(b), a, OreMatrix::diagonal(f, diag)};
    auto report = verify_morphism(psi);
    if (!report.all()) throw Error("internal: untwisting morphism failed verification");
    return {std::move(n), std::move(b), std::move(psi), report};
}

}  // namespace ringtwist

#endif
