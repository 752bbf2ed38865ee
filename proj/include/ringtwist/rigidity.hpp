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


#ifndef RINGTWIST_RIGIDITY_HPP
#define RINGTWIST_RIGIDITY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chevalley.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "mpoly.hpp"
#include "random.hpp"

namespace ringtwist {

/// a + b eps with eps^2 = 0.
struct DualNumber {
    FieldElem a;
    FieldElem b;
    friend bool operator==(const DualNumber&, const DualNumber&) = default;
};

/// A point of the ring with product (x1 x2, x1^p y2 + x2^p y1).
struct APoint {
    FieldElem x;
    FieldElem y;
    friend bool operator==(const APoint&, const APoint&) = default;
};

class DualNumberRing {
   public:
    using Element = DualNumber;
    explicit DualNumberRing(Field f) : f_(f) {}
    Field field() const noexcept { return f_; }
    Element zero() const { return {FieldElem::zero(f_), FieldElem::zero(f_)}; }
    Element one() const { return {FieldElem::one(f_), FieldElem::zero(f_)}; }
    Element eps() const { return {FieldElem::zero(f_), FieldElem::one(f_)}; }
    Element add(const Element& u, const Element& v) const { return {u.a + v.a, u.b + v.b}; }
    Element sub(const Element& u, const Element& v) const { return {u.a - v.a, u.b - v.b}; }
    Element neg(const Element& u) const { return {-u.a, -u.b}; }
    Element mul(const Element& u, const Element& v) const { return {u.a * v.a, u.a * v.b + v.a * u.b}; }
    bool equal(const Element& u, const Element& v) const { return u == v; }
    std::string format(const Element& u) const { return "(" + to_string(u.a) + "," + to_string(u.b) + ")"; }
    Element random(Rng& g) const { return {random_element(f_, g), random_element(f_, g)}; }
    std::uint64_t size() const { return vec_space_size(f_, 2); }
    Element element_at(std::uint64_t i) const {
        const Vec v = vec_at(f_, 2, i);
        return {v[0], v[1]};
    }

   private:
    Field f_;
};

class APointRing {
   public:
    using Element = APoint;
    explicit APointRing(Field f) : f_(f) {}
    Field field() const noexcept { return f_; }
    Element zero() const { return {FieldElem::zero(f_), FieldElem::zero(f_)}; }
    Element one() const { return {FieldElem::one(f_), FieldElem::zero(f_)}; }
    Element add(const Element& u, const Element& v) const { return {u.x + v.x, u.y + v.y}; }
    Element sub(const Element& u, const Element& v) const { return {u.x - v.x, u.y - v.y}; }
    Element neg(const Element& u) const { return {-u.x, -u.y}; }
    Element mul(const Element& u, const Element& v) const {
        return {u.x * v.x, u.x.frobenius() * v.y + v.x.frobenius() * u.y};
    }
    bool equal(const Element& u, const Element& v) const { return u == v; }
    std::string format(const Element& u) const { return "(" + to_string(u.x) + "," + to_string(u.y) + ")"; }
    Element random(Rng& g) const { return {random_element(f_, g), random_element(f_, g)}; }
    std::uint64_t size() const { return vec_space_size(f_, 2); }
    Element element_at(std::uint64_t i) const {
        const Vec v = vec_at(f_, 2, i);
        return {v[0], v[1]};
    }

   private:
    Field f_;
};

/// g(X) in K[X], coefficients ascending with no trailing zeros.
class PolyRingElem {
   public:
    PolyRingElem() = default;
    PolyRingElem(Field f, Vec coeffs) : f_(f), c_(std::move(coeffs)) {
        for (const auto& x : c_)
            if (x.field() != f_) throw FieldMismatch("polynomial coefficient from another field");
        trim();
    }
    explicit PolyRingElem(Field f) : f_(f) {}

    static PolyRingElem constant(Field f, const FieldElem& c) { return {f, Vec{c}}; }
    static PolyRingElem x(Field f) { return {f, Vec{FieldElem::zero(f), FieldElem::one(f)}}; }

    Field field() const noexcept { return f_; }
    const Vec& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    FieldElem coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElem::zero(f_); }

    FieldElem evaluate(const FieldElem& t) const {
        FieldElem acc = FieldElem::zero(f_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    PolyRingElem derivative() const {
        Vec d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(FieldElem::from_int(f_, static_cast<long long>(i)) * c_[i]);
        return {f_, std::move(d)};
    }

    friend PolyRingElem operator+(const PolyRingElem& a, const PolyRingElem& b) {
        Vec out(std::max(a.c_.size(), b.c_.size()), FieldElem::zero(a.f_));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
        return {a.f_, std::move(out)};
    }
    friend PolyRingElem operator-(const PolyRingElem& a) {
        Vec out = a.c_;
        for (auto& x : out) x = -x;
        return {a.f_, std::move(out)};
    }
    friend PolyRingElem operator-(const PolyRingElem& a, const PolyRingElem& b) { return a + (-b); }
    friend PolyRingElem operator*(const PolyRingElem& a, const PolyRingElem& b) {
        if (a.is_zero() || b.is_zero()) return PolyRingElem(a.f_);
        Vec out(a.c_.size() + b.c_.size() - 1, FieldElem::zero(a.f_));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return {a.f_, std::move(out)};
    }
    friend bool operator==(const PolyRingElem& a, const PolyRingElem& b) { return a.c_ == b.c_; }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Field f_;
    Vec c_;
};

inline std::string to_string(const PolyRingElem& g) {
    if (g.is_zero()) return "0";
    std::string out;
    for (long i = g.degree(); i >= 0; --i) {
        const FieldElem c = g.coefficient(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        const std::string cs = to_string(c);
        const bool compound = cs.find_first_of("+z") != std::string::npos && !c.in_prime_field();
        if (i == 0) {
            out += cs;
            continue;
        }
        if (!c.is_one()) out += compound ? "(" + cs + ")" : cs;
        out += i == 1 ? "X" : "X^" + std::to_string(i);
    }
    return out;
}

/// K[X]; random elements have degree at most the configured bound.
class PolyRing {
   public:
    using Element = PolyRingElem;
    PolyRing(Field f, unsigned degree_bound) : f_(f), degree_bound_(degree_bound) {}
    Field field() const noexcept { return f_; }
    unsigned degree_bound() const noexcept { return degree_bound_; }
    Element zero() const { return PolyRingElem(f_); }
    Element one() const { return PolyRingElem::constant(f_, FieldElem::one(f_)); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string format(const Element& a) const { return to_string(a); }
    Element random(Rng& g) const {
        Vec c(degree_bound_ + 1);
        for (auto& x : c) x = random_element(f_, g);
        return {f_, std::move(c)};
    }
    /// Infinite ring.
    std::uint64_t size() const { return 0; }
    /// The polynomial whose base-q coefficient digits spell i.
    Element element_at(std::uint64_t i) const {
        Vec c;
        for (; i; i /= f_.order()) c.emplace_back(f_, i % f_.order());
        return {f_, std::move(c)};
    }

   private:
    Field f_;
    unsigned degree_bound_;
};

/// (g(0), g'(0)).
inline DualNumber chi(const PolyRingElem& g) {
    return {g.coefficient(0), g.derivative().coefficient(0)};
}

/// (a, b) -> (a, b^p).
inline APoint phi_K(const DualNumber& u) { return {u.a, u.b.frobenius()}; }

/// [[x^p, 0, y], [0, x, 0], [0, 0, x^p]].
inline RingMatrix<FieldRing> iota(const APoint& a) {
    const Field f = a.x.field();
    RingMatrix<FieldRing> m(FieldRing(f), 3);
    m(0, 0) = a.x.frobenius();
    m(0, 2) = a.y;
    m(1, 1) = a.x;
    m(2, 2) = a.x.frobenius();
    return m;
}

namespace detail {

template <CoefficientRing R, class Block>
RingMatrix<FieldRing> block_substitute(const RingMatrix<R>& m, Field f, Block block) {
    const std::size_t n = m.size();
    RingMatrix<FieldRing> out(FieldRing(f), 3 * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const auto b = block(m(r, c));
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) out(3 * r + i, 3 * c + j) = b(i, j);
        }
    return out;
}

inline RingMatrix<FieldRing> block_of(const RingMatrix<FieldRing>& m, std::size_t r, std::size_t c) {
    RingMatrix<FieldRing> b(m.ring(), 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) b(i, j) = m(3 * r + i, 3 * c + j);
    return b;
}

inline std::vector<std::uint64_t> matrix_key(const RingMatrix<FieldRing>& m) {
    std::vector<std::uint64_t> key;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) key.push_back(m(i, j).code());
    return key;
}

}  // namespace detail

/// Entrywise phi_K o chi, then each entry replaced by its iota block.
inline RingMatrix<FieldRing> rho(const RingMatrix<PolyRing>& m) {
    const PolyRing& ring = m.ring();
    if (!(m.det() == ring.one())) throw NotUnimodular("det(M) = " + to_string(m.det()));
    return detail::block_substitute(m, ring.field(), [](const PolyRingElem& g) { return iota(phi_K(chi(g))); });
}

/// Block substitution SL_3(K[eps]) -> GL_9(K), entries iota(phi_K(.)).
inline RingMatrix<FieldRing> sigma(const RingMatrix<DualNumberRing>& m) {
    return detail::block_substitute(m, m.ring().field(), [](const DualNumber& u) { return iota(phi_K(u)); });
}

/// Polynomial entry functions of iota o phi_K in the coordinates (x, y) of
/// x + y eps, as a 3x3 grid of MPolys in two variables.
inline std::vector<std::vector<MPoly>> sigma_entry_polynomials(Field f) {
    const unsigned p = f.p();
    const MPoly zero(f, 2);
    std::vector<std::vector<MPoly>> e(3, std::vector<MPoly>(3, zero));
    e[0][0] = MPoly::variable(f, 2, 0, p);
    e[0][2] = MPoly::variable(f, 2, 1, p);
    e[1][1] = MPoly::variable(f, 2, 0);
    e[2][2] = MPoly::variable(f, 2, 0, p);
    return e;
}

struct SigmaCertificate {
    bool exponents_ok = true;
    bool matches_points = true;
    bool multiplicative = true;
    std::optional<std::string> witness;
    bool ok() const noexcept { return exponents_ok && matches_points && multiplicative; }
};

/// Certifies that each entry of iota o phi_K is a monomial x^e or y^e with
/// e in {1, p}, that these polynomials reproduce the block map on points
/// (exhaustive when q^2 <= bound), and that the block map is multiplicative as
/// a polynomial identity in (x1, y1, x2, y2).
inline SigmaCertificate certify_sigma(Field f, std::uint64_t bound = kDefaultEnumerationBound) {
    SigmaCertificate cert;
    const unsigned p = f.p();
    const auto e = sigma_entry_polynomials(f);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (const auto& [exps, c] : e[i][j].terms()) {
                unsigned nonzero = 0;
                for (auto x : exps) {
                    if (x == 0) continue;
                    ++nonzero;
                    if (x != 1 && x != p) cert.exponents_ok = false;
                }
                if (nonzero != 1 || !c.is_one() || e[i][j].terms().size() != 1) cert.exponents_ok = false;
            }
    if (!cert.exponents_ok) cert.witness = "entry of sigma is not a monomial with exponent in {1, p}";

    const std::uint64_t q = f.order();
    if (q <= bound / q) {
        const DualNumberRing ring(f);
        for (std::uint64_t i = 0; i < ring.size() && cert.matches_points; ++i) {
            const DualNumber u = ring.element_at(i);
            const auto m = iota(phi_K(u));
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c)
                    if (!(e[r][c].evaluate(Vec{u.a, u.b}) == m(r, c))) {
                        cert.matches_points = false;
                        cert.witness = "entry polynomial disagrees with sigma at " + ring.format(u);
                    }
        }
    }

    // Substitute (x1, y1), (x2, y2) and the product point into the entry polynomials.
    auto compose = [&](const MPoly& poly, const MPoly& x, const MPoly& y) {
        MPoly out(f, 4);
        for (const auto& [exps, c] : poly.terms()) {
            MPoly term = MPoly::constant(f, 4, c);
            for (std::uint64_t k = 0; k < exps[0]; ++k) term = term * x;
            for (std::uint64_t k = 0; k < exps[1]; ++k) term = term * y;
            out += term;
        }
        return out;
    };
    const MPoly x1 = MPoly::variable(f, 4, 0), y1 = MPoly::variable(f, 4, 1);
    const MPoly x2 = MPoly::variable(f, 4, 2), y2 = MPoly::variable(f, 4, 3);
    const MPoly xp = x1 * x2, yp = x1 * y2 + x2 * y1;
    for (std::size_t r = 0; r < 3 && cert.multiplicative; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            MPoly lhs(f, 4);
            for (std::size_t k = 0; k < 3; ++k) lhs += compose(e[r][k], x1, y1) * compose(e[k][c], x2, y2);
            if (!(lhs == compose(e[r][c], xp, yp))) {
                cert.multiplicative = false;
                cert.witness = "sigma block map is not multiplicative in entry (" + std::to_string(r + 1) + "," +
                               std::to_string(c + 1) + ")";
                break;
            }
        }
    return cert;
}

struct AssociatedRingReport {
    std::uint64_t q = 0;
    unsigned degree = 0;
    std::size_t image_size = 0;
    std::size_t ring_size = 0;
    bool image_in_ring = true;
    bool equal = false;
    std::optional<std::string> witness;
};

/// Compares S = {block (1,2) of rho(e_12(t)) : deg t <= D} with
/// T = {iota(a) : a in A(F_q)}.
inline AssociatedRingReport associated_ring_points(std::uint64_t q, unsigned degree,
                                                   std::uint64_t bound = kDefaultEnumerationBound) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i <= degree; ++i) {
        if (count > bound / q) throw BoundExceeded("q^(D+1) exceeds the enumeration bound");
        count *= q;
    }
    if (q > bound / q) throw BoundExceeded("q^2 exceeds the enumeration bound");
    const auto [p, k] = Field::split_prime_power(q);
    const Field f = Field::with_default_modulus(p, k);
    const PolyRing kx(f, degree);

    AssociatedRingReport rep;
    rep.q = q;
    rep.degree = degree;
    std::set<std::vector<std::uint64_t>> s, t;
    for (std::uint64_t i = 0; i < count; ++i)
        s.insert(detail::matrix_key(detail::block_of(rho(elem(kx, 3, 0, 1, kx.element_at(i))), 0, 1)));
    const APointRing a(f);
    for (std::uint64_t i = 0; i < a.size(); ++i) t.insert(detail::matrix_key(iota(a.element_at(i))));
    rep.image_size = s.size();
    rep.ring_size = t.size();
    for (const auto& key : s)
        if (!t.count(key)) {
            rep.image_in_ring = false;
            rep.witness = "image block outside iota(A(F_q))";
            break;
        }
    rep.equal = rep.image_in_ring && s.size() == t.size();
    if (rep.image_in_ring && !rep.equal) {
        for (std::uint64_t i = 0; i < a.size(); ++i) {
            const APoint pt = a.element_at(i);
            if (!s.count(detail::matrix_key(iota(pt)))) {
                rep.witness = "iota" + a.format(pt) + " not reached";
                break;
            }
        }
    }
    return rep;
}

struct StandardDescriptionReport {
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    bool ring_hom = true;
    bool homomorphism = true;
    bool inverses = true;
    bool factorization = true;
    SigmaCertificate sigma;
    std::optional<std::string> witness;
    bool ok() const noexcept { return ring_hom && homomorphism && inverses && factorization && sigma.ok(); }
};

/// Checks rho(M) = sigma(F(M)) with F induced by chi, along with
/// rho(MN) = rho(M) rho(N) and rho(M) rho(M^-1) = 1, on random words of
/// length <= 6 in elementary generators with entries of degree <= D.
inline StandardDescriptionReport verify_standard_description(std::uint64_t q, unsigned degree, std::uint64_t samples,
                                                             std::uint64_t seed) {
    const auto [p, k] = Field::split_prime_power(q);
    const Field f = Field::with_default_modulus(p, k);
    const PolyRing kx(f, degree);
    const DualNumberRing ke(f);

    StandardDescriptionReport rep;
    rep.seed = seed;
    rep.samples = samples;
    rep.sigma = certify_sigma(f);
    std::optional<InducedHom<PolyRing, DualNumberRing>> big_f;
    try {
        big_f.emplace(RingHom<PolyRing, DualNumberRing>{kx, ke, [](const PolyRingElem& g) { return chi(g); }},
                      samples, seed);
    } catch (const NotAHomomorphism& e) {
        rep.ring_hom = false;
        rep.witness = e.what();
        return rep;
    }
    auto check = [&](bool& flag, bool ok, const std::string& what) {
        if (!ok && flag) {
            flag = false;
            if (!rep.witness) rep.witness = what;
        }
    };
    const auto one9 = RingMatrix<FieldRing>::identity(FieldRing(f), 9);
    check(rep.factorization, rho(RingMatrix<PolyRing>::identity(kx, 3)).equals(one9), "rho(1) != 1");
    Rng g(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto w1 = random_word(kx, 3, 6, g);
        const auto w2 = random_word(kx, 3, 6, g);
        const auto m = evaluate_word(kx, 3, w1);
        const auto n = evaluate_word(kx, 3, w2);
        const auto minv = evaluate_word(kx, 3, inverse_word(kx, w1));
        const auto rm = rho(m);
        const std::string label = " on sample " + std::to_string(s) + ": M = " + m.to_string();
        check(rep.factorization, rm.equals(sigma((*big_f)(m))), "rho(M) != sigma(F(M))" + label);
        check(rep.homomorphism, rho(m * n).equals(rm * rho(n)), "rho(MN) != rho(M)rho(N)" + label);
        check(rep.inverses, (rm * rho(minv)).equals(one9), "rho(M)rho(M^-1) != 1" + label);
    }
    return rep;
}

}  // namespace ringtwist

#endif
