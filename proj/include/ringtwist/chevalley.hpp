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


#ifndef RINGTWIST_CHEVALLEY_HPP
#define RINGTWIST_CHEVALLEY_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algring.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "random.hpp"

namespace ringtwist {

/// What a coefficient ring must provide for matrix arithmetic. Rings are
/// lightweight value objects carrying whatever context their elements need.
template <class R>
concept CoefficientRing = requires(const R& r, const typename R::Element& a, const typename R::Element& b) {
    typename R::Element;
    { r.zero() } -> std::convertible_to<typename R::Element>;
    { r.one() } -> std::convertible_to<typename R::Element>;
    { r.add(a, b) } -> std::convertible_to<typename R::Element>;
    { r.sub(a, b) } -> std::convertible_to<typename R::Element>;
    { r.neg(a) } -> std::convertible_to<typename R::Element>;
    { r.mul(a, b) } -> std::convertible_to<typename R::Element>;
    { r.equal(a, b) } -> std::convertible_to<bool>;
    { r.format(a) } -> std::convertible_to<std::string>;
};

/// A ring we can draw elements from; size() == 0 means infinite, otherwise
/// element_at enumerates all elements.
template <class R>
concept SampledRing = CoefficientRing<R> && requires(const R& r, Rng& g, std::uint64_t i) {
    { r.random(g) } -> std::convertible_to<typename R::Element>;
    { r.size() } -> std::convertible_to<std::uint64_t>;
    { r.element_at(i) } -> std::convertible_to<typename R::Element>;
};

class FieldRing {
   public:
    using Element = FieldElem;
    explicit FieldRing(Field f) : f_(f) {}
    Field field() const noexcept { return f_; }
    Element zero() const { return FieldElem::zero(f_); }
    Element one() const { return FieldElem::one(f_); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string format(const Element& a) const { return to_string(a); }
    Element random(Rng& g) const { return random_element(f_, g); }
    std::uint64_t size() const { return f_.order(); }
    Element element_at(std::uint64_t i) const { return {f_, i}; }

   private:
    Field f_;
};

inline std::string format_vec(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

/// Elements of a finite vector space F^d, enumerated by the base-q digits of
/// the index (coordinate 0 least significant).
inline Vec vec_at(Field f, std::size_t d, std::uint64_t index) {
    Vec v(d);
    for (std::size_t i = 0; i < d; ++i) {
        v[i] = FieldElem(f, index % f.order());
        index /= f.order();
    }
    return v;
}

inline std::uint64_t vec_space_size(Field f, std::size_t d) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (n > UINT64_MAX / f.order()) return 0;
        n *= f.order();
    }
    return n;
}

/// F[X]/(X^m), elements as coefficient vectors of length m.
class TruncatedPolyRing {
   public:
    using Element = Vec;
    TruncatedPolyRing(Field f, std::size_t m) : f_(f), m_(m) {
        if (m == 0) throw DimensionMismatch("truncation order must be positive");
    }
    Field field() const noexcept { return f_; }
    Element zero() const { return zero_vec(f_, m_); }
    Element one() const { return unit_vec(f_, m_, 0); }
    Element x() const { return m_ > 1 ? unit_vec(f_, m_, 1) : zero(); }
    Element constant(const FieldElem& c) const {
        Vec v = zero();
        v[0] = c;
        return v;
    }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return zero() - a; }
    Element mul(const Element& a, const Element& b) const {
        Vec out = zero();
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; i + j < m_; ++j) out[i + j] += a[i] * b[j];
        return out;
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string format(const Element& a) const { return format_vec(a); }
    Element random(Rng& g) const {
        Vec v(m_);
        for (auto& c : v) c = random_element(f_, g);
        return v;
    }
    std::uint64_t size() const { return vec_space_size(f_, m_); }
    Element element_at(std::uint64_t i) const { return vec_at(f_, m_, i); }

   private:
    Field f_;
    std::size_t m_;
};

/// Points of a unital structure-constant algebra as a ring.
class AlgebraRing {
   public:
    using Element = Vec;
    explicit AlgebraRing(StructAlgebra b) : b_(std::make_shared<const StructAlgebra>(std::move(b))) {
        if (!b_->unit_valid()) throw NoUnit("coefficient algebra needs a verified unit");
    }
    const StructAlgebra& algebra() const { return *b_; }
    Element zero() const { return b_->zero(); }
    Element one() const { return *b_->unit(); }
    Element add(const Element& a, const Element& c) const { return a + c; }
    Element sub(const Element& a, const Element& c) const { return a - c; }
    Element neg(const Element& a) const { return zero() - a; }
    Element mul(const Element& a, const Element& c) const { return b_->multiply(a, c); }
    bool equal(const Element& a, const Element& c) const { return a == c; }
    std::string format(const Element& a) const { return format_vec(a); }
    Element random(Rng& g) const {
        Vec v(b_->dim());
        for (auto& c : v) c = random_element(b_->field(), g);
        return v;
    }
    std::uint64_t size() const { return vec_space_size(b_->field(), b_->dim()); }
    Element element_at(std::uint64_t i) const { return vec_at(b_->field(), b_->dim(), i); }

   private:
    std::shared_ptr<const StructAlgebra> b_;
};

/// Square matrix over a coefficient ring.
template <CoefficientRing R>
class RingMatrix {
   public:
    using Element = typename R::Element;

    RingMatrix(R ring, std::size_t n) : ring_(std::move(ring)), n_(n), a_(n * n, ring_.zero()) {}

    static RingMatrix identity(const R& ring, std::size_t n) {
        RingMatrix m(ring, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
        return m;
    }

    const R& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return n_; }
    Element& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Element& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("matrix sizes differ");
        RingMatrix out(a.ring_, a.n_);
        const R& r = a.ring_;
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                Element acc = r.zero();
                for (std::size_t j = 0; j < a.n_; ++j) acc = r.add(acc, r.mul(a(i, j), b(j, k)));
                out(i, k) = std::move(acc);
            }
        return out;
    }

    bool equals(const RingMatrix& o) const {
        if (n_ != o.n_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!ring_.equal(a_[i], o.a_[i])) return false;
        return true;
    }
    bool is_identity() const { return equals(identity(ring_, n_)); }

    /// Laplace expansion; fine for the small sizes used here.
    Element det() const { return minor_det(std::vector<std::size_t>(), 0); }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < n_; ++j) s += (j ? " " : "") + ring_.format((*this)(i, j));
        }
        return s + "]";
    }

   private:
    Element minor_det(std::vector<std::size_t> used_cols, std::size_t row) const {
        if (row == n_) return ring_.one();
        Element acc = ring_.zero();
        bool negative = false;
        for (std::size_t c = 0; c < n_; ++c) {
            if (std::find(used_cols.begin(), used_cols.end(), c) != used_cols.end()) continue;
            auto next = used_cols;
            next.push_back(c);
            const Element term = ring_.mul((*this)(row, c), minor_det(next, row + 1));
            acc = negative ? ring_.sub(acc, term) : ring_.add(acc, term);
            negative = !negative;
        }
        return acc;
    }

    R ring_;
    std::size_t n_;
    std::vector<Element> a_;
};

/// e_ij(t) = 1 + t E_ij in SL_n, the root element for the A_{n-1} root (i, j).
template <CoefficientRing R>
RingMatrix<R> elem(const R& ring, std::size_t n, std::size_t i, std::size_t j, const typename R::Element& t) {
    if (i >= n || j >= n) throw IndexError("root index out of range");
    if (i == j) throw IndexError("root indices must differ");
    auto m = RingMatrix<R>::identity(ring, n);
    m(i, j) = t;
    return m;
}

/// A word in elementary generators, kept symbolically so its inverse is exact.
template <CoefficientRing R>
struct ElementaryFactor {
    std::size_t i = 0;
    std::size_t j = 0;
    typename R::Element t;
};

template <CoefficientRing R>
using ElementaryWord = std::vector<ElementaryFactor<R>>;

template <CoefficientRing R>
RingMatrix<R> evaluate_word(const R& ring, std::size_t n, const ElementaryWord<R>& w) {
    auto m = RingMatrix<R>::identity(ring, n);
    for (const auto& f : w) m = m * elem(ring, n, f.i, f.j, f.t);
    return m;
}

template <CoefficientRing R>
ElementaryWord<R> inverse_word(const R& ring, const ElementaryWord<R>& w) {
    ElementaryWord<R> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->i, it->j, ring.neg(it->t)});
    return out;
}

template <SampledRing R>
ElementaryWord<R> random_word(const R& ring, std::size_t n, std::size_t max_len, Rng& g) {
    ElementaryWord<R> w;
    const std::size_t len = uniform_below(g, max_len + 1);
    for (std::size_t s = 0; s < len; ++s) {
        const std::size_t i = uniform_below(g, n);
        std::size_t j = uniform_below(g, n - 1);
        if (j >= i) ++j;
        w.push_back({i, j, ring.random(g)});
    }
    return w;
}

enum class CheckMode { Auto, Sampled, Exhaustive };

struct SteinbergReport {
    bool passed = true;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::uint64_t pairs = 0;
    std::uint64_t relations = 0;
    std::optional<std::string> witness;
};

inline constexpr std::uint64_t kExhaustiveRingBound = 4096;
inline constexpr std::uint64_t kAutoExhaustiveRingBound = 64;

/// Checks the A-type Steinberg relations on pairs (t, s):
///   e_ij(t) e_ij(s) = e_ij(t + s),
///   [e_ij(t), e_jk(s)] = e_ik(ts) for distinct i, j, k,
///   [e_ij(t), e_kl(s)] = 1 whenever j != k and i != l.
/// `commutator_target` replaces ts in the second relation (negative controls).
template <SampledRing R>
SteinbergReport steinberg_check(
    const R& ring, std::size_t n, std::uint64_t samples, std::uint64_t seed, CheckMode mode = CheckMode::Auto,
    std::function<typename R::Element(const typename R::Element&, const typename R::Element&)> commutator_target = {}) {
    using E = typename R::Element;
    if (n < 3) throw DimensionMismatch("Steinberg relations are checked for n >= 3");
    SteinbergReport rep;
    rep.seed = seed;
    const std::uint64_t size = ring.size();
    if (mode == CheckMode::Exhaustive && (size == 0 || size > kExhaustiveRingBound))
        throw BoundExceeded("exhaustive Steinberg check needs a ring with at most 4096 elements");
    rep.exhaustive = mode == CheckMode::Exhaustive ||
                     (mode == CheckMode::Auto && size != 0 && size <= kAutoExhaustiveRingBound);
    auto target = [&](const E& t, const E& s) { return commutator_target ? commutator_target(t, s) : ring.mul(t, s); };

    auto fail = [&](const std::string& what, const E& t, const E& s) {
        rep.passed = false;
        rep.witness = what + " at t = " + ring.format(t) + ", s = " + ring.format(s);
    };
    auto check_pair = [&](const E& t, const E& s) {
        ++rep.pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const auto eij_t = elem(ring, n, i, j, t);
                const auto eij_mt = elem(ring, n, i, j, ring.neg(t));
                ++rep.relations;
                if (!(eij_t * elem(ring, n, i, j, s)).equals(elem(ring, n, i, j, ring.add(t, s)))) {
                    fail("additivity e_" + std::to_string(i + 1) + std::to_string(j + 1), t, s);
                    return;
                }
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        if (k == l) continue;
                        const bool chained = (j == k && i != l);
                        const bool commuting = (j != k && i != l);
                        if (!chained && !commuting) continue;
                        ++rep.relations;
                        const auto comm =
                            eij_t * elem(ring, n, k, l, s) * eij_mt * elem(ring, n, k, l, ring.neg(s));
                        const std::string label = "[e_" + std::to_string(i + 1) + std::to_string(j + 1) + ", e_" +
                                                  std::to_string(k + 1) + std::to_string(l + 1) + "]";
                        if (chained) {
                            if (!comm.equals(elem(ring, n, i, l, target(t, s)))) {
                                fail("commutator " + label, t, s);
                                return;
                            }
                        } else if (!comm.is_identity()) {
                            fail("commuting pair " + label, t, s);
                            return;
                        }
                    }
            }
    };
    if (rep.exhaustive) {
        for (std::uint64_t a = 0; a < size && rep.passed; ++a)
            for (std::uint64_t b = 0; b < size && rep.passed; ++b) check_pair(ring.element_at(a), ring.element_at(b));
    } else {
        Rng g(seed);
        for (std::uint64_t s = 0; s < samples && rep.passed; ++s) {
            const E t = ring.random(g);
            const E u = ring.random(g);
            check_pair(t, u);
        }
    }
    return rep;
}

/// A ring map with the carrier rings attached.
template <SampledRing R, CoefficientRing S>
struct RingHom {
    R source;
    S target;
    std::function<typename S::Element(const typename R::Element&)> fn;

    typename S::Element operator()(const typename R::Element& x) const { return fn(x); }
};

/// First failure of f(1) = 1, f(a + b) = f(a) + f(b), f(ab) = f(a) f(b);
/// exhaustive over pairs when the source has at most 64 elements.
template <SampledRing R, CoefficientRing S>
std::optional<std::string> ring_hom_violation(const RingHom<R, S>& f, std::uint64_t samples, std::uint64_t seed) {
    const auto& src = f.source;
    const auto& tgt = f.target;
    if (!tgt.equal(f(src.one()), tgt.one())) return "f(1) != 1";
    auto check = [&](const typename R::Element& a, const typename R::Element& b) -> std::optional<std::string> {
        if (!tgt.equal(f(src.add(a, b)), tgt.add(f(a), f(b))))
            return "f(a+b) != f(a)+f(b) for a = " + src.format(a) + ", b = " + src.format(b);
        if (!tgt.equal(f(src.mul(a, b)), tgt.mul(f(a), f(b))))
            return "f(ab) != f(a)f(b) for a = " + src.format(a) + ", b = " + src.format(b);
        return std::nullopt;
    };
    const std::uint64_t size = src.size();
    if (size != 0 && size <= kAutoExhaustiveRingBound) {
        for (std::uint64_t i = 0; i < size; ++i)
            for (std::uint64_t j = 0; j < size; ++j)
                if (auto w = check(src.element_at(i), src.element_at(j))) return w;
        return std::nullopt;
    }
    Rng g(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto a = src.random(g);
        const auto b = src.random(g);
        if (auto w = check(a, b)) return w;
    }
    return std::nullopt;
}

/// The group map M -> f(M) entrywise; construction verifies f on samples.
template <SampledRing R, CoefficientRing S>
class InducedHom {
   public:
    InducedHom(RingHom<R, S> f, std::uint64_t samples = 100, std::uint64_t seed = 0) : f_(std::move(f)) {
        if (auto w = ring_hom_violation(f_, samples, seed)) throw NotAHomomorphism(*w);
    }
    RingMatrix<S> operator()(const RingMatrix<R>& m) const {
        RingMatrix<S> out(f_.target, m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = f_(m(i, j));
        return out;
    }
    const RingHom<R, S>& ring_hom() const noexcept { return f_; }

   private:
    RingHom<R, S> f_;
};

template <SampledRing R, CoefficientRing S>
InducedHom<R, S> induced_hom(RingHom<R, S> f, std::uint64_t samples = 100, std::uint64_t seed = 0) {
    return InducedHom<R, S>(std::move(f), samples, seed);
}

enum class RootFamily { A, B, C, D, E, F, G };

/// Reduced irreducible root system type; rank must be >= 2 and valid for
/// the family.
class RootSystemType {
   public:
    RootSystemType(RootFamily family, unsigned rank) : family_(family), rank_(rank) {
        bool ok = rank >= 2;
        switch (family) {
            case RootFamily::D: ok = ok && rank >= 4; break;
            case RootFamily::E: ok = ok && rank >= 6 && rank <= 8; break;
            case RootFamily::F: ok = ok && rank == 4; break;
            case RootFamily::G: ok = ok && rank == 2; break;
            default: break;
        }
        if (!ok) throw IndexError("invalid root system rank");
    }
    RootFamily family() const noexcept { return family_; }
    unsigned rank() const noexcept { return rank_; }

    /// B_n, C_n and F_4 contain B_2; simply-laced types and G_2 do not.
    bool contains_b2() const noexcept {
        return family_ == RootFamily::B || family_ == RootFamily::C || family_ == RootFamily::F;
    }

   private:
    RootFamily family_;
    unsigned rank_;
};

inline bool nice_pair(const RootSystemType& phi, bool two_invertible, bool three_invertible) {
    if (phi.contains_b2() && !two_invertible) return false;
    if (phi.family() == RootFamily::G && !(two_invertible && three_invertible)) return false;
    return true;
}

}  // namespace ringtwist

#endif
