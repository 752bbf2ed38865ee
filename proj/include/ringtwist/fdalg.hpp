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


#ifndef RINGTWIST_FDALG_HPP
#define RINGTWIST_FDALG_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algring.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "mpoly.hpp"

namespace ringtwist {

/// Linearly independent vectors spanning a subspace of F^ambient.
struct SubspaceBasis {
    std::size_t ambient = 0;
    std::vector<Vec> vectors;

    std::size_t dim() const noexcept { return vectors.size(); }
};

inline SubspaceBasis make_subspace(Field f, std::size_t ambient, const std::vector<Vec>& spanning) {
    return {ambient, span_basis(f, ambient, spanning)};
}

inline void require_commutative(const StructAlgebra& b) {
    if (!b.is_commutative()) throw NotCommutative("structure constants are not symmetric");
}

/// x^(p^m) in a commutative algebra, by m successive p-th powers.
inline Vec frobenius_power(const StructAlgebra& b, Vec x, unsigned m) {
    for (unsigned s = 0; s < m; ++s) {
        Vec y = x;
        for (unsigned t = 1; t < b.field().p(); ++t) y = b.multiply(y, x);
        x = std::move(y);
    }
    return x;
}

/// Least m with p^m at least the nilpotency bound of the radical: d for a
/// unital algebra, d + 1 otherwise.
inline unsigned radical_exponent(const StructAlgebra& b) {
    const std::size_t need = b.unit_valid() ? b.dim() : b.dim() + 1;
    unsigned m = 0;
    for (std::size_t q = 1; q < need; q *= b.field().p()) ++m;
    return m;
}

/// Nilpotent elements of a commutative algebra: the kernel of the additive,
/// p^m-semilinear map x -> x^(p^m). Writing x = sum l_i b_i, the image is
/// sum l_i^(p^m) b_i^(p^m), so the kernel is the inverse-Frobenius image of
/// an ordinary nullspace.
inline SubspaceBasis nilradical(const StructAlgebra& b) {
    require_commutative(b);
    const Field f = b.field();
    const std::size_t d = b.dim();
    const unsigned m = radical_exponent(b);
    std::vector<Vec> images;
    for (std::size_t i = 0; i < d; ++i) images.push_back(frobenius_power(b, b.basis(i), m));
    auto kernel = nullspace(Mat::from_columns(f, d, images));
    for (auto& v : kernel)
        for (auto& x : v) x = x.inverse_frobenius(m);
    return make_subspace(f, d, kernel);
}

/// Span of all products x y with x in `i` and y in `j`.
inline SubspaceBasis ideal_product(const StructAlgebra& b, const SubspaceBasis& i, const SubspaceBasis& j) {
    std::vector<Vec> prods;
    for (const auto& x : i.vectors)
        for (const auto& y : j.vectors) prods.push_back(b.multiply(x, y));
    return make_subspace(b.field(), b.dim(), prods);
}

namespace detail {

/// B/J presented on the standard basis vectors not in span(J) (greedy,
/// ascending), with coordinates read off after solving in [complement | J].
struct Quotient {
    StructAlgebra algebra;
    std::vector<std::size_t> complement;  // indices of standard basis vectors
};

inline Quotient quotient_by(const StructAlgebra& b, const SubspaceBasis& j) {
    const Field f = b.field();
    const std::size_t d = b.dim();
    std::vector<Vec> cols = j.vectors;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < d && cols.size() < d; ++i) {
        cols.push_back(b.basis(i));
        if (linearly_independent(f, d, cols))
            comp.push_back(i);
        else
            cols.pop_back();
    }
    // column order [complement | J]
    std::vector<Vec> ordered;
    for (auto i : comp) ordered.push_back(b.basis(i));
    for (const auto& v : j.vectors) ordered.push_back(v);
    const auto pinv = inverse(Mat::from_columns(f, d, ordered));
    if (!pinv) throw Error("internal: complement of the radical is not a basis");
    const std::size_t r = comp.size();
    StructAlgebra q(f, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t c = 0; c < r; ++c) {
            const Vec coords = pinv->apply(b.multiply(b.basis(comp[a]), b.basis(comp[c])));
            for (std::size_t k = 0; k < r; ++k) q.set_c(k, a, c, coords[k]);
        }
    if (b.unit()) {
        const Vec coords = pinv->apply(*b.unit());
        q.set_unit(Vec(coords.begin(), coords.begin() + static_cast<long>(r)));
    }
    return {std::move(q), std::move(comp)};
}

/// Monic minimal polynomial of y inside the algebra with identity e.
inline Vec minimal_polynomial(const StructAlgebra& q, const Vec& e, const Vec& y) {
    const Field f = q.field();
    std::vector<Vec> powers{e};
    for (;;) {
        const Vec next = q.multiply(powers.back(), y);
        const auto sol = solve(Mat::from_columns(f, q.dim(), powers), next);
        if (sol) {
            Vec poly(powers.size() + 1);
            for (std::size_t i = 0; i < powers.size(); ++i) poly[i] = -(*sol)[i];
            poly.back() = FieldElem::one(f);
            return poly;
        }
        powers.push_back(next);
    }
}

inline FieldElem eval_poly(const Vec& poly, const FieldElem& x) {
    FieldElem acc = FieldElem::zero(x.field());
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

inline std::vector<std::vector<unsigned>> poly_digits(const Vec& poly) {
    std::vector<std::vector<unsigned>> out;
    for (const auto& c : poly) out.push_back(c.coeffs());
    return out;
}

inline std::size_t ideal_dim(const StructAlgebra& q, const Vec& e) {
    std::vector<Vec> img;
    for (std::size_t i = 0; i < q.dim(); ++i) img.push_back(q.multiply(e, q.basis(i)));
    return span_basis(q.field(), q.dim(), img).size();
}

/// Primitive idempotents of a commutative semisimple algebra below e.
inline void split_idempotent(const StructAlgebra& q, const Vec& e, std::uint64_t bound, std::vector<Vec>& out) {
    if (ideal_dim(q, e) <= 1) {
        out.push_back(e);
        return;
    }
    const Field f = q.field();
    for (std::size_t i = 0; i < q.dim(); ++i) {
        const Vec y = q.multiply(e, q.basis(i));
        const Vec mp = minimal_polynomial(q, e, y);
        if (mp.size() <= 2) continue;
        std::vector<FieldElem> roots;
        for (const auto& x : enumerate_field(f, bound))
            if (eval_poly(mp, x).is_zero()) roots.push_back(x);
        if (roots.size() + 1 < mp.size())
            throw NotSplit("semisimple quotient is not split over F_" + std::to_string(f.order()), poly_digits(mp));
        for (const auto& lam : roots) {
            Vec idem = e;
            for (const auto& mu : roots) {
                if (mu == lam) continue;
                const Vec factor = scale((lam - mu).inverse(), y - scale(mu, e));
                idem = q.multiply(idem, factor);
            }
            split_idempotent(q, idem, bound, out);
        }
        return;
    }
    throw Error("internal: no splitting element in a non-simple component");
}

}  // namespace detail

/// Complete set of orthogonal primitive idempotents of a split commutative
/// unital algebra. Quotient idempotents come from Lagrange interpolation at
/// the roots of a minimal polynomial and are lifted by x -> x^(p^m), which
/// kills (x^2 - x) once p^m exceeds the nilpotency index of the radical.
inline std::vector<Vec> lift_idempotents(const StructAlgebra& b, std::uint64_t bound = kDefaultEnumerationBound) {
    require_commutative(b);
    if (!b.unit_valid()) throw NoUnit("algebra has no verified unit");
    const auto j = nilradical(b);
    const auto quo = detail::quotient_by(b, j);
    std::vector<Vec> bar;
    detail::split_idempotent(quo.algebra, *quo.algebra.unit(), bound, bar);
    const unsigned m = radical_exponent(b);
    std::vector<Vec> out;
    for (const auto& e : bar) {
        Vec x = b.zero();
        for (std::size_t t = 0; t < quo.complement.size(); ++t) x[quo.complement[t]] = e[t];
        out.push_back(frobenius_power(b, x, m));
    }
    return out;
}

struct WedderburnMalcev {
    SubspaceBasis semisimple;  // span of the lifted idempotents, isomorphic to K^r
    SubspaceBasis radical;
};

inline WedderburnMalcev wedderburn_malcev(const StructAlgebra& b, std::uint64_t bound = kDefaultEnumerationBound) {
    const auto idems = lift_idempotents(b, bound);
    WedderburnMalcev out{make_subspace(b.field(), b.dim(), idems), nilradical(b)};
    if (out.semisimple.dim() + out.radical.dim() != b.dim())
        throw Error("internal: complement and radical do not fill the algebra");
    return out;
}

/// B_i = e_i B in the basis [e_i, basis of e_i J], so B_i is presented as
/// K e_i + J_i with the unit first.
struct LocalPiece {
    Vec idempotent;
    std::vector<Vec> basis;  // in coordinates of B
    StructAlgebra algebra;
    SubspaceBasis radical;   // in coordinates of `algebra`
};

inline std::vector<LocalPiece> local_decomposition(const StructAlgebra& b,
                                                   std::uint64_t bound = kDefaultEnumerationBound) {
    const Field f = b.field();
    const std::size_t d = b.dim();
    const auto idems = lift_idempotents(b, bound);
    const auto j = nilradical(b);
    std::vector<LocalPiece> out;
    for (const auto& e : idems) {
        std::vector<Vec> ej;
        for (const auto& v : j.vectors) ej.push_back(b.multiply(e, v));
        std::vector<Vec> basis{e};
        for (const auto& v : span_basis(f, d, ej)) basis.push_back(v);
        std::vector<Vec> img;
        for (std::size_t i = 0; i < d; ++i) img.push_back(b.multiply(e, b.basis(i)));
        if (span_basis(f, d, img).size() != basis.size()) throw Error("internal: local piece is not K e + eJ");
        const std::size_t di = basis.size();
        const Mat cols = Mat::from_columns(f, d, basis);
        auto coords = [&](const Vec& x) {
            auto s = solve(cols, x);
            if (!s) throw Error("internal: product left the local piece");
            return *s;
        };
        StructAlgebra piece(f, di);
        for (std::size_t a = 0; a < di; ++a)
            for (std::size_t c = 0; c < di; ++c) {
                const Vec xy = coords(b.multiply(basis[a], basis[c]));
                for (std::size_t k = 0; k < di; ++k) piece.set_c(k, a, c, xy[k]);
            }
        piece.set_unit(unit_vec(f, di, 0));
        SubspaceBasis rad{di, {}};
        for (std::size_t t = 1; t < di; ++t) rad.vectors.push_back(unit_vec(f, di, t));
        out.push_back({e, std::move(basis), std::move(piece), std::move(rad)});
    }
    return out;
}

/// Every unital algebra homomorphism B -> F, by enumerating functionals.
inline std::vector<Vec> algebra_homomorphisms(const StructAlgebra& b, std::uint64_t bound = kDefaultEnumerationBound) {
    const Field f = b.field();
    const std::size_t d = b.dim();
    const std::uint64_t total = detail::checked_pow(f.order(), static_cast<unsigned>(d));
    if (total > bound) throw BoundExceeded("too many functionals to enumerate");
    if (!b.unit()) throw NoUnit("homomorphism count needs a unit");
    std::vector<Vec> out;
    Vec phi = zero_vec(f, d);
    auto eval = [&](const Vec& x) {
        FieldElem acc = FieldElem::zero(f);
        for (std::size_t i = 0; i < d; ++i) acc += phi[i] * x[i];
        return acc;
    };
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t t = code;
        for (std::size_t i = 0; i < d; ++i) {
            phi[i] = FieldElem(f, t % f.order());
            t /= f.order();
        }
        if (!eval(*b.unit()).is_one()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t jj = 0; jj < d && ok; ++jj)
                ok = eval(b.multiply(b.basis(i), b.basis(jj))) == phi[i] * phi[jj];
        if (ok) out.push_back(phi);
    }
    return out;
}

/// Commutative algebra F[x_1..x_m]/(relations) with a point g killing the
/// relations; derivations are taken relative to g.
struct AlgebraPresentation {
    Field field;
    std::vector<std::string> generators;
    std::vector<MPoly> relations;
    Vec hom;
};

inline void validate_presentation(const AlgebraPresentation& p) {
    if (p.hom.size() != p.generators.size()) throw InvalidPresentation("hom must assign every generator");
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        if (p.relations[r].nvars() != p.generators.size())
            throw InvalidPresentation("relation uses the wrong number of variables");
        if (!p.relations[r].evaluate(p.hom).is_zero())
            throw InvalidPresentation("hom does not kill relation " + std::to_string(r + 1));
    }
}

/// Basis of generator-value vectors (delta_1..delta_m) satisfying
/// sum_j (d f / d x_j)(g) delta_j = 0 for every relation f.
inline std::vector<Vec> derivation_space(const AlgebraPresentation& p) {
    validate_presentation(p);
    const std::size_t m = p.generators.size();
    if (p.relations.empty()) {
        std::vector<Vec> basis;
        for (std::size_t j = 0; j < m; ++j) basis.push_back(unit_vec(p.field, m, j));
        return basis;
    }
    Mat jac(p.field, p.relations.size(), m);
    for (std::size_t r = 0; r < p.relations.size(); ++r)
        for (std::size_t j = 0; j < m; ++j) jac(r, j) = p.relations[r].derivative(j).evaluate(p.hom);
    return nullspace(jac);
}

/// delta(f) for the derivation with generator values `delta`.
inline FieldElem apply_derivation(const AlgebraPresentation& p, const Vec& delta, const MPoly& f) {
    FieldElem acc = FieldElem::zero(p.field);
    for (std::size_t j = 0; j < p.generators.size(); ++j) acc += f.derivative(j).evaluate(p.hom) * delta[j];
    return acc;
}

}  // namespace ringtwist

#endif
