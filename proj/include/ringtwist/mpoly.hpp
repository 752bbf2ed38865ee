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


#ifndef RINGTWIST_MPOLY_HPP
#define RINGTWIST_MPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"

namespace ringtwist {

/// Sparse multivariate polynomial over F_{p^k} in a fixed number of
/// variables. Terms with zero coefficient are never stored, so two
/// polynomials are equal as polynomials iff their term maps are equal.
class MPoly {
   public:
    using Exponents = std::vector<std::uint64_t>;
    using Terms = std::map<Exponents, FieldElem>;

    MPoly() = default;
    MPoly(Field f, std::size_t nvars) : f_(f), n_(nvars) {}

    static MPoly constant(Field f, std::size_t nvars, const FieldElem& c) {
        MPoly out(f, nvars);
        out.add_term(Exponents(nvars, 0), c);
        return out;
    }
    static MPoly variable(Field f, std::size_t nvars, std::size_t var, std::uint64_t exponent = 1) {
        if (var >= nvars) throw IndexError("variable index out of range");
        MPoly out(f, nvars);
        Exponents e(nvars, 0);
        e[var] = exponent;
        out.add_term(e, FieldElem::one(f));
        return out;
    }

    Field field() const noexcept { return f_; }
    std::size_t nvars() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents& e, const FieldElem& c) {
        if (e.size() != n_) throw DimensionMismatch("exponent vector has wrong length");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        compat(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        compat(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.compat(b);
        MPoly out(a.f_, a.n_);
        Exponents e(a.n_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.n_; ++i) {
                    if (ea[i] > UINT64_MAX - eb[i]) throw BoundExceeded("exponent overflow");
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    friend MPoly operator*(const FieldElem& s, const MPoly& a) {
        MPoly out(a.f_, a.n_);
        for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
        return out;
    }

    /// The p^a-th power, computed termwise since Frobenius is additive.
    MPoly frobenius_power(unsigned a) const {
        if (a == 0) return *this;
        const std::uint64_t q = detail::checked_pow(f_.p(), a);
        MPoly out(f_, n_);
        for (const auto& [e, c] : terms_) {
            Exponents ne(e);
            for (auto& x : ne) {
                if (x != 0 && x > UINT64_MAX / q) throw BoundExceeded("exponent overflow");
                x *= q;
            }
            out.add_term(ne, c.frobenius(a));
        }
        return out;
    }

    /// Formal partial derivative; exponents are reduced mod p in the coefficient.
    MPoly derivative(std::size_t var) const {
        if (var >= n_) throw IndexError("variable index out of range");
        MPoly out(f_, n_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            const FieldElem factor = FieldElem::from_int(f_, static_cast<long long>(e[var] % f_.p()));
            if (factor.is_zero()) continue;
            Exponents ne(e);
            ne[var] -= 1;
            out.add_term(ne, factor * c);
        }
        return out;
    }

    FieldElem evaluate(std::span<const FieldElem> point) const {
        if (point.size() != n_) throw DimensionMismatch("evaluation point has wrong length");
        FieldElem acc = FieldElem::zero(f_);
        for (const auto& [e, c] : terms_) {
            FieldElem t = c;
            for (std::size_t i = 0; i < n_; ++i)
                if (e[i]) t = t * point[i].pow(e[i]);
            acc += t;
        }
        return acc;
    }

    /// Evaluation at a point of an extension field; coefficients are pushed
    /// through the embedding.
    FieldElem evaluate(std::span<const FieldElem> point, const FieldEmbedding& emb) const {
        if (point.size() != n_) throw DimensionMismatch("evaluation point has wrong length");
        FieldElem acc = FieldElem::zero(emb.target());
        for (const auto& [e, c] : terms_) {
            FieldElem t = emb(c);
            for (std::size_t i = 0; i < n_; ++i)
                if (e[i]) t = t * point[i].pow(e[i]);
            acc += t;
        }
        return acc;
    }

    FieldElem coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldElem::zero(f_) : it->second;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            const std::string mono = monomial_to_string(it->first, names);
            const bool unit = it->second.is_one();
            if (mono.empty()) {
                out += ringtwist::to_string(it->second);
            } else {
                if (!unit) out += "(" + ringtwist::to_string(it->second) + ")*";
                out += mono;
            }
        }
        return out;
    }

    static std::string monomial_to_string(const Exponents& e, const std::vector<std::string>& names) {
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!out.empty()) out += "*";
            out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
        }
        return out;
    }

   private:
    void compat(const MPoly& o) const {
        if (!(f_ == o.f_)) throw FieldMismatch();
        if (n_ != o.n_) throw DimensionMismatch("polynomials in different variable sets");
    }

    Field f_;
    std::size_t n_ = 0;
    Terms terms_;
};

/// First monomial (in term order) where the two polynomials differ.
struct MonomialDifference {
    MPoly::Exponents exponents;
    FieldElem left;
    FieldElem right;
};

inline std::optional<MonomialDifference> first_difference(const MPoly& a, const MPoly& b) {
    const MPoly diff = a - b;
    if (diff.is_zero()) return std::nullopt;
    const auto& e = diff.terms().begin()->first;
    return MonomialDifference{e, a.coefficient(e), b.coefficient(e)};
}

}  // namespace ringtwist

#endif
