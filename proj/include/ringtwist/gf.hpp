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


#ifndef RINGTWIST_GF_HPP
#define RINGTWIST_GF_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "random.hpp"

namespace ringtwist {

/// Default cap on the number of elements any exhaustive loop may visit.
inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw BoundExceeded("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Dense polynomials over F_p, ascending coefficients, no trailing zeros.
using FpPoly = std::vector<unsigned>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline unsigned fp_inv(unsigned a, unsigned p) {
    // p is prime and small, Fermat is enough
    std::uint64_t r = 1, b = a % p;
    for (unsigned e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<unsigned>(r);
}

/// Remainder of a modulo b (b nonzero).
inline FpPoly fp_rem(FpPoly a, const FpPoly& b, unsigned p) {
    fp_trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = fp_inv(b.back(), p);
    while (a.size() > db) {
        const std::uint64_t f = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = static_cast<unsigned>((a[shift + i] + (p - f) * b[i]) % p);
        fp_trim(a);
    }
    return a;
}

/// Exhaustive trial division by every monic polynomial of degree <= deg/2.
inline bool fp_is_irreducible(const FpPoly& f, unsigned p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        const std::uint64_t count = checked_pow(p, static_cast<unsigned>(dd));
        FpPoly g(dd + 1, 0);
        g[dd] = 1;
        for (std::uint64_t c = 0; c < count; ++c) {
            std::uint64_t t = c;
            for (std::size_t i = 0; i < dd; ++i) {
                g[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            if (fp_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

class Field;

/// Immutable description of F_{p^k} = F_p[z]/(modulus). Elements are packed
/// into a base-p integer "code" whose most significant digit is the constant
/// coefficient, so code order is lexicographic order of the coefficient vector.
class FieldSpec {
   public:
    unsigned p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    std::uint64_t order() const noexcept { return q_; }
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !log_.empty(); }

    unsigned digit(std::uint64_t code, unsigned i) const noexcept {
        return static_cast<unsigned>((code / pow_[k_ - 1 - i]) % p_);
    }
    std::vector<unsigned> digits(std::uint64_t code) const {
        std::vector<unsigned> out(k_);
        for (unsigned i = k_; i-- > 0;) {
            out[i] = static_cast<unsigned>(code % p_);
            code /= p_;
        }
        return out;
    }
    std::uint64_t encode(std::span<const unsigned> coeffs) const {
        std::uint64_t code = 0;
        for (unsigned i = 0; i < k_; ++i) code = code * p_ + (i < coeffs.size() ? coeffs[i] % p_ : 0);
        return code;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        if (p_ == 2) return a ^ b;
        std::uint64_t out = 0;
        for (unsigned i = 0; i < k_; ++i) {
            const std::uint64_t s = (a % p_ + b % p_) % p_;
            out += s * pow_[i];
            a /= p_;
            b /= p_;
        }
        return out;
    }
    std::uint64_t neg(std::uint64_t a) const noexcept {
        if (p_ == 2) return a;
        std::uint64_t out = 0;
        for (unsigned i = 0; i < k_; ++i) {
            const std::uint64_t s = (p_ - a % p_) % p_;
            out += s * pow_[i];
            a /= p_;
        }
        return out;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return add(a, neg(b)); }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables()) return exp_[log_[a] + log_[b]];
        return slow_mul(a, b);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        if (e == 0) return one_;
        if (a == 0) return 0;
        if (has_tables()) return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
        std::uint64_t r = one_;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw DivisionByZero();
        if (has_tables()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
        return pow(a, q_ - 2);
    }
    std::uint64_t frob(std::uint64_t a) const {
        if (!frob_.empty()) return frob_[a];
        return pow(a, p_);
    }
    std::uint64_t one() const noexcept { return one_; }
    std::uint64_t generator_code() const noexcept { return z_; }

   private:
    friend class Field;

    FieldSpec(unsigned p, unsigned k, std::vector<unsigned> modulus, std::uint64_t table_bound)
        : p_(p), k_(k), modulus_(std::move(modulus)) {
        q_ = detail::checked_pow(p_, k_);
        pow_.resize(k_ + 1);
        for (unsigned i = 0; i <= k_; ++i) pow_[i] = detail::checked_pow(p_, i);
        one_ = pow_[k_ - 1];
        z_ = k_ >= 2 ? pow_[k_ - 2] : (modulus_[0] == 0 ? 0 : p_ - modulus_[0]);
        if (q_ <= table_bound) build_tables();
    }

    std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const {
        const auto da = digits(a), db = digits(b);
        std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i) {
            if (!da[i]) continue;
            for (unsigned j = 0; j < k_; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
        }
        for (auto& c : prod) c %= p_;
        for (std::size_t top = prod.size(); top-- > k_;) {
            const std::uint64_t f = prod[top];
            if (!f) continue;
            prod[top] = 0;
            // modulus is monic: z^k = -sum m_i z^i
            for (unsigned i = 0; i < k_; ++i)
                prod[top - k_ + i] = (prod[top - k_ + i] + (p_ - modulus_[i]) % p_ * f) % p_;
        }
        std::uint64_t code = 0;
        for (unsigned i = 0; i < k_; ++i) code = code * p_ + prod[i];
        return code;
    }

    void build_tables() {
        const auto factors = detail::prime_factors(q_ - 1);
        std::uint64_t gen = 0;
        for (std::uint64_t c = 1; c < q_; ++c) {
            bool primitive = true;
            for (auto f : factors) {
                if (pow(c, (q_ - 1) / f) == one_) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                gen = c;
                break;
            }
        }
        std::vector<std::uint32_t> lg(q_, 0);
        std::vector<std::uint64_t> ex(2 * (q_ - 1) + 1);
        std::uint64_t x = one_;
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            ex[i] = x;
            lg[x] = static_cast<std::uint32_t>(i);
            x = slow_mul(x, gen);
        }
        for (std::uint64_t i = q_ - 1; i < ex.size(); ++i) ex[i] = ex[i - (q_ - 1)];
        exp_ = std::move(ex);
        log_ = std::move(lg);
        std::vector<std::uint64_t> fr(q_);
        for (std::uint64_t c = 0; c < q_; ++c) fr[c] = pow(c, p_);
        frob_ = std::move(fr);
    }

    unsigned p_;
    unsigned k_;
    std::vector<unsigned> modulus_;
    std::uint64_t q_ = 0;
    std::uint64_t one_ = 0;
    std::uint64_t z_ = 0;
    std::vector<std::uint64_t> pow_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint64_t> exp_;
    std::vector<std::uint64_t> frob_;
};

/// Cheap handle to an interned FieldSpec. Two handles compare equal exactly
/// when they name the same (p, k, modulus).
class Field {
   public:
    static constexpr std::uint64_t kTableBound = 1u << 18;

    Field() = default;

    /// Validates p and the modulus (exhaustive factor search), then interns.
    static Field make(unsigned p, unsigned k, std::vector<unsigned> modulus) {
        if (!detail::is_prime(p)) throw InvalidField("p = " + std::to_string(p) + " is not prime");
        if (k == 0) throw InvalidField("extension degree must be positive");
        if (modulus.size() != k + 1) throw InvalidField("modulus must have k+1 coefficients");
        for (auto c : modulus)
            if (c >= p) throw InvalidField("modulus coefficient out of range for F_p");
        if (modulus.back() != 1) throw InvalidField("modulus must be monic");
        if (static_cast<double>(k) * std::log2(static_cast<double>(p)) > 62.0)
            throw BoundExceeded("field too large for 64-bit packing");
        auto key = std::make_tuple(p, k, modulus);
        auto& reg = registry();
        std::lock_guard<std::mutex> lock(reg.mutex);
        if (auto it = reg.fields.find(key); it != reg.fields.end()) return Field(it->second.get());
        if (!detail::fp_is_irreducible(modulus, p)) throw InvalidField("modulus is reducible over F_p");
        std::unique_ptr<const FieldSpec> spec(new FieldSpec(p, k, modulus, kTableBound));
        const FieldSpec* raw = spec.get();
        reg.fields.emplace(std::move(key), std::move(spec));
        return Field(raw);
    }

    /// F_{p^k} with the first monic irreducible modulus, where candidates are
    /// ordered by their lower coefficients read as a base-p number (constant
    /// term least significant).
    static Field with_default_modulus(unsigned p, unsigned k) { return make(p, k, find_irreducible(p, k)); }

    static std::vector<unsigned> find_irreducible(unsigned p, unsigned k) {
        if (!detail::is_prime(p)) throw InvalidField("p = " + std::to_string(p) + " is not prime");
        if (k == 0) throw InvalidField("extension degree must be positive");
        const std::uint64_t count = detail::checked_pow(p, k);
        std::vector<unsigned> f(k + 1, 0);
        f[k] = 1;
        for (std::uint64_t c = 0; c < count; ++c) {
            std::uint64_t t = c;
            for (unsigned i = 0; i < k; ++i) {
                f[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            if (detail::fp_is_irreducible(f, p)) return f;
        }
        throw InvalidField("no irreducible polynomial found");
    }

    /// Splits a prime power q = p^k; throws InvalidField otherwise.
    static std::pair<unsigned, unsigned> split_prime_power(std::uint64_t q) {
        if (q < 2) throw InvalidField("field size must be a prime power >= 2");
        for (std::uint64_t p = 2; p <= q; ++p) {
            if (p > q / p) p = q;  // no factor up to sqrt(q): q is prime
            if (q % p != 0) continue;
            unsigned k = 0;
            std::uint64_t t = q;
            while (t % p == 0) {
                t /= p;
                ++k;
            }
            if (t != 1 || !detail::is_prime(p)) throw InvalidField(std::to_string(q) + " is not a prime power");
            return {static_cast<unsigned>(p), k};
        }
        throw InvalidField(std::to_string(q) + " is not a prime power");
    }

    const FieldSpec& spec() const { return *spec_; }
    const FieldSpec* get() const noexcept { return spec_; }
    bool valid() const noexcept { return spec_ != nullptr; }
    unsigned p() const { return spec_->p(); }
    unsigned k() const { return spec_->k(); }
    std::uint64_t order() const { return spec_->order(); }

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.spec_ == b.spec_; }

   private:
    explicit Field(const FieldSpec* s) : spec_(s) {}

    struct Registry {
        std::mutex mutex;
        std::map<std::tuple<unsigned, unsigned, std::vector<unsigned>>, std::unique_ptr<const FieldSpec>> fields;
    };
    static Registry& registry() {
        static Registry r;
        return r;
    }

    const FieldSpec* spec_ = nullptr;
};

/// An element of F_{p^k}. Value type; comparisons are exact.
class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(Field f, std::uint64_t code) : field_(f), code_(code) {}

    static FieldElem zero(Field f) { return {f, 0}; }
    static FieldElem one(Field f) { return {f, f.spec().one()}; }
    /// The class of z, the root of the modulus.
    static FieldElem generator(Field f) { return {f, f.spec().generator_code()}; }
    static FieldElem from_int(Field f, long long v) {
        const long long p = f.p();
        const long long r = ((v % p) + p) % p;
        return FieldElem(f, static_cast<std::uint64_t>(r) * f.spec().one());
    }
    static FieldElem from_coeffs(Field f, std::span<const unsigned> coeffs) {
        if (coeffs.size() > f.k()) throw DimensionMismatch("too many coefficients for F_{p^k}");
        return {f, f.spec().encode(coeffs)};
    }

    Field field() const noexcept { return field_; }
    std::uint64_t code() const noexcept { return code_; }
    std::vector<unsigned> coeffs() const { return field_.spec().digits(code_); }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const { return field_.valid() && code_ == field_.spec().one(); }
    /// True when the element lies in the prime field F_p.
    bool in_prime_field() const { return code_ % field_.spec().one() == 0; }

    FieldElem operator+(const FieldElem& o) const { return {check(o), field_.spec().add(code_, o.code_)}; }
    FieldElem operator-(const FieldElem& o) const { return {check(o), field_.spec().sub(code_, o.code_)}; }
    FieldElem operator*(const FieldElem& o) const { return {check(o), field_.spec().mul(code_, o.code_)}; }
    FieldElem operator/(const FieldElem& o) const {
        check(o);
        return {field_, field_.spec().mul(code_, field_.spec().inv(o.code_))};
    }
    FieldElem operator-() const { return {field_, field_.spec().neg(code_)}; }
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inverse() const { return {field_, field_.spec().inv(code_)}; }
    FieldElem pow(std::uint64_t e) const { return {field_, field_.spec().pow(code_, e)}; }

    /// x^(p^n).
    FieldElem frobenius(unsigned n = 1) const {
        const auto& s = field_.spec();
        std::uint64_t c = code_;
        for (unsigned i = 0; i < n % s.k(); ++i) c = s.frob(c);
        return {field_, c};
    }
    /// The unique y with y^(p^n) = x, computed as x^(p^((k - n mod k) mod k)).
    FieldElem inverse_frobenius(unsigned n = 1) const {
        const unsigned k = field_.k();
        return frobenius((k - n % k) % k);
    }

    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
        return a.code_ == b.code_ && a.field_ == b.field_;
    }
    /// Enumeration order; only meaningful within one field.
    friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) noexcept {
        return a.code_ <=> b.code_;
    }

   private:
    Field check(const FieldElem& o) const {
        if (!(field_ == o.field_) || !field_.valid()) throw FieldMismatch();
        return field_;
    }

    Field field_;
    std::uint64_t code_ = 0;
};

inline FieldElem frobenius(const FieldElem& x) { return x.frobenius(1); }
inline FieldElem inverse_frobenius(const FieldElem& x, unsigned n) { return x.inverse_frobenius(n); }

/// All p^k elements in ascending order of the coefficient vector.
inline std::vector<FieldElem> enumerate_field(Field f, std::uint64_t bound = kDefaultEnumerationBound) {
    if (f.order() > bound)
        throw BoundExceeded("field of order " + std::to_string(f.order()) + " exceeds enumeration bound " +
                            std::to_string(bound));
    std::vector<FieldElem> out;
    out.reserve(f.order());
    for (std::uint64_t c = 0; c < f.order(); ++c) out.emplace_back(f, c);
    return out;
}

inline FieldElem random_element(Field f, Rng& rng) { return {f, uniform_below(rng, f.order())}; }

/// Polynomial notation in z, highest power first, e.g. "2z^2+1"; prime-field
/// elements print as plain integers.
inline std::string to_string(const FieldElem& x) {
    if (!x.field().valid()) return "?";
    const auto c = x.coeffs();
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (!c[i]) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]);
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << to_string(x); }

/// Field map F_{p^k} -> F_{p^{kj}} sending z to the smallest root of the
/// small modulus in the big field.
class FieldEmbedding {
   public:
    FieldEmbedding() = default;

    FieldEmbedding(Field small, Field big, std::uint64_t bound = kDefaultEnumerationBound) : small_(small), big_(big) {
        if (small.p() != big.p() || big.k() % small.k() != 0)
            throw FieldMismatch("no embedding F_" + std::to_string(small.order()) + " -> F_" +
                                std::to_string(big.order()));
        if (small == big) {
            root_ = FieldElem::generator(big);
        } else {
            bool found = false;
            const auto& m = small.spec().modulus();
            for (const auto& x : enumerate_field(big, bound)) {
                FieldElem acc = FieldElem::zero(big);
                for (std::size_t i = m.size(); i-- > 0;) acc = acc * x + FieldElem::from_int(big, m[i]);
                if (acc.is_zero()) {
                    root_ = x;
                    found = true;
                    break;
                }
            }
            if (!found) throw InvalidField("small modulus has no root in the big field");
        }
        if (small.order() <= Field::kTableBound) {
            image_.resize(small.order());
            for (std::uint64_t c = 0; c < small.order(); ++c) image_[c] = compute(FieldElem(small, c)).code();
        }
    }

    Field source() const noexcept { return small_; }
    Field target() const noexcept { return big_; }

    FieldElem operator()(const FieldElem& x) const {
        if (!(x.field() == small_)) throw FieldMismatch();
        if (!image_.empty()) return {big_, image_[x.code()]};
        return compute(x);
    }

   private:
    FieldElem compute(const FieldElem& x) const {
        if (small_ == big_) return x;
        const auto c = x.coeffs();
        FieldElem acc = FieldElem::zero(big_);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * root_ + FieldElem::from_int(big_, c[i]);
        return acc;
    }

    Field small_;
    Field big_;
    FieldElem root_;
    std::vector<std::uint64_t> image_;
};

}  // namespace ringtwist

#endif
