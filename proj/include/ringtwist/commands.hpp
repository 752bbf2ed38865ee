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


#ifndef RINGTWIST_COMMANDS_HPP
#define RINGTWIST_COMMANDS_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algring.hpp"
#include "chevalley.hpp"
#include "errors.hpp"
#include "fdalg.hpp"
#include "gf.hpp"
#include "rigidity.hpp"
#include "specfile.hpp"

namespace ringtwist {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2, kExitNotSplit = 3, kExitBound = 4 };

enum class ReportFormat { Text, KeyValue };

struct CommandOptions {
    std::string input;
    std::uint64_t q = 4;
    unsigned degree = 2;
    std::uint64_t samples = 100;
    std::uint64_t seed = 0;
    std::uint64_t max_enumeration = kDefaultEnumerationBound;
    ReportFormat format = ReportFormat::Text;
};

/// Ordered report lines. Text renders "key: value" (or "key = value" for
/// assignments); key-value renders key=value with the key squeezed to
/// [a-z0-9_].
class Report {
   public:
    void add(std::string key, std::string value) { lines_.push_back({std::move(key), std::move(value), false}); }
    void assign(std::string key, std::string value) { lines_.push_back({std::move(key), std::move(value), true}); }

    void write(std::ostream& os, ReportFormat fmt) const {
        for (const auto& l : lines_) {
            if (fmt == ReportFormat::Text) {
                os << l.key << (l.assignment ? " = " : ": ") << l.value << '\n';
            } else {
                os << kv_key(l.key) << '=' << l.value << '\n';
            }
        }
    }

   private:
    struct Line {
        std::string key;
        std::string value;
        bool assignment;
    };
    static std::string kv_key(const std::string& key) {
        std::string out;
        for (char c : key) {
            const auto u = static_cast<unsigned char>(c);
            if (std::isalnum(u)) out += static_cast<char>(std::tolower(u));
            else if (!out.empty() && out.back() != '_') out += '_';
        }
        while (!out.empty() && out.back() == '_') out.pop_back();
        return out;
    }
    std::vector<Line> lines_;
};

namespace detail {

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }
inline const char* pass_fail(bool b) { return b ? "pass" : "fail"; }

inline std::string format_tuple(const std::vector<unsigned>& n) {
    std::string s = "(";
    for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
    return s + ")";
}

inline std::string format_vectors(const std::vector<Vec>& vs) {
    if (vs.empty()) return "none";
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + format_vec(vs[i]);
    return s;
}

/// Polynomial in t with field coefficients, highest degree first.
inline std::string format_univariate(const Vec& c) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!out.empty()) out += "+";
        const std::string cs = to_string(c[i]);
        const bool compound = cs.find('+') != std::string::npos;
        if (i == 0) out += cs;
        else {
            if (!c[i].is_one()) out += compound ? "(" + cs + ")" : cs;
            out += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

inline bool has_constants(const StructAlgebra& b, const std::vector<std::tuple<int, int, int>>& ones) {
    for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) {
                bool expected = false;
                for (const auto& [kk, ii, jj] : ones)
                    if (kk == static_cast<int>(k) && ii == static_cast<int>(i) && jj == static_cast<int>(j))
                        expected = true;
                const FieldElem c = b.c(k, i, j);
                if (expected ? !c.is_one() : !c.is_zero()) return false;
            }
    return true;
}

/// Names a handful of standard algebras by their structure constants.
inline std::string recognize(const StructAlgebra& b) {
    if (b.dim() == 1 && has_constants(b, {{0, 0, 0}})) return "the field K";
    if (b.dim() == 2 && has_constants(b, {{0, 0, 0}, {1, 0, 1}, {1, 1, 0}})) return "dual numbers";
    if (b.dim() == 2 && has_constants(b, {{0, 0, 0}, {1, 1, 1}})) return "K x K";
    return "algebra of dimension " + std::to_string(b.dim());
}

inline void add_structure_constants(Report& r, const StructAlgebra& b) {
    for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j)
                if (!b.c(k, i, j).is_zero())
                    r.assign("c " + std::to_string(k + 1) + " " + std::to_string(i + 1) + " " + std::to_string(j + 1),
                             to_string(b.c(k, i, j)));
}

inline std::string format_psi(const std::vector<unsigned>& n, unsigned p) {
    std::string src = "(", dst = "(";
    for (std::size_t k = 0; k < n.size(); ++k) {
        const std::string x = "x" + std::to_string(k + 1);
        src += (k ? "," : "") + x;
        dst += (k ? "," : "") + x;
        if (n[k] > 0) dst += "^" + std::to_string(detail::checked_pow(p, n[k]));
    }
    return src + ") -> " + dst + ")";
}

inline std::string format_cycle(const std::vector<TwistConstraint>& cycle) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& c = cycle[i];
        s += (i ? ", " : "") + std::string("n") + std::to_string(c.to + 1) + " - n" + std::to_string(c.from + 1) +
             " = " + std::to_string(c.offset);
    }
    return s;
}

inline AlgebraicRing ring_of(const SpecFile& spec) {
    if (spec.ring) return *spec.ring;
    if (spec.algebra) return tilde(*spec.algebra);
    throw InvalidPresentation("input has neither [ring] nor [algebra]");
}

}  // namespace detail

inline int cmd_verify_ring(const CommandOptions& opt, std::ostream& out) {
    const SpecFile spec = load_spec(opt.input);
    const AlgebraicRing a = detail::ring_of(spec);
    const auto rep = verify_ring_axioms(a, opt.max_enumeration);
    Report r;
    r.add("associative", detail::yes_no(rep.associative));
    if (rep.associativity_witness) r.add("associativity witness", rep.associativity_witness->to_string());
    r.add("commutative", detail::yes_no(rep.commutative));
    if (rep.commutativity_witness) r.add("commutativity witness", rep.commutativity_witness->to_string());
    r.add("distributive", detail::yes_no(rep.distributive));
    r.add("unit", rep.unit ? format_vec(*rep.unit) : "none");
    r.write(out, opt.format);
    return rep.associative ? kExitOk : kExitFailure;
}

inline int cmd_untwist(const CommandOptions& opt, std::ostream& out) {
    const SpecFile spec = load_spec(opt.input);
    if (!spec.ring) throw InvalidPresentation("untwist needs a [ring] section");
    Report r;
    UntwistResult res;
    try {
        res = untwist(*spec.ring, opt.max_enumeration);
    } catch (const Inconsistent& e) {
        r.add("inconsistent", e.what());
        r.add("cycle", detail::format_cycle(e.cycle()));
        r.write(out, opt.format);
        return kExitFailure;
    }
    r.assign("n", detail::format_tuple(res.n));
    r.assign("B", detail::recognize(res.algebra));
    detail::add_structure_constants(r, res.algebra);
    r.add("B unit", res.algebra.unit() ? format_vec(*res.algebra.unit()) : "none");
    r.add("psi", detail::format_psi(res.n, spec.field.p()));
    std::string flags;
    if (res.report.additive) flags += "additive";
    if (res.report.multiplicative) flags += std::string(flags.empty() ? "" : " ") + "multiplicative";
    if (res.report.point_bijective) flags += std::string(flags.empty() ? "" : " ") + "point-bijective";
    r.add("psi verified", flags);
    r.write(out, opt.format);
    return kExitOk;
}

inline int cmd_decompose(const CommandOptions& opt, std::ostream& out) {
    const SpecFile spec = load_spec(opt.input);
    if (!spec.algebra) throw InvalidPresentation("decompose needs an [algebra] section");
    const StructAlgebra& b = *spec.algebra;
    Report r;
    try {
        const auto j = nilradical(b);
        const auto wm = wedderburn_malcev(b, opt.max_enumeration);
        const auto idems = lift_idempotents(b, opt.max_enumeration);
        const auto pieces = local_decomposition(b, opt.max_enumeration);
        r.add("dimension", std::to_string(b.dim()));
        r.add("nilradical dimension", std::to_string(j.dim()));
        r.add("nilradical basis", detail::format_vectors(j.vectors));
        r.add("idempotents", detail::format_vectors(idems));
        r.add("semisimple complement", detail::format_vectors(wm.semisimple.vectors));
        r.add("local pieces", std::to_string(pieces.size()));
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            const std::string tag = "piece " + std::to_string(i + 1);
            r.add(tag + " idempotent", format_vec(pieces[i].idempotent));
            r.add(tag + " dimension", std::to_string(pieces[i].basis.size()));
            std::vector<Vec> maximal(pieces[i].basis.begin() + 1, pieces[i].basis.end());
            r.add(tag + " maximal ideal", detail::format_vectors(maximal));
        }
    } catch (const NotSplit& e) {
        Vec poly;
        for (const auto& digits : e.minimal_polynomial()) poly.push_back(FieldElem::from_coeffs(b.field(), digits));
        r.add("not split", e.what());
        r.add("minimal polynomial", detail::format_univariate(poly));
        r.add("suggestion", "extend the base field (increase k)");
        r.write(out, opt.format);
        return kExitNotSplit;
    }
    r.write(out, opt.format);
    return kExitOk;
}

inline int cmd_derivations(const CommandOptions& opt, std::ostream& out) {
    const SpecFile spec = load_spec(opt.input);
    if (!spec.presentation) throw InvalidPresentation("derivations needs a [presentation] section");
    const auto basis = derivation_space(*spec.presentation);
    Report r;
    std::string gens;
    for (const auto& g : spec.presentation->generators) gens += (gens.empty() ? "" : ",") + g;
    r.add("generators", "(" + gens + ")");
    r.add("derivation space dimension", std::to_string(basis.size()));
    r.add("basis", detail::format_vectors(basis));
    r.write(out, opt.format);
    return kExitOk;
}

inline int cmd_rigidity_demo(const CommandOptions& opt, std::ostream& out) {
    const unsigned d_lo = std::min(opt.degree, 1u);
    const unsigned d_hi = std::max(opt.degree, 3u);
    // Reject oversized enumerations before building anything.
    {
        std::uint64_t count = 1;
        for (unsigned i = 0; i <= d_hi; ++i) {
            if (opt.q == 0 || count > opt.max_enumeration / opt.q)
                throw BoundExceeded("q^(D+1) = " + std::to_string(opt.q) + "^" + std::to_string(d_hi + 1) +
                                    " exceeds --max-enumeration");
            count *= opt.q;
        }
    }
    const auto [p, k] = Field::split_prime_power(opt.q);
    const Field f = Field::with_default_modulus(p, k);
    Report r;
    bool all = true;
    auto stage = [&](const std::string& name, bool ok, const std::optional<std::string>& witness = std::nullopt) {
        all = all && ok;
        r.add(name, detail::pass_fail(ok));
        if (!ok && witness) r.add(name + " witness", *witness);
    };
    r.add("q", std::to_string(opt.q));
    r.add("degree", std::to_string(opt.degree));
    r.add("samples", std::to_string(opt.samples));
    r.add("seed", std::to_string(opt.seed));

    const PolyRing kx(f, opt.degree);
    const DualNumberRing ke(f);
    const APointRing ap(f);
    {
        auto w = ring_hom_violation(RingHom<PolyRing, DualNumberRing>{kx, ke, [](const PolyRingElem& g) { return chi(g); }},
                                   opt.samples, opt.seed);
        stage("chi ring homomorphism", !w, w);
    }
    {
        auto w = ring_hom_violation(RingHom<DualNumberRing, APointRing>{ke, ap, [](const DualNumber& u) { return phi_K(u); }},
                                   opt.samples, opt.seed);
        stage("phi_K ring homomorphism", !w, w);
    }
    {
        std::optional<std::string> w;
        const std::uint64_t n = ap.size();
        const bool exhaustive = n <= kAutoExhaustiveRingBound;
        Rng g(opt.seed);
        const std::uint64_t pairs = exhaustive ? n * n : opt.samples;
        for (std::uint64_t s = 0; s < pairs && !w; ++s) {
            const APoint a = exhaustive ? ap.element_at(s / n) : ap.random(g);
            const APoint b = exhaustive ? ap.element_at(s % n) : ap.random(g);
            if (!(iota(a) * iota(b)).equals(iota(ap.mul(a, b))))
                w = "iota(a)iota(b) != iota(ab) for a = " + ap.format(a) + ", b = " + ap.format(b);
            else {
                const auto sum = iota(ap.add(a, b)), ia = iota(a), ib = iota(b);
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j)
                        if (!(sum(i, j) == ia(i, j) + ib(i, j)))
                            w = "iota(a+b) != iota(a)+iota(b) for a = " + ap.format(a) + ", b = " + ap.format(b);
            }
        }
        if (!w && !iota(ap.one()).is_identity()) w = "iota(1) != 1";
        if (!w) {
            std::set<std::vector<std::uint64_t>> images;
            for (std::uint64_t i = 0; i < n; ++i) images.insert(detail::matrix_key(iota(ap.element_at(i))));
            if (images.size() != n) w = "iota is not injective";
        }
        stage("iota embedding", !w, w);
    }
    {
        const auto s1 = steinberg_check(ke, 3, opt.samples, opt.seed);
        stage("steinberg over K[eps]", s1.passed, s1.witness);
        const auto s2 = steinberg_check(ap, 3, opt.samples, opt.seed);
        stage("steinberg over A-points", s2.passed, s2.witness);
    }
    {
        const auto sd = verify_standard_description(opt.q, opt.degree, opt.samples, opt.seed);
        stage("rho homomorphism", sd.ring_hom && sd.homomorphism && sd.inverses, sd.witness);
        stage("sigma algebraic", sd.sigma.ok(), sd.sigma.witness);
        stage("rho = sigma o F", sd.factorization, sd.witness);
    }
    for (unsigned deg = d_lo; deg <= d_hi; ++deg) {
        const auto ar = associated_ring_points(opt.q, deg, opt.max_enumeration);
        const std::string tag = "associated ring D=" + std::to_string(deg);
        std::string detail = ar.equal ? "S = T" : (ar.image_in_ring ? "S strictly inside T" : "S not inside T");
        detail += " (|S| = " + std::to_string(ar.image_size) + ", |T| = " + std::to_string(ar.ring_size) + ")";
        all = all && ar.equal;
        r.add(tag, std::string(detail::pass_fail(ar.equal)) + ", " + detail);
        if (!ar.equal && ar.witness) r.add(tag + " witness", *ar.witness);
    }
    r.add("result", detail::pass_fail(all));
    r.write(out, opt.format);
    return all ? kExitOk : kExitFailure;
}

/// Runs a command, mapping exceptions to exit codes; messages go to `err`.
template <class Fn>
int run_command(Fn&& fn, const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        return fn(opt, out);
    } catch (const ParseError& e) {
        err << "error: " << opt.input << ": " << e.what() << '\n';
        return kExitInput;
    } catch (const NotSplit& e) {
        err << "error: " << e.what() << '\n';
        return kExitNotSplit;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBound;
    } catch (const InvalidPresentation& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvalidField& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const IndexError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        err << "failure: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace ringtwist

#endif
