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


#ifndef RINGTWIST_SPECFILE_HPP
#define RINGTWIST_SPECFILE_HPP

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "algring.hpp"
#include "errors.hpp"
#include "fdalg.hpp"
#include "gf.hpp"
#include "mpoly.hpp"

namespace ringtwist {

/// Parsed contents of a toolkit input file. Grammar:
///
///   [field]         p = <prime>, k = <int>, modulus = [c0, ..., ck]   (modulus optional)
///   [algebra]       d = <int>, unit = [[..], ...], c k i j = [coeffs]   (1-based, repeatable)
///   [ring]          d = <int>, mul = k i a j b [coeffs]               (term coeff*x_i^(p^a)*y_j^(p^b) in output k)
///   [presentation]  generators = [names], relation = <poly>, hom name = [coeffs]
///
/// Field elements are ascending F_p coefficient lists in z, the root of the
/// modulus. `#` starts a comment. Every section appears at most once and
/// [algebra] excludes [ring].
struct SpecFile {
    Field field;
    std::optional<StructAlgebra> algebra;
    std::optional<AlgebraicRing> ring;
    std::optional<AlgebraPresentation> presentation;
};

namespace detail {

class LineCursor {
   public:
    LineCursor(std::string_view text, std::size_t line, std::size_t offset = 0)
        : s_(text), line_(line), pos_(offset) {}

    std::size_t line() const noexcept { return line_; }
    /// Column of the next token, 1-based.
    std::size_t column() {
        skip_space();
        return pos_ + 1;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }

    void skip_space() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void expect_end() {
        if (!at_end()) fail("unexpected trailing input");
    }

    std::uint64_t integer() {
        skip_space();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const unsigned digit = static_cast<unsigned>(s_[pos_] - '0');
            if (v > (UINT64_MAX - digit) / 10) fail("integer too large");
            v = v * 10 + digit;
            ++pos_;
        }
        return v;
    }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            fail("expected an identifier");
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    bool at_identifier() {
        const char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    std::vector<std::uint64_t> int_list() {
        expect('[');
        std::vector<std::uint64_t> out;
        if (accept(']')) return out;
        do out.push_back(integer());
        while (accept(','));
        expect(']');
        return out;
    }

    FieldElem field_elem(Field f) {
        const std::size_t col = column();
        const auto coeffs = int_list();
        if (coeffs.size() > f.k()) throw ParseError(line_, col, "field element has more than k coefficients");
        std::vector<unsigned> digits;
        for (auto c : coeffs) {
            if (c >= f.p()) throw ParseError(line_, col, "coefficient must be below p");
            digits.push_back(static_cast<unsigned>(c));
        }
        return FieldElem::from_coeffs(f, digits);
    }

   private:
    std::string_view s_;
    std::size_t line_;
    std::size_t pos_;
};

/// Recursive descent over + - * ^ and parentheses; atoms are integers,
/// generator names and bracketed field elements.
class PolyParser {
   public:
    PolyParser(LineCursor& cur, Field f, const std::vector<std::string>& names) : cur_(cur), f_(f), names_(names) {}

    MPoly parse() {
        MPoly out = expr();
        cur_.expect_end();
        return out;
    }

   private:
    MPoly expr() {
        bool negate = false;
        if (cur_.accept('-')) negate = true;
        else cur_.accept('+');
        MPoly acc = term();
        if (negate) acc = MPoly(f_, names_.size()) - acc;
        for (;;) {
            if (cur_.accept('+')) acc = acc + term();
            else if (cur_.accept('-')) acc = acc - term();
            else return acc;
        }
    }
    MPoly term() {
        MPoly acc = factor();
        while (cur_.accept('*')) acc = acc * factor();
        return acc;
    }
    MPoly factor() {
        const MPoly base = primary();
        if (!cur_.accept('^')) return base;
        const std::uint64_t e = cur_.integer();
        if (e > 4096) cur_.fail("exponent too large");
        MPoly out = MPoly::constant(f_, names_.size(), FieldElem::one(f_));
        for (std::uint64_t i = 0; i < e; ++i) out = out * base;
        return out;
    }
    MPoly primary() {
        const std::size_t n = names_.size();
        if (cur_.accept('(')) {
            MPoly inner = expr();
            cur_.expect(')');
            return inner;
        }
        if (cur_.peek() == '[') return MPoly::constant(f_, n, cur_.field_elem(f_));
        if (cur_.at_identifier()) {
            const std::size_t col = cur_.column();
            const std::string name = cur_.identifier();
            for (std::size_t i = 0; i < n; ++i)
                if (names_[i] == name) return MPoly::variable(f_, n, i);
            throw ParseError(cur_.line(), col, "unknown generator '" + name + "'");
        }
        if (std::isdigit(static_cast<unsigned char>(cur_.peek())))
            return MPoly::constant(f_, n, FieldElem::from_int(f_, static_cast<long long>(cur_.integer() % f_.p())));
        cur_.fail("expected a polynomial term");
    }
    LineCursor& cur_;
    Field f_;
    const std::vector<std::string>& names_;
};

struct RawLine {
    std::size_t number;
    std::string text;
};

}  // namespace detail

inline SpecFile parse_spec(std::string_view text) {
    using detail::LineCursor;
    std::vector<detail::RawLine> lines;
    {
        std::size_t start = 0, number = 1;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string line(text.substr(start, end - start));
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            lines.push_back({number++, std::move(line)});
            start = end + 1;
        }
    }

    SpecFile out;
    bool have_field = false;
    std::set<std::string> seen_sections;
    std::string section;
    std::set<std::string> seen_keys;

    std::optional<unsigned> p, k;
    std::optional<std::vector<unsigned>> modulus;
    std::size_t field_line = 0;

    std::optional<std::size_t> d;
    std::optional<StructAlgebra> algebra;
    std::vector<MulTerm> terms;

    std::optional<AlgebraPresentation> pres;
    std::vector<bool> hom_set;

    auto finish_field = [&](std::size_t line) {
        if (have_field) return;
        if (!p || !k) throw ParseError(line, 1, "[field] requires p and k");
        try {
            out.field = modulus ? Field::make(*p, *k, *modulus) : Field::with_default_modulus(*p, *k);
        } catch (const InvalidField& e) {
            throw ParseError(field_line, 1, e.what());
        }
        have_field = true;
    };
    auto finish_section = [&](std::size_t line) {
        if (section == "field") finish_field(line);
        if ((section == "algebra" || section == "ring") && !d)
            throw ParseError(line, 1, "[" + section + "] requires d");
        if (section == "algebra") out.algebra = std::move(algebra);
        if (section == "ring") out.ring = AlgebraicRing(out.field, *d, terms);
        if (section == "presentation") {
            if (!pres) throw ParseError(line, 1, "[presentation] requires generators");
            for (std::size_t i = 0; i < hom_set.size(); ++i)
                if (!hom_set[i]) throw ParseError(line, 1, "hom missing for generator '" + pres->generators[i] + "'");
            out.presentation = std::move(pres);
        }
    };

    for (const auto& [number, raw] : lines) {
        LineCursor cur(raw, number);
        if (cur.at_end()) continue;
        if (cur.accept('[')) {
            const std::size_t col = cur.column();
            const std::string name = cur.identifier();
            cur.expect(']');
            cur.expect_end();
            if (name != "field" && name != "algebra" && name != "ring" && name != "presentation")
                throw ParseError(number, col, "unknown section '" + name + "'");
            if (seen_sections.count(name)) throw ParseError(number, col, "duplicate section [" + name + "]");
            if (name != "field" && section.empty()) throw ParseError(number, col, "[field] must come first");
            if ((name == "algebra" && seen_sections.count("ring")) || (name == "ring" && seen_sections.count("algebra")))
                throw ParseError(number, col, "[algebra] and [ring] are mutually exclusive");
            if (!section.empty()) finish_section(number);
            section = name;
            seen_sections.insert(name);
            seen_keys.clear();
            d.reset();
            continue;
        }
        if (section.empty()) cur.fail("expected a section header");
        const std::size_t key_col = cur.column();
        const std::string key = cur.identifier();
        auto once = [&](const std::string& name) {
            if (seen_keys.count(name)) throw ParseError(number, key_col, "duplicate key '" + name + "'");
            seen_keys.insert(name);
        };
        auto unknown = [&] { throw ParseError(number, key_col, "unknown key '" + key + "' in [" + section + "]"); };

        if (section == "field") {
            cur.expect('=');
            field_line = number;
            if (key == "p") {
                once(key);
                const auto v = cur.integer();
                if (v > 65521) cur.fail("p too large");
                p = static_cast<unsigned>(v);
            } else if (key == "k") {
                once(key);
                const auto v = cur.integer();
                if (v > 64) cur.fail("k too large");
                k = static_cast<unsigned>(v);
            } else if (key == "modulus") {
                once(key);
                std::vector<unsigned> m;
                for (auto c : cur.int_list()) {
                    if (c > 65535) cur.fail("modulus coefficient too large");
                    m.push_back(static_cast<unsigned>(c));
                }
                modulus = std::move(m);
            } else {
                unknown();
            }
            cur.expect_end();
            continue;
        }

        const Field f = out.field;
        if (section == "algebra" || section == "ring") {
            if (key == "d") {
                once(key);
                cur.expect('=');
                const auto v = cur.integer();
                if (v == 0 || v > 64) cur.fail("d must be between 1 and 64");
                d = static_cast<std::size_t>(v);
                if (section == "algebra") algebra.emplace(f, *d);
                cur.expect_end();
                continue;
            }
            if (key != "unit" && key != "c" && key != "mul") unknown();
            if (!d) throw ParseError(number, key_col, "d must be set before other keys");
            auto index = [&] {
                const std::size_t col = cur.column();
                const auto v = cur.integer();
                if (v == 0 || v > *d) throw ParseError(number, col, "index out of range 1.." + std::to_string(*d));
                return static_cast<std::size_t>(v - 1);
            };
            if (section == "algebra" && key == "unit") {
                once(key);
                cur.expect('=');
                cur.expect('[');
                Vec u;
                do u.push_back(cur.field_elem(f));
                while (cur.accept(','));
                cur.expect(']');
                if (u.size() != *d) cur.fail("unit must have d entries");
                algebra->set_unit(u);
            } else if (section == "algebra" && key == "c") {
                const std::size_t kk = index(), i = index(), j = index();
                cur.expect('=');
                const std::string entry = "c " + std::to_string(kk) + " " + std::to_string(i) + " " + std::to_string(j);
                once(entry);
                algebra->set_c(kk, i, j, cur.field_elem(f));
            } else if (section == "ring" && key == "mul") {
                cur.expect('=');
                MulTerm t;
                t.out = index();
                t.left = index();
                const auto a = cur.integer();
                t.right = index();
                const auto b = cur.integer();
                if (a > 64 || b > 64) cur.fail("Frobenius exponent too large");
                t.left_exp = static_cast<unsigned>(a);
                t.right_exp = static_cast<unsigned>(b);
                t.coeff = cur.field_elem(f);
                terms.push_back(t);
            } else {
                unknown();
            }
            cur.expect_end();
            continue;
        }

        // presentation
        if (key == "generators") {
            once(key);
            cur.expect('=');
            cur.expect('[');
            std::vector<std::string> names;
            if (!cur.accept(']')) {
                do {
                    const std::size_t col = cur.column();
                    auto name = cur.identifier();
                    for (const auto& n : names)
                        if (n == name) throw ParseError(number, col, "duplicate generator '" + name + "'");
                    names.push_back(std::move(name));
                } while (cur.accept(','));
                cur.expect(']');
            }
            cur.expect_end();
            pres = AlgebraPresentation{f, names, {}, Vec(names.size(), FieldElem::zero(f))};
            hom_set.assign(names.size(), false);
            continue;
        }
        if (key != "relation" && key != "hom") unknown();
        if (!pres) throw ParseError(number, key_col, "generators must be set before other keys");
        if (key == "relation") {
            cur.expect('=');
            detail::PolyParser parser(cur, f, pres->generators);
            pres->relations.push_back(parser.parse());
        } else {
            const std::size_t col = cur.column();
            const std::string name = cur.identifier();
            std::size_t idx = pres->generators.size();
            for (std::size_t i = 0; i < pres->generators.size(); ++i)
                if (pres->generators[i] == name) idx = i;
            if (idx == pres->generators.size()) throw ParseError(number, col, "unknown generator '" + name + "'");
            once("hom " + name);
            cur.expect('=');
            pres->hom[idx] = cur.field_elem(f);
            hom_set[idx] = true;
            cur.expect_end();
        }
    }
    if (section.empty()) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing [field] section");
    finish_section(lines.back().number);
    return out;
}

inline SpecFile load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

}  // namespace ringtwist

#endif
