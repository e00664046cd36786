#pragma once

// Sparse multivariate Laurent polynomials over Z with arbitrary-precision
// coefficients. Values are immutable in spirit: every operation returns a
// new polynomial in canonical form (sorted exponent vectors, no zero
// coefficients, like terms collected), so structural equality is
// mathematical equality. The units of the ring are exactly the terms
// +-(single monomial) with coefficient +-1.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "frieze/errors.hpp"
#include "frieze/varset.hpp"

namespace frieze {

using Int = mpz_class;

/// Exponent vector with integer (possibly negative) exponents, stored sparse
/// and sorted by VarId. The empty vector is the monomial 1.
class Monomial {
  public:
    Monomial() = default;

    static Monomial var(VarId v, int exp = 1) {
        Monomial m;
        if (exp != 0) m.exps_.emplace_back(v, exp);
        return m;
    }

    const std::vector<std::pair<VarId, int>>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    int exponent(VarId v) const {
        for (const auto& [w, e] : exps_)
            if (w == v) return e;
        return 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [w, e] : exps_) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.exps_.reserve(exps_.size() + o.exps_.size());
        std::size_t i = 0, j = 0;
        while (i < exps_.size() || j < o.exps_.size()) {
            if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first)) {
                r.exps_.push_back(exps_[i++]);
            } else if (i == exps_.size() || o.exps_[j].first < exps_[i].first) {
                r.exps_.push_back(o.exps_[j++]);
            } else {
                int e = exps_[i].second + o.exps_[j].second;
                if (e != 0) r.exps_.emplace_back(exps_[i].first, e);
                ++i, ++j;
            }
        }
        return r;
    }

    Monomial inverse() const { return pow(-1); }

    Monomial pow(int k) const {
        Monomial r;
        if (k == 0) return r;
        r.exps_.reserve(exps_.size());
        for (const auto& [w, e] : exps_) r.exps_.emplace_back(w, e * k);
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded order: total degree first, ties broken lexicographically with
    /// edge variables before piece variables (higher exponent on the earlier
    /// variable wins). Used for canonical term order and display.
    std::strong_ordering order(const Monomial& o) const {
        if (auto c = total_degree() <=> o.total_degree(); c != 0) return c;
        std::size_t i = 0, j = 0;
        while (i < exps_.size() && j < o.exps_.size()) {
            if (exps_[i].first < o.exps_[j].first)
                return exps_[i].second > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
            if (o.exps_[j].first < exps_[i].first)
                return o.exps_[j].second > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
            if (auto c = exps_[i].second <=> o.exps_[j].second; c != 0) return c;
            ++i, ++j;
        }
        if (i < exps_.size()) return exps_[i].second > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        if (j < o.exps_.size()) return o.exps_[j].second > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

  private:
    std::vector<std::pair<VarId, int>> exps_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.order(b) == std::strong_ordering::less; }
};

class LaurentPoly {
  public:
    using TermMap = std::map<Monomial, Int, MonomialLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(VarSet vs) : vs_(vs) {}

    static LaurentPoly zero(VarSet vs) { return LaurentPoly(vs); }

    static LaurentPoly constant(VarSet vs, Int c) {
        LaurentPoly p(vs);
        if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
        return p;
    }

    static LaurentPoly one(VarSet vs) { return constant(vs, 1); }

    static LaurentPoly variable(VarSet vs, VarId v) { return monomial(vs, Monomial::var(v), 1); }

    static LaurentPoly monomial(VarSet vs, const Monomial& m, Int c = 1) {
        for (const auto& [w, e] : m.exponents())
            if (!vs.contains(w))
                throw DomainError("LaurentPoly: monomial mentions a variable outside the variable set " + vs.str());
        LaurentPoly p(vs);
        if (c != 0) p.terms_.emplace(m, std::move(c));
        return p;
    }

    const VarSet& var_set() const { return vs_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    /// The constant this polynomial equals; DomainError if non-constant.
    Int constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw DomainError("LaurentPoly::constant_value: polynomial is not constant");
        return terms_.begin()->second;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vs_ == b.vs_ && a.terms_ == b.terms_;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        require_same(vs_, o.vs_, "add");
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        require_same(vs_, o.vs_, "subtract");
        for (const auto& [m, c] : o.terms_) sub_term(m, c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly operator-() const {
        LaurentPoly r(vs_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        require_same(a.vs_, b.vs_, "multiply");
        LaurentPoly r(a.vs_);
        r.add_product(a, b);
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const LaurentPoly& a, const Int& k) {
        LaurentPoly r(a.vs_);
        if (k != 0)
            for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * k);
        return r;
    }

    friend LaurentPoly operator*(const Int& k, const LaurentPoly& a) { return a * k; }

    /// *this += sign * a * b. Fused to keep determinant expansion cheap.
    void add_product(const LaurentPoly& a, const LaurentPoly& b, int sign = 1) {
        require_same(vs_, a.vs_, "add_product");
        require_same(vs_, b.vs_, "add_product");
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Int c = ca * cb;
                if (sign < 0) c = -c;
                add_term(ma * mb, c);
            }
        }
    }

    bool is_unit() const {
        return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
    }

    /// Inverse iff *this is +-(one monomial); nullopt otherwise.
    std::optional<LaurentPoly> unit_inverse() const {
        if (!is_unit()) return std::nullopt;
        const auto& [m, c] = *terms_.begin();
        return monomial(vs_, m.inverse(), c);
    }

    /// Unit inverse or DomainError. Used where pivots must be units.
    LaurentPoly inverse_of_unit() const {
        auto inv = unit_inverse();
        if (!inv) throw DomainError("inverse_of_unit: polynomial is not a unit: " + str(VarNames(vs_)));
        return *inv;
    }

    /// Maximum exponent of v over all terms; DomainError on the zero polynomial.
    int degree_in(VarId v) const {
        if (terms_.empty()) throw DomainError("degree_in: zero polynomial has no degree");
        bool first = true;
        int best = 0;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (first || e > best) best = e;
            first = false;
        }
        return best;
    }

    /// Minimum exponent of v over all terms; DomainError on the zero polynomial.
    int min_degree_in(VarId v) const {
        if (terms_.empty()) throw DomainError("min_degree_in: zero polynomial has no degree");
        bool first = true;
        int best = 0;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (first || e < best) best = e;
            first = false;
        }
        return best;
    }

    /// k >= 0 for arbitrary p; negative k requires p to be a unit.
    LaurentPoly pow(int k) const {
        if (k < 0) return inverse_of_unit().pow(-k);
        LaurentPoly acc = one(vs_);
        LaurentPoly base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = k > 1 ? base * base : base;
            k >>= 1;
        }
        return acc;
    }

    /// Simultaneously replaces each assigned variable by its value (values
    /// must live over the same variable set); unassigned variables pass
    /// through. Negative exponents require the assigned value to be a unit.
    LaurentPoly substitute(const std::map<VarId, LaurentPoly>& assignment) const {
        for (const auto& [v, val] : assignment) {
            if (!vs_.contains(v)) throw DomainError("substitute: assigned variable outside the variable set");
            require_same(vs_, val.var_set(), "substitute");
        }
        LaurentPoly result(vs_);
        for (const auto& [m, c] : terms_) {
            LaurentPoly term = constant(vs_, c);
            Monomial passthrough;
            for (const auto& [v, e] : m.exponents()) {
                auto it = assignment.find(v);
                if (it == assignment.end()) {
                    passthrough = passthrough * Monomial::var(v, e);
                } else if (e >= 0) {
                    term = term * it->second.pow(e);
                } else {
                    term = term * it->second.inverse_of_unit().pow(-e);
                }
            }
            result += term * monomial(vs_, passthrough);
        }
        return result;
    }

    /// Display form: terms in descending graded-lex order, explicit `*`
    /// between factors, `^` for exponents, e.g. "a*b^2 + 2*c - 1".
    std::string str(const VarNames& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            const bool neg = c < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            Int a = abs(c);
            std::string factors;
            for (const auto& [v, e] : m.exponents()) {
                if (!factors.empty()) factors += "*";
                factors += names.name(v);
                if (e != 1) factors += "^" + std::to_string(e);
            }
            if (factors.empty()) {
                out += a.get_str();
            } else {
                if (a != 1) out += a.get_str() + "*";
                out += factors;
            }
        }
        return out;
    }

    std::string str() const { return str(VarNames(vs_)); }

    /// Parses the display grammar: [sign] term (sign term)*, where a term is
    /// integer and/or variable factors (name with optional ^exp) separated by
    /// optional `*`. Variable tokens are matched longest-first against the
    /// name table, so single-letter names may be juxtaposed ("2ab").
    static LaurentPoly parse(std::string_view text, const VarNames& names);

  private:
    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void sub_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    VarSet vs_;
    TermMap terms_;
};

namespace detail {

class PolyParser {
  public:
    PolyParser(std::string_view text, const VarNames& names) : text_(text), names_(names) {
        // longest names first so greedy matching is unambiguous
        table_ = names.entries();
        std::sort(table_.begin(), table_.end(), [](const auto& a, const auto& b) {
            return a.first.size() != b.first.size() ? a.first.size() > b.first.size() : a.first < b.first;
        });
    }

    LaurentPoly run() {
        LaurentPoly result = LaurentPoly::zero(names_.var_set());
        skip_ws();
        if (eof()) throw DomainError("parse: empty polynomial");
        bool first = true;
        while (!eof()) {
            int sign = 1;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw DomainError(err("expected '+' or '-' between terms"));
            }
            result += term(sign);
            skip_ws();
            first = false;
        }
        return result;
    }

  private:
    LaurentPoly term(int sign) {
        skip_ws();
        Int coeff = sign;
        Monomial mono;
        bool any = false, star = false; // star: a '*' still waits for its factor
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == '+' || c == '-') break;
            if (c == '*') {
                if (!any || star) throw DomainError(err("unexpected '*'"));
                star = true;
                ++pos_;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= integer();
                any = true, star = false;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                auto v = variable();
                int e = 1;
                skip_ws();
                if (!eof() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = exponent();
                }
                mono = mono * Monomial::var(v, e);
                any = true, star = false;
                continue;
            }
            throw DomainError(err(std::string("unexpected character '") + c + "'"));
        }
        if (!any) throw DomainError(err("empty term"));
        if (star) throw DomainError(err("dangling '*'"));
        return LaurentPoly::monomial(names_.var_set(), mono, coeff);
    }

    Int integer() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    int exponent() {
        bool neg = false;
        if (!eof() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos_;
        }
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) throw DomainError(err("expected exponent"));
        long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000) throw DomainError(err("exponent too large"));
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    VarId variable() {
        for (const auto& [nm, id] : table_) {
            if (text_.substr(pos_).starts_with(nm)) {
                pos_ += nm.size();
                return id;
            }
        }
        throw DomainError(err("unknown variable name"));
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    std::string err(const std::string& msg) const {
        return "parse: " + msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"";
    }

    std::string_view text_;
    const VarNames& names_;
    std::vector<std::pair<std::string, VarId>> table_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline LaurentPoly LaurentPoly::parse(std::string_view text, const VarNames& names) {
    return detail::PolyParser(text, names).run();
}

/// 1 + y + y^2 + ... + y^upto (upto >= 0).
inline LaurentPoly geometric_sum(const LaurentPoly& y, int upto) {
    if (upto < 0) throw DomainError("geometric_sum: negative bound");
    LaurentPoly acc = LaurentPoly::one(y.var_set());
    for (int j = 0; j < upto; ++j) acc = acc * y + LaurentPoly::one(y.var_set());
    return acc;
}

} // namespace frieze
