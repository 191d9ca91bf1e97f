#pragma once

/**
 * @file laurent.hpp
 * @brief Sparse Laurent polynomials in one and two variables over the integers.
 *
 * Both types keep their terms normalized: no stored coefficient is zero and
 * terms are ordered by exponent.  Coefficients are GMP integers, so every
 * ring operation is exact at any size.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace charzeros {

using Exponent = std::int64_t;

/// Element of Z[t, 1/t].
class LaurentPoly {
public:
    struct Term {
        Exponent exp;
        Integer coeff;
        bool operator==(const Term&) const = default;
    };

    LaurentPoly() = default;

    static LaurentPoly constant(const Integer& c) { return monomial(c, 0); }

    static LaurentPoly monomial(const Integer& c, Exponent e) {
        LaurentPoly p;
        if (c != 0) p.terms_.push_back({e, c});
        return p;
    }

    /// Sums duplicate exponents and drops zeros; input order is irrelevant.
    static LaurentPoly from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
        LaurentPoly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
                p.terms_.back().coeff += t.coeff;
            else
                p.terms_.push_back(std::move(t));
        }
        p.drop_zeros();
        return p;
    }

    /// coeffs[k] is the coefficient of t^(low + k).
    static LaurentPoly from_dense(Exponent low, const std::vector<Integer>& coeffs) {
        LaurentPoly p;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != 0) p.terms_.push_back({low + static_cast<Exponent>(k), coeffs[k]});
        return p;
    }

    /// t^k - 1.
    static LaurentPoly binomial(Exponent k) {
        return from_terms({{k, Integer(1)}, {0, Integer(-1)}});
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Lowest and highest exponent; both 0 for the zero polynomial.
    Exponent min_exponent() const noexcept { return terms_.empty() ? 0 : terms_.front().exp; }
    Exponent max_exponent() const noexcept { return terms_.empty() ? 0 : terms_.back().exp; }

    /// max_exponent - min_exponent: the degree once the lowest monomial is factored out.
    Exponent span() const noexcept { return max_exponent() - min_exponent(); }

    Integer coeff(Exponent e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, Exponent x) { return t.exp < x; });
        return (it != terms_.end() && it->exp == e) ? it->coeff : Integer(0);
    }

    Integer leading_coeff() const { return terms_.empty() ? Integer(0) : terms_.back().coeff; }
    Integer trailing_coeff() const { return terms_.empty() ? Integer(0) : terms_.front().coeff; }

    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
    /// +-t^k for some k.
    bool is_unit() const { return is_monomial() && abs(terms_[0].coeff) == 1; }

    bool only_even_exponents() const noexcept {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp % 2 == 0; });
    }

    Integer coefficient_sum() const {
        Integer s = 0;
        for (const auto& t : terms_) s += t.coeff;
        return s;
    }

    /// Value at a nonzero rational point.
    Rational evaluate(const Rational& x) const {
        if (x == 0 && !terms_.empty() && terms_.front().exp < 0)
            throw DomainError("evaluate: negative power at zero");
        Rational acc = 0;
        for (const auto& t : terms_) acc += Rational(t.coeff) * rational_power(x, t.exp);
        return acc;
    }

    /// Multiply by t^k.
    LaurentPoly shifted(Exponent k) const {
        LaurentPoly p = *this;
        for (auto& t : p.terms_) t.exp += k;
        return p;
    }

    /// Substitute t -> t^k.  k = 0 collapses to the coefficient sum.
    LaurentPoly substituted_power(Exponent k) const {
        if (k == 0) return constant(coefficient_sum());
        std::vector<Term> out = terms_;
        for (auto& t : out) t.exp *= k;
        return from_terms(std::move(out));
    }

    /// Substitute t -> -t.
    LaurentPoly negated_variable() const {
        LaurentPoly p = *this;
        for (auto& t : p.terms_)
            if (t.exp % 2 != 0) t.coeff = -t.coeff;
        return p;
    }

    /// Substitute t -> 1/t.
    LaurentPoly reflected() const { return substituted_power(-1); }

    /// Exponents divided by 2; requires only_even_exponents().
    LaurentPoly halved_exponents() const {
        if (!only_even_exponents()) throw DomainError("halved_exponents: odd exponent present");
        LaurentPoly p = *this;
        for (auto& t : p.terms_) t.exp /= 2;
        return p;
    }

    /// Multiply by (t^k - 1), k > 0, in linear time.
    LaurentPoly times_binomial(Exponent k) const { return shifted(k) - *this; }

    /// Exact quotient by (t^k - 1), k > 0, or nullopt when it does not divide.
    std::optional<LaurentPoly> divided_by_binomial(Exponent k) const {
        if (k <= 0) throw std::invalid_argument("divided_by_binomial: k must be positive");
        if (is_zero()) return LaurentPoly{};
        const Exponent low = min_exponent();
        const Exponent n = span() + 1;
        if (n <= k) return std::nullopt;
        std::vector<Integer> f = dense();
        // f = q * (t^k - 1) with q supported on [low, high - k]:
        // f_e = q_{e-k} - q_e  =>  q_{e-k} = f_e + q_e, walking down from the top.
        std::vector<Integer> q(static_cast<std::size_t>(n - k));
        for (Exponent e = n - 1; e >= k; --e) {
            const Exponent qi = e - k;
            q[qi] = f[e];
            if (e < n - k) q[qi] += q[e];
        }
        for (Exponent e = 0; e < k; ++e) {
            Integer expect = (e < n - k) ? Integer(-q[e]) : Integer(0);
            if (f[e] != expect) return std::nullopt;
        }
        return from_dense(low, q);
    }

    /// Exact quotient *this / d, or nullopt when d does not divide in Z[t, 1/t].
    std::optional<LaurentPoly> exact_quotient(const LaurentPoly& d) const {
        if (d.is_zero()) throw ZeroPolynomial("exact_quotient: division by zero polynomial");
        if (is_zero()) return LaurentPoly{};
        if (d.is_monomial()) {
            const Integer& c = d.terms_[0].coeff;
            LaurentPoly q = shifted(-d.terms_[0].exp);
            for (auto& t : q.terms_) {
                if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
                mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
            }
            return q;
        }
        const Exponent ds = d.span();
        if (span() < ds) return std::nullopt;
        std::vector<Integer> r = dense();
        const std::vector<Integer> dd = d.dense();
        const Integer& lc = dd.back();
        const Exponent qn = span() - ds + 1;
        std::vector<Integer> q(static_cast<std::size_t>(qn));
        Integer c;
        for (Exponent i = qn - 1; i >= 0; --i) {
            Integer& top = r[i + ds];
            if (top == 0) continue;
            if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
            mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
            for (Exponent j = 0; j <= ds; ++j)
                if (dd[j] != 0) mpz_submul(r[i + j].get_mpz_t(), c.get_mpz_t(), dd[j].get_mpz_t());
            q[i] = c;
        }
        for (const auto& v : r)
            if (v != 0) return std::nullopt;
        return from_dense(min_exponent() - d.min_exponent(), q);
    }

    /// Dense coefficient vector starting at min_exponent().
    std::vector<Integer> dense() const {
        std::vector<Integer> out(static_cast<std::size_t>(terms_.empty() ? 0 : span() + 1));
        for (const auto& t : terms_) out[t.exp - min_exponent()] = t.coeff;
        return out;
    }

    LaurentPoly operator-() const {
        LaurentPoly p = *this;
        for (auto& t : p.terms_) t.coeff = -t.coeff;
        return p;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_monomial() || b.is_monomial()) {
            const LaurentPoly& m = a.is_monomial() ? a : b;
            const LaurentPoly& o = a.is_monomial() ? b : a;
            LaurentPoly p = o.shifted(m.terms_[0].exp);
            for (auto& t : p.terms_) t.coeff *= m.terms_[0].coeff;
            return p;
        }
        const Exponent width = a.span() + b.span() + 1;
        const auto pairs = static_cast<Exponent>(a.size() * b.size());
        if (width <= 8 * pairs + 64) {
            std::vector<Integer> acc(static_cast<std::size_t>(width));
            const Exponent base = a.min_exponent() + b.min_exponent();
            for (const auto& x : a.terms_)
                for (const auto& y : b.terms_)
                    mpz_addmul(acc[x.exp + y.exp - base].get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
            return from_dense(base, acc);
        }
        std::vector<Term> out;
        out.reserve(static_cast<std::size_t>(pairs));
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) out.push_back({x.exp + y.exp, x.coeff * y.coeff});
        return from_terms(std::move(out));
    }

    friend LaurentPoly operator*(const Integer& c, const LaurentPoly& p) {
        if (c == 0) return {};
        LaurentPoly r = p;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Exponents descending, e.g. "t^2 + 2 + t^-2".
    std::string to_string(char var = 't') const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            write_sign(os, it->coeff, first);
            Integer mag = abs(it->coeff);
            if (it->exp == 0) {
                os << mag;
            } else {
                if (mag != 1) os << mag << '*';
                os << var;
                if (it->exp != 1) os << '^' << it->exp;
            }
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

    static void write_sign(std::ostream& os, const Integer& c, bool first) {
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
    }

private:
    std::vector<Term> terms_;

    void drop_zeros() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff == 0; }),
                     terms_.end());
    }

    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
        LaurentPoly r;
        r.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->exp < i->exp) {
                r.terms_.push_back({j->exp, subtract ? Integer(-j->coeff) : j->coeff});
                ++j;
            } else {
                Integer c = subtract ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
                if (c != 0) r.terms_.push_back({i->exp, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }
};

/// Substitution v -> sign * v^power applied to one variable.
struct VariableMap {
    int sign = 1;
    Exponent power = 1;
};

/// Element of Z[x, 1/x, y, 1/y].
class BiLaurentPoly {
public:
    using Key = std::pair<Exponent, Exponent>;  // (x exponent, y exponent)

    BiLaurentPoly() = default;

    static BiLaurentPoly constant(const Integer& c) { return monomial(c, 0, 0); }

    static BiLaurentPoly monomial(const Integer& c, Exponent i, Exponent j) {
        BiLaurentPoly p;
        if (c != 0) p.coeffs_[{i, j}] = c;
        return p;
    }

    static BiLaurentPoly x() { return monomial(1, 1, 0); }
    static BiLaurentPoly y() { return monomial(1, 0, 1); }

    /// Embed a univariate polynomial as a polynomial in x (or y).
    static BiLaurentPoly from_univariate(const LaurentPoly& p, bool in_y = false) {
        BiLaurentPoly r;
        for (const auto& t : p.terms()) r.coeffs_[in_y ? Key{0, t.exp} : Key{t.exp, 0}] = t.coeff;
        return r;
    }

    const std::map<Key, Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_constant() const noexcept {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == Key{0, 0});
    }

    Integer coeff(Exponent i, Exponent j) const {
        auto it = coeffs_.find({i, j});
        return it == coeffs_.end() ? Integer(0) : it->second;
    }

    Exponent min_x() const { return extreme(true, true); }
    Exponent max_x() const { return extreme(true, false); }
    Exponent min_y() const { return extreme(false, true); }
    Exponent max_y() const { return extreme(false, false); }

    Integer coefficient_sum() const {
        Integer s = 0;
        for (const auto& [k, c] : coeffs_) s += c;
        return s;
    }

    BiLaurentPoly shifted(Exponent dx, Exponent dy) const {
        BiLaurentPoly r;
        for (const auto& [k, c] : coeffs_) r.coeffs_[{k.first + dx, k.second + dy}] = c;
        return r;
    }

    /// Exchange the roles of x and y.
    BiLaurentPoly swapped() const {
        BiLaurentPoly r;
        for (const auto& [k, c] : coeffs_) r.coeffs_[{k.second, k.first}] = c;
        return r;
    }

    /// x -> sx * x^px, y -> sy * y^py.  A ring homomorphism of Z[x^+-1, y^+-1].
    BiLaurentPoly substitute(VariableMap xm, VariableMap ym) const {
        if ((xm.sign != 1 && xm.sign != -1) || (ym.sign != 1 && ym.sign != -1))
            throw std::invalid_argument("substitute: sign must be +1 or -1");
        BiLaurentPoly r;
        for (const auto& [k, c] : coeffs_) {
            Integer v = c;
            if (xm.sign < 0 && k.first % 2 != 0) v = -v;
            if (ym.sign < 0 && k.second % 2 != 0) v = -v;
            r.add_term({k.first * xm.power, k.second * ym.power}, v);
        }
        return r;
    }

    /// x -> t^a, y -> t^b.
    LaurentPoly univariate_restrict(Exponent a, Exponent b) const {
        std::vector<LaurentPoly::Term> out;
        out.reserve(coeffs_.size());
        for (const auto& [k, c] : coeffs_) out.push_back({k.first * a + k.second * b, c});
        return LaurentPoly::from_terms(std::move(out));
    }

    /// Coefficients with respect to x: result[i] is the y-polynomial multiplying x^(min_x + i).
    std::vector<LaurentPoly> coefficients_in_x() const {
        std::vector<std::vector<LaurentPoly::Term>> rows;
        if (is_zero()) return {};
        const Exponent lo = min_x();
        rows.resize(static_cast<std::size_t>(max_x() - lo + 1));
        for (const auto& [k, c] : coeffs_) rows[k.first - lo].push_back({k.second, c});
        std::vector<LaurentPoly> out;
        out.reserve(rows.size());
        for (auto& r : rows) out.push_back(LaurentPoly::from_terms(std::move(r)));
        return out;
    }

    BiLaurentPoly operator-() const {
        BiLaurentPoly r = *this;
        for (auto& [k, c] : r.coeffs_) c = -c;
        return r;
    }

    friend BiLaurentPoly operator+(const BiLaurentPoly& a, const BiLaurentPoly& b) {
        BiLaurentPoly r = a;
        for (const auto& [k, c] : b.coeffs_) r.add_term(k, c);
        return r;
    }

    friend BiLaurentPoly operator-(const BiLaurentPoly& a, const BiLaurentPoly& b) { return a + (-b); }

    friend BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b) {
        BiLaurentPoly r;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }

    friend BiLaurentPoly operator*(const Integer& s, const BiLaurentPoly& p) {
        BiLaurentPoly r;
        for (const auto& [k, c] : p.coeffs_) r.add_term(k, s * c);
        return r;
    }

    BiLaurentPoly& operator+=(const BiLaurentPoly& o) { return *this = *this + o; }
    BiLaurentPoly& operator*=(const BiLaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const BiLaurentPoly& a, const BiLaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Terms ordered by descending y exponent, then descending x exponent: "y^4*x^6 + y^3*x^6 + ...".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::vector<std::pair<Key, Integer>> ts(coeffs_.begin(), coeffs_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            if (a.first.second != b.first.second) return a.first.second > b.first.second;
            return a.first.first > b.first.first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : ts) {
            LaurentPoly::write_sign(os, c, first);
            first = false;
            Integer mag = abs(c);
            std::string mono;
            auto add = [&mono](char v, Exponent e) {
                if (e == 0) return;
                if (!mono.empty()) mono += '*';
                mono += v;
                if (e != 1) mono += '^' + std::to_string(e);
            };
            add('y', k.second);
            add('x', k.first);
            if (mono.empty()) {
                os << mag;
            } else {
                if (mag != 1) os << mag << '*';
                os << mono;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BiLaurentPoly& p) { return os << p.to_string(); }

    void add_term(Key k, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

private:
    std::map<Key, Integer> coeffs_;

    Exponent extreme(bool xs, bool lowest) const {
        if (coeffs_.empty()) return 0;
        Exponent best = xs ? coeffs_.begin()->first.first : coeffs_.begin()->first.second;
        for (const auto& [k, c] : coeffs_) {
            Exponent e = xs ? k.first : k.second;
            best = lowest ? std::min(best, e) : std::max(best, e);
        }
        return best;
    }
};

}  // namespace charzeros
