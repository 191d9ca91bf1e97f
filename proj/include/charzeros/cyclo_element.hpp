#pragma once

/**
 * @file cyclo_element.hpp
 * @brief Exact arithmetic in Z[z]/(Phi_N(z)), the ring of integers of the N-th cyclotomic field.
 *
 * Used to evaluate integer Laurent polynomials at roots of unity with an
 * exact zero test, and to carry character values of finite groups.
 */

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "laurent.hpp"

namespace charzeros {

namespace detail {

/// Dense coefficients of Phi_N, shared between elements and cached per process.
inline std::shared_ptr<const std::vector<Integer>> cyclotomic_dense(std::int64_t modulus) {
    static std::mutex lock;
    static std::map<std::int64_t, std::shared_ptr<const std::vector<Integer>>> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto& slot = cache[modulus];
    if (!slot) slot = std::make_shared<const std::vector<Integer>>(cyclotomic(modulus).dense());
    return slot;
}

}  // namespace detail

class CycloElement {
public:
    /// The zero element of Z[z]/(Phi_N).
    explicit CycloElement(std::int64_t modulus) : modulus_(modulus) {
        if (modulus < 1) throw DomainError("CycloElement: modulus must be positive");
        phi_ = detail::cyclotomic_dense(modulus);
        residue_.assign(static_cast<std::size_t>(degree()), Integer(0));
    }

    static CycloElement from_integer(std::int64_t modulus, const Integer& c) {
        CycloElement e(modulus);
        e.residue_[0] = c;
        return e;
    }

    /// z^k.
    static CycloElement root_power(std::int64_t modulus, std::int64_t k) {
        return from_laurent(modulus, LaurentPoly::monomial(1, k));
    }

    /// p(z) for a Laurent polynomial p, exponents read modulo N.
    static CycloElement from_laurent(std::int64_t modulus, const LaurentPoly& p) {
        CycloElement e(modulus);
        std::vector<Integer> folded(static_cast<std::size_t>(modulus));
        for (const auto& t : p.terms()) folded[static_cast<std::size_t>(nt::mod(t.exp, modulus))] += t.coeff;
        e.assign_reduced(std::move(folded));
        return e;
    }

    std::int64_t modulus() const noexcept { return modulus_; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(phi_->size()) - 1; }
    const std::vector<Integer>& residue() const noexcept { return residue_; }

    bool is_zero() const {
        for (const auto& c : residue_)
            if (c != 0) return false;
        return true;
    }

    /// True when the element lies in Z (residue of degree 0).
    bool is_integer() const {
        for (std::size_t k = 1; k < residue_.size(); ++k)
            if (residue_[k] != 0) return false;
        return true;
    }

    const Integer& integer_part() const { return residue_[0]; }

    LaurentPoly to_laurent() const { return LaurentPoly::from_dense(0, residue_); }

    /// Image under z -> z^j, gcd(j, N) = 1.
    CycloElement galois(std::int64_t j) const {
        if (std::gcd(nt::mod(j, modulus_), modulus_) != 1 && modulus_ > 1)
            throw DomainError("galois: exponent not coprime to modulus");
        return from_laurent(modulus_, to_laurent().substituted_power(j == 0 ? modulus_ : j));
    }

    /// Complex conjugate, z -> z^-1.
    CycloElement conjugate() const { return galois(-1); }

    bool is_real() const { return conjugate() == *this; }

    /// Floating-point value of the real part (embedding z = exp(2 pi i / N)).
    double real_approx() const {
        long double acc = 0;
        for (std::size_t k = 0; k < residue_.size(); ++k)
            if (residue_[k] != 0)
                acc += static_cast<long double>(residue_[k].get_d()) *
                       std::cos(2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                static_cast<long double>(modulus_));
        return static_cast<double>(acc);
    }

    friend CycloElement operator+(const CycloElement& a, const CycloElement& b) {
        a.check_same(b);
        CycloElement r = a;
        for (std::size_t k = 0; k < r.residue_.size(); ++k) r.residue_[k] += b.residue_[k];
        return r;
    }

    friend CycloElement operator-(const CycloElement& a, const CycloElement& b) {
        a.check_same(b);
        CycloElement r = a;
        for (std::size_t k = 0; k < r.residue_.size(); ++k) r.residue_[k] -= b.residue_[k];
        return r;
    }

    friend CycloElement operator*(const CycloElement& a, const CycloElement& b) {
        a.check_same(b);
        std::vector<Integer> prod(a.residue_.size() + b.residue_.size());
        for (std::size_t i = 0; i < a.residue_.size(); ++i) {
            if (a.residue_[i] == 0) continue;
            for (std::size_t j = 0; j < b.residue_.size(); ++j)
                mpz_addmul(prod[i + j].get_mpz_t(), a.residue_[i].get_mpz_t(), b.residue_[j].get_mpz_t());
        }
        CycloElement r(a);
        r.assign_reduced(std::move(prod));
        return r;
    }

    friend CycloElement operator*(const Integer& c, const CycloElement& a) {
        CycloElement r = a;
        for (auto& v : r.residue_) v *= c;
        return r;
    }

    friend bool operator==(const CycloElement& a, const CycloElement& b) {
        return a.modulus_ == b.modulus_ && a.residue_ == b.residue_;
    }

    std::string to_string(char var = 'z') const { return to_laurent().to_string(var); }

private:
    std::int64_t modulus_;
    std::shared_ptr<const std::vector<Integer>> phi_;  // Phi_N, lowest coefficient first, monic
    std::vector<Integer> residue_;

    void check_same(const CycloElement& o) const {
        if (o.modulus_ != modulus_) throw DomainError("CycloElement: modulus mismatch");
    }

    void assign_reduced(std::vector<Integer> v) {
        const auto& phi = *phi_;
        const std::size_t deg = phi.size() - 1;
        for (std::size_t k = v.size(); k-- > deg;) {
            if (v[k] == 0) continue;
            const Integer c = v[k];
            for (std::size_t j = 0; j <= deg; ++j)
                if (phi[j] != 0) mpz_submul(v[k - deg + j].get_mpz_t(), c.get_mpz_t(), phi[j].get_mpz_t());
        }
        v.resize(deg);
        if (v.empty()) v.emplace_back(0);
        residue_ = std::move(v);
    }
};

/// h(z^a, z^b) in Z[z]/(Phi_N), z a primitive N-th root of unity.
inline CycloElement eval_at_roots(const BiLaurentPoly& h, std::int64_t modulus, std::int64_t a, std::int64_t b) {
    if (modulus < 1) throw DomainError("eval_at_roots: order must be positive");
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(h.size());
    for (const auto& [k, c] : h.coeffs()) {
        const __int128 e = static_cast<__int128>(nt::mod(k.first, modulus)) * nt::mod(a, modulus) +
                           static_cast<__int128>(nt::mod(k.second, modulus)) * nt::mod(b, modulus);
        terms.push_back({static_cast<Exponent>(e % modulus), c});
    }
    return CycloElement::from_laurent(modulus, LaurentPoly::from_terms(std::move(terms)));
}

}  // namespace charzeros
