#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charzeros {

using Integer = mpz_class;
using Rational = mpq_class;

/// Small-integer number theory used by the cyclotomic machinery.
namespace nt {

/// Prime factorization by trial division, as (prime, exponent) pairs in ascending order.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::int64_t totient(std::int64_t n) {
    std::int64_t result = n;
    for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

inline int mobius(std::int64_t n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// v_p(n) for n >= 1.
inline int valuation(std::int64_t n, std::int64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

/// Canonical residue of a modulo n in [0, n).
inline std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

/// Multiplicative order of a in Z/n, where the element is zeta_n^a (so the order is n / gcd(a, n)).
inline std::int64_t root_order(std::int64_t a, std::int64_t n) { return n / std::gcd(mod(a, n), n); }

/// Upper bound B such that totient(n) > degree for every n > B.
///
/// Uses the explicit lower bound phi(n) > n / (e^gamma log log n + 2.50637 / log log n), n >= 3,
/// which is increasing in n from n = 30 on.
inline std::int64_t totient_search_bound(std::int64_t degree) {
    if (degree < 1) return 2;
    auto lower = [](double n) {
        const double ll = std::log(std::log(n));
        return n / (1.7810724179901979 * ll + 2.50637 / ll);
    };
    std::int64_t hi = 64;
    while (lower(static_cast<double>(hi)) <= static_cast<double>(degree) + 1.0) hi *= 2;
    std::int64_t lo = hi / 2;
    while (lo + 1 < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (lower(static_cast<double>(mid)) > static_cast<double>(degree) + 1.0)
            hi = mid;
        else
            lo = mid;
    }
    return std::max<std::int64_t>(hi, 30);
}

/// totient(0..n) by sieve; entry 0 is unused.
inline std::vector<std::int64_t> totient_table(std::int64_t n) {
    std::vector<std::int64_t> phi(static_cast<std::size_t>(n + 1));
    std::iota(phi.begin(), phi.end(), std::int64_t{0});
    for (std::int64_t p = 2; p <= n; ++p) {
        if (phi[p] != p) continue;
        for (std::int64_t k = p; k <= n; k += p) phi[k] -= phi[k] / p;
    }
    return phi;
}

}  // namespace nt

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// x^e for nonzero x (any sign of e) or e >= 0.
inline Rational rational_power(const Rational& x, std::int64_t e) {
    Rational base = e < 0 ? Rational(1) / x : x;
    auto n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    out.canonicalize();
    return out;
}

}  // namespace charzeros
