#pragma once

/**
 * @file rootsys.hpp
 * @brief Reduced irreducible root systems of rank <= 8 and their coroot pairings.
 *
 * Simple roots are numbered as in Bourbaki's plates.  Weights are given in
 * the fundamental-weight basis and coroots in the simple-coroot basis, so
 * <lambda, alpha^vee> is a plain dot product.  For G2, alpha_1 is the short
 * simple root and alpha_2 the long one.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace charzeros {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
    Family family;
    int rank;

    /// Throws InvalidRank unless the pair names a simple type (D3 is rejected; use A3).
    static CartanType make(Family family, int rank) {
        bool ok = false;
        switch (family) {
            case Family::A: ok = rank >= 1; break;
            case Family::B:
            case Family::C: ok = rank >= 2; break;
            case Family::D: ok = rank >= 4; break;
            case Family::E: ok = rank >= 6 && rank <= 8; break;
            case Family::F: ok = rank == 4; break;
            case Family::G: ok = rank == 2; break;
        }
        if (!ok) throw InvalidRank("no simple type " + std::string(1, letter(family)) + std::to_string(rank));
        return {family, rank};
    }

    /// "G2", "A5", "e7", ...
    static CartanType parse(std::string_view text) {
        if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
            throw InvalidRank("bad Cartan type '" + std::string(text) + "'");
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
        const std::string digits(text.substr(1));
        if (c < 'A' || c > 'G' || digits.size() > 3 ||
            !std::all_of(digits.begin(), digits.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }))
            throw InvalidRank("bad Cartan type '" + std::string(text) + "'");
        return make(static_cast<Family>(c - 'A'), std::stoi(digits));
    }

    static char letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

    std::string name() const { return std::string(1, letter(family)) + std::to_string(rank); }

    bool operator==(const CartanType&) const = default;
};

/// Highest weight in the fundamental-weight basis.
struct DominantWeight {
    std::vector<std::int64_t> coords;

    explicit DominantWeight(std::vector<std::int64_t> c) : coords(std::move(c)) {
        for (auto v : coords)
            if (v < 0) throw DomainError("DominantWeight: coordinates must be nonnegative");
    }

    static DominantWeight zero(int rank) { return DominantWeight(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)); }

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](auto v) { return v == 0; });
    }

    bool operator==(const DominantWeight&) const = default;
};

using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

/// cartan[i][j] = <alpha_i^vee, alpha_j>.
inline IntMatrix cartan_matrix(CartanType t) {
    const int n = t.rank;
    IntMatrix a(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&a](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 1][n - 2] = -2;  // alpha_n short
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -2;  // alpha_n long
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case Family::E:
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Family::F:
            link(0, 1);
            link(2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
            break;
        case Family::G:
            a[0][1] = -3;
            a[1][0] = -1;
            break;
    }
    return a;
}

/// Positive roots, in the simple-root basis, of the root system with Cartan matrix `a`.
/// Generated by closure under root strings, level by level in height.
inline std::vector<IntVec> positive_roots_from_cartan(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::set<IntVec> known;
    std::vector<IntVec> roots, level;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        level.push_back(e);
        known.insert(e);
    }
    while (!level.empty()) {
        roots.insert(roots.end(), level.begin(), level.end());
        std::vector<IntVec> next;
        for (const auto& beta : level) {
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t pairing = 0;  // <beta, alpha_i^vee>
                for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * a[i][j];
                std::int64_t p = 0;
                IntVec down = beta;
                while (down[i] > 0) {
                    --down[i];
                    if (!known.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    IntVec up = beta;
                    ++up[i];
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return roots;
}

class RootSystem {
public:
    static RootSystem build(CartanType type) {
        RootSystem rs;
        rs.type_ = type;
        rs.cartan_ = cartan_matrix(type);
        rs.positive_roots_ = positive_roots_from_cartan(rs.cartan_);
        IntMatrix dual(rs.cartan_.size(), IntVec(rs.cartan_.size()));
        for (std::size_t i = 0; i < dual.size(); ++i)
            for (std::size_t j = 0; j < dual.size(); ++j) dual[i][j] = rs.cartan_[j][i];
        rs.positive_coroots_ = positive_roots_from_cartan(dual);
        for (const auto& c : rs.positive_coroots_)
            rs.rho_pairings_.push_back(std::accumulate(c.begin(), c.end(), std::int64_t{0}));
        rs.highest_coroot_index_ = static_cast<std::size_t>(
            std::max_element(rs.rho_pairings_.begin(), rs.rho_pairings_.end()) - rs.rho_pairings_.begin());
        return rs;
    }

    const CartanType& type() const noexcept { return type_; }
    int rank() const noexcept { return type_.rank; }
    const IntMatrix& cartan() const noexcept { return cartan_; }
    std::size_t num_positive() const noexcept { return positive_coroots_.size(); }
    const std::vector<IntVec>& positive_roots() const noexcept { return positive_roots_; }
    const std::vector<IntVec>& positive_coroots() const noexcept { return positive_coroots_; }
    /// <rho, alpha^vee> = height of alpha^vee, per positive coroot.
    const IntVec& rho_pairings() const noexcept { return rho_pairings_; }
    std::size_t highest_coroot_index() const noexcept { return highest_coroot_index_; }
    const IntVec& highest_coroot() const { return positive_coroots_[highest_coroot_index_]; }

    /// <lambda, alpha^vee> for the coroot at `index`.
    std::int64_t pairing(const DominantWeight& lambda, std::size_t index) const {
        if (index >= positive_coroots_.size()) throw IndexOutOfRange("pairing: coroot index out of range");
        check_weight(lambda);
        const auto& c = positive_coroots_[index];
        std::int64_t s = 0;
        for (std::size_t i = 0; i < c.size(); ++i) s += lambda.coords[i] * c[i];
        return s;
    }

    /// <lambda + rho, alpha^vee> for every positive coroot.
    IntVec shifted_pairings(const DominantWeight& lambda) const {
        IntVec out;
        for (std::size_t k = 0; k < positive_coroots_.size(); ++k) out.push_back(pairing(lambda, k) + rho_pairings_[k]);
        return out;
    }

    /// Dimension of the irreducible representation with highest weight lambda.
    Integer weyl_dim(const DominantWeight& lambda) const {
        Integer num = 1, den = 1;
        const IntVec shifted = shifted_pairings(lambda);
        for (std::size_t k = 0; k < shifted.size(); ++k) {
            num *= shifted[k];
            den *= rho_pairings_[k];
        }
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw NonIntegralDimension("weyl_dim: product ratio is not an integer");
        Integer q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
    }

    /// Sum of positive coroots (= 2 rho^vee) in the simple-coroot basis.
    IntVec two_rho_check() const {
        IntVec s(static_cast<std::size_t>(rank()), 0);
        for (const auto& c : positive_coroots_)
            for (std::size_t i = 0; i < c.size(); ++i) s[i] += c[i];
        return s;
    }

    /// <lambda, 2 rho^vee>.
    std::int64_t two_rho_check_pairing(const DominantWeight& lambda) const {
        check_weight(lambda);
        const IntVec s = two_rho_check();
        std::int64_t v = 0;
        for (std::size_t i = 0; i < s.size(); ++i) v += lambda.coords[i] * s[i];
        return v;
    }

    /// True iff rho^vee lies in the coroot lattice, i.e. f(-1) = 1 for f = 2 rho^vee.
    bool epsilon_trivial() const {
        const IntVec s = two_rho_check();
        return std::all_of(s.begin(), s.end(), [](auto v) { return v % 2 == 0; });
    }

    /// The highest root, written in the fundamental-weight basis.
    DominantWeight adjoint_weight() const {
        const auto& theta = *std::max_element(
            positive_roots_.begin(), positive_roots_.end(), [](const IntVec& a, const IntVec& b) {
                return std::accumulate(a.begin(), a.end(), std::int64_t{0}) <
                       std::accumulate(b.begin(), b.end(), std::int64_t{0});
            });
        IntVec coords(static_cast<std::size_t>(rank()), 0);
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = 0; j < coords.size(); ++j) coords[i] += theta[j] * cartan_[i][j];
        return DominantWeight(coords);
    }

    std::int64_t adjoint_dimension() const { return rank() + 2 * static_cast<std::int64_t>(num_positive()); }

    void check_weight(const DominantWeight& lambda) const {
        if (static_cast<int>(lambda.coords.size()) != rank())
            throw DomainError("weight has " + std::to_string(lambda.coords.size()) + " coordinates, rank is " +
                              std::to_string(rank()));
    }

private:
    RootSystem() = default;

    CartanType type_{Family::A, 1};
    IntMatrix cartan_;
    std::vector<IntVec> positive_roots_;
    std::vector<IntVec> positive_coroots_;
    IntVec rho_pairings_;
    std::size_t highest_coroot_index_ = 0;
};

/// Every simple type of rank <= max_rank, in the order A, B, C, D, E, F, G.
inline std::vector<CartanType> all_simple_types(int max_rank = 8) {
    std::vector<CartanType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
    if (max_rank >= 4) out.push_back({Family::F, 4});
    if (max_rank >= 2) out.push_back({Family::G, 2});
    return out;
}

}  // namespace charzeros
