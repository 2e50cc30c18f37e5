#ifndef REESKIT_MONOMIAL_HPP
#define REESKIT_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "reeskit/errors.hpp"

namespace reeskit {

/// (t-degree, X-degree) of a bihomogeneous polynomial. Only componentwise
/// comparison is meaningful.
struct Bidegree {
    int t_deg = 0;
    int x_deg = 0;

    bool operator==(const Bidegree&) const = default;
    int total() const { return t_deg + x_deg; }
    bool dominates(const Bidegree& o) const { return t_deg >= o.t_deg && x_deg >= o.x_deg; }

    std::string to_string() const {
        return "(" + std::to_string(t_deg) + "," + std::to_string(x_deg) + ")";
    }
};

/// Monomial in the blocks t = (t1..tn) and X = (X1..X_{n+1}).
struct Monomial {
    std::vector<int> t_exp;
    std::vector<int> x_exp;

    Monomial() = default;
    Monomial(std::vector<int> t, std::vector<int> x) : t_exp(std::move(t)), x_exp(std::move(x)) {}

    static Monomial unit(int n) { return Monomial(std::vector<int>(n, 0), std::vector<int>(n + 1, 0)); }

    int t_degree() const { return std::accumulate(t_exp.begin(), t_exp.end(), 0); }
    int x_degree() const { return std::accumulate(x_exp.begin(), x_exp.end(), 0); }
    Bidegree bidegree() const { return {t_degree(), x_degree()}; }

    bool operator==(const Monomial&) const = default;

    Monomial operator*(const Monomial& o) const {
        if (t_exp.size() != o.t_exp.size() || x_exp.size() != o.x_exp.size())
            throw Error(ErrorCode::ArityMismatch, "monomial variable blocks differ");
        Monomial r = *this;
        for (std::size_t k = 0; k < t_exp.size(); ++k) r.t_exp[k] += o.t_exp[k];
        for (std::size_t k = 0; k < x_exp.size(); ++k) r.x_exp[k] += o.x_exp[k];
        return r;
    }
};

/// Graded-lex with t1 > ... > tn > X1 > ... > X_{n+1}: compare total degree,
/// then the concatenated exponent vector lexicographically.
inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
    int da = a.t_degree() + a.x_degree();
    int db = b.t_degree() + b.x_degree();
    if (da != db) return da <=> db;
    for (std::size_t k = 0; k < a.t_exp.size(); ++k)
        if (a.t_exp[k] != b.t_exp[k]) return a.t_exp[k] <=> b.t_exp[k];
    for (std::size_t k = 0; k < a.x_exp.size(); ++k)
        if (a.x_exp[k] != b.x_exp[k]) return a.x_exp[k] <=> b.x_exp[k];
    return std::strong_ordering::equal;
}

/// Map comparator that puts the leading monomial first.
struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare_monomials(a, b) == std::strong_ordering::greater;
    }
};

/// All exponent vectors of the given total degree in `nvars` variables, in
/// descending lex order (first-variable-major). The basis enumeration that
/// every matrix in the project is indexed by.
inline std::vector<std::vector<int>> exponents_of_degree(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    // descending lex: first variable takes the largest share first
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

inline long long count_monomials(int nvars, int degree) {
    // C(degree + nvars - 1, nvars - 1)
    if (nvars == 0) return degree == 0 ? 1 : 0;
    long long r = 1;
    for (int k = 1; k < nvars; ++k) r = r * (degree + k) / k;
    return r;
}

/// All monomials of bidegree (i, j), leading monomial first.
inline std::vector<Monomial> monomials_of_bidegree(int n, int i, int j) {
    std::vector<Monomial> out;
    auto ts = exponents_of_degree(n, i);
    auto xs = exponents_of_degree(n + 1, j);
    out.reserve(ts.size() * xs.size());
    for (const auto& te : ts)
        for (const auto& xe : xs) out.emplace_back(te, xe);
    return out;
}

/// Exponent vectors of one degree together with their positions, so matrix
/// rows and columns can be addressed by exponent.
struct ExponentIndex {
    std::vector<std::vector<int>> exponents;
    std::map<std::vector<int>, int> position;

    ExponentIndex(int nvars, int degree) : exponents(exponents_of_degree(nvars, degree)) {
        for (int k = 0; k < static_cast<int>(exponents.size()); ++k) position[exponents[k]] = k;
    }

    int size() const { return static_cast<int>(exponents.size()); }
};

/// Same for full bidegree-(i,j) monomials.
struct MonomialIndex {
    std::vector<Monomial> monomials;
    std::map<Monomial, int, MonomialDescending> position;

    MonomialIndex(int n, int i, int j) : monomials(monomials_of_bidegree(n, i, j)) {
        for (int k = 0; k < static_cast<int>(monomials.size()); ++k) position[monomials[k]] = k;
    }

    int size() const { return static_cast<int>(monomials.size()); }
};

}  // namespace reeskit

#endif
