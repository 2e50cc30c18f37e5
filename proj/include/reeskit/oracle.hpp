#ifndef REESKIT_ORACLE_HPP
#define REESKIT_ORACLE_HPP

#include <map>
#include <string>
#include <vector>

#include "reeskit/errors.hpp"
#include "reeskit/exactla.hpp"
#include "reeskit/multipoly.hpp"
#include "reeskit/parametrization.hpp"
#include "reeskit/reesgen.hpp"
#include "reeskit/syzygy.hpp"

namespace reeskit {

struct SliceRecord {
    Bidegree bidegree;
    int kernel_dim = 0;
    int ideal_dim = 0;
    bool ok = false;
};

struct MinimalityRecord {
    std::string name;
    Bidegree bidegree;
    bool necessary = false;
};

struct VerificationReport {
    std::string verdict;  // "Certified" or "Failed"
    std::vector<SliceRecord> slices;
    std::vector<MinimalityRecord> minimality;
    std::vector<std::string> notes;

    bool certified() const { return verdict == "Certified"; }
};

namespace detail {

inline void check_cap(int n, int d, int i, int j, int monomial_cap) {
    long long cols = count_monomials(n, i) * count_monomials(n + 1, j);
    long long rows = count_monomials(n, i + d * j);
    if (cols > monomial_cap || rows > monomial_cap)
        throw Error(ErrorCode::ResourceLimit,
                    "slice " + Bidegree{i, j}.to_string() + " needs " + std::to_string(cols) +
                        " monomials against " + std::to_string(rows) +
                        " t-monomials, beyond the cap of " + std::to_string(monomial_cap));
}

/// Coefficient rows of all monomial multiples m * g landing in bidegree
/// (i, j), for every generator in gens.
template <class K>
std::vector<std::vector<K>> multiple_rows(const std::vector<MultiPoly<K>>& gens, int i, int j,
                                          const MonomialIndex& idx) {
    std::vector<std::vector<K>> rows;
    for (const auto& g : gens) {
        Bidegree b = g.bidegree();
        if (g.is_zero() || b.t_deg > i || b.x_deg > j) continue;
        for (const auto& m : monomials_of_bidegree(g.n(), i - b.t_deg, j - b.x_deg))
            rows.push_back(coefficient_row(monomial_multiple(g, m), idx));
    }
    return rows;
}

template <class K>
int rank_of_rows(const std::vector<std::vector<K>>& rows, int cols, typename K::Context ctx) {
    if (rows.empty()) return 0;
    ExactMatrix<K> m(static_cast<int>(rows.size()), cols, ctx);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
    return rank(m);
}

}  // namespace detail

/// Basis of the bidegree-(i, j) slice of the kernel, computed from scratch by
/// expanding every bidegree-(i, j) monomial at X -> u and solving the linear
/// system. This is the slow path the constructions are checked against.
template <class K>
KernelSlice<K> kernel_slice(const Parametrization<K>& p, int i, int j, int monomial_cap = 20000) {
    if (i < 0 || j < 0) throw Error(ErrorCode::PreconditionViolation, "negative bidegree");
    const int n = p.n;
    auto ctx = p.u[0].context();
    detail::check_cap(n, p.d, i, j, monomial_cap);

    MonomialIndex cols(n, i, j);
    ExponentIndex rows(n, i + p.d * j);
    ExactMatrix<K> m(rows.size(), cols.size(), ctx);

    std::map<std::vector<int>, MultiPoly<K>> power_cache;
    for (int c = 0; c < cols.size(); ++c) {
        const Monomial& mono = cols.monomials[static_cast<std::size_t>(c)];
        auto it = power_cache.find(mono.x_exp);
        if (it == power_cache.end()) {
            MultiPoly<K> prod = MultiPoly<K>::constant(n, K::one(ctx), ctx);
            for (std::size_t k = 0; k < mono.x_exp.size(); ++k)
                for (int e = 0; e < mono.x_exp[k]; ++e) prod *= p.u[k];
            it = power_cache.emplace(mono.x_exp, std::move(prod)).first;
        }
        for (const auto& [tm, coeff] : it->second.terms()) {
            std::vector<int> shifted = tm.t_exp;
            for (std::size_t k = 0; k < shifted.size(); ++k)
                shifted[k] += mono.t_exp[k];
            auto pos = rows.position.find(shifted);
            if (pos == rows.position.end())
                throw Error(ErrorCode::InternalError, "expanded term of unexpected degree");
            K& cell = m.at(pos->second, c);
            cell = cell + coeff;
        }
    }

    KernelSlice<K> slice;
    slice.bidegree = {i, j};
    for (const auto& v : kernel_basis(m)) {
        MultiPoly<K> f(n, ctx);
        for (int c = 0; c < cols.size(); ++c)
            if (!v[static_cast<std::size_t>(c)].is_zero())
                f.add_term(cols.monomials[static_cast<std::size_t>(c)], v[static_cast<std::size_t>(c)]);
        slice.basis.push_back(std::move(f));
    }
    return slice;
}

/// Dimension of the bidegree-(i, j) slice of the ideal generated by gens.
template <class K>
int ideal_slice_dim(const std::vector<MultiPoly<K>>& gens, int i, int j) {
    if (gens.empty()) return 0;
    const int n = gens[0].n();
    auto ctx = gens[0].context();
    MonomialIndex idx(n, i, j);
    return detail::rank_of_rows(detail::multiple_rows(gens, i, j, idx), idx.size(), ctx);
}

template <class K>
int ideal_slice_dim(const GeneratorSet<K>& gs, int i, int j) {
    std::vector<MultiPoly<K>> polys;
    for (const auto& g : gs.generators) polys.push_back(g.poly);
    return ideal_slice_dim(polys, i, j);
}

/// Compares kernel and ideal slice dimensions for every bidegree with
/// i + j <= bound and j >= 1. Certified means the generators span the kernel
/// in that range.
template <class K>
VerificationReport verify_generation(const Parametrization<K>& p, const std::vector<MultiPoly<K>>& gens,
                                     int bound, int monomial_cap = 20000) {
    if (bound < 1) throw Error(ErrorCode::PreconditionViolation, "bound must be at least 1");
    VerificationReport report;
    bool all_ok = true;
    for (int total = 1; total <= bound; ++total) {
        for (int i = 0; i < total; ++i) {
            int j = total - i;
            KernelSlice<K> ks = kernel_slice(p, i, j, monomial_cap);
            int kd = static_cast<int>(ks.basis.size());
            int id = ideal_slice_dim(gens, i, j);
            bool ok = kd == id;
            all_ok = all_ok && ok;
            report.slices.push_back({{i, j}, kd, id, ok});
            if (id > kd)
                report.notes.push_back("slice " + Bidegree{i, j}.to_string() +
                                       ": ideal exceeds the kernel, a generator is not a relation");
        }
    }
    report.verdict = all_ok ? "Certified" : "Failed";
    return report;
}

template <class K>
VerificationReport verify_generation(const Parametrization<K>& p, const GeneratorSet<K>& gs,
                                     int bound, int monomial_cap = 20000) {
    std::vector<MultiPoly<K>> polys;
    for (const auto& g : gs.generators) polys.push_back(g.poly);
    return verify_generation(p, polys, bound, monomial_cap);
}

/// Checks that no generator lies in the ideal generated by the others. Each
/// record reports whether dropping the generator shrinks its own bidegree
/// slice.
template <class K>
VerificationReport verify_minimality(const std::vector<Generator<K>>& generators,
                                     int monomial_cap = 20000) {
    VerificationReport report;
    bool all_ok = true;
    std::vector<MultiPoly<K>> polys;
    for (const auto& g : generators) polys.push_back(g.poly);
    for (std::size_t drop = 0; drop < polys.size(); ++drop) {
        const Generator<K>& g = generators[drop];
        const int i = g.bidegree.t_deg, j = g.bidegree.x_deg;
        const int n = g.poly.n();
        if (count_monomials(n, i) * count_monomials(n + 1, j) > monomial_cap)
            throw Error(ErrorCode::ResourceLimit,
                        "slice " + g.bidegree.to_string() + " is beyond the monomial cap");
        MonomialIndex idx(n, i, j);
        std::vector<MultiPoly<K>> others;
        for (std::size_t k = 0; k < polys.size(); ++k)
            if (k != drop) others.push_back(polys[k]);
        auto rows = detail::multiple_rows(others, i, j, idx);
        int without = detail::rank_of_rows(rows, idx.size(), g.poly.context());
        rows.push_back(coefficient_row(g.poly, idx));
        int with_g = detail::rank_of_rows(rows, idx.size(), g.poly.context());
        bool necessary = with_g > without;
        all_ok = all_ok && necessary;
        report.minimality.push_back({g.name, g.bidegree, necessary});
        if (!necessary)
            report.notes.push_back("generator " + g.name + " lies in the ideal of the others");
    }
    report.verdict = all_ok ? "Certified" : "Failed";
    return report;
}

template <class K>
VerificationReport verify_minimality(const GeneratorSet<K>& gs, int monomial_cap = 20000) {
    return verify_minimality(gs.generators, monomial_cap);
}

/// Checks that every kernel element of t-degree d-1 or d with x-degree up to
/// bound_j already lies in the ideal generated by the moving planes alone.
template <class K>
VerificationReport verify_high_degree_containment(const Parametrization<K>& p, const MuBasis<K>& mb,
                                                  int bound_j, int monomial_cap = 20000) {
    if (bound_j < 1) throw Error(ErrorCode::PreconditionViolation, "bound_j must be at least 1");
    VerificationReport report;
    auto ctx = p.u[0].context();
    bool all_ok = true;
    for (int i = p.d - 1; i <= p.d; ++i) {
        for (int j = 1; j <= bound_j; ++j) {
            KernelSlice<K> ks = kernel_slice(p, i, j, monomial_cap);
            MonomialIndex idx(p.n, i, j);
            auto rows = detail::multiple_rows(mb.elements, i, j, idx);
            int ideal_rank = detail::rank_of_rows(rows, idx.size(), ctx);
            for (const auto& f : ks.basis) rows.push_back(coefficient_row(f, idx));
            int joint_rank = detail::rank_of_rows(rows, idx.size(), ctx);
            bool ok = joint_rank == ideal_rank;
            all_ok = all_ok && ok;
            report.slices.push_back({{i, j}, static_cast<int>(ks.basis.size()), ideal_rank, ok});
            if (!ok)
                report.notes.push_back("slice " + Bidegree{i, j}.to_string() +
                                       ": a kernel element escapes the moving-plane ideal");
        }
    }
    report.verdict = all_ok ? "Certified" : "Failed";
    return report;
}

}  // namespace reeskit

#endif
