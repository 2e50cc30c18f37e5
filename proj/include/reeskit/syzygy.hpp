#ifndef REESKIT_SYZYGY_HPP
#define REESKIT_SYZYGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "reeskit/errors.hpp"
#include "reeskit/exactla.hpp"
#include "reeskit/multipoly.hpp"
#include "reeskit/parametrization.hpp"

namespace reeskit {

/// Basis of one bidegree piece of the kernel.
template <class K>
struct KernelSlice {
    Bidegree bidegree;
    std::vector<MultiPoly<K>> basis;
};

/// Moving-hyperplane basis of the syzygy module, with its degree vector.
template <class K>
struct MuBasis {
    std::vector<MultiPoly<K>> elements;
    std::vector<int> degrees;
};

/// All moving hyperplanes sum a_k(t) X_k with deg a_k = i, as the kernel of
/// the coefficient matrix of (a_1,...,a_{n+1}) -> sum a_k u_k in degree i+d.
/// Columns are ordered X-variable-major, t-monomials in descending lex.
template <class K>
KernelSlice<K> moving_hyperplane_slice(const Parametrization<K>& p, int i) {
    if (i < 0) throw Error(ErrorCode::PreconditionViolation, "slice degree must be non-negative");
    const int n = p.n;
    auto ctx = p.u[0].context();
    ExponentIndex cols_t(n, i);
    ExponentIndex rows_t(n, i + p.d);
    const int block = cols_t.size();
    ExactMatrix<K> m(rows_t.size(), (n + 1) * block, ctx);

    for (int k = 0; k <= n; ++k) {
        for (int a = 0; a < block; ++a) {
            const int col = k * block + a;
            const auto& alpha = cols_t.exponents[static_cast<std::size_t>(a)];
            for (const auto& [um, uc] : p.u[static_cast<std::size_t>(k)].terms()) {
                std::vector<int> e = um.t_exp;
                for (int q = 0; q < n; ++q) e[static_cast<std::size_t>(q)] += alpha[static_cast<std::size_t>(q)];
                m.at(rows_t.position.at(e), col) += uc;
            }
        }
    }

    KernelSlice<K> slice;
    slice.bidegree = {i, 1};
    for (const auto& v : kernel_basis(m)) {
        MultiPoly<K> e(n, ctx);
        for (int k = 0; k <= n; ++k) {
            for (int a = 0; a < block; ++a) {
                const K& c = v[static_cast<std::size_t>(k * block + a)];
                if (c.is_zero()) continue;
                Monomial mono(cols_t.exponents[static_cast<std::size_t>(a)], std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
                mono.x_exp[static_cast<std::size_t>(k)] = 1;
                e.add_term(mono, c);
            }
        }
        slice.basis.push_back(std::move(e));
    }
    return slice;
}

namespace detail {

/// Dimension at degree i of the K[t]-span of the given moving hyperplanes.
template <class K>
int span_dim_at(const std::vector<MultiPoly<K>>& elements, int n, int i, typename K::Context ctx) {
    MonomialIndex idx(n, i, 1);
    std::vector<std::vector<K>> rows;
    for (const auto& e : elements) {
        int deg = e.bidegree().t_deg;
        if (deg > i) continue;
        for (const auto& alpha : exponents_of_degree(n, i - deg)) {
            Monomial mult(alpha, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
            rows.push_back(coefficient_row(monomial_multiple(e, mult), idx));
        }
    }
    if (rows.empty()) return 0;
    ExactMatrix<K> m(static_cast<int>(rows.size()), idx.size(), ctx);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < idx.size(); ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
    return rank(m);
}

/// Picks the first slice element outside the K[t]-span of the given ones, or
/// nullopt if the whole slice is spanned.
template <class K>
std::optional<MultiPoly<K>> first_outside_span(const std::vector<MultiPoly<K>>& elements,
                                               const KernelSlice<K>& slice, int n,
                                               typename K::Context ctx) {
    const int i = slice.bidegree.t_deg;
    MonomialIndex idx(n, i, 1);
    std::vector<std::vector<K>> rows;
    for (const auto& e : elements) {
        int deg = e.bidegree().t_deg;
        if (deg > i) continue;
        for (const auto& alpha : exponents_of_degree(n, i - deg)) {
            Monomial mult(alpha, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
            rows.push_back(coefficient_row(monomial_multiple(e, mult), idx));
        }
    }
    auto rank_of = [&](const std::vector<std::vector<K>>& rr) {
        if (rr.empty()) return 0;
        ExactMatrix<K> m(static_cast<int>(rr.size()), idx.size(), ctx);
        for (std::size_t r = 0; r < rr.size(); ++r)
            for (int c = 0; c < idx.size(); ++c) m.at(static_cast<int>(r), c) = rr[r][static_cast<std::size_t>(c)];
        return rank(m);
    };
    const int base = rank_of(rows);
    for (const auto& cand : slice.basis) {
        rows.push_back(coefficient_row(cand, idx));
        if (rank_of(rows) > base) return cand;
        rows.pop_back();
    }
    return std::nullopt;
}

}  // namespace detail

/// mu-basis of a plane curve: one moving line of degree mu = 1 and one of
/// degree d-1 outside the K[t]-multiples of the first. Parametrizations with
/// mu != 1 are rejected.
template <class K>
MuBasis<K> curve_mu_basis(const Parametrization<K>& p) {
    if (p.n != 2) throw Error(ErrorCode::PreconditionViolation, "curve mu-basis requires n = 2");
    auto ctx = p.u[0].context();

    int mu = -1;
    KernelSlice<K> first;
    for (int i = 0; i <= p.d; ++i) {
        first = moving_hyperplane_slice(p, i);
        if (!first.basis.empty()) { mu = i; break; }
    }
    if (mu < 0) throw Error(ErrorCode::InternalError, "no moving line found up to degree d");
    if (mu != 1)
        throw Error(ErrorCode::MuNotOne,
                    "the least moving-line degree is " + std::to_string(mu) + ", not 1" +
                        (mu == 0 ? " (the image lies in a line)" : ""));

    MultiPoly<K> q1 = first.basis[0];
    q1.normalize_content();

    KernelSlice<K> top = (p.d - 1 == 1) ? first : moving_hyperplane_slice(p, p.d - 1);
    auto q2 = detail::first_outside_span<K>({q1}, top, 2, ctx);
    if (!q2)
        throw Error(ErrorCode::InternalError, "no moving line of degree d-1 outside the multiples of q1");
    q2->normalize_content();

    return {{q1, *q2}, {1, p.d - 1}};
}

namespace detail {

/// Degreewise certificate that the three planes generate the syzygies as a
/// free module with degrees (1,1,d-2): at each degree up to d+1 the counts
/// (slice dimension, span dimension, free-module prediction) must agree.
template <class K>
void check_surface_shape(const Parametrization<K>& p, const std::vector<MultiPoly<K>>& elements) {
    auto ctx = p.u[0].context();
    const std::vector<int> degs = {1, 1, p.d - 2};
    for (int i = 0; i <= p.d + 1; ++i) {
        int slice_dim = static_cast<int>(moving_hyperplane_slice(p, i).basis.size());
        int span_dim = span_dim_at(elements, 3, i, ctx);
        int predicted = 0;
        for (int deg : degs)
            if (i >= deg) predicted += (i - deg + 2) * (i - deg + 1) / 2;
        if (span_dim != predicted)
            throw Error(ErrorCode::ShapeMismatch,
                        "at degree " + std::to_string(i) + " the span of the three planes has dimension " +
                            std::to_string(span_dim) + " but mu-type (1,1," + std::to_string(p.d - 2) +
                            ") predicts " + std::to_string(predicted));
        if (slice_dim != span_dim)
            throw Error(ErrorCode::NotSaturatedSuspect,
                        "at degree " + std::to_string(i) + " the moving-plane space has dimension " +
                            std::to_string(slice_dim) + " but the three planes only span " +
                            std::to_string(span_dim) + "; the free-resolution shape cannot hold");
    }
}

}  // namespace detail

/// Extracts (or validates) a surface mu-basis of degrees (1,1,d-2).
template <class K>
MuBasis<K> surface_mu_shape(const Parametrization<K>& p, const std::optional<MuBasis<K>>& candidate) {
    if (p.n != 3) throw Error(ErrorCode::PreconditionViolation, "surface mu-shape requires n = 3");
    if (p.d < 3) throw Error(ErrorCode::PreconditionViolation, "surface mu-shape requires d >= 3");
    auto ctx = p.u[0].context();

    std::vector<MultiPoly<K>> elements;
    if (candidate) {
        if (candidate->elements.size() != 3)
            throw Error(ErrorCode::ShapeMismatch, "a surface mu-basis has exactly 3 elements");
        const std::vector<int> want = {1, 1, p.d - 2};
        for (std::size_t k = 0; k < 3; ++k) {
            const MultiPoly<K>& e = candidate->elements[k];
            Bidegree b = e.bidegree();
            if (b.x_deg != 1 || b.t_deg != want[k])
                throw Error(ErrorCode::ShapeMismatch,
                            "candidate element " + std::to_string(k + 1) + " has bidegree " +
                                b.to_string() + ", expected (" + std::to_string(want[k]) + ",1)");
            if (!substitute_X(e, p.u).is_zero())
                throw Error(ErrorCode::ShapeMismatch,
                            "candidate element " + std::to_string(k + 1) + " is not a syzygy of u");
            MultiPoly<K> copy = e;
            copy.normalize_content();
            elements.push_back(std::move(copy));
        }
    } else {
        KernelSlice<K> linear = moving_hyperplane_slice(p, 1);
        if (linear.basis.size() < 2)
            throw Error(ErrorCode::ShapeMismatch,
                        "only " + std::to_string(linear.basis.size()) +
                            " independent moving planes of degree 1; mu-type (1,1," +
                            std::to_string(p.d - 2) + ") needs 2");
        MultiPoly<K> p1 = linear.basis[0];
        MultiPoly<K> p2 = linear.basis[1];
        p1.normalize_content();
        p2.normalize_content();
        KernelSlice<K> top = moving_hyperplane_slice(p, p.d - 2);
        auto p3 = detail::first_outside_span<K>({p1, p2}, top, 3, ctx);
        if (!p3)
            throw Error(ErrorCode::ShapeMismatch,
                        "every moving plane of degree d-2 is a combination of the two linear ones; "
                        "mu-type (1,1," + std::to_string(p.d - 2) + ") needs a third generator");
        p3->normalize_content();
        elements = {p1, p2, *p3};
    }

    detail::check_surface_shape(p, elements);
    return {elements, {1, 1, p.d - 2}};
}

/// Recovers a surface parametrization from three moving planes: u_i is the
/// signed i-th maximal minor of the 4x3 matrix of their X-coefficients. The
/// recovered u is automatically a common zero of all three planes; that
/// identity is rechecked, and a zero coordinate is rejected.
template <class K>
std::vector<MultiPoly<K>> u_from_moving_planes(const std::vector<MultiPoly<K>>& planes) {
    if (planes.size() != 3)
        throw Error(ErrorCode::PreconditionViolation, "surface recovery needs exactly 3 moving planes");
    auto ctx = planes[0].context();
    for (const auto& pk : planes) {
        if (pk.n() != 3) throw Error(ErrorCode::ArityMismatch, "moving planes must use t1..t3, X1..X4");
        if (pk.is_zero() || !pk.is_bihomogeneous() || pk.bidegree().x_deg != 1)
            throw Error(ErrorCode::PreconditionViolation, "moving planes must be bihomogeneous and X-linear");
    }

    // A[i][k] = t-coefficient of X_{i+1} in planes[k]
    std::vector<std::vector<MultiPoly<K>>> A(4, std::vector<MultiPoly<K>>(3, MultiPoly<K>::zero(3, ctx)));
    for (int k = 0; k < 3; ++k) {
        for (const auto& [m, c] : planes[static_cast<std::size_t>(k)].terms()) {
            int xi = -1;
            for (int q = 0; q < 4; ++q)
                if (m.x_exp[static_cast<std::size_t>(q)] == 1) { xi = q; break; }
            Monomial tm = m;
            tm.x_exp.assign(4, 0);
            A[static_cast<std::size_t>(xi)][static_cast<std::size_t>(k)].add_term(tm, c);
        }
    }

    auto det3 = [](const std::vector<std::vector<MultiPoly<K>>>& r) {
        return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
             - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
             + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
    };

    std::vector<MultiPoly<K>> u;
    for (int i = 0; i < 4; ++i) {
        std::vector<std::vector<MultiPoly<K>>> rows;
        for (int r = 0; r < 4; ++r)
            if (r != i) rows.push_back(A[static_cast<std::size_t>(r)]);
        MultiPoly<K> ui = det3(rows);
        if (i % 2 == 1) ui = -ui;
        if (ui.is_zero())
            throw Error(ErrorCode::DegenerateInput,
                        "recovered parametrization has a zero coordinate; the moving planes "
                        "do not determine a surface");
        u.push_back(std::move(ui));
    }

    for (const auto& pk : planes)
        if (!substitute_X(pk, u).is_zero())
            throw Error(ErrorCode::InternalError, "recovered u is not a common zero of the planes");
    return u;
}

}  // namespace reeskit

#endif
