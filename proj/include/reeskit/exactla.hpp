#ifndef REESKIT_EXACTLA_HPP
#define REESKIT_EXACTLA_HPP

#include <utility>
#include <vector>

#include "reeskit/errors.hpp"
#include "reeskit/field.hpp"

namespace reeskit {

/// Dense row-major matrix over the active field.
template <class K>
struct ExactMatrix {
    int rows = 0;
    int cols = 0;
    typename K::Context ctx;
    std::vector<K> entries;

    ExactMatrix(int r, int c, typename K::Context cx)
        : rows(r), cols(c), ctx(cx), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), K::zero(cx)) {}

    K& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const K& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

template <class K>
struct RrefResult {
    ExactMatrix<K> matrix;
    std::vector<int> pivots;
};

/// Reduced row echelon form. Over F_p: plain Gauss-Jordan. Over Q: the
/// forward pass is fraction-free (Bareiss) on denominator-cleared integer
/// rows to control coefficient growth; pivots are normalized and cleared
/// upward rationally at the end.
template <class K>
RrefResult<K> rref(const ExactMatrix<K>& m) {
    const int rows = m.rows;
    const int cols = m.cols;
    std::vector<int> pivots;

    if constexpr (K::is_prime_field) {
        ExactMatrix<K> a = m;
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int piv = -1;
            for (int i = r; i < rows; ++i)
                if (!a.at(i, c).is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            if (piv != r)
                for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
            K inv = a.at(r, c).inv();
            for (int j = c; j < cols; ++j) a.at(r, j) *= inv;
            for (int i = 0; i < rows; ++i) {
                if (i == r || a.at(i, c).is_zero()) continue;
                K f = a.at(i, c);
                for (int j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return {std::move(a), std::move(pivots)};
    } else {
        // denominator-cleared integer working copy; row scaling preserves the
        // row space and hence the (unique) RREF
        std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            BigInt den = 1;
            for (int j = 0; j < cols; ++j)
                den = boost::multiprecision::lcm(den, m.at(i, j).denominator());
            a[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(cols));
            for (int j = 0; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    m.at(i, j).numerator() * (den / m.at(i, j).denominator());
        }

        BigInt prev = 1;
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int piv = -1;
            for (int i = r; i < rows; ++i)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { piv = i; break; }
            if (piv < 0) continue;
            if (piv != r) std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(r)]);
            const BigInt pv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            for (int i = r + 1; i < rows; ++i) {
                BigInt head = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                for (int j = c + 1; j < cols; ++j) {
                    BigInt v = pv * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                             - head * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v / prev;
                }
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 0;
            }
            prev = pv;
            pivots.push_back(c);
            ++r;
        }

        ExactMatrix<K> out(rows, cols, m.ctx);
        const int nr = static_cast<int>(pivots.size());
        for (int i = 0; i < nr; ++i) {
            K inv = K(BigRational(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])])).inv();
            for (int j = 0; j < cols; ++j)
                out.at(i, j) = K(BigRational(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) * inv;
        }
        for (int i = nr - 1; i >= 0; --i) {
            int p = pivots[static_cast<std::size_t>(i)];
            for (int k = 0; k < i; ++k) {
                K f = out.at(k, p);
                if (f.is_zero()) continue;
                for (int j = 0; j < cols; ++j) out.at(k, j) -= f * out.at(i, j);
            }
        }
        return {std::move(out), std::move(pivots)};
    }
}

template <class K>
int rank(const ExactMatrix<K>& m) {
    return static_cast<int>(rref(m).pivots.size());
}

/// Deterministic basis of the right null space: free columns in ascending
/// order, the free variable set to 1, pivot entries read off the RREF with a
/// sign flip.
template <class K>
std::vector<std::vector<K>> kernel_basis(const ExactMatrix<K>& m) {
    RrefResult<K> r = rref(m);
    const int cols = m.cols;
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<K>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<K> v(static_cast<std::size_t>(cols), K::zero(m.ctx));
        v[static_cast<std::size_t>(f)] = K::one(m.ctx);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[static_cast<std::size_t>(r.pivots[i])] = -r.matrix.at(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
std::vector<K> mat_vec(const ExactMatrix<K>& m, const std::vector<K>& v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw Error(ErrorCode::ArityMismatch, "vector length does not match column count");
    std::vector<K> out(static_cast<std::size_t>(m.rows), K::zero(m.ctx));
    for (int i = 0; i < m.rows; ++i) {
        K s = K::zero(m.ctx);
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

}  // namespace reeskit

#endif
