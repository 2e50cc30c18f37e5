#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "reeskit/exactla.hpp"
#include "reeskit/field.hpp"

using namespace reeskit;

namespace {

ExactMatrix<QQ> qq_matrix(const std::vector<std::vector<long long>>& rows) {
    QQ::Context ctx;
    ExactMatrix<QQ> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), ctx);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = QQ::from_int(rows[r][c], ctx);
    return m;
}

ExactMatrix<Fp> fp_matrix(const std::vector<std::vector<long long>>& rows, std::uint32_t p) {
    Fp::Context ctx{p};
    ExactMatrix<Fp> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), ctx);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = Fp::from_int(rows[r][c], ctx);
    return m;
}

template <class K>
bool is_reduced_echelon(const RrefResult<K>& rr) {
    const auto& m = rr.matrix;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        int pc = rr.pivots[r];
        if (!(m.at(static_cast<int>(r), pc) == K::one(m.ctx))) return false;
        for (int other = 0; other < m.rows; ++other)
            if (other != static_cast<int>(r) && !m.at(other, pc).is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("reduction reaches reduced row echelon form and is idempotent") {
    auto m = qq_matrix({{2, 4, 6}, {1, 3, 5}, {3, 7, 11}});
    auto rr = rref(m);
    CHECK(rr.pivots == std::vector<int>{0, 1});
    CHECK(is_reduced_echelon(rr));
    auto again = rref(rr.matrix);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) CHECK(again.matrix.at(r, c) == rr.matrix.at(r, c));
}

TEST_CASE("reduction handles rational entries without pivot blowup") {
    QQ::Context ctx;
    ExactMatrix<QQ> m(2, 2, ctx);
    m.at(0, 0) = QQ::from_fraction(BigInt(1), BigInt(2), ctx);
    m.at(0, 1) = QQ::from_fraction(BigInt(1), BigInt(3), ctx);
    m.at(1, 0) = QQ::from_fraction(BigInt(1), BigInt(5), ctx);
    m.at(1, 1) = QQ::from_fraction(BigInt(1), BigInt(7), ctx);
    CHECK(rank(m) == 2);
    auto rr = rref(m);
    CHECK(is_reduced_echelon(rr));
}

TEST_CASE("rank agrees between the rationals and a large prime field") {
    std::vector<std::vector<long long>> entries = {
        {3, -1, 4, 1}, {5, -9, 2, 6}, {8, -10, 6, 7}, {0, 0, 0, 0}};
    // row 3 = row 1 + row 2, so the rank is 2
    CHECK(rank(qq_matrix(entries)) == 2);
    CHECK(rank(fp_matrix(entries, 32003)) == 2);
}

TEST_CASE("kernel vectors annihilate the matrix and count the nullity") {
    auto m = qq_matrix({{1, 2, 3}, {2, 4, 6}});
    auto basis = kernel_basis(m);
    REQUIRE(static_cast<int>(basis.size()) == m.cols - rank(m));
    for (const auto& v : basis) {
        auto image = mat_vec(m, v);
        for (const auto& e : image) CHECK(e.is_zero());
    }
}

TEST_CASE("kernel convention: free columns ascending, free coordinate one") {
    auto m = qq_matrix({{1, 1}});
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0].to_string() == "-1");
    CHECK(basis[0][1].to_string() == "1");

    auto wide = qq_matrix({{1, 2, 0, 3}});
    auto wb = kernel_basis(wide);
    REQUIRE(wb.size() == 3);
    // free columns are 1, 2, 3 in that order
    CHECK(wb[0][1].to_string() == "1");
    CHECK(wb[0][0].to_string() == "-2");
    CHECK(wb[1][2].to_string() == "1");
    CHECK(wb[2][3].to_string() == "1");
    CHECK(wb[2][0].to_string() == "-3");
}

TEST_CASE("kernel of a full-rank square matrix is empty") {
    auto m = qq_matrix({{1, 2}, {3, 4}});
    CHECK(kernel_basis(m).empty());
    auto mf = fp_matrix({{1, 2}, {3, 4}}, 7);
    CHECK(kernel_basis(mf).empty());
}

TEST_CASE("prime field reduction matches known inverse relations") {
    auto m = fp_matrix({{2, 1}, {1, 1}}, 7);
    auto rr = rref(m);
    CHECK(rr.pivots == std::vector<int>{0, 1});
    CHECK(is_reduced_echelon(rr));
    auto singular = fp_matrix({{2, 4}, {1, 2}}, 7);
    CHECK(rank(singular) == 1);
}

TEST_CASE("zero matrix has empty pivot list and full kernel") {
    auto m = qq_matrix({{0, 0, 0}, {0, 0, 0}});
    auto rr = rref(m);
    CHECK(rr.pivots.empty());
    CHECK(rank(m) == 0);
    CHECK(kernel_basis(m).size() == 3);
}
