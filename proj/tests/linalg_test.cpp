// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mcc/linalg.hpp"

using namespace mcc;

namespace {

Mat from_rows(const std::vector<std::vector<uint32_t>>& rows) {
    Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("rref canonical form over GF(5)") {
    FieldPtr f = field_new(5, 1);
    // (3,1,4) = 3*(1,2,3), so the rank is 2 with pivots in columns 0 and 2
    Mat m = from_rows({{2, 4, 1}, {1, 2, 4}, {3, 1, 4}});
    std::vector<size_t> pivots;
    size_t rk = rref(*f, m, &pivots);
    CHECK(rk == 2);
    CHECK(m.rows == 2);
    CHECK(pivots == std::vector<size_t>{0, 2});
    CHECK(std::vector<uint32_t>(m.row(0), m.row(0) + 3) == std::vector<uint32_t>{1, 2, 0});
    CHECK(std::vector<uint32_t>(m.row(1), m.row(1) + 3) == std::vector<uint32_t>{0, 0, 1});
    Mat again = m;
    CHECK(rref(*f, again) == 2);
    CHECK(again == m);  // rref of an rref is itself
}

TEST_CASE("rref is basis independent") {
    FieldPtr f = field_new(7, 1);
    Mat a = from_rows({{1, 2, 3, 4}, {0, 1, 6, 2}});
    Mat b = from_rows({{1, 3, 2, 6}, {2, 5, 5, 3}});  // row ops of the same span
    CHECK(row_space_equal(*f, a, b));
    Mat c = from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK_FALSE(row_space_equal(*f, a, c));
}

TEST_CASE("rank and nullspace") {
    FieldPtr f = field_new(2, 1);
    Mat m = from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});  // rank 2
    CHECK(rank(*f, m) == 2);
    Mat ns = nullspace(*f, m);
    CHECK(ns.rows == 1);
    CHECK(std::vector<uint32_t>(ns.row(0), ns.row(0) + 3) == std::vector<uint32_t>{1, 1, 1});
    // membership: m * v = 0 for every kernel basis vector
    for (size_t i = 0; i < ns.rows; ++i) {
        std::vector<uint32_t> v(ns.row(i), ns.row(i) + ns.cols);
        for (uint32_t x : mat_vec(*f, m, v)) CHECK(x == 0);
    }
    Mat full = from_rows({{1, 0}, {0, 1}});
    CHECK(nullspace(*f, full).rows == 0);
}

TEST_CASE("solve_unique statuses") {
    FieldPtr f = field_new(5, 1);
    std::vector<uint32_t> x;
    // unique: invertible 2x2
    CHECK(solve_unique(*f, from_rows({{1, 2}, {3, 4}}), {0, 1}, x) == SolveStatus::ok);
    CHECK(mat_vec(*f, from_rows({{1, 2}, {3, 4}}), x) == std::vector<uint32_t>{0, 1});
    // inconsistent: contradictory equations
    CHECK(solve_unique(*f, from_rows({{1, 1}, {2, 2}}), {1, 3}, x) ==
          SolveStatus::inconsistent);
    // underdetermined: rank 1 on two unknowns
    CHECK(solve_unique(*f, from_rows({{1, 1}, {2, 2}}), {1, 2}, x) ==
          SolveStatus::underdetermined);
}

TEST_CASE("mat_vec and vec_mat orientation") {
    FieldPtr f = field_new(7, 1);
    Mat m = from_rows({{1, 2, 3}, {4, 5, 6}});
    CHECK(mat_vec(*f, m, {1, 1, 1}) == std::vector<uint32_t>{6, 1});
    CHECK(vec_mat(*f, {1, 1}, m) == std::vector<uint32_t>{5, 0, 2});
    Mat t = mat_transpose(m);
    CHECK(t.rows == 3);
    CHECK(t.at(0, 1) == 4);
}

TEST_CASE("min_weight of a Reed-Solomon code") {
    FieldPtr f = field_new(5, 1);
    // evaluation of {1, x} at 0,1,2,3: an MDS [4,2,3] code
    Mat gen = from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}});
    std::vector<uint32_t> w;
    CHECK(min_weight(*f, gen, 1000, &w) == 3);
    size_t nz = 0;
    for (uint32_t x : w) nz += x != 0;
    CHECK(nz == 3);
}

TEST_CASE("min_weight of binary codes") {
    FieldPtr f = field_new(2, 1);
    Mat rep = from_rows({{1, 1, 1, 1, 1}});
    CHECK(min_weight(*f, rep, 10) == 5);
    Mat hamming = from_rows({{1, 0, 0, 0, 1, 1, 0},
                             {0, 1, 0, 0, 1, 0, 1},
                             {0, 0, 1, 0, 0, 1, 1},
                             {0, 0, 0, 1, 1, 1, 1}});
    CHECK(min_weight(*f, hamming, 100) == 3);
}

TEST_CASE("min_weight guards") {
    FieldPtr f = field_new(5, 1);
    Mat empty(0, 4);
    CHECK_THROWS_AS(min_weight(*f, empty, 100), spec_error);
    Mat gen = from_rows({{1, 0, 1}, {0, 1, 1}});
    CHECK_THROWS_AS(min_weight(*f, gen, 20), spec_error);  // 25 messages > 20
    CHECK(min_weight(*f, gen, 25) == 2);
}

TEST_CASE("min_weight matches brute force on random codes") {
    FieldPtr fp = field_new(3, 1);
    const Field& f = *fp;
    uint64_t state = 12345;
    auto rnd = [&state](uint64_t mod) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (state >> 33) % mod;
    };
    for (int trial = 0; trial < 20; ++trial) {
        Mat m(2, 6);
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = static_cast<uint32_t>(rnd(3));
        Mat r = m;
        size_t rk = rref(f, r);
        if (rk != 2) continue;
        // direct enumeration of all 9 multiples
        uint64_t best = 6;
        for (uint32_t c0 = 0; c0 < 3; ++c0)
            for (uint32_t c1 = 0; c1 < 3; ++c1) {
                if (c0 == 0 && c1 == 0) continue;
                uint64_t wt = 0;
                for (size_t j = 0; j < 6; ++j)
                    wt += f.add(f.mul(c0, r.at(0, j)), f.mul(c1, r.at(1, j))) != 0;
                best = std::min(best, wt);
            }
        CHECK(min_weight(f, r, 100) == best);
    }
}
