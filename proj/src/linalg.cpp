// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#include "mcc/linalg.hpp"

#include <algorithm>

namespace mcc {

size_t rref(const Field& f, Mat& m, std::vector<size_t>* pivots) {
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            std::swap_ranges(m.row(piv), m.row(piv) + m.cols, m.row(r));
        uint32_t s = f.inv(m.at(r, c));
        if (s != 1)
            for (size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            uint32_t v = m.at(i, c);
            if (v == 0) continue;
            for (size_t j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(v, m.at(r, j)));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    m.rows = r;
    m.a.resize(r * m.cols);
    return r;
}

size_t rank(const Field& f, Mat m) { return rref(f, m); }

Mat nullspace(const Field& f, const Mat& m) {
    Mat r = m;
    std::vector<size_t> pivots;
    size_t rk = rref(f, r, &pivots);
    std::vector<char> is_pivot(m.cols, 0);
    for (size_t c : pivots) is_pivot[c] = 1;
    Mat out(m.cols - rk, m.cols);
    size_t row = 0;
    for (size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        out.at(row, c) = 1;
        for (size_t i = 0; i < rk; ++i)
            out.at(row, pivots[i]) = f.neg(r.at(i, c));
        ++row;
    }
    return out;
}

bool row_space_equal(const Field& f, Mat a, Mat b) {
    rref(f, a);
    rref(f, b);
    return a == b;
}

SolveStatus solve_unique(const Field& f, Mat a, std::vector<uint32_t> b,
                         std::vector<uint32_t>& x) {
    size_t n = a.cols;
    Mat aug(a.rows, n + 1);
    for (size_t i = 0; i < a.rows; ++i) {
        std::copy(a.row(i), a.row(i) + n, aug.row(i));
        aug.at(i, n) = b[i];
    }
    std::vector<size_t> pivots;
    size_t rk = rref(f, aug, &pivots);
    // A pivot in the augmented column means 0 = 1.
    if (!pivots.empty() && pivots.back() == n) return SolveStatus::inconsistent;
    if (rk < n) return SolveStatus::underdetermined;
    x.assign(n, 0);
    for (size_t i = 0; i < n; ++i) x[pivots[i]] = aug.at(i, n);
    return SolveStatus::ok;
}

Mat mat_transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

std::vector<uint32_t> mat_vec(const Field& f, const Mat& m, const std::vector<uint32_t>& v) {
    std::vector<uint32_t> out(m.rows, 0);
    for (size_t i = 0; i < m.rows; ++i) {
        uint32_t acc = 0;
        for (size_t j = 0; j < m.cols; ++j) acc = f.add(acc, f.mul(m.at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

uint64_t min_weight(const Field& f, const Mat& gen, uint64_t budget,
                    std::vector<uint32_t>* witness) {
    if (gen.rows == 0) throw spec_error("min_weight: the zero code has no nonzero codeword");
    const uint64_t q = f.q();
    uint64_t total = 1;
    for (size_t i = 0; i < gen.rows; ++i) {
        if (total > budget / q) throw spec_error("min_weight: enumeration exceeds the budget");
        total *= q;
    }
    const size_t n = gen.cols, k = gen.rows;
    // One message per projective class: first nonzero coordinate fixed to 1.
    // The suffix runs through an odometer whose digit steps add a precomputed
    // scaled row, so each codeword costs one row addition.
    std::vector<std::vector<uint32_t>> scaled(k);
    for (size_t t = 1; t < k; ++t) {
        scaled[t].resize(q * n);
        for (uint64_t s = 0; s < q; ++s)
            for (size_t c = 0; c < n; ++c)
                scaled[t][s * n + c] = f.mul(static_cast<uint32_t>(s), gen.at(t, c));
    }
    uint64_t best = n + 1;
    std::vector<uint32_t> cur(n), best_word;
    for (size_t lead = 0; lead < k && best > 1; ++lead) {
        cur.assign(gen.row(lead), gen.row(lead) + n);
        const size_t s = k - 1 - lead;
        std::vector<uint32_t> digit(s, 0);
        while (true) {
            uint64_t w = 0;
            for (size_t c = 0; c < n; ++c) w += cur[c] != 0;
            if (w < best) {
                best = w;
                if (witness) best_word = cur;
            }
            size_t t = 0;
            while (t < s) {
                uint32_t v = digit[t];
                uint32_t nv = uint64_t(v) + 1 == q ? 0 : v + 1;
                const uint32_t* delta =
                    scaled[lead + 1 + t].data() + size_t(f.sub(nv, v)) * n;
                for (size_t c = 0; c < n; ++c) cur[c] = f.add(cur[c], delta[c]);
                digit[t] = nv;
                if (nv != 0) break;
                ++t;
            }
            if (t == s) break;
        }
    }
    if (witness) *witness = best_word;
    return best;
}

std::vector<uint32_t> vec_mat(const Field& f, const std::vector<uint32_t>& v, const Mat& m) {
    std::vector<uint32_t> out(m.cols, 0);
    for (size_t i = 0; i < m.rows; ++i) {
        uint32_t s = v[i];
        if (s == 0) continue;
        for (size_t j = 0; j < m.cols; ++j)
            out[j] = f.add(out[j], f.mul(s, m.at(i, j)));
    }
    return out;
}

}  // namespace mcc
