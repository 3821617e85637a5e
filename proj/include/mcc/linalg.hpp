// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "mcc/galois.hpp"

namespace mcc {

// Dense row-major matrix of field-element encodings.
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    uint32_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }
    const uint32_t* row(size_t r) const { return a.data() + r * cols; }
    uint32_t* row(size_t r) { return a.data() + r * cols; }
    bool operator==(const Mat&) const = default;
};

// In-place reduced row echelon form. Zero rows are dropped, so the result is
// the canonical basis of the row space; returns the rank. Pivot column
// indices are appended to *pivots when given.
size_t rref(const Field& f, Mat& m, std::vector<size_t>* pivots = nullptr);

size_t rank(const Field& f, Mat m);

// Rows form a basis of the right kernel {v : m v = 0}.
Mat nullspace(const Field& f, const Mat& m);

bool row_space_equal(const Field& f, Mat a, Mat b);

enum class SolveStatus { ok, inconsistent, underdetermined };

// Solves A x = b for the unique x when it exists.
SolveStatus solve_unique(const Field& f, Mat a, std::vector<uint32_t> b,
                         std::vector<uint32_t>& x);

Mat mat_transpose(const Mat& m);

// Exact minimum Hamming weight of the row space of `gen` (assumed to have
// independent rows), by enumerating one representative of each projective
// message class. Throws when q^rows exceeds `budget`. When `witness` is
// given it receives a codeword attaining the minimum.
uint64_t min_weight(const Field& f, const Mat& gen, uint64_t budget,
                    std::vector<uint32_t>* witness = nullptr);

// out = m * v
std::vector<uint32_t> mat_vec(const Field& f, const Mat& m, const std::vector<uint32_t>& v);

// out = v * m  (message times generator)
std::vector<uint32_t> vec_mat(const Field& f, const std::vector<uint32_t>& v, const Mat& m);

}  // namespace mcc
