// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mcc/galois.hpp"
#include "mcc/grid.hpp"
#include "mcc/linalg.hpp"

namespace mcc {

// A Cartesian product of per-axis point sets in one field. Coordinates are
// ordered lexicographically with the last axis varying fastest.
struct EvaluationDomain {
    FieldPtr field;
    GridSpec grid;
    std::vector<std::vector<uint32_t>> axis_points;
    uint64_t n = 0;
};

using DomainPtr = std::shared_ptr<const EvaluationDomain>;

// Standard point sets: the n_j-th roots of unity on a J axis (needs
// n_j | q-1), the (n_j-1)-th roots of unity plus 0 otherwise (needs
// n_j-1 | q-1, zero listed last).
DomainPtr build_domain(FieldPtr f, GridSpec grid);

// Arbitrary distinct points per axis, for constructions that do not care
// about multiplicative structure.
DomainPtr build_domain_points(FieldPtr f, GridSpec grid,
                              std::vector<std::vector<uint32_t>> pts);

uint64_t coord_index(const GridSpec& g, const Exponent& t);
Exponent coord_tuple(const GridSpec& g, uint64_t i);

// Values of X^e over the whole domain, with 0^0 = 1.
std::vector<uint32_t> evaluate_monomial(const EvaluationDomain& dom, const Exponent& e);

struct LinearCode {
    FieldPtr field;
    uint64_t n = 0;
    uint32_t k = 0;
    Mat gen;  // reduced row echelon form, so a canonical basis
    // Construction metadata; null for plain codes such as projections.
    DomainPtr domain;
    std::shared_ptr<const DeltaSet> delta;
};

// Evaluation code of span{X^e : e in delta}.
LinearCode mcc(DomainPtr dom, const DeltaSet& delta);

std::vector<uint32_t> encode(const LinearCode& c, const std::vector<uint32_t>& message);

enum class SubfieldMethod { trace, intersection };

// Largest subcode with all entries in the h-th degree subfield, expressed
// over GF(p^h). The trace method needs the exponent set closed under the
// p^h power map; the intersection method is plain linear algebra over GF(p)
// and works for any code.
LinearCode subfield_subcode(const LinearCode& c, uint32_t h, SubfieldMethod method);

// Span of all coordinatewise products of codewords.
LinearCode star_product(const LinearCode& a, const LinearCode& b);

// Restriction of codewords to the given coordinates (0-based, strictly
// increasing).
LinearCode project(const LinearCode& c, const std::vector<uint64_t>& coords);

}  // namespace mcc
