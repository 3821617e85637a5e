// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "mcc/galois.hpp"

namespace mcc {

// The exponent lattice E = {0..n_1-1} x ... x {0..n_m-1}. Axis j carries a
// ring structure that depends on J membership: Z/n_j Z for j in J, and
// {0} u Z/(n_j-1)Z otherwise (0+e = e, 0*e = 0, and n_j-1 is fixed by
// multiplication). ph is the multiplier p^h used by the cyclotomic closure
// operations; 0 means unset.
struct GridSpec {
    std::vector<uint32_t> sizes;
    std::vector<uint8_t> in_j;  // per-axis J membership
    uint32_t ph = 0;

    uint32_t m() const { return static_cast<uint32_t>(sizes.size()); }
};

GridSpec make_grid(std::vector<uint32_t> sizes, std::vector<uint32_t> j_axes /*1-based*/,
                   uint32_t ph = 0);

using Exponent = std::vector<uint32_t>;

// A finite set of exponents, kept sorted lexicographically (axis 1 most
// significant) with no duplicates.
struct DeltaSet {
    GridSpec grid;
    std::vector<Exponent> exps;

    size_t size() const { return exps.size(); }
    bool contains(const Exponent& e) const;
};

DeltaSet make_delta(GridSpec grid, std::vector<Exponent> exps);

void check_bounds(const GridSpec& g, const Exponent& e);

// dis(e) = prod_j (n_j - e_j).
uint64_t exponent_distance(const GridSpec& g, const Exponent& e);

// Footprint bound: min of exponent_distance over the set.
uint64_t d0(const DeltaSet& d);

// True iff the set is closed under coordinatewise decrease (every divisor of
// a member monomial is a member).
bool is_decreasing(const DeltaSet& d);

// Distinct values of e_axis over the set (sorted), their count and maximum.
std::vector<uint32_t> supp_axis(const DeltaSet& d, uint32_t axis /*1-based*/);
uint32_t supp_size(const DeltaSet& d, uint32_t axis);
uint32_t supp_max(const DeltaSet& d, uint32_t axis);

// e_j |-> p^h * e_j in the axis ring. Nonzero values on a non-J axis stay in
// 1..n_j-1, with n_j-1 a fixed point.
uint32_t axis_mul_ph(const GridSpec& g, uint32_t axis /*1-based*/, uint32_t e);

// Orbit of e under coordinatewise multiplication by p^h, sorted.
std::vector<Exponent> cyclotomic_orbit(const GridSpec& g, const Exponent& e);

bool is_closed(const DeltaSet& d);
DeltaSet closure(const DeltaSet& d);

// Largest union of orbits contained in the set. The subfield-subcode of a
// non-closed set has this many dimensions.
DeltaSet closed_interior(const DeltaSet& d);

// Coordinatewise shift by v with strict bounds checking, never wrapping.
DeltaSet translate(const DeltaSet& d, const std::vector<int64_t>& v);

// Exponent building blocks on single axes. omega_a/omega_star_b live on the
// axis of length p^h+1; the others live on the axis of length 2^h+2.
std::vector<uint32_t> omega_a(uint32_t ph, uint32_t a);        // {0..a} u {p^h+1-a..p^h}
std::vector<uint32_t> omega_star_b(uint32_t ph, uint32_t b);   // {p^h/2-b..p^h/2+b+1}
std::vector<uint32_t> omega_3pt(uint32_t h);                   // {0,1,2^h}
std::vector<uint32_t> omega_perp(uint32_t h);                  // {0,2,3,...,2^h-1}
std::vector<uint32_t> omega_star_z(uint32_t h, uint32_t z);    // {z..2^h-z+1}

// Removal windows for the multivariate families.
std::vector<uint32_t> oset_zt(uint32_t ph, uint32_t z, uint32_t t);
std::vector<uint32_t> oset_uv(uint32_t ph, uint32_t u, uint32_t v);

}  // namespace mcc
