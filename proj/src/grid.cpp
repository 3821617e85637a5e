// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#include "mcc/grid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace mcc {

namespace {

uint64_t gcd64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

void check_axis(const GridSpec& g, uint32_t axis) {
    if (axis < 1 || axis > g.m()) throw spec_error("grid: axis index out of range");
}

}  // namespace

GridSpec make_grid(std::vector<uint32_t> sizes, std::vector<uint32_t> j_axes, uint32_t ph) {
    if (sizes.empty()) throw spec_error("grid: need at least one axis");
    for (uint32_t n : sizes)
        if (n < 2) throw spec_error("grid: every axis length must be at least 2");
    GridSpec g;
    g.sizes = std::move(sizes);
    g.in_j.assign(g.sizes.size(), 0);
    for (uint32_t a : j_axes) {
        if (a < 1 || a > g.m()) throw spec_error("grid: J axis index out of range");
        if (g.in_j[a - 1]) throw spec_error("grid: duplicate J axis");
        g.in_j[a - 1] = 1;
    }
    g.ph = ph;
    return g;
}

bool DeltaSet::contains(const Exponent& e) const {
    return std::binary_search(exps.begin(), exps.end(), e);
}

void check_bounds(const GridSpec& g, const Exponent& e) {
    if (e.size() != g.sizes.size()) throw spec_error("grid: exponent arity mismatch");
    for (size_t j = 0; j < e.size(); ++j)
        if (e[j] >= g.sizes[j]) throw spec_error("grid: exponent out of range");
}

DeltaSet make_delta(GridSpec grid, std::vector<Exponent> exps) {
    for (const Exponent& e : exps) check_bounds(grid, e);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    DeltaSet d;
    d.grid = std::move(grid);
    d.exps = std::move(exps);
    return d;
}

uint64_t exponent_distance(const GridSpec& g, const Exponent& e) {
    check_bounds(g, e);
    uint64_t dis = 1;
    for (size_t j = 0; j < e.size(); ++j) dis *= g.sizes[j] - e[j];
    return dis;
}

uint64_t d0(const DeltaSet& d) {
    if (d.exps.empty()) throw spec_error("grid: d0 of an empty set");
    uint64_t best = UINT64_MAX;
    for (const Exponent& e : d.exps) best = std::min(best, exponent_distance(d.grid, e));
    return best;
}

bool is_decreasing(const DeltaSet& d) {
    // Checking one step down per axis suffices by induction.
    for (const Exponent& e : d.exps) {
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            Exponent f = e;
            f[j] -= 1;
            if (!d.contains(f)) return false;
        }
    }
    return true;
}

std::vector<uint32_t> supp_axis(const DeltaSet& d, uint32_t axis) {
    check_axis(d.grid, axis);
    std::set<uint32_t> vals;
    for (const Exponent& e : d.exps) vals.insert(e[axis - 1]);
    return std::vector<uint32_t>(vals.begin(), vals.end());
}

uint32_t supp_size(const DeltaSet& d, uint32_t axis) {
    return static_cast<uint32_t>(supp_axis(d, axis).size());
}

uint32_t supp_max(const DeltaSet& d, uint32_t axis) {
    std::vector<uint32_t> s = supp_axis(d, axis);
    if (s.empty()) throw spec_error("grid: axis support of an empty set");
    return s.back();
}

uint32_t axis_mul_ph(const GridSpec& g, uint32_t axis, uint32_t e) {
    check_axis(g, axis);
    if (g.ph == 0) throw spec_error("grid: multiplier p^h is unset");
    uint32_t n = g.sizes[axis - 1];
    if (e >= n) throw spec_error("grid: exponent out of range");
    if (g.in_j[axis - 1]) {
        if (gcd64(g.ph, n) != 1)
            throw spec_error("grid: p^h must be coprime to the axis length on a J axis");
        return static_cast<uint32_t>((uint64_t(g.ph) * e) % n);
    }
    if (gcd64(g.ph, n - 1) != 1)
        throw spec_error("grid: p^h must be coprime to length-1 off the J axes");
    if (e == 0) return 0;
    // Nonzero exponents multiply inside Z/(n-1)Z shifted to {1..n-1}.
    return static_cast<uint32_t>((uint64_t(g.ph) * e - 1) % (n - 1)) + 1;
}

std::vector<Exponent> cyclotomic_orbit(const GridSpec& g, const Exponent& e) {
    check_bounds(g, e);
    std::vector<Exponent> orbit;
    Exponent cur = e;
    do {
        orbit.push_back(cur);
        Exponent nxt(cur.size());
        for (uint32_t j = 1; j <= g.m(); ++j) nxt[j - 1] = axis_mul_ph(g, j, cur[j - 1]);
        cur = std::move(nxt);
    } while (cur != e);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

bool is_closed(const DeltaSet& d) {
    for (const Exponent& e : d.exps) {
        Exponent img(e.size());
        for (uint32_t j = 1; j <= d.grid.m(); ++j) img[j - 1] = axis_mul_ph(d.grid, j, e[j - 1]);
        if (!d.contains(img)) return false;
    }
    return true;
}

DeltaSet closure(const DeltaSet& d) {
    std::set<Exponent> out(d.exps.begin(), d.exps.end());
    for (const Exponent& e : d.exps)
        for (const Exponent& x : cyclotomic_orbit(d.grid, e)) out.insert(x);
    return make_delta(d.grid, std::vector<Exponent>(out.begin(), out.end()));
}

DeltaSet closed_interior(const DeltaSet& d) {
    std::vector<Exponent> keep;
    for (const Exponent& e : d.exps) {
        bool whole_orbit = true;
        for (const Exponent& x : cyclotomic_orbit(d.grid, e))
            if (!d.contains(x)) {
                whole_orbit = false;
                break;
            }
        if (whole_orbit) keep.push_back(e);
    }
    return make_delta(d.grid, std::move(keep));
}

DeltaSet translate(const DeltaSet& d, const std::vector<int64_t>& v) {
    if (v.size() != d.grid.sizes.size()) throw spec_error("grid: translate arity mismatch");
    std::vector<Exponent> out;
    out.reserve(d.exps.size());
    for (const Exponent& e : d.exps) {
        Exponent f(e.size());
        for (size_t j = 0; j < e.size(); ++j) {
            int64_t val = int64_t(e[j]) + v[j];
            if (val < 0 || val >= int64_t(d.grid.sizes[j]))
                throw spec_error("grid: translate leaves the exponent box");
            f[j] = static_cast<uint32_t>(val);
        }
        out.push_back(std::move(f));
    }
    return make_delta(d.grid, std::move(out));
}

namespace {

std::vector<uint32_t> range_incl(uint32_t lo, uint32_t hi) {
    std::vector<uint32_t> v;
    for (uint32_t x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

void check_count(const std::vector<uint32_t>& v, size_t want, const char* who) {
    if (v.size() != want) throw spec_error(std::string(who) + ": unexpected element count");
}

}  // namespace

std::vector<uint32_t> omega_a(uint32_t ph, uint32_t a) {
    if (ph < 2) throw spec_error("omega_a: p^h must be at least 2");
    if (a + 1 > ph / 2) throw spec_error("omega_a: a out of range");
    std::vector<uint32_t> v = range_incl(0, a);
    if (a > 0)
        for (uint32_t x = ph + 1 - a; x <= ph; ++x) v.push_back(x);
    check_count(v, 2 * size_t(a) + 1, "omega_a");
    return v;
}

std::vector<uint32_t> omega_star_b(uint32_t ph, uint32_t b) {
    if (ph < 4 || ph % 2 != 0) throw spec_error("omega_star_b: p^h must be even and at least 4");
    if (b > ph / 2 - 2) throw spec_error("omega_star_b: b out of range");
    std::vector<uint32_t> v = range_incl(ph / 2 - b, ph / 2 + b + 1);
    check_count(v, 2 * size_t(b) + 2, "omega_star_b");
    return v;
}

std::vector<uint32_t> omega_3pt(uint32_t h) {
    if (h < 2) throw spec_error("omega_3pt: need 2^h at least 4");
    std::vector<uint32_t> v = {0, 1, uint32_t(1) << h};
    check_count(v, 3, "omega_3pt");
    return v;
}

std::vector<uint32_t> omega_perp(uint32_t h) {
    if (h < 2) throw spec_error("omega_perp: need 2^h at least 4");
    uint32_t ph = uint32_t(1) << h;
    std::vector<uint32_t> v = {0};
    for (uint32_t x = 2; x <= ph - 1; ++x) v.push_back(x);
    check_count(v, size_t(ph) - 1, "omega_perp");
    return v;
}

std::vector<uint32_t> omega_star_z(uint32_t h, uint32_t z) {
    if (h < 2) throw spec_error("omega_star_z: need 2^h at least 4");
    uint32_t ph = uint32_t(1) << h;
    if (z < 2 || z > 3) throw spec_error("omega_star_z: z must be 2 or 3");
    int64_t lhs = int64_t(ph) - 2 * int64_t(z) + 1;
    int64_t rhs = std::max<int64_t>(0, int64_t(ph) - 6);
    if (lhs < rhs) throw spec_error("omega_star_z: z too large for this h");
    std::vector<uint32_t> v = range_incl(z, ph - z + 1);
    check_count(v, size_t(ph) - 2 * size_t(z) + 2, "omega_star_z");
    return v;
}

std::vector<uint32_t> oset_zt(uint32_t ph, uint32_t z, uint32_t t) {
    if (t >= z) throw spec_error("oset_zt: need t < z");
    if (z > ph / 2 - 1) throw spec_error("oset_zt: z out of range");
    std::vector<uint32_t> v = range_incl(t + 1, z);
    for (uint32_t x = ph + 1 - z; x <= ph - t; ++x) v.push_back(x);
    check_count(v, 2 * (size_t(z) - t), "oset_zt");
    return v;
}

std::vector<uint32_t> oset_uv(uint32_t ph, uint32_t u, uint32_t v) {
    if (ph < 4 || ph % 2 != 0) throw spec_error("oset_uv: p^h must be even and at least 4");
    if (v >= u) throw spec_error("oset_uv: need v < u");
    if (u > ph / 2 - 2) throw spec_error("oset_uv: u out of range");
    std::vector<uint32_t> out = range_incl(ph / 2 - u, ph / 2 - v - 1);
    for (uint32_t x = ph / 2 + v + 2; x <= ph / 2 + u + 1; ++x) out.push_back(x);
    check_count(out, 2 * (size_t(u) - v), "oset_uv");
    return out;
}

}  // namespace mcc
