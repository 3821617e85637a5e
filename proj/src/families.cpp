// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#include "mcc/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace mcc {

namespace {

uint64_t ceil_div(uint64_t a, uint64_t b) { return (a + b - 1) / b; }

uint64_t vec_prod(const std::vector<uint32_t>& v) {
    uint64_t n = 1;
    for (uint32_t x : v) n *= x;
    return n;
}

std::string join_u32(const std::vector<uint32_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

struct PrimePower {
    uint32_t p = 0;
    uint32_t e = 0;
};

PrimePower factor_prime_power(uint64_t x, const char* who) {
    if (x < 2) throw spec_error(std::string(who) + ": value must be a prime power");
    uint64_t p = 0;
    for (uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = x;
    uint32_t e = 0;
    uint64_t y = x;
    while (y % p == 0) {
        y /= p;
        ++e;
    }
    if (y != 1) throw spec_error(std::string(who) + ": value must be a prime power");
    return {static_cast<uint32_t>(p), e};
}

// Full box of exponents, with one axis optionally restricted to `restrict_to`.
std::vector<Exponent> box_exponents(const std::vector<uint32_t>& sizes, uint32_t special_axis,
                                    const std::vector<uint32_t>& restrict_to) {
    std::vector<std::vector<uint32_t>> per_axis(sizes.size());
    for (size_t j = 0; j < sizes.size(); ++j) {
        if (j + 1 == special_axis) {
            per_axis[j] = restrict_to;
        } else {
            for (uint32_t e = 0; e < sizes[j]; ++e) per_axis[j].push_back(e);
        }
    }
    std::vector<Exponent> out;
    Exponent cur(sizes.size(), 0);
    std::vector<size_t> idx(sizes.size(), 0);
    uint64_t total = 1;
    for (const auto& v : per_axis) total *= v.size();
    out.reserve(total);
    for (uint64_t c = 0; c < total; ++c) {
        for (size_t j = 0; j < sizes.size(); ++j) cur[j] = per_axis[j][idx[j]];
        out.push_back(cur);
        for (size_t j = sizes.size(); j-- > 0;) {
            if (++idx[j] < per_axis[j].size()) break;
            idx[j] = 0;
        }
    }
    return out;
}

void require(bool ok, const char* msg) {
    if (!ok) throw spec_error(msg);
}

// Shared sanity checks run on every constructed instance.
void finalize(FamilyInstance& inst, bool decreasing_family) {
    uint64_t vol = 1;
    for (uint32_t s : inst.grid.sizes) vol *= s;
    if (inst.profile.n != vol) throw spec_error("family: profile length disagrees with the grid");
    if (inst.delta.size() != inst.profile.k)
        throw spec_error("family: exponent count disagrees with the predicted dimension");
    if (decreasing_family) {
        if (!is_decreasing(inst.delta))
            throw spec_error("family: exponent set is not closed under divisibility");
        if (d0(inst.delta) != inst.profile.d)
            throw spec_error("family: footprint value disagrees with the predicted distance");
    } else {
        if (!is_closed(inst.delta))
            throw spec_error("family: exponent set is not closed under the p^h power map");
    }
    if (inst.profile.optimal) {
        inst.profile.defect = 0;
        if (singleton_defect(inst.profile.n, inst.profile.k, inst.profile.d, inst.profile.r,
                             inst.profile.delta) != 0)
            throw spec_error("family: optimal profile misses the bound with equality");
    }
}

void push_param(FamilyInstance& inst, const std::string& key, uint64_t value) {
    inst.params.emplace_back(key, std::to_string(value));
}

}  // namespace

int64_t singleton_defect(uint64_t n, uint64_t k, uint64_t d, uint64_t r, uint64_t delta) {
    if (n == 0 || k == 0 || d == 0 || r == 0 || delta == 0)
        throw spec_error("singleton_defect: all arguments must be positive");
    return int64_t(n) + 1 - int64_t(k) - int64_t(d) -
           int64_t(ceil_div(k, r) - 1) * (int64_t(delta) - 1);
}

bool is_optimal(uint64_t n, uint64_t k, uint64_t d, uint64_t r, uint64_t delta) {
    return singleton_defect(n, k, d, r, delta) == 0;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::rect1: return "rect1";
        case Family::rectelim2: return "rectelim2";
        case Family::rectelim2_sigma: return "rectelim2_sigma";
        case Family::rectp3: return "rectp3";
        case Family::rectp3_sigma: return "rectp3_sigma";
        case Family::hyper1: return "hyper1";
        case Family::hyperelim2: return "hyperelim2";
        case Family::sf_biv_q1: return "sf_biv_q1";
        case Family::sf_biv_q2: return "sf_biv_q2";
        case Family::sf_mult_q1: return "sf_mult_q1";
        case Family::sf_mult_q2: return "sf_mult_q2";
    }
    throw spec_error("family_name: unknown family");
}

FamilyInstance delta_rect(uint32_t n1, uint32_t n2, uint32_t i, uint32_t j) {
    require(n1 >= 2 && n2 >= 2, "rect1: axis lengths must be at least 2");
    require(i < n1 && j < n2, "rect1: corner exponent out of range");
    require(!(i == n1 - 1 && j == n2 - 1),
            "rect1: the full exponent box leaves no axis free for recovery");
    FamilyInstance inst;
    inst.family = Family::rect1;
    inst.grid = make_grid({n1, n2}, {});
    std::vector<Exponent> exps;
    for (uint32_t a = 0; a <= i; ++a)
        for (uint32_t b = 0; b <= j; ++b) exps.push_back({a, b});
    inst.delta = make_delta(inst.grid, std::move(exps));
    PredictedProfile& pr = inst.profile;
    pr.n = uint64_t(n1) * n2;
    pr.k = uint64_t(i + 1) * (j + 1);
    pr.d = uint64_t(n1 - i) * (n2 - j);
    if (i == 0 && j == 0) {
        pr.axis = n2 < n1 ? 2 : 1;
        pr.r = 1;
        pr.delta = pr.axis == 1 ? n1 : n2;
        pr.optimal = true;
    } else if (i == 0) {
        pr.axis = 1;
        pr.r = 1;
        pr.delta = n1;
        pr.optimal = true;
    } else if (j == 0) {
        pr.axis = 2;
        pr.r = 1;
        pr.delta = n2;
        pr.optimal = true;
    } else if (j == n2 - 1) {
        pr.axis = 1;
        pr.r = i + 1;
        pr.delta = n1 - i;
        pr.optimal = true;
    } else if (i == n1 - 1) {
        pr.axis = 2;
        pr.r = j + 1;
        pr.delta = n2 - j;
        pr.optimal = true;
    } else {
        // Interior pairs are never optimal; report the better of the two
        // axis certificates.
        int64_t d1 = singleton_defect(pr.n, pr.k, pr.d, i + 1, n1 - i);
        int64_t d2 = singleton_defect(pr.n, pr.k, pr.d, j + 1, n2 - j);
        if (d1 <= d2) {
            pr.axis = 1;
            pr.r = i + 1;
            pr.delta = n1 - i;
            pr.defect = d1;
        } else {
            pr.axis = 2;
            pr.r = j + 1;
            pr.delta = n2 - j;
            pr.defect = d2;
        }
        pr.optimal = false;
        if (pr.defect < 0) throw spec_error("rect1: negative defect, certificate broken");
    }
    inst.axis = pr.axis;
    push_param(inst, "n1", n1);
    push_param(inst, "n2", n2);
    push_param(inst, "i", i);
    push_param(inst, "j", j);
    finalize(inst, true);
    return inst;
}

FamilyInstance delta_rectelim(uint32_t n1, uint32_t n2, uint32_t i, uint32_t s, bool sigma) {
    require(n1 >= 2 && n2 >= 2, "rectelim2: axis lengths must be at least 2");
    uint32_t na = sigma ? n2 : n1;  // axis carrying the i cap and the distance
    uint32_t nb = sigma ? n1 : n2;  // axis whose top run is shortened
    require(i + 2 <= na, "rectelim2: need i at most n-2 on the capped axis");
    require(s < i, "rectelim2: need s strictly below i");
    require(int64_t(s) >= std::max<int64_t>(0, 2 * int64_t(i) - int64_t(na)),
            "rectelim2: s below the 2i-n threshold");
    FamilyInstance inst;
    inst.family = sigma ? Family::rectelim2_sigma : Family::rectelim2;
    inst.grid = make_grid({n1, n2}, {});
    std::vector<Exponent> exps;
    for (uint32_t a = 0; a <= i; ++a)
        for (uint32_t b = 0; b + 1 < nb; ++b)
            exps.push_back(sigma ? Exponent{b, a} : Exponent{a, b});
    for (uint32_t a = 0; a <= s; ++a)
        exps.push_back(sigma ? Exponent{nb - 1, a} : Exponent{a, nb - 1});
    inst.delta = make_delta(inst.grid, std::move(exps));
    PredictedProfile& pr = inst.profile;
    pr.n = uint64_t(n1) * n2;
    pr.k = uint64_t(i + 1) * (nb - 1) + s + 1;
    pr.d = na - s;
    pr.r = i + 1;
    pr.delta = na - i;
    pr.optimal = true;
    pr.axis = sigma ? 2 : 1;
    inst.axis = pr.axis;
    push_param(inst, "n1", n1);
    push_param(inst, "n2", n2);
    push_param(inst, "i", i);
    push_param(inst, "s", s);
    finalize(inst, true);
    return inst;
}

FamilyInstance delta_rectwithp(uint32_t n1, uint32_t n2, uint32_t i, uint32_t j, bool sigma) {
    require(n1 >= 2 && n2 >= 2, "rectp3: axis lengths must be at least 2");
    uint32_t na = sigma ? n2 : n1;  // axis carrying the i cap
    uint32_t nb = sigma ? n1 : n2;  // axis carrying the extra single exponent
    uint32_t ii = sigma ? j : i;    // cap on the a-axis
    uint32_t jj = sigma ? i : j;    // height of the extra exponent
    require(ii >= 1 && ii + 2 <= na, "rectp3: cap must satisfy 1 <= i <= n-2");
    require(jj >= 1 && jj + 2 <= nb, "rectp3: peak must satisfy 1 <= j <= n-2");
    require(int64_t(jj) * ii >= int64_t(ii) * (int64_t(nb) + 1) - int64_t(na),
            "rectp3: peak below the (i(n+1)-n')/i threshold");
    FamilyInstance inst;
    inst.family = sigma ? Family::rectp3_sigma : Family::rectp3;
    inst.grid = make_grid({n1, n2}, {});
    std::vector<Exponent> exps;
    for (uint32_t a = 0; a <= ii; ++a)
        for (uint32_t b = 0; b < jj; ++b) exps.push_back(sigma ? Exponent{b, a} : Exponent{a, b});
    exps.push_back(sigma ? Exponent{jj, 0} : Exponent{0, jj});
    inst.delta = make_delta(inst.grid, std::move(exps));
    PredictedProfile& pr = inst.profile;
    pr.n = uint64_t(n1) * n2;
    pr.k = uint64_t(ii + 1) * jj + 1;
    pr.d = uint64_t(na) * (nb - jj);
    pr.r = ii + 1;
    pr.delta = na - ii;
    pr.optimal = true;
    pr.axis = sigma ? 2 : 1;
    inst.axis = pr.axis;
    push_param(inst, "n1", n1);
    push_param(inst, "n2", n2);
    push_param(inst, "i", i);
    push_param(inst, "j", j);
    finalize(inst, true);
    return inst;
}

FamilyInstance delta_hyperrect(std::vector<uint32_t> sizes, uint32_t j0, uint32_t i) {
    require(sizes.size() >= 3, "hyper1: need at least three axes");
    require(j0 >= 1 && j0 <= sizes.size(), "hyper1: axis index out of range");
    uint32_t nj = sizes[j0 - 1];
    require(i + 2 <= nj, "hyper1: cap must be at most n-2 on the chosen axis");
    FamilyInstance inst;
    inst.family = Family::hyper1;
    inst.grid = make_grid(sizes, {});
    std::vector<uint32_t> cap;
    for (uint32_t e = 0; e <= i; ++e) cap.push_back(e);
    inst.delta = make_delta(inst.grid, box_exponents(sizes, j0, cap));
    uint64_t rest = 1;
    for (size_t j = 0; j < sizes.size(); ++j)
        if (j + 1 != j0) rest *= sizes[j];
    PredictedProfile& pr = inst.profile;
    pr.n = rest * nj;
    pr.k = rest * (i + 1);
    pr.d = nj - i;
    pr.r = i + 1;
    pr.delta = nj - i;
    pr.optimal = true;
    pr.axis = j0;
    inst.axis = j0;
    inst.params.emplace_back("sizes", join_u32(sizes));
    push_param(inst, "j0", j0);
    push_param(inst, "i", i);
    finalize(inst, true);
    return inst;
}

FamilyInstance delta_hyperrectelim(std::vector<uint32_t> sizes, uint32_t j0, uint32_t i,
                                   uint32_t s) {
    require(sizes.size() >= 3, "hyperelim2: need at least three axes");
    require(j0 >= 1 && j0 <= sizes.size(), "hyperelim2: axis index out of range");
    uint32_t nj = sizes[j0 - 1];
    require(i + 2 <= nj, "hyperelim2: cap must be at most n-2 on the chosen axis");
    if (!(i == 0 && s == 0)) {
        require(s >= 1 && s <= i, "hyperelim2: need 1 <= s <= i (or i = s = 0)");
        require(int64_t(s) >= 2 * int64_t(i) - int64_t(nj) + 1,
                "hyperelim2: s below the 2i-n+1 threshold");
    }
    FamilyInstance inst;
    inst.family = Family::hyperelim2;
    inst.grid = make_grid(sizes, {});
    std::vector<uint32_t> cap;
    for (uint32_t e = 0; e <= i; ++e) cap.push_back(e);
    std::vector<Exponent> exps = box_exponents(sizes, j0, cap);
    Exponent corner(sizes.size());
    for (size_t j = 0; j < sizes.size(); ++j) corner[j] = sizes[j] - 1;
    std::set<Exponent> removed;
    for (uint32_t e = s; e <= i; ++e) {
        Exponent x = corner;
        x[j0 - 1] = e;
        removed.insert(x);
    }
    exps.erase(std::remove_if(exps.begin(), exps.end(),
                              [&](const Exponent& e) { return removed.count(e) > 0; }),
               exps.end());
    inst.delta = make_delta(inst.grid, std::move(exps));
    uint64_t rest = 1;
    for (size_t j = 0; j < sizes.size(); ++j)
        if (j + 1 != j0) rest *= sizes[j];
    PredictedProfile& pr = inst.profile;
    pr.n = rest * nj;
    pr.k = rest * (i + 1) - (i - s + 1);
    pr.d = s >= 1 ? uint64_t(nj) - s + 1 : 2 * uint64_t(nj);
    pr.r = i + 1;
    pr.delta = nj - i;
    pr.optimal = true;
    pr.axis = j0;
    inst.axis = j0;
    inst.params.emplace_back("sizes", join_u32(sizes));
    push_param(inst, "j0", j0);
    push_param(inst, "i", i);
    push_param(inst, "s", s);
    finalize(inst, true);
    return inst;
}

namespace {

// Shared field checks for the p^h+1 torus-axis families.
struct SubfieldSetup {
    uint32_t p = 0, l = 0, h = 0;
    uint64_t q = 0, ph = 0;
};

SubfieldSetup q1_setup(uint64_t ph, uint64_t q) {
    SubfieldSetup st;
    PrimePower f1 = factor_prime_power(ph, "sf_biv_q1");
    PrimePower f2 = factor_prime_power(q, "sf_biv_q1");
    require(f1.p == f2.p, "sf_biv_q1: p^h and q must share the characteristic");
    st.p = f1.p;
    st.h = f1.e;
    st.l = f2.e;
    st.q = q;
    st.ph = ph;
    require(st.l % st.h == 0, "sf_biv_q1: h must divide l");
    if (st.p == 2)
        require(ph >= 4, "sf_biv_q1: need p^h at least 4 in characteristic 2");
    else
        require(ph >= 5, "sf_biv_q1: need p^h at least 5 in odd characteristic");
    require((q - 1) % (ph + 1) == 0, "sf_biv_q1: p^h+1 must divide q-1");
    return st;
}

void check_zt(uint64_t ph, int64_t z, int64_t t, bool need_t, const char* who) {
    require(z >= 1, (std::string(who) + ": z must be at least 1").c_str());
    require(z <= int64_t(ph / 2) - 1,
            (std::string(who) + ": z exceeds floor(p^h/2)-1").c_str());
    if (need_t) {
        require(t >= 0 && t < z, (std::string(who) + ": need 0 <= t < z").c_str());
        require(2 * t >= std::max<int64_t>(0, 4 * z - int64_t(ph) - 1),
                (std::string(who) + ": 2t below the 4z-p^h-1 threshold").c_str());
    }
}

void check_uv(uint32_t p, uint64_t ph, int64_t u, int64_t v, bool need_v, const char* who) {
    require(p == 2, (std::string(who) + ": the centered windows need characteristic 2").c_str());
    require(u >= 0 && u <= int64_t(ph / 2) - 2,
            (std::string(who) + ": u exceeds p^h/2-2").c_str());
    if (need_v) {
        require(u >= 1, (std::string(who) + ": v needs u at least 1").c_str());
        require(v >= 0 && v < u, (std::string(who) + ": need 0 <= v < u").c_str());
        require(2 * v + 1 >= std::max<int64_t>(0, 4 * u + 1 - int64_t(ph)),
                (std::string(who) + ": 2v+1 below the 4u+1-p^h threshold").c_str());
    }
}

Exponent orient(uint32_t axis, uint32_t special, uint32_t other) {
    return axis == 1 ? Exponent{special, other} : Exponent{other, special};
}

}  // namespace

FamilyInstance sf_biv_q1(const SfBivQ1Args& a) {
    require(a.cse >= 1 && a.cse <= 6, "sf_biv_q1: case must be 1..6");
    require(a.axis == 1 || a.axis == 2, "sf_biv_q1: axis must be 1 or 2");
    require(a.nprime >= 2, "sf_biv_q1: companion axis needs at least 2 points");
    SubfieldSetup st = q1_setup(a.ph, a.q);
    uint32_t np = a.nprime;
    bool other_in_j = (a.cse == 1 || a.cse == 4);
    if (other_in_j)
        require((st.q - 1) % np == 0, "sf_biv_q1: n' must divide q-1 for this case");
    else
        require((st.q - 1) % (np - 1) == 0, "sf_biv_q1: n'-1 must divide q-1 for this case");
    if (a.cse == 3 && st.p != 2)
        require(std::gcd<uint64_t>(np, st.ph) != 1 || std::gcd<uint64_t>(np, st.ph + 1) != 1,
                "sf_biv_q1: case 3 needs n' to share a factor with p^h or p^h+1");
    uint64_t aa = 0;  // distance correction from the removal window, 2(z-t) or 2(u-v)
    std::vector<uint32_t> main_rows, last_rows;
    bool split_last = false;
    if (a.cse <= 3) {
        check_zt(st.ph, a.z, a.t, a.cse == 3, "sf_biv_q1");
        main_rows = omega_a(static_cast<uint32_t>(st.ph), static_cast<uint32_t>(a.z));
        if (a.cse == 3) {
            last_rows = omega_a(static_cast<uint32_t>(st.ph), static_cast<uint32_t>(a.t));
            split_last = true;
            aa = uint64_t(a.t);
        } else {
            aa = uint64_t(a.z);
        }
    } else {
        check_uv(st.p, st.ph, a.u, a.v, a.cse == 6, "sf_biv_q1");
        main_rows = omega_star_b(static_cast<uint32_t>(st.ph), static_cast<uint32_t>(a.u));
        if (a.cse == 6) {
            last_rows = omega_star_b(static_cast<uint32_t>(st.ph), static_cast<uint32_t>(a.v));
            split_last = true;
            aa = uint64_t(a.v);
        } else {
            aa = uint64_t(a.u);
        }
    }
    FamilyInstance inst;
    inst.family = Family::sf_biv_q1;
    inst.cse = a.cse;
    inst.p = st.p;
    inst.l = st.l;
    inst.h = st.h;
    inst.axis = a.axis;
    uint32_t n_special = static_cast<uint32_t>(st.ph) + 1;
    std::vector<uint32_t> sizes =
        a.axis == 1 ? std::vector<uint32_t>{n_special, np} : std::vector<uint32_t>{np, n_special};
    std::vector<uint32_t> j_axes = {a.axis};
    if (other_in_j) j_axes.push_back(a.axis == 1 ? 2 : 1);
    inst.grid = make_grid(sizes, j_axes, static_cast<uint32_t>(st.ph));
    std::vector<Exponent> exps;
    uint32_t cols = split_last ? np - 1 : np;
    for (uint32_t w : main_rows)
        for (uint32_t c = 0; c < cols; ++c) exps.push_back(orient(a.axis, w, c));
    if (split_last)
        for (uint32_t w : last_rows) exps.push_back(orient(a.axis, w, np - 1));
    inst.delta = make_delta(inst.grid, std::move(exps));
    PredictedProfile& pr = inst.profile;
    pr.n = (st.ph + 1) * uint64_t(np);
    if (a.cse <= 3) {
        pr.k = uint64_t(np - 1) * (2 * a.z + 1) + 2 * aa + 1;
        pr.d = st.ph + 1 - 2 * aa;
        pr.r = static_cast<uint32_t>(2 * a.z + 1);
        pr.delta = static_cast<uint32_t>(st.ph - 2 * a.z + 1);
    } else {
        pr.k = uint64_t(np - 1) * (2 * a.u + 2) + 2 * aa + 2;
        pr.d = st.ph - 2 * aa;
        pr.r = static_cast<uint32_t>(2 * a.u + 2);
        pr.delta = static_cast<uint32_t>(st.ph - 2 * a.u);
    }
    pr.optimal = true;
    pr.axis = a.axis;
    push_param(inst, "case", uint64_t(a.cse));
    push_param(inst, "np", np);
    if (a.cse <= 2) {
        push_param(inst, "z", uint64_t(a.z));
    } else if (a.cse == 3) {
        push_param(inst, "z", uint64_t(a.z));
        push_param(inst, "t", uint64_t(a.t));
    } else if (a.cse <= 5) {
        push_param(inst, "u", uint64_t(a.u));
    } else {
        push_param(inst, "u", uint64_t(a.u));
        push_param(inst, "v", uint64_t(a.v));
    }
    finalize(inst, false);
    return inst;
}

FamilyInstance sf_biv_q2(const SfBivQ2Args& a) {
    require(a.cse >= 1 && a.cse <= 8, "sf_biv_q2: case must be 1..8");
    require(a.axis == 1 || a.axis == 2, "sf_biv_q2: axis must be 1 or 2");
    require(a.h >= 2, "sf_biv_q2: need h at least 2");
    require(a.nprime >= 2, "sf_biv_q2: companion axis needs at least 2 points");
    uint32_t l = a.l ? a.l : 2 * a.h;
    require(l % (2 * a.h) == 0, "sf_biv_q2: 2h must divide l so that 2^h+1 divides q-1");
    require(l <= 20, "sf_biv_q2: field too large");
    uint64_t q = uint64_t(1) << l;
    uint64_t ph = uint64_t(1) << a.h;
    uint32_t np = a.nprime;
    // Divisibility clause per case; J marks the companion axis when its full
    // length divides q-1.
    bool other_in_j = false;
    switch (a.cse) {
        case 1:
        case 3:
            require((q - 1) % np == 0, "sf_biv_q2: n' must divide q-1 for this case");
            other_in_j = true;
            break;
        case 2:
        case 4:
        case 7:
        case 8:
            require((q - 1) % (np - 1) == 0, "sf_biv_q2: n'-1 must divide q-1 for this case");
            break;
        case 5:
            require((ph - 1) % np == 0, "sf_biv_q2: n' must divide 2^h-1 for this case");
            other_in_j = true;
            break;
        case 6:
            require((ph - 1) % (np - 1) == 0, "sf_biv_q2: n'-1 must divide 2^h-1 for this case");
            break;
    }
    int64_t jv = a.j;
    if (a.cse >= 5 && a.cse <= 7) {
        require(jv >= 1, "sf_biv_q2: peak column j must be at least 1");
        int64_t lo = std::max<int64_t>(1, int64_t(np) - int64_t(ph / 2));
        require(jv >= lo, "sf_biv_q2: j below the n'-2^{h-1} threshold");
        if (a.cse == 5) require(jv <= int64_t(np) - 1, "sf_biv_q2: j exceeds n'-1");
        if (a.cse == 6) require(jv <= int64_t(np) - 2, "sf_biv_q2: j exceeds n'-2");
        if (a.cse == 7) require(jv == int64_t(np) - 1, "sf_biv_q2: this case fixes j = n'-1");
    }
    if (a.cse == 8) {
        require(a.z >= 2 && a.z <= 3, "sf_biv_q2: z must be 2 or 3");
        require(int64_t(ph) - 2 * a.z + 1 >= std::max<int64_t>(0, int64_t(ph) - 6),
                "sf_biv_q2: z too large for this h");
    }
    FamilyInstance inst;
    inst.family = Family::sf_biv_q2;
    inst.cse = a.cse;
    inst.p = 2;
    inst.l = l;
    inst.h = a.h;
    inst.axis = a.axis;
    uint32_t n_special = static_cast<uint32_t>(ph) + 2;
    std::vector<uint32_t> sizes =
        a.axis == 1 ? std::vector<uint32_t>{n_special, np} : std::vector<uint32_t>{np, n_special};
    std::vector<uint32_t> j_axes;
    if (other_in_j) j_axes.push_back(a.axis == 1 ? 2 : 1);
    inst.grid = make_grid(sizes, j_axes, static_cast<uint32_t>(ph));
    std::vector<Exponent> exps;
    PredictedProfile& pr = inst.profile;
    pr.n = (ph + 2) * uint64_t(np);
    switch (a.cse) {
        case 1:
        case 2:
            for (uint32_t w : omega_3pt(a.h))
                for (uint32_t c = 0; c < np; ++c) exps.push_back(orient(a.axis, w, c));
            pr.k = 3 * uint64_t(np);
            pr.d = ph;
            pr.r = 3;
            pr.delta = static_cast<uint32_t>(ph);
            break;
        case 3:
        case 4:
            for (uint32_t w : omega_perp(a.h))
                for (uint32_t c = 0; c < np; ++c) exps.push_back(orient(a.axis, w, c));
            pr.k = (ph - 1) * uint64_t(np);
            pr.d = 4;
            pr.r = static_cast<uint32_t>(ph) - 1;
            pr.delta = 4;
            break;
        case 5:
        case 6:
        case 7:
            for (uint32_t w : omega_3pt(a.h))
                for (uint32_t c = 0; c < uint32_t(jv); ++c) exps.push_back(orient(a.axis, w, c));
            exps.push_back(orient(a.axis, 0, uint32_t(jv)));
            pr.k = 3 * uint64_t(jv) + 1;
            pr.d = (ph + 2) * (uint64_t(np) - uint64_t(jv));
            pr.r = 3;
            pr.delta = static_cast<uint32_t>(ph);
            break;
        case 8:
            for (uint32_t w : omega_perp(a.h))
                for (uint32_t c = 0; c + 1 < np; ++c) exps.push_back(orient(a.axis, w, c));
            for (uint32_t w : omega_star_z(a.h, static_cast<uint32_t>(a.z)))
                exps.push_back(orient(a.axis, w, np - 1));
            pr.k = (ph - 1) * uint64_t(np - 1) + ph - 2 * a.z + 2;
            pr.d = 2 * a.z + 1;
            pr.r = static_cast<uint32_t>(ph) - 1;
            pr.delta = 4;
            break;
    }
    inst.delta = make_delta(inst.grid, std::move(exps));
    pr.optimal = true;
    pr.axis = a.axis;
    push_param(inst, "case", uint64_t(a.cse));
    push_param(inst, "np", np);
    if (a.cse >= 5 && a.cse <= 7) push_param(inst, "j", uint64_t(jv));
    if (a.cse == 8) push_param(inst, "z", uint64_t(a.z));
    finalize(inst, false);
    return inst;
}

namespace {

// Membership split for the non-special axes of the multivariate families.
// Axes in S1 keep their full length dividing q-1 (and join J); the others
// need length-1 dividing q-1.
std::vector<uint8_t> split_axes(const std::vector<uint32_t>& others,
                                const std::vector<uint32_t>& s1, bool s1_given, bool force_empty,
                                uint64_t q, const char* who) {
    std::vector<uint8_t> in_s1(others.size(), 0);
    if (force_empty) {
        if (s1_given && !s1.empty())
            throw spec_error(std::string(who) + ": this case needs S1 empty");
        for (size_t t = 0; t < others.size(); ++t)
            if ((q - 1) % (others[t] - 1) != 0)
                throw spec_error(std::string(who) +
                                 ": every companion axis needs length-1 dividing q-1");
        return in_s1;
    }
    if (s1_given) {
        for (uint32_t idx : s1) {
            if (idx < 1 || idx > others.size())
                throw spec_error(std::string(who) + ": S1 index out of range");
            if (in_s1[idx - 1]) throw spec_error(std::string(who) + ": duplicate S1 index");
            in_s1[idx - 1] = 1;
        }
        for (size_t t = 0; t < others.size(); ++t) {
            if (in_s1[t]) {
                if ((q - 1) % others[t] != 0)
                    throw spec_error(std::string(who) + ": S1 axis length must divide q-1");
            } else if ((q - 1) % (others[t] - 1) != 0) {
                throw spec_error(std::string(who) + ": S2 axis needs length-1 dividing q-1");
            }
        }
    } else {
        for (size_t t = 0; t < others.size(); ++t) {
            if ((q - 1) % others[t] == 0)
                in_s1[t] = 1;
            else if ((q - 1) % (others[t] - 1) != 0)
                throw spec_error(std::string(who) +
                                 ": axis length nor length-1 divides q-1");
        }
    }
    return in_s1;
}

std::vector<Exponent> product_with_removal(const std::vector<uint32_t>& sizes, uint32_t j0,
                                           const std::vector<uint32_t>& rows_j0,
                                           const std::vector<uint32_t>& removed_window) {
    std::vector<Exponent> exps = box_exponents(sizes, j0, rows_j0);
    if (!removed_window.empty()) {
        std::set<Exponent> removed;
        Exponent corner(sizes.size());
        for (size_t j = 0; j < sizes.size(); ++j) corner[j] = sizes[j] - 1;
        for (uint32_t e : removed_window) {
            Exponent x = corner;
            x[j0 - 1] = e;
            removed.insert(x);
        }
        exps.erase(std::remove_if(exps.begin(), exps.end(),
                                  [&](const Exponent& e) { return removed.count(e) > 0; }),
                   exps.end());
    }
    return exps;
}

}  // namespace

FamilyInstance sf_mult_q1(const SfMultQ1Args& a) {
    require(a.cse >= 1 && a.cse <= 4, "sf_mult_q1: case must be 1..4");
    require(a.others.size() >= 2, "sf_mult_q1: need at least three axes in total");
    uint32_t m = static_cast<uint32_t>(a.others.size()) + 1;
    require(a.j0 >= 1 && a.j0 <= m, "sf_mult_q1: axis index out of range");
    for (uint32_t n : a.others) require(n >= 2, "sf_mult_q1: axis lengths must be at least 2");
    SubfieldSetup st = q1_setup(a.ph, a.q);
    bool removal_case = (a.cse == 2 || a.cse == 4);
    std::vector<uint8_t> in_s1 =
        split_axes(a.others, a.s1, a.s1_given, removal_case, st.q, "sf_mult_q1");
    uint64_t aa = 0;
    std::vector<uint32_t> rows, window;
    if (a.cse <= 2) {
        check_zt(st.ph, a.z, a.t, a.cse == 2, "sf_mult_q1");
        rows = omega_a(static_cast<uint32_t>(st.ph), static_cast<uint32_t>(a.z));
        if (a.cse == 2) {
            window = oset_zt(static_cast<uint32_t>(st.ph), static_cast<uint32_t>(a.z),
                             static_cast<uint32_t>(a.t));
            aa = 2 * uint64_t(a.z - a.t);
        }
    } else {
        check_uv(st.p, st.ph, a.u, a.v, a.cse == 4, "sf_mult_q1");
        rows = omega_star_b(static_cast<uint32_t>(st.ph), static_cast<uint32_t>(a.u));
        if (a.cse == 4) {
            window = oset_uv(static_cast<uint32_t>(st.ph), static_cast<uint32_t>(a.u),
                             static_cast<uint32_t>(a.v));
            aa = 2 * uint64_t(a.u - a.v);
        }
    }
    if (a.cse == 2 && st.p != 2) {
        uint64_t prod = vec_prod(a.others);
        require(std::gcd(prod, st.ph) != 1 || std::gcd(prod, st.ph + 1) != 1,
                "sf_mult_q1: case 2 needs the companion volume to share a factor with p^h or "
                "p^h+1");
    }
    FamilyInstance inst;
    inst.family = Family::sf_mult_q1;
    inst.cse = a.cse;
    inst.p = st.p;
    inst.l = st.l;
    inst.h = st.h;
    inst.axis = a.j0;
    std::vector<uint32_t> sizes;
    std::vector<uint32_t> j_axes = {a.j0};
    for (uint32_t t = 0, g = 1; t <= a.others.size(); ++g) {
        if (g == a.j0) {
            sizes.push_back(static_cast<uint32_t>(st.ph) + 1);
        } else {
            sizes.push_back(a.others[t]);
            if (in_s1[t]) j_axes.push_back(g);
            ++t;
        }
        if (sizes.size() == a.others.size() + 1) break;
    }
    inst.grid = make_grid(sizes, j_axes, static_cast<uint32_t>(st.ph));
    inst.delta = make_delta(inst.grid, product_with_removal(sizes, a.j0, rows, window));
    uint64_t rest = vec_prod(a.others);
    PredictedProfile& pr = inst.profile;
    pr.n = (st.ph + 1) * rest;
    if (a.cse <= 2) {
        pr.k = (2 * uint64_t(a.z) + 1) * rest - aa;
        pr.d = st.ph + 1 - 2 * uint64_t(a.z) + aa;
        pr.r = static_cast<uint32_t>(2 * a.z + 1);
        pr.delta = static_cast<uint32_t>(st.ph - 2 * a.z + 1);
    } else {
        pr.k = (2 * uint64_t(a.u) + 2) * rest - aa;
        pr.d = st.ph - 2 * uint64_t(a.u) + aa;
        pr.r = static_cast<uint32_t>(2 * a.u + 2);
        pr.delta = static_cast<uint32_t>(st.ph - 2 * a.u);
    }
    pr.optimal = true;
    pr.axis = a.j0;
    push_param(inst, "case", uint64_t(a.cse));
    inst.params.emplace_back("sizes", join_u32(a.others));
    std::vector<uint32_t> s1_list;
    for (size_t t = 0; t < in_s1.size(); ++t)
        if (in_s1[t]) s1_list.push_back(static_cast<uint32_t>(t) + 1);
    if (!s1_list.empty()) inst.params.emplace_back("s1", join_u32(s1_list));
    if (a.cse <= 2) {
        push_param(inst, "z", uint64_t(a.z));
        if (a.cse == 2) push_param(inst, "t", uint64_t(a.t));
    } else {
        push_param(inst, "u", uint64_t(a.u));
        if (a.cse == 4) push_param(inst, "v", uint64_t(a.v));
    }
    finalize(inst, false);
    return inst;
}

FamilyInstance sf_mult_q2(const SfMultQ2Args& a) {
    require(a.cse >= 1 && a.cse <= 4, "sf_mult_q2: case must be 1..4");
    require(a.others.size() >= 2, "sf_mult_q2: need at least three axes in total");
    uint32_t m = static_cast<uint32_t>(a.others.size()) + 1;
    require(a.j0 >= 1 && a.j0 <= m, "sf_mult_q2: axis index out of range");
    for (uint32_t n : a.others) require(n >= 2, "sf_mult_q2: axis lengths must be at least 2");
    require(a.h >= 2, "sf_mult_q2: need h at least 2");
    uint32_t l = 2 * a.h;
    require(l <= 20, "sf_mult_q2: field too large");
    uint64_t q = uint64_t(1) << l;
    uint64_t ph = uint64_t(1) << a.h;
    bool removal_case = (a.cse == 3 || a.cse == 4);
    std::vector<uint8_t> in_s1 =
        split_axes(a.others, a.s1, a.s1_given, removal_case, q, "sf_mult_q2");
    std::vector<uint32_t> rows, window;
    uint64_t ka = 0, kb = 0, kc = 0;
    switch (a.cse) {
        case 1:
            rows = omega_3pt(a.h);
            ka = 3;
            kc = ph;
            break;
        case 2:
            rows = omega_perp(a.h);
            ka = ph - 1;
            kc = 4;
            break;
        case 3:
            rows = omega_3pt(a.h);
            window = {1, static_cast<uint32_t>(ph)};
            ka = 3;
            kb = 2;
            kc = ph;
            break;
        case 4:
            require(a.z >= 2 && a.z <= 3, "sf_mult_q2: z must be 2 or 3");
            require(int64_t(ph) - 2 * a.z + 1 >= std::max<int64_t>(0, int64_t(ph) - 6),
                    "sf_mult_q2: z too large for this h");
            rows = omega_perp(a.h);
            window = a.z == 2 ? std::vector<uint32_t>{0}
                              : std::vector<uint32_t>{0, 2, static_cast<uint32_t>(ph) - 1};
            ka = ph - 1;
            kb = 2 * uint64_t(a.z) - 3;
            kc = 4;
            break;
    }
    FamilyInstance inst;
    inst.family = Family::sf_mult_q2;
    inst.cse = a.cse;
    inst.p = 2;
    inst.l = l;
    inst.h = a.h;
    inst.axis = a.j0;
    std::vector<uint32_t> sizes;
    std::vector<uint32_t> j_axes;
    for (uint32_t t = 0, g = 1; t <= a.others.size(); ++g) {
        if (g == a.j0) {
            sizes.push_back(static_cast<uint32_t>(ph) + 2);
        } else {
            sizes.push_back(a.others[t]);
            if (in_s1[t]) j_axes.push_back(g);
            ++t;
        }
        if (sizes.size() == a.others.size() + 1) break;
    }
    inst.grid = make_grid(sizes, j_axes, static_cast<uint32_t>(ph));
    inst.delta = make_delta(inst.grid, product_with_removal(sizes, a.j0, rows, window));
    uint64_t rest = vec_prod(a.others);
    PredictedProfile& pr = inst.profile;
    pr.n = (ph + 2) * rest;
    pr.k = ka * rest - kb;
    pr.d = kc + kb;
    pr.r = static_cast<uint32_t>(ka);
    pr.delta = static_cast<uint32_t>(kc);
    pr.optimal = true;
    pr.axis = a.j0;
    push_param(inst, "case", uint64_t(a.cse));
    inst.params.emplace_back("sizes", join_u32(a.others));
    std::vector<uint32_t> s1_list;
    for (size_t t = 0; t < in_s1.size(); ++t)
        if (in_s1[t]) s1_list.push_back(static_cast<uint32_t>(t) + 1);
    if (!s1_list.empty()) inst.params.emplace_back("s1", join_u32(s1_list));
    if (a.cse == 4) push_param(inst, "z", uint64_t(a.z));
    finalize(inst, false);
    return inst;
}

FamilyInstance with_field(FamilyInstance inst, uint32_t p, uint32_t l) {
    if (inst.p != 0 && (inst.p != p || inst.l != l))
        throw spec_error("with_field: instance already carries a different field");
    inst.p = p;
    inst.l = l;
    return inst;
}

std::string serialize_family(const FamilyInstance& inst) {
    if (inst.p == 0) throw spec_error("serialize_family: attach a field first");
    std::ostringstream os;
    os << "family=" << family_name(inst.family) << " p=" << inst.p << " l=" << inst.l
       << " h=" << inst.h << " axis=" << inst.axis;
    for (const auto& [k, v] : inst.params) os << " " << k << "=" << v;
    return os.str();
}

namespace {

std::vector<uint32_t> parse_u32_list(const std::string& s, const char* who) {
    std::vector<uint32_t> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw spec_error(std::string(who) + ": empty list entry");
            out.push_back(static_cast<uint32_t>(std::stoul(cur)));
            cur.clear();
        } else if (ch >= '0' && ch <= '9') {
            cur += ch;
        } else {
            throw spec_error(std::string(who) + ": bad list character");
        }
    }
    return out;
}

struct KvMap {
    std::vector<std::pair<std::string, std::string>> kv;

    bool has(const std::string& k) const {
        for (const auto& [key, val] : kv)
            if (key == k) return true;
        return false;
    }
    std::string get(const std::string& k) const {
        for (const auto& [key, val] : kv)
            if (key == k) return val;
        throw spec_error("descriptor: missing key " + k);
    }
    int64_t get_int(const std::string& k) const {
        const std::string v = get(k);
        size_t pos = 0;
        long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw spec_error("descriptor: bad integer for key " + k);
        return x;
    }
    int64_t get_int_or(const std::string& k, int64_t dflt) const {
        return has(k) ? get_int(k) : dflt;
    }
};

uint64_t ipow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

FamilyInstance parse_family(const std::string& descriptor) {
    KvMap kv;
    std::istringstream is(descriptor);
    std::string tok;
    while (is >> tok) {
        size_t eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            throw spec_error("descriptor: expected key=value tokens");
        kv.kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    if (kv.kv.empty() || kv.kv.front().first != "family")
        throw spec_error("descriptor: must start with family=<name>");
    std::string name = kv.get("family");
    uint32_t p = static_cast<uint32_t>(kv.get_int("p"));
    uint32_t l = static_cast<uint32_t>(kv.get_int("l"));
    uint32_t h = static_cast<uint32_t>(kv.get_int("h"));
    uint32_t axis = static_cast<uint32_t>(kv.get_int("axis"));
    FamilyInstance inst;
    if (name == "rect1" || name == "rectelim2" || name == "rectelim2_sigma" || name == "rectp3" ||
        name == "rectp3_sigma" || name == "hyper1" || name == "hyperelim2") {
        if (h != 0) throw spec_error("descriptor: h must be 0 for the decreasing families");
        if (name == "rect1") {
            inst = delta_rect(static_cast<uint32_t>(kv.get_int("n1")),
                              static_cast<uint32_t>(kv.get_int("n2")),
                              static_cast<uint32_t>(kv.get_int("i")),
                              static_cast<uint32_t>(kv.get_int("j")));
        } else if (name == "rectelim2" || name == "rectelim2_sigma") {
            inst = delta_rectelim(static_cast<uint32_t>(kv.get_int("n1")),
                                  static_cast<uint32_t>(kv.get_int("n2")),
                                  static_cast<uint32_t>(kv.get_int("i")),
                                  static_cast<uint32_t>(kv.get_int("s")),
                                  name == "rectelim2_sigma");
        } else if (name == "rectp3" || name == "rectp3_sigma") {
            inst = delta_rectwithp(static_cast<uint32_t>(kv.get_int("n1")),
                                   static_cast<uint32_t>(kv.get_int("n2")),
                                   static_cast<uint32_t>(kv.get_int("i")),
                                   static_cast<uint32_t>(kv.get_int("j")),
                                   name == "rectp3_sigma");
        } else if (name == "hyper1") {
            inst = delta_hyperrect(parse_u32_list(kv.get("sizes"), "descriptor"),
                                   static_cast<uint32_t>(kv.get_int("j0")),
                                   static_cast<uint32_t>(kv.get_int("i")));
        } else {
            inst = delta_hyperrectelim(parse_u32_list(kv.get("sizes"), "descriptor"),
                                       static_cast<uint32_t>(kv.get_int("j0")),
                                       static_cast<uint32_t>(kv.get_int("i")),
                                       static_cast<uint32_t>(kv.get_int("s")));
        }
        inst = with_field(std::move(inst), p, l);
    } else if (name == "sf_biv_q1") {
        SfBivQ1Args a;
        a.cse = static_cast<int>(kv.get_int("case"));
        a.axis = axis;
        a.ph = ipow(p, h);
        a.q = ipow(p, l);
        a.nprime = static_cast<uint32_t>(kv.get_int("np"));
        a.z = kv.get_int_or("z", -1);
        a.t = kv.get_int_or("t", -1);
        a.u = kv.get_int_or("u", -1);
        a.v = kv.get_int_or("v", -1);
        inst = sf_biv_q1(a);
    } else if (name == "sf_biv_q2") {
        SfBivQ2Args a;
        a.cse = static_cast<int>(kv.get_int("case"));
        a.axis = axis;
        a.h = h;
        a.l = l;
        a.nprime = static_cast<uint32_t>(kv.get_int("np"));
        a.z = kv.get_int_or("z", -1);
        a.j = kv.get_int_or("j", -1);
        if (p != 2) throw spec_error("descriptor: sf_biv_q2 needs characteristic 2");
        inst = sf_biv_q2(a);
    } else if (name == "sf_mult_q1") {
        SfMultQ1Args a;
        a.cse = static_cast<int>(kv.get_int("case"));
        a.j0 = axis;
        a.ph = ipow(p, h);
        a.q = ipow(p, l);
        a.others = parse_u32_list(kv.get("sizes"), "descriptor");
        if (kv.has("s1")) {
            a.s1 = parse_u32_list(kv.get("s1"), "descriptor");
            a.s1_given = true;
        }
        a.z = kv.get_int_or("z", -1);
        a.t = kv.get_int_or("t", -1);
        a.u = kv.get_int_or("u", -1);
        a.v = kv.get_int_or("v", -1);
        inst = sf_mult_q1(a);
    } else if (name == "sf_mult_q2") {
        SfMultQ2Args a;
        a.cse = static_cast<int>(kv.get_int("case"));
        a.j0 = axis;
        a.h = h;
        a.others = parse_u32_list(kv.get("sizes"), "descriptor");
        if (kv.has("s1")) {
            a.s1 = parse_u32_list(kv.get("s1"), "descriptor");
            a.s1_given = true;
        }
        a.z = kv.get_int_or("z", -1);
        if (p != 2) throw spec_error("descriptor: sf_mult_q2 needs characteristic 2");
        if (l != 2 * h) throw spec_error("descriptor: sf_mult_q2 needs l = 2h");
        inst = sf_mult_q2(a);
    } else {
        throw spec_error("descriptor: unknown family " + name);
    }
    if (inst.p != p || inst.l != l)
        throw spec_error("descriptor: field does not match the family's requirements");
    if (inst.axis != axis) throw spec_error("descriptor: axis does not match the construction");
    return inst;
}

PredictedProfile predict_only(const std::string& descriptor) {
    return parse_family(descriptor).profile;
}

namespace {

bool is_prime_power_le(uint64_t x) {
    if (x < 2 || x > (uint64_t(1) << 20)) return false;
    try {
        factor_prime_power(x, "catalog");
        return true;
    } catch (const spec_error&) {
        return false;
    }
}

// Smallest prime power that fits every axis, so the first-n-points domain
// exists.
void attach_smallest_field(FamilyInstance& inst) {
    uint32_t need = 0;
    for (uint32_t s : inst.grid.sizes) need = std::max(need, s);
    for (uint64_t q = std::max<uint32_t>(2, need);; ++q) {
        if (!is_prime_power_le(q)) continue;
        PrimePower f = factor_prime_power(q, "catalog");
        inst.p = f.p;
        inst.l = f.e;
        return;
    }
}

void add_entry(std::vector<FamilyInstance>& out, std::set<std::array<uint64_t, 5>>& seen,
               FamilyInstance inst) {
    if (inst.p == 0) attach_smallest_field(inst);
    std::array<uint64_t, 5> key = {inst.profile.n, inst.profile.k, inst.profile.d,
                                   inst.profile.r, inst.profile.delta};
    if (!seen.insert(key).second) return;
    out.push_back(std::move(inst));
}

template <typename Fn>
void try_add(std::vector<FamilyInstance>& out, std::set<std::array<uint64_t, 5>>& seen, Fn fn) {
    try {
        add_entry(out, seen, fn());
    } catch (const spec_error&) {
        // Parameter combination outside the construction's hypotheses.
    }
}

std::vector<FamilyInstance> preset_table1() {
    std::vector<FamilyInstance> v;
    v.push_back(sf_biv_q1({3, 1, 5, 25, 25, 1, 0, -1, -1}));
    v.push_back(sf_biv_q1({1, 1, 7, 49, 48, 1, -1, -1, -1}));
    v.push_back(sf_biv_q1({5, 1, 4, 16, 16, -1, -1, 0, -1}));
    v.push_back(sf_biv_q1({3, 1, 8, 64, 22, 2, 0, -1, -1}));
    v.push_back(sf_biv_q2({6, 1, 3, 8, -1, 5, 0}));
    v.push_back(sf_biv_q2({7, 1, 2, 18, -1, 17, 8}));
    return v;
}

std::vector<FamilyInstance> preset_table2() {
    std::vector<FamilyInstance> v;
    v.push_back(sf_mult_q1({1, 1, 5, 625, {5, 16}, {}, false, 1, -1, -1, -1}));
    v.push_back(sf_mult_q1({2, 1, 4, 16, {4, 4, 4}, {}, false, 1, 0, -1, -1}));
    v.push_back(sf_mult_q1({4, 1, 8, 64, {8, 10}, {}, false, -1, -1, 2, 0}));
    v.push_back(sf_mult_q2({1, 1, 2, {5, 5, 6}, {}, false, -1}));
    v.push_back(sf_mult_q2({4, 1, 2, {6, 16}, {}, false, 2}));
    return v;
}

std::vector<FamilyInstance> preset_examples() {
    std::vector<FamilyInstance> v;
    v.push_back(sf_biv_q1({3, 2, 5, 25, 9, 1, 0, -1, -1}));
    v.push_back(sf_biv_q1({2, 2, 7, 49, 17, 2, -1, -1, -1}));
    v.push_back(sf_biv_q1({3, 1, 9, 81, 21, 3, 1, -1, -1}));
    v.push_back(sf_biv_q2({1, 1, 2, 15, -1, -1, 0}));
    v.push_back(sf_biv_q2({6, 2, 3, 8, -1, 6, 0}));
    v.push_back(sf_biv_q2({8, 1, 3, 10, 3, -1, 0}));
    return v;
}

std::vector<FamilyInstance> preset_plain() {
    std::vector<FamilyInstance> v;
    v.push_back(delta_rect(10, 9, 2, 8));
    v.push_back(delta_rect(10, 9, 0, 0));
    v.push_back(delta_rectelim(10, 9, 4, 1, false));
    v.push_back(delta_rectwithp(10, 9, 2, 5, false));
    v.push_back(delta_hyperrect({4, 4, 4}, 1, 1));
    v.push_back(delta_hyperrectelim({4, 4, 4}, 1, 2, 1));
    return v;
}

void enumerate_all(std::vector<FamilyInstance>& out, std::set<std::array<uint64_t, 5>>& seen) {
    for (uint32_t n1 = 2; n1 <= 6; ++n1)
        for (uint32_t n2 = 2; n2 <= 6; ++n2) {
            for (uint32_t j = 0; j < n2; ++j)
                try_add(out, seen, [&] { return delta_rect(n1, n2, 0, j); });
            for (uint32_t i = 1; i + 1 < n1; ++i)
                try_add(out, seen, [&] { return delta_rect(n1, n2, i, n2 - 1); });
            for (uint32_t i = 1; i < n1; ++i)
                try_add(out, seen, [&] { return delta_rect(n1, n2, i, 0); });
            for (uint32_t j = 1; j + 1 < n2; ++j)
                try_add(out, seen, [&] { return delta_rect(n1, n2, n1 - 1, j); });
            for (bool sigma : {false, true})
                for (uint32_t i = 0; i < n1 + n2; ++i)
                    for (uint32_t s = 0; s < i; ++s) {
                        try_add(out, seen, [&] { return delta_rectelim(n1, n2, i, s, sigma); });
                    }
            for (bool sigma : {false, true})
                for (uint32_t i = 1; i < std::max(n1, n2); ++i)
                    for (uint32_t j = 1; j < std::max(n1, n2); ++j)
                        try_add(out, seen, [&] { return delta_rectwithp(n1, n2, i, j, sigma); });
        }
    for (uint32_t s1 = 2; s1 <= 4; ++s1)
        for (uint32_t s2 = 2; s2 <= 4; ++s2)
            for (uint32_t s3 = 2; s3 <= 4; ++s3)
                for (uint32_t j0 = 1; j0 <= 3; ++j0) {
                    std::vector<uint32_t> sz = {s1, s2, s3};
                    for (uint32_t i = 0; i + 2 <= sz[j0 - 1]; ++i) {
                        try_add(out, seen, [&] { return delta_hyperrect(sz, j0, i); });
                        for (uint32_t s = 0; s <= i; ++s)
                            try_add(out, seen,
                                    [&] { return delta_hyperrectelim(sz, j0, i, s); });
                    }
                }
    const uint64_t ph_list[] = {4, 5, 7, 8, 9};
    for (uint64_t ph : ph_list) {
        PrimePower f = factor_prime_power(ph, "catalog");
        uint64_t q = ipow(f.p, 2 * f.e);
        for (uint32_t np = 2; np <= 26; ++np)
            for (int cse = 1; cse <= 6; ++cse)
                for (int64_t z = 0; z <= int64_t(ph / 2); ++z)
                    for (int64_t t = -1; t < z; ++t) {
                        SfBivQ1Args a;
                        a.cse = cse;
                        a.axis = 1;
                        a.ph = ph;
                        a.q = q;
                        a.nprime = np;
                        if (cse <= 2 && t >= 0) continue;
                        if (cse <= 3) {
                            a.z = z;
                            a.t = t;
                        } else {
                            if (t >= 0 && cse != 6) continue;
                            a.u = z;
                            a.v = t;
                        }
                        try_add(out, seen, [&] { return sf_biv_q1(a); });
                    }
    }
    for (uint32_t h : {2u, 3u}) {
        uint64_t ph = uint64_t(1) << h;
        for (uint32_t np = 2; np <= 26; ++np)
            for (int cse = 1; cse <= 8; ++cse) {
                if (cse >= 5 && cse <= 7) {
                    for (int64_t j = 1; j < int64_t(np); ++j)
                        try_add(out, seen,
                                [&] { return sf_biv_q2({cse, 1, h, np, -1, j, 0}); });
                } else if (cse == 8) {
                    for (int64_t z = 2; z <= 3; ++z)
                        try_add(out, seen,
                                [&] { return sf_biv_q2({cse, 1, h, np, z, -1, 0}); });
                } else {
                    try_add(out, seen, [&] { return sf_biv_q2({cse, 1, h, np, -1, -1, 0}); });
                }
            }
        (void)ph;
    }
    for (uint64_t ph : {4ull, 5ull}) {
        PrimePower f = factor_prime_power(ph, "catalog");
        uint64_t q = ipow(f.p, 2 * f.e);
        for (uint32_t o1 = 2; o1 <= 6; ++o1)
            for (uint32_t o2 = 2; o2 <= 6; ++o2)
                for (int cse = 1; cse <= 4; ++cse) {
                    SfMultQ1Args a;
                    a.cse = cse;
                    a.j0 = 1;
                    a.ph = ph;
                    a.q = q;
                    a.others = {o1, o2};
                    if (cse == 1) a.z = 1;
                    if (cse == 2) {
                        a.z = 1;
                        a.t = 0;
                    }
                    if (cse == 3) a.u = 0;
                    if (cse == 4) {
                        a.u = 1;
                        a.v = 0;
                    }
                    try_add(out, seen, [&] { return sf_mult_q1(a); });
                }
    }
    for (uint32_t o1 = 2; o1 <= 6; ++o1)
        for (uint32_t o2 = 2; o2 <= 6; ++o2)
            for (int cse = 1; cse <= 4; ++cse) {
                SfMultQ2Args a;
                a.cse = cse;
                a.j0 = 1;
                a.h = 2;
                a.others = {o1, o2};
                if (cse == 4) a.z = 2;
                try_add(out, seen, [&] { return sf_mult_q2(a); });
            }
}

}  // namespace

std::vector<FamilyInstance> list_catalog(const CatalogFilter& filter) {
    std::vector<FamilyInstance> raw;
    std::set<std::array<uint64_t, 5>> seen;
    if (filter.preset == "table1") {
        for (auto& e : preset_table1()) add_entry(raw, seen, std::move(e));
    } else if (filter.preset == "table2") {
        for (auto& e : preset_table2()) add_entry(raw, seen, std::move(e));
    } else if (filter.preset == "examples") {
        for (auto& e : preset_examples()) add_entry(raw, seen, std::move(e));
    } else if (filter.preset == "plain") {
        for (auto& e : preset_plain()) add_entry(raw, seen, std::move(e));
    } else if (filter.preset.empty()) {
        enumerate_all(raw, seen);
    } else {
        throw spec_error("list_catalog: unknown preset " + filter.preset);
    }
    std::vector<FamilyInstance> out;
    for (auto& inst : raw) {
        const PredictedProfile& pr = inst.profile;
        if (filter.q && ipow(inst.p, inst.l) != *filter.q) continue;
        if (filter.ph) {
            if (inst.h == 0) continue;
            if (ipow(inst.p, inst.h) != *filter.ph) continue;
        }
        if (filter.n_min && pr.n < *filter.n_min) continue;
        if (filter.n_max && pr.n > *filter.n_max) continue;
        if (filter.r && pr.r != *filter.r) continue;
        if (filter.delta && pr.delta != *filter.delta) continue;
        out.push_back(std::move(inst));
    }
    return out;
}

}  // namespace mcc
