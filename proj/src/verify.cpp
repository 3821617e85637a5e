// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#include "mcc/verify.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "mcc/locality.hpp"

namespace mcc {

const char* distance_method_name(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::exhaustive: return "exhaustive";
        case DistanceMethod::witness_plus_bound: return "witness_plus_bound";
        case DistanceMethod::sampled_upper_bound: return "sampled_upper_bound";
    }
    throw spec_error("distance_method_name: unknown method");
}

DistanceResult min_distance_exact(const LinearCode& c, uint64_t budget) {
    DistanceResult res;
    res.method = DistanceMethod::exhaustive;
    std::vector<uint32_t> witness;
    res.value = min_weight(*c.field, c.gen, budget, &witness);
    res.certificate = std::move(witness);
    return res;
}

std::vector<uint32_t> footprint_witness(const EvaluationDomain& dom, const DeltaSet& delta,
                                        const Exponent& e) {
    if (dom.grid.sizes != delta.grid.sizes)
        throw spec_error("footprint_witness: domain and exponent set use different grids");
    if (!is_decreasing(delta))
        throw spec_error("footprint_witness: exponent set is not decreasing");
    if (!delta.contains(e)) throw spec_error("footprint_witness: exponent outside the set");
    const Field& f = *dom.field;
    std::vector<uint32_t> word(dom.n, 0);
    for (uint64_t i = 0; i < dom.n; ++i) {
        Exponent t = coord_tuple(dom.grid, i);
        uint32_t v = 1;
        for (size_t j = 0; j < t.size() && v != 0; ++j) {
            uint32_t pt = dom.axis_points[j][t[j]];
            for (uint32_t s = 0; s < e[j] && v != 0; ++s)
                v = f.mul(v, f.sub(pt, dom.axis_points[j][s]));
        }
        word[i] = v;
    }
    uint64_t w = 0;
    for (uint32_t v : word) w += v != 0;
    if (w != exponent_distance(delta.grid, e))
        throw spec_error("footprint_witness: weight disagrees with dis(e)");
    return word;
}

DistanceResult distance_decreasing(const LinearCode& c) {
    if (!c.delta || !c.domain)
        throw spec_error("distance_decreasing: code carries no construction metadata");
    if (!is_decreasing(*c.delta))
        throw spec_error("distance_decreasing: exponent set is not decreasing");
    const Exponent* best = nullptr;
    uint64_t d = 0;
    for (const Exponent& e : c.delta->exps) {
        uint64_t dis = exponent_distance(c.delta->grid, e);
        if (!best || dis < d) {
            best = &e;
            d = dis;
        }
    }
    if (!best) throw spec_error("distance_decreasing: empty exponent set");
    DistanceResult res;
    res.value = d;
    res.method = DistanceMethod::witness_plus_bound;
    res.certificate = footprint_witness(*c.domain, *c.delta, *best);
    return res;
}

namespace {

// min(C(n,k), cap+1) without overflow.
uint64_t binom_capped(uint64_t n, uint64_t k, uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        if (r > cap) return cap + 1;
        r = r * (n - k + i) / i;
    }
    return std::min(r, cap + 1);
}

}  // namespace

bool is_mds(const LinearCode& c, uint64_t budget) {
    if (c.k == 0 || c.k > c.n) throw spec_error("is_mds: degenerate dimensions");
    if (binom_capped(c.n, c.k, budget) > budget)
        throw spec_error("is_mds: minor budget exceeded");
    const Field& f = *c.field;
    size_t k = c.k;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mat minor(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) minor.at(i, j) = c.gen.at(i, idx[j]);
        if (rref(f, minor) < k) return false;
        // next k-combination of 0..n-1
        size_t t = k;
        while (t > 0 && idx[t - 1] == c.n - k + t - 1) --t;
        if (t == 0) break;
        ++idx[t - 1];
        for (size_t j = t; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

std::map<uint64_t, uint64_t> weight_distribution(const LinearCode& c, uint64_t budget) {
    const Field& f = *c.field;
    const uint64_t q = f.q();
    uint64_t total = 1;
    for (size_t i = 0; i < c.k; ++i) {
        if (total > budget / q)
            throw spec_error("weight_distribution: enumeration exceeds the budget");
        total *= q;
    }
    // Nonzero words come in scalar classes of size q-1 sharing one weight.
    std::map<uint64_t, uint64_t> dist;
    dist[0] = 1;
    const size_t n = c.gen.cols, k = c.gen.rows;
    std::vector<std::vector<uint32_t>> scaled(k);
    for (size_t t = 1; t < k; ++t) {
        scaled[t].resize(q * n);
        for (uint64_t s = 0; s < q; ++s)
            for (size_t col = 0; col < n; ++col)
                scaled[t][s * n + col] = f.mul(static_cast<uint32_t>(s), c.gen.at(t, col));
    }
    std::vector<uint32_t> cur(n);
    for (size_t lead = 0; lead < k; ++lead) {
        cur.assign(c.gen.row(lead), c.gen.row(lead) + n);
        const size_t s = k - 1 - lead;
        std::vector<uint32_t> digit(s, 0);
        while (true) {
            uint64_t w = 0;
            for (size_t col = 0; col < n; ++col) w += cur[col] != 0;
            dist[w] += q - 1;
            size_t t = 0;
            while (t < s) {
                uint32_t v = digit[t];
                uint32_t nv = uint64_t(v) + 1 == q ? 0 : v + 1;
                const uint32_t* delta =
                    scaled[lead + 1 + t].data() + size_t(f.sub(nv, v)) * n;
                for (size_t col = 0; col < n; ++col) cur[col] = f.add(cur[col], delta[col]);
                digit[t] = nv;
                if (nv != 0) break;
                ++t;
            }
            if (t == s) break;
        }
    }
    return dist;
}

DistanceResult sampled_min_weight(const LinearCode& c, uint64_t trials, uint64_t seed) {
    if (c.k == 0) throw spec_error("sampled_min_weight: the zero code has no nonzero codeword");
    const Field& f = *c.field;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> sym(0, static_cast<uint32_t>(f.q()) - 1);
    DistanceResult res;
    res.method = DistanceMethod::sampled_upper_bound;
    res.value = c.n + 1;
    std::vector<uint32_t> msg(c.k);
    for (uint64_t t = 0; t < trials; ++t) {
        bool nonzero = false;
        while (!nonzero) {
            for (auto& m : msg) {
                m = sym(rng);
                nonzero |= m != 0;
            }
        }
        std::vector<uint32_t> word = vec_mat(f, msg, c.gen);
        uint64_t w = 0;
        for (uint32_t v : word) w += v != 0;
        if (w < res.value) {
            res.value = w;
            res.certificate = std::move(word);
        }
    }
    return res;
}

namespace {

void collect_column_families(uint32_t n1, uint32_t n2, std::set<std::array<uint64_t, 5>>& out) {
    const uint64_t n = uint64_t(n1) * n2;
    for (uint32_t j = 0; j < n2; ++j)
        out.insert({n, uint64_t(j) + 1, uint64_t(n1) * (n2 - j), 1, n1});
    for (uint32_t i = 1; i + 2 <= n1; ++i)
        out.insert({n, uint64_t(i + 1) * n2, uint64_t(n1) - i, uint64_t(i) + 1,
                    uint64_t(n1) - i});
    for (uint32_t i = 1; i + 2 <= n1; ++i)
        for (int64_t s = std::max<int64_t>(0, 2 * int64_t(i) - int64_t(n1)); s < int64_t(i); ++s)
            out.insert({n, uint64_t(i + 1) * (n2 - 1) + uint64_t(s) + 1, uint64_t(n1) - s,
                        uint64_t(i) + 1, uint64_t(n1) - i});
    for (uint32_t i = 1; i + 2 <= n1; ++i)
        for (uint32_t j = 1; j + 2 <= n2; ++j)
            if (int64_t(j) * i >= int64_t(i) * (int64_t(n2) + 1) - int64_t(n1))
                out.insert({n, uint64_t(i + 1) * j + 1, uint64_t(n1) * (n2 - j),
                            uint64_t(i) + 1, uint64_t(n1) - i});
}

}  // namespace

std::set<std::array<uint64_t, 5>> predicted_optimal_bivariate(uint32_t n1, uint32_t n2) {
    std::set<std::array<uint64_t, 5>> out;
    collect_column_families(n1, n2, out);
    collect_column_families(n2, n1, out);
    return out;
}

std::set<std::array<uint64_t, 5>> exhaustive_decreasing_search(const FieldPtr& f, uint32_t n1,
                                                               uint32_t n2) {
    if (n1 < 2 || n2 < 2 || n1 > 6 || n2 > 6)
        throw spec_error("exhaustive_decreasing_search: axis lengths must be 2..6");
    GridSpec grid = make_grid({n1, n2}, {});
    std::vector<std::vector<uint32_t>> pts(2);
    for (uint32_t e = 0; e < n1; ++e) pts[0].push_back(e);
    for (uint32_t e = 0; e < n2; ++e) pts[1].push_back(e);
    DomainPtr dom = build_domain_points(f, grid, pts);
    std::set<std::array<uint64_t, 5>> out;
    // Decreasing sets of the box are exactly the monotone column-height
    // profiles c_0 >= c_1 >= ... with c_b <= n1.
    std::vector<uint32_t> c(n2, 0);
    while (true) {
        // advance to the next profile
        size_t b = n2;
        while (b > 0) {
            uint32_t cap = b == 1 ? n1 : c[b - 2];
            if (c[b - 1] < cap) {
                ++c[b - 1];
                for (size_t t = b; t < n2; ++t) c[t] = 0;
                break;
            }
            --b;
        }
        if (b == 0) break;
        std::vector<Exponent> exps;
        for (uint32_t col = 0; col < n2; ++col)
            for (uint32_t row = 0; row < c[col]; ++row) exps.push_back({row, col});
        DeltaSet delta = make_delta(grid, std::move(exps));
        LinearCode code = mcc(dom, delta);
        uint64_t d = d0(delta);
        for (uint32_t axis = 1; axis <= 2; ++axis) {
            uint32_t nl = grid.sizes[axis - 1];
            if (supp_size(delta, axis) >= nl) continue;
            LocalityCertificate cert = certify_locality(code, axis);
            if (singleton_defect(code.n, code.k, d, cert.r, cert.delta) == 0)
                out.insert({code.n, code.k, d, cert.r, cert.delta});
        }
    }
    return out;
}

void Reporter::check(const std::string& name, const std::string& instance, bool ok,
                     const std::string& details) {
    os_ << "CHECK " << name << " " << instance << " " << (ok ? "PASS" : "FAIL");
    if (!details.empty()) os_ << " " << details;
    os_ << "\n";
    if (ok)
        ++passed_;
    else
        ++failed_;
}

void Reporter::summary() {
    os_ << "SUMMARY checks=" << (passed_ + failed_) << " passed=" << passed_
        << " failed=" << failed_ << " result=" << (failed_ == 0 ? "PASS" : "FAIL") << "\n";
}

}  // namespace mcc
