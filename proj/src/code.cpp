// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#include "mcc/code.hpp"

#include <algorithm>
#include <set>

namespace mcc {

namespace {

uint64_t grid_volume(const GridSpec& g) {
    uint64_t n = 1;
    for (uint32_t s : g.sizes) n *= s;
    return n;
}

DomainPtr finish_domain(FieldPtr f, GridSpec grid, std::vector<std::vector<uint32_t>> pts) {
    auto dom = std::make_shared<EvaluationDomain>();
    dom->field = std::move(f);
    dom->grid = std::move(grid);
    dom->axis_points = std::move(pts);
    dom->n = grid_volume(dom->grid);
    return dom;
}

}  // namespace

DomainPtr build_domain(FieldPtr f, GridSpec grid) {
    uint64_t q1 = f->q() - 1;
    std::vector<std::vector<uint32_t>> pts;
    for (uint32_t j = 0; j < grid.m(); ++j) {
        uint32_t nj = grid.sizes[j];
        if (grid.in_j[j]) {
            if (q1 % nj != 0)
                throw spec_error("domain: J axis length must divide q-1");
            pts.push_back(roots_of_unity(*f, nj));
        } else {
            if (q1 % (nj - 1) != 0)
                throw spec_error("domain: axis length minus one must divide q-1 off J");
            std::vector<uint32_t> v = roots_of_unity(*f, nj - 1);
            v.push_back(0);
            pts.push_back(std::move(v));
        }
    }
    return finish_domain(std::move(f), std::move(grid), std::move(pts));
}

DomainPtr build_domain_points(FieldPtr f, GridSpec grid,
                              std::vector<std::vector<uint32_t>> pts) {
    if (pts.size() != grid.sizes.size())
        throw spec_error("domain: one point list per axis required");
    for (uint32_t j = 0; j < grid.m(); ++j) {
        if (pts[j].size() != grid.sizes[j])
            throw spec_error("domain: axis point count must match the axis length");
        std::set<uint32_t> seen;
        for (uint32_t x : pts[j]) {
            if (x >= f->q()) throw spec_error("domain: point outside the field");
            if (!seen.insert(x).second) throw spec_error("domain: repeated point on an axis");
        }
    }
    return finish_domain(std::move(f), std::move(grid), std::move(pts));
}

uint64_t coord_index(const GridSpec& g, const Exponent& t) {
    check_bounds(g, t);
    uint64_t idx = 0;
    for (size_t j = 0; j < t.size(); ++j) idx = idx * g.sizes[j] + t[j];
    return idx;
}

Exponent coord_tuple(const GridSpec& g, uint64_t i) {
    if (i >= grid_volume(g)) throw spec_error("grid: coordinate index out of range");
    Exponent t(g.sizes.size());
    for (size_t j = t.size(); j-- > 0;) {
        t[j] = static_cast<uint32_t>(i % g.sizes[j]);
        i /= g.sizes[j];
    }
    return t;
}

std::vector<uint32_t> evaluate_monomial(const EvaluationDomain& dom, const Exponent& e) {
    check_bounds(dom.grid, e);
    const Field& f = *dom.field;
    // Precompute the per-axis value of x^{e_j} for each axis point.
    std::vector<std::vector<uint32_t>> axis_vals(dom.grid.m());
    for (uint32_t j = 0; j < dom.grid.m(); ++j) {
        axis_vals[j].reserve(dom.axis_points[j].size());
        for (uint32_t x : dom.axis_points[j]) axis_vals[j].push_back(f.pow(x, e[j]));
    }
    std::vector<uint32_t> out(dom.n);
    for (uint64_t i = 0; i < dom.n; ++i) {
        uint64_t rest = i;
        uint32_t v = 1;
        for (size_t j = dom.grid.m(); j-- > 0;) {
            v = f.mul(v, axis_vals[j][rest % dom.grid.sizes[j]]);
            rest /= dom.grid.sizes[j];
        }
        out[i] = v;
    }
    return out;
}

LinearCode mcc(DomainPtr dom, const DeltaSet& delta) {
    if (delta.exps.empty()) throw spec_error("mcc: exponent set must be non-empty");
    if (delta.grid.sizes != dom->grid.sizes)
        throw spec_error("mcc: exponent grid does not match the domain grid");
    Mat rows(delta.size(), dom->n);
    for (size_t i = 0; i < delta.size(); ++i) {
        std::vector<uint32_t> v = evaluate_monomial(*dom, delta.exps[i]);
        std::copy(v.begin(), v.end(), rows.row(i));
    }
    size_t rk = rref(*dom->field, rows);
    if (rk != delta.size())
        throw spec_error("mcc: monomial evaluations are linearly dependent");
    LinearCode c;
    c.field = dom->field;
    c.n = dom->n;
    c.k = static_cast<uint32_t>(rk);
    c.gen = std::move(rows);
    c.domain = dom;
    c.delta = std::make_shared<DeltaSet>(delta);
    return c;
}

std::vector<uint32_t> encode(const LinearCode& c, const std::vector<uint32_t>& message) {
    if (message.size() != c.k) throw spec_error("encode: message length must equal k");
    return vec_mat(*c.field, message, c.gen);
}

namespace {

LinearCode from_rows(FieldPtr f, uint64_t n, Mat rows, DomainPtr dom = nullptr,
                     std::shared_ptr<const DeltaSet> delta = nullptr) {
    size_t rk = rref(*f, rows);
    LinearCode c;
    c.field = std::move(f);
    c.n = n;
    c.k = static_cast<uint32_t>(rk);
    c.gen = std::move(rows);
    c.domain = std::move(dom);
    c.delta = std::move(delta);
    return c;
}

LinearCode subcode_by_trace(const LinearCode& c, uint32_t h) {
    const Field& f = *c.field;
    if (!c.delta) throw spec_error("subfield_subcode: trace method needs an exponent set");
    uint64_t ph = 1;
    for (uint32_t i = 0; i < h; ++i) ph *= f.p();
    if (c.delta->grid.ph != ph)
        throw spec_error("subfield_subcode: exponent grid multiplier must equal p^h");
    if (!is_closed(*c.delta))
        throw spec_error("subfield_subcode: trace method needs a closed exponent set");
    SubfieldMap map = subfield_map(c.field, h);
    uint32_t steps = f.l() / h;
    uint32_t x = f.p();  // the canonical generator, a degree l/h element over GF(p^h)
    Mat rows(size_t(c.k) * steps, c.n);
    for (uint32_t s = 0; s < steps; ++s) {
        uint32_t gamma = f.pow(x, s);
        for (uint32_t i = 0; i < c.k; ++i) {
            uint32_t* dst = rows.row(size_t(s) * c.k + i);
            const uint32_t* src = c.gen.row(i);
            for (uint64_t t = 0; t < c.n; ++t) {
                int64_t small = map.drop(trace(f, h, f.mul(gamma, src[t])));
                if (small < 0) throw spec_error("subfield_subcode: trace left the subfield");
                dst[t] = static_cast<uint32_t>(small);
            }
        }
    }
    LinearCode s = from_rows(map.sub, c.n, std::move(rows), nullptr, c.delta);
    if (s.k != c.delta->size())
        throw spec_error("subfield_subcode: trace dimension disagrees with the exponent count");
    return s;
}

LinearCode subcode_by_intersection(const LinearCode& c, uint32_t h) {
    const Field& f = *c.field;
    uint32_t p = f.p(), l = f.l();
    FieldPtr fp = field_new(p, 1);
    uint64_t ph = 1;
    for (uint32_t i = 0; i < h; ++i) ph *= p;
    // Entries in the subfield are the fixed points of the h-fold Frobenius,
    // which is GF(p)-linear, so expand everything into base-p digits.
    uint32_t x = l >= 2 ? p : 1;
    size_t unknowns = size_t(c.k) * l;
    Mat sys(c.n * l, unknowns);
    for (uint32_t i = 0; i < c.k; ++i) {
        for (uint32_t s = 0; s < l; ++s) {
            uint32_t basis = f.pow(x, s);
            for (uint64_t t = 0; t < c.n; ++t) {
                uint32_t v = f.mul(basis, c.gen.row(i)[t]);
                uint32_t w = f.sub(f.pow(v, ph), v);
                std::vector<uint32_t> digits = f.coeffs(w);
                for (uint32_t r = 0; r < l; ++r)
                    sys.at(t * l + r, size_t(i) * l + s) = digits[r];
            }
        }
    }
    Mat null = nullspace(*fp, sys);
    Mat rows(null.rows, c.n);
    SubfieldMap map = subfield_map(c.field, h);
    for (size_t v = 0; v < null.rows; ++v) {
        std::vector<uint32_t> msg(c.k);
        for (uint32_t i = 0; i < c.k; ++i) {
            std::vector<uint32_t> digits(null.row(v) + size_t(i) * l,
                                         null.row(v) + size_t(i) * l + l);
            msg[i] = f.from_coeffs(digits);
        }
        std::vector<uint32_t> word = vec_mat(f, msg, c.gen);
        for (uint64_t t = 0; t < c.n; ++t) {
            int64_t small = map.drop(word[t]);
            if (small < 0)
                throw spec_error("subfield_subcode: intersection produced a non-subfield entry");
            rows.row(v)[t] = static_cast<uint32_t>(small);
        }
    }
    LinearCode s = from_rows(map.sub, c.n, std::move(rows), nullptr, c.delta);
    if (size_t(s.k) * h != null.rows)
        throw spec_error("subfield_subcode: GF(p) solution count is not h times the dimension");
    return s;
}

}  // namespace

LinearCode subfield_subcode(const LinearCode& c, uint32_t h, SubfieldMethod method) {
    uint32_t l = c.field->l();
    if (h < 1 || l % h != 0)
        throw spec_error("subfield_subcode: h must divide the extension degree");
    if (h == l) return c;
    switch (method) {
        case SubfieldMethod::trace:
            return subcode_by_trace(c, h);
        case SubfieldMethod::intersection:
            return subcode_by_intersection(c, h);
    }
    throw spec_error("subfield_subcode: unknown method");
}

LinearCode star_product(const LinearCode& a, const LinearCode& b) {
    if (a.field->spec().p != b.field->spec().p || a.field->l() != b.field->l())
        throw spec_error("star_product: codes must share a field");
    if (a.n != b.n) throw spec_error("star_product: codes must share a length");
    const Field& f = *a.field;
    Mat rows(size_t(a.k) * b.k, a.n);
    for (uint32_t i = 0; i < a.k; ++i)
        for (uint32_t j = 0; j < b.k; ++j) {
            uint32_t* dst = rows.row(size_t(i) * b.k + j);
            for (uint64_t t = 0; t < a.n; ++t) dst[t] = f.mul(a.gen.row(i)[t], b.gen.row(j)[t]);
        }
    return from_rows(a.field, a.n, std::move(rows));
}

LinearCode project(const LinearCode& c, const std::vector<uint64_t>& coords) {
    if (coords.empty()) throw spec_error("project: coordinate set must be non-empty");
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= c.n) throw spec_error("project: coordinate out of range");
        if (i > 0 && coords[i] <= coords[i - 1])
            throw spec_error("project: coordinates must strictly increase");
    }
    Mat rows(c.k, coords.size());
    for (uint32_t i = 0; i < c.k; ++i)
        for (size_t t = 0; t < coords.size(); ++t) rows.row(i)[t] = c.gen.row(i)[coords[t]];
    return from_rows(c.field, coords.size(), std::move(rows));
}

}  // namespace mcc
