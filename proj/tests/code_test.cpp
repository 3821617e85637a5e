// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mcc/code.hpp"

using namespace mcc;

namespace {

DeltaSet box_delta(GridSpec g, const std::vector<uint32_t>& tops) {
    std::vector<Exponent> exps;
    Exponent e(tops.size(), 0);
    while (true) {
        exps.push_back(e);
        size_t j = tops.size();
        while (j > 0) {
            --j;
            if (e[j] < tops[j]) {
                ++e[j];
                std::fill(e.begin() + j + 1, e.end(), 0);
                break;
            }
            if (j == 0) return make_delta(std::move(g), std::move(exps));
        }
    }
}

}  // namespace

TEST_CASE("J-affine point sets") {
    FieldPtr f5 = field_new(5, 1);
    DomainPtr d = build_domain(f5, make_grid({2, 2}, {1, 2}));
    CHECK(d->n == 4);
    CHECK(d->axis_points[0] == std::vector<uint32_t>{1, 4});
    CHECK(d->axis_points[1] == std::vector<uint32_t>{1, 4});
    FieldPtr f4 = field_new(2, 2);
    DomainPtr d4 = build_domain(f4, make_grid({4}, {}));
    CHECK(d4->axis_points[0] == std::vector<uint32_t>{1, 2, 3, 0});  // zero listed last
    // J axis length must divide q-1; off-J length-1 must divide q-1
    CHECK_THROWS_AS(build_domain(f5, make_grid({3}, {1})), spec_error);
    CHECK_THROWS_AS(build_domain(f5, make_grid({6}, {})), spec_error);
}

TEST_CASE("explicit point sets") {
    FieldPtr f5 = field_new(5, 1);
    GridSpec g = make_grid({4, 3}, {});
    DomainPtr d = build_domain_points(f5, g, {{0, 1, 2, 3}, {0, 1, 2}});
    CHECK(d->n == 12);
    CHECK_THROWS_AS(build_domain_points(f5, g, {{0, 1, 2, 2}, {0, 1, 2}}), spec_error);
    CHECK_THROWS_AS(build_domain_points(f5, g, {{0, 1, 2, 5}, {0, 1, 2}}), spec_error);
    CHECK_THROWS_AS(build_domain_points(f5, g, {{0, 1, 2}, {0, 1, 2}}), spec_error);
}

TEST_CASE("coordinate order has the last axis fastest") {
    GridSpec g = make_grid({4, 3}, {});
    CHECK(coord_index(g, {0, 0}) == 0);
    CHECK(coord_index(g, {0, 2}) == 2);
    CHECK(coord_index(g, {1, 0}) == 3);
    CHECK(coord_index(g, {3, 2}) == 11);
    for (uint64_t i = 0; i < 12; ++i) CHECK(coord_index(g, coord_tuple(g, i)) == i);
}

TEST_CASE("monomial evaluation with 0^0 = 1") {
    FieldPtr f5 = field_new(5, 1);
    DomainPtr d = build_domain(f5, make_grid({2, 2}, {1, 2}));
    // points in order: (1,1),(1,4),(4,1),(4,4)
    CHECK(evaluate_monomial(*d, {1, 0}) == std::vector<uint32_t>{1, 1, 4, 4});
    CHECK(evaluate_monomial(*d, {1, 1}) == std::vector<uint32_t>{1, 4, 4, 1});
    FieldPtr f4 = field_new(2, 2);
    DomainPtr d4 = build_domain(f4, make_grid({4}, {}));
    CHECK(evaluate_monomial(*d4, {0}) == std::vector<uint32_t>{1, 1, 1, 1});  // 0^0 = 1
    CHECK(evaluate_monomial(*d4, {1}) == std::vector<uint32_t>{1, 2, 3, 0});
    CHECK(evaluate_monomial(*d4, {3}) == std::vector<uint32_t>{1, 1, 1, 0});
}

TEST_CASE("mcc on the mixed 4x3 grid over GF(5)") {
    FieldPtr f5 = field_new(5, 1);
    DomainPtr d = build_domain(f5, make_grid({4, 3}, {1}));
    CHECK(d->axis_points[0] == std::vector<uint32_t>{1, 2, 4, 3});
    CHECK(d->axis_points[1] == std::vector<uint32_t>{1, 4, 0});
    LinearCode c = mcc::mcc(d, box_delta(d->grid, {1, 2}));
    CHECK(c.n == 12);
    CHECK(c.k == 6);
    CHECK(min_weight(*c.field, c.gen, 20000) == 3);
    CHECK(c.delta->size() == 6);
}

TEST_CASE("mcc dimension always equals the exponent count") {
    // monomials with e_j < n_j stay independent on any Cartesian domain
    FieldPtr f = field_new(181, 1);
    GridSpec g = make_grid({10, 9}, {});
    std::vector<std::vector<uint32_t>> pts(2);
    for (uint32_t j = 0; j < 2; ++j)
        for (uint32_t e = 0; e < g.sizes[j]; ++e) pts[j].push_back(e);
    DomainPtr d = build_domain_points(f, g, pts);
    LinearCode c = mcc::mcc(d, box_delta(d->grid, {2, 8}));
    CHECK(c.n == 90);
    CHECK(c.k == 27);
    CHECK(d0(*c.delta) == 8);
}

TEST_CASE("encode is message times generator") {
    FieldPtr f5 = field_new(5, 1);
    DomainPtr d = build_domain_points(f5, make_grid({4}, {}), {{0, 1, 2, 3}});
    LinearCode c = mcc::mcc(d, box_delta(d->grid, {1}));
    std::vector<uint32_t> w = encode(c, {1, 2});
    CHECK(w.size() == 4);
    // the code contains the evaluation of every polynomial in the span
    std::vector<uint32_t> direct(4);
    for (size_t t = 0; t < 4; ++t)
        direct[t] = f5->add(f5->mul(1, c.gen.at(0, t)), f5->mul(2, c.gen.at(1, t)));
    CHECK(w == direct);
    CHECK_THROWS_AS(encode(c, {1, 2, 3}), spec_error);
}

TEST_CASE("trace subfield subcode of a closed set") {
    // one axis of length 6 = 5+1 over GF(16), row {0,1,4} closed under *4
    FieldPtr f16 = field_new(2, 4);
    DomainPtr d = build_domain(f16, make_grid({6}, {}, 4));
    LinearCode big = mcc::mcc(d, make_delta(d->grid, {{0}, {1}, {4}}));
    CHECK(big.k == 3);
    LinearCode sub = subfield_subcode(big, 2, SubfieldMethod::trace);
    CHECK(sub.field->q() == 4);
    CHECK(sub.n == 6);
    CHECK(sub.k == 3);
    CHECK(min_weight(*sub.field, sub.gen, 1000) == 4);
    // intersection agrees with the trace on a closed set
    LinearCode sub2 = subfield_subcode(big, 2, SubfieldMethod::intersection);
    CHECK(sub2.k == sub.k);
    CHECK(row_space_equal(*sub.field, sub.gen, sub2.gen));
}

TEST_CASE("worked 54-symbol instance drops to GF(5)") {
    FieldPtr f25 = field_new(5, 2);
    GridSpec g = make_grid({9, 6}, {2}, 5);
    DomainPtr d = build_domain(f25, g);
    std::vector<Exponent> exps;
    for (uint32_t e1 = 0; e1 < 8; ++e1)
        for (uint32_t e2 : {0, 1, 5}) exps.push_back({e1, e2});
    exps.push_back({8, 0});
    DeltaSet delta = make_delta(g, exps);
    CHECK(delta.size() == 25);
    CHECK(is_closed(delta));
    LinearCode big = mcc::mcc(d, delta);
    CHECK(big.k == 25);
    LinearCode sub = subfield_subcode(big, 1, SubfieldMethod::trace);
    CHECK(sub.field->q() == 5);
    CHECK(sub.n == 54);
    CHECK(sub.k == 25);
}

TEST_CASE("non-closed set dimension drops to the closed interior") {
    FieldPtr f16 = field_new(2, 4);
    GridSpec g = make_grid({5, 5}, {1, 2}, 4);
    DomainPtr d = build_domain(f16, g);
    std::vector<Exponent> exps;
    for (uint32_t a : {0, 1, 4})
        for (uint32_t b = 0; b < 5; ++b)
            if (!(a == 1 && b == 4) && !(a == 4 && b == 4)) exps.push_back({a, b});
    DeltaSet delta = make_delta(g, exps);
    CHECK(delta.size() == 13);
    CHECK_FALSE(is_closed(delta));
    CHECK(closed_interior(delta).size() == 11);
    CHECK_THROWS_AS(subfield_subcode(mcc::mcc(d, delta), 2, SubfieldMethod::trace), spec_error);
    LinearCode sub = subfield_subcode(mcc::mcc(d, delta), 2, SubfieldMethod::intersection);
    CHECK(sub.k == 11);
}

TEST_CASE("subfield subcode degenerate degrees") {
    FieldPtr f16 = field_new(2, 4);
    DomainPtr d = build_domain(f16, make_grid({6}, {}, 4));
    LinearCode big = mcc::mcc(d, make_delta(d->grid, {{0}, {1}, {4}}));
    LinearCode same = subfield_subcode(big, 4, SubfieldMethod::trace);
    CHECK(same.k == big.k);
    CHECK(same.field == big.field);
    CHECK_THROWS_AS(subfield_subcode(big, 3, SubfieldMethod::trace), spec_error);  // 3 nmid 4
}

TEST_CASE("star product multiplies monomial spans") {
    FieldPtr f5 = field_new(5, 1);
    DomainPtr d = build_domain_points(f5, make_grid({4}, {}), {{0, 1, 2, 3}});
    LinearCode a = mcc::mcc(d, box_delta(d->grid, {1}));  // span{1, x}
    LinearCode s = star_product(a, a);               // span{1, x, x^2}
    CHECK(s.n == 4);
    CHECK(s.k == 3);
    LinearCode direct = mcc::mcc(d, box_delta(d->grid, {2}));
    CHECK(row_space_equal(*f5, s.gen, direct.gen));
}

TEST_CASE("projection restricts coordinates") {
    FieldPtr f5 = field_new(5, 1);
    DomainPtr d = build_domain_points(f5, make_grid({4}, {}), {{0, 1, 2, 3}});
    LinearCode c = mcc::mcc(d, box_delta(d->grid, {1}));
    LinearCode p = project(c, {0, 2});
    CHECK(p.n == 2);
    CHECK(p.k == 2);
    CHECK(p.domain == nullptr);  // plain code, no construction metadata
    CHECK_THROWS_AS(project(c, {2, 0}), spec_error);
    CHECK_THROWS_AS(project(c, {0, 9}), spec_error);
    CHECK_THROWS_AS(project(c, {}), spec_error);
}
