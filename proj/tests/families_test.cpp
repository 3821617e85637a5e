// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mcc/families.hpp"

using namespace mcc;

TEST_CASE("singleton defect") {
    CHECK(singleton_defect(150, 73, 6, 3, 4) == 0);
    CHECK(singleton_defect(90, 8, 54, 2, 9) == 5);
    CHECK(singleton_defect(90, 1, 90, 1, 10) == 0);
    CHECK(is_optimal(54, 25, 6, 3, 4));
    CHECK_FALSE(is_optimal(90, 8, 54, 2, 9));
    CHECK_THROWS_AS(singleton_defect(0, 1, 1, 1, 2), spec_error);
}

TEST_CASE("full rectangle family") {
    FamilyInstance a = delta_rect(10, 9, 2, 8);
    CHECK(a.profile.n == 90);
    CHECK(a.profile.k == 27);
    CHECK(a.profile.d == 8);
    CHECK(a.profile.r == 3);
    CHECK(a.profile.delta == 8);
    CHECK(a.profile.optimal);
    CHECK(a.axis == 1);
    CHECK(is_decreasing(a.delta));
    CHECK(d0(a.delta) == 8);

    FamilyInstance b = delta_rect(10, 9, 0, 0);
    CHECK(b.profile.k == 1);
    CHECK(b.profile.d == 90);
    CHECK(b.profile.r == 1);
    CHECK(b.profile.delta == 9);  // recovery on the shorter axis
    CHECK(b.axis == 2);
    CHECK(b.profile.optimal);

    // interior corner: not optimal, defect reported
    FamilyInstance c = delta_rect(6, 6, 2, 2);
    CHECK_FALSE(c.profile.optimal);
    CHECK(c.profile.defect > 0);

    CHECK_THROWS_AS(delta_rect(10, 9, 9, 8), spec_error);  // full box
    CHECK_THROWS_AS(delta_rect(10, 9, 10, 0), spec_error);
}

TEST_CASE("rectangle with the top row shortened") {
    FamilyInstance a = delta_rectelim(10, 9, 4, 1, false);
    CHECK(a.profile.n == 90);
    CHECK(a.profile.k == 42);
    CHECK(a.profile.d == 9);
    CHECK(a.profile.r == 5);
    CHECK(a.profile.delta == 6);
    CHECK(a.profile.optimal);
    CHECK(a.axis == 1);
    CHECK(d0(a.delta) == 9);

    // swapped orientation recovers along the other axis
    FamilyInstance b = delta_rectelim(9, 10, 4, 1, true);
    CHECK(b.profile.n == 90);
    CHECK(b.profile.k == 42);
    CHECK(b.axis == 2);

    CHECK_THROWS_AS(delta_rectelim(10, 9, 4, 4, false), spec_error);   // s = i
    CHECK_THROWS_AS(delta_rectelim(5, 9, 4, 2, false), spec_error);    // i+2 > n1
    CHECK_THROWS_AS(delta_rectelim(10, 9, 8, 5, false), spec_error);   // s < 2i-n1
}

TEST_CASE("rectangle with one protruding point") {
    FamilyInstance a = delta_rectwithp(10, 9, 2, 5, false);
    CHECK(a.profile.n == 90);
    CHECK(a.profile.k == 16);
    CHECK(a.profile.d == 40);
    CHECK(a.profile.r == 3);
    CHECK(a.profile.delta == 8);
    CHECK(a.profile.optimal);
    CHECK(d0(a.delta) == 40);
    CHECK(a.delta.contains({0, 5}));
    CHECK_FALSE(a.delta.contains({1, 5}));

    CHECK_THROWS_AS(delta_rectwithp(10, 9, 0, 5, false), spec_error);  // needs 1 <= i
    CHECK_THROWS_AS(delta_rectwithp(10, 9, 2, 2, false), spec_error);  // j*i too small
}

TEST_CASE("hyperrectangle families in three axes") {
    FamilyInstance a = delta_hyperrect({4, 4, 4}, 1, 1);
    CHECK(a.profile.n == 64);
    CHECK(a.profile.k == 32);
    CHECK(a.profile.d == 3);
    CHECK(a.profile.r == 2);
    CHECK(a.profile.delta == 3);
    CHECK(a.profile.optimal);

    FamilyInstance b = delta_hyperrectelim({4, 4, 4}, 1, 2, 1);
    CHECK(b.profile.n == 64);
    CHECK(b.profile.k == 46);
    CHECK(b.profile.d == 4);
    CHECK(b.profile.r == 3);
    CHECK(b.profile.delta == 2);
    CHECK(b.profile.optimal);
    CHECK(d0(b.delta) == 4);

    // i = s = 0 removes one corner exponent and doubles the distance
    FamilyInstance c = delta_hyperrectelim({4, 4, 4}, 2, 0, 0);
    CHECK(c.profile.k == 15);
    CHECK(c.profile.d == 8);
    CHECK(c.profile.optimal);

    CHECK_THROWS_AS(delta_hyperrect({4, 4}, 1, 1), spec_error);  // needs 3 axes
    CHECK_THROWS_AS(delta_hyperrectelim({4, 4, 4}, 1, 2, 0), spec_error);
}

TEST_CASE("bivariate subfield family, odd and even branches") {
    // worked 54-symbol instance
    FamilyInstance e1 = sf_biv_q1({3, 2, 5, 25, 9, 1, 0, -1, -1});
    CHECK(e1.profile.n == 54);
    CHECK(e1.profile.k == 25);
    CHECK(e1.profile.d == 6);
    CHECK(e1.profile.r == 3);
    CHECK(e1.profile.delta == 4);
    CHECK(e1.profile.optimal);
    CHECK(e1.p == 5);
    CHECK(e1.l == 2);
    CHECK(e1.h == 1);
    CHECK(is_closed(e1.delta));

    // even-characteristic star branch
    FamilyInstance r3 = sf_biv_q1({5, 1, 4, 16, 16, -1, -1, 0, -1});
    CHECK(r3.profile.n == 80);
    CHECK(r3.profile.k == 32);
    CHECK(r3.profile.d == 4);
    CHECK(r3.profile.r == 2);
    CHECK(r3.profile.delta == 4);
    CHECK(r3.profile.optimal);

    // divisibility violations surface as errors
    CHECK_THROWS_AS(sf_biv_q1({3, 1, 5, 25, 7, 1, 0, -1, -1}), spec_error);
    CHECK_THROWS_AS(sf_biv_q1({5, 1, 5, 25, 16, -1, -1, 0, -1}), spec_error);  // odd p^h
}

TEST_CASE("bivariate subfield family on the 2^h+2 axis") {
    FamilyInstance e5 = sf_biv_q2({6, 2, 3, 8, -1, 6, 0});
    CHECK(e5.profile.n == 80);
    CHECK(e5.profile.k == 19);
    CHECK(e5.profile.d == 20);
    CHECK(e5.profile.r == 3);
    CHECK(e5.profile.delta == 8);
    CHECK(e5.profile.optimal);
    CHECK(e5.l == 6);

    FamilyInstance e6 = sf_biv_q2({8, 1, 3, 10, 3, -1, 0});
    CHECK(e6.profile.n == 100);
    CHECK(e6.profile.k == 67);
    CHECK(e6.profile.d == 7);
    CHECK(e6.profile.r == 7);
    CHECK(e6.profile.delta == 4);
    CHECK(e6.profile.optimal);

    // the long-field override for the scaled row: l = 8 with h = 2
    FamilyInstance r6 = sf_biv_q2({7, 1, 2, 18, -1, 17, 8});
    CHECK(r6.profile.n == 108);
    CHECK(r6.profile.k == 52);
    CHECK(r6.profile.d == 6);
    CHECK(r6.profile.r == 3);
    CHECK(r6.profile.delta == 4);
    CHECK(r6.l == 8);

    CHECK_THROWS_AS(sf_biv_q2({8, 1, 3, 10, 1, -1, 0}), spec_error);  // z out of range
    CHECK_THROWS_AS(sf_biv_q2({6, 2, 3, 9, -1, 6, 0}), spec_error);   // 8 nmid 2^3-1
}

TEST_CASE("multivariate subfield families") {
    FamilyInstance r1 = sf_mult_q1({1, 1, 5, 625, {5, 16}, {}, false, 1, -1, -1, -1});
    CHECK(r1.profile.n == 480);
    CHECK(r1.profile.k == 240);
    CHECK(r1.profile.d == 4);
    CHECK(r1.profile.r == 3);
    CHECK(r1.profile.delta == 4);
    CHECK(r1.profile.optimal);

    // the constructible companion of the 800-symbol prediction
    FamilyInstance sib = sf_mult_q1({2, 1, 9, 81, {9, 9}, {}, false, 3, 1, -1, -1});
    CHECK(sib.profile.n == 810);
    CHECK(sib.profile.k == 563);
    CHECK(sib.profile.d == 8);
    CHECK(sib.profile.r == 7);
    CHECK(sib.profile.delta == 4);
    CHECK(sib.profile.optimal);
    CHECK(sib.l == 4);

    // the (8,10) companion needs 9 | 3^l - 1, which never holds
    CHECK_THROWS_AS(sf_mult_q1({2, 1, 9, 81, {8, 10}, {}, false, 3, 1, -1, -1}), spec_error);

    FamilyInstance m1 = sf_mult_q2({1, 1, 2, {5, 5, 6}, {}, false, -1});
    CHECK(m1.profile.n == 900);
    CHECK(m1.profile.k == 450);
    CHECK(m1.profile.d == 4);
    CHECK(m1.profile.r == 3);
    CHECK(m1.profile.delta == 4);
    CHECK(m1.profile.optimal);

    FamilyInstance m4 = sf_mult_q2({4, 1, 2, {6, 16}, {}, false, 2});
    CHECK(m4.profile.n == 576);
    CHECK(m4.profile.k == 287);
    CHECK(m4.profile.d == 5);
    CHECK(m4.profile.r == 3);
    CHECK(m4.profile.delta == 4);
    CHECK(m4.profile.optimal);
}

TEST_CASE("serialize and parse round trip") {
    std::vector<FamilyInstance> insts = {
        with_field(delta_rect(10, 9, 2, 8), 11, 1),
        with_field(delta_rectelim(10, 9, 4, 1, true), 11, 1),
        with_field(delta_hyperrectelim({4, 4, 4}, 2, 2, 1), 5, 1),
        sf_biv_q1({3, 2, 5, 25, 9, 1, 0, -1, -1}),
        sf_biv_q2({8, 1, 3, 10, 3, -1, 0}),
        sf_mult_q1({2, 1, 9, 81, {9, 9}, {}, false, 3, 1, -1, -1}),
        sf_mult_q2({4, 1, 2, {6, 16}, {}, false, 2}),
    };
    for (const FamilyInstance& inst : insts) {
        std::string s = serialize_family(inst);
        CAPTURE(s);
        FamilyInstance back = parse_family(s);
        CHECK(serialize_family(back) == s);
        CHECK(back.profile.n == inst.profile.n);
        CHECK(back.profile.k == inst.profile.k);
        CHECK(back.profile.d == inst.profile.d);
        CHECK(back.delta.exps == inst.delta.exps);
    }
    CHECK(serialize_family(sf_biv_q1({3, 2, 5, 25, 9, 1, 0, -1, -1})) ==
          "family=sf_biv_q1 p=5 l=2 h=1 axis=2 case=3 np=9 z=1 t=0");
}

TEST_CASE("parse_family rejects malformed descriptors") {
    CHECK_THROWS_AS(parse_family("rect1 n1=10"), spec_error);
    CHECK_THROWS_AS(parse_family("family=unknown p=5 l=1 h=0 axis=1"), spec_error);
    CHECK_THROWS_AS(parse_family("family=rect1 p=5 l=1 h=1 axis=1 n1=4 n2=3 i=0 j=0"),
                    spec_error);  // h must be 0 for the plain families
    CHECK(parse_family("family=rect1 p=5 l=1 h=0 axis=1 n1=4 n2=3 i=1 j=2").profile.k == 6);
    CHECK_THROWS_AS(parse_family("family=sf_biv_q2 p=3 l=4 h=2 axis=1 case=1 np=5"),
                    spec_error);  // characteristic must be 2
}

TEST_CASE("predict_only skips construction") {
    PredictedProfile pr =
        predict_only("family=sf_biv_q1 p=5 l=2 h=1 axis=2 case=3 np=9 z=1 t=0");
    CHECK(pr.n == 54);
    CHECK(pr.k == 25);
    CHECK(pr.d == 6);
}

TEST_CASE("with_field attaches or validates") {
    FamilyInstance a = delta_rect(4, 3, 1, 0);
    CHECK(a.p == 0);  // plain families carry no field until one is chosen
    FamilyInstance b = with_field(a, 5, 1);
    CHECK(b.p == 5);
    CHECK_THROWS_AS(serialize_family(a), spec_error);
    CHECK_THROWS_AS(with_field(sf_biv_q1({3, 2, 5, 25, 9, 1, 0, -1, -1}), 7, 2), spec_error);
}

TEST_CASE("catalog presets") {
    CatalogFilter f1;
    f1.preset = "table1";
    std::vector<FamilyInstance> t1 = list_catalog(f1);
    REQUIRE(t1.size() == 6);
    CHECK(t1[0].profile.n == 150);
    CHECK(t1[0].profile.k == 73);
    CHECK(t1[5].profile.n == 108);
    CHECK(t1[5].profile.k == 52);

    CatalogFilter f2;
    f2.preset = "table2";
    std::vector<FamilyInstance> t2 = list_catalog(f2);
    REQUIRE(t2.size() == 5);  // the 800-symbol row is a prediction only
    CHECK(t2[0].profile.n == 480);
    CHECK(t2[4].profile.n == 576);

    CatalogFilter f3;
    f3.preset = "examples";
    std::vector<FamilyInstance> ex = list_catalog(f3);
    REQUIRE(ex.size() == 6);
    CHECK(ex[4].profile.d == 20);
    CHECK(ex[5].profile.k == 67);

    CatalogFilter f4;
    f4.preset = "plain";
    CHECK(list_catalog(f4).size() == 6);
}

TEST_CASE("catalog enumeration with filters") {
    CatalogFilter f;
    f.n_max = 36;
    f.r = 2;
    f.delta = 3;
    std::vector<FamilyInstance> out = list_catalog(f);
    CHECK(!out.empty());
    for (const FamilyInstance& inst : out) {
        CHECK(inst.profile.r == 2);
        CHECK(inst.profile.delta == 3);
        CHECK(inst.profile.n <= 36);
        CHECK(inst.profile.optimal);
    }
    CatalogFilter fq;
    fq.q = 49;
    for (const FamilyInstance& inst : list_catalog(fq)) {
        CHECK(inst.p == 7);
        CHECK(inst.l == 2);
    }
    CatalogFilter fph;
    fph.ph = 8;
    std::vector<FamilyInstance> out8 = list_catalog(fph);
    CHECK(!out8.empty());
    for (const FamilyInstance& inst : out8) CHECK(inst.h > 0);
}
