// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcc/grid.hpp"

namespace mcc {

// Slack in k + d + (ceil(k/r)-1)(delta-1) <= n+1. Zero means the locality
// certificate is as strong as the parameters allow.
int64_t singleton_defect(uint64_t n, uint64_t k, uint64_t d, uint64_t r, uint64_t delta);
bool is_optimal(uint64_t n, uint64_t k, uint64_t d, uint64_t r, uint64_t delta);

enum class Family {
    rect1,
    rectelim2,
    rectelim2_sigma,
    rectp3,
    rectp3_sigma,
    hyper1,
    hyperelim2,
    sf_biv_q1,
    sf_biv_q2,
    sf_mult_q1,
    sf_mult_q2,
};

const char* family_name(Family f);

struct PredictedProfile {
    uint64_t n = 0, k = 0, d = 0;
    uint32_t r = 0, delta = 0;
    bool optimal = false;
    uint32_t axis = 0;  // 1-based axis of the recovery lines
    int64_t defect = 0;
};

struct FamilyInstance {
    Family family = Family::rect1;
    int cse = 0;  // construction case for the sf_* families, 0 otherwise
    // Canonical key=value parameter list, in serialization order.
    std::vector<std::pair<std::string, std::string>> params;
    uint32_t p = 0, l = 0, h = 0;  // field GF(p^l); h > 0 means a GF(p^h) subcode
    uint32_t axis = 0;             // header axis field of the descriptor
    GridSpec grid;
    DeltaSet delta;
    PredictedProfile profile;
};

// Bivariate rectangle {0..i} x {0..j}. Any in-range (i,j) except the full
// grid is accepted; non-optimal pairs report their defect.
FamilyInstance delta_rect(uint32_t n1, uint32_t n2, uint32_t i, uint32_t j);

// Rectangle of height i with the top column run shortened to {0..s}.
FamilyInstance delta_rectelim(uint32_t n1, uint32_t n2, uint32_t i, uint32_t s, bool sigma);

// Short rectangle {0..i} x {0..j-1} plus the single exponent (0,j).
FamilyInstance delta_rectwithp(uint32_t n1, uint32_t n2, uint32_t i, uint32_t j, bool sigma);

// m >= 3 box, full on every axis except j0 which is capped at i.
FamilyInstance delta_hyperrect(std::vector<uint32_t> sizes, uint32_t j0, uint32_t i);

// The box above with the run s..i removed from the all-maximal corner line.
FamilyInstance delta_hyperrectelim(std::vector<uint32_t> sizes, uint32_t j0, uint32_t i,
                                   uint32_t s);

// Subfield-subcode families on a length p^h+1 torus axis. Cases 1-3 use the
// symmetric window Omega_z (and Omega_t), cases 4-6 the centered window
// Omega*_u (and Omega*_v); the companion axis has n' points.
struct SfBivQ1Args {
    int cse = 0;
    uint32_t axis = 1;
    uint64_t ph = 0, q = 0;
    uint32_t nprime = 0;
    int64_t z = -1, t = -1, u = -1, v = -1;
};
FamilyInstance sf_biv_q1(const SfBivQ1Args& a);

// Characteristic-2 families on a length 2^h+2 axis (torus plus zero).
// l defaults to 2h; larger multiples of 2h are accepted when the companion
// axis needs a bigger field.
struct SfBivQ2Args {
    int cse = 0;
    uint32_t axis = 1;
    uint32_t h = 0;
    uint32_t nprime = 0;
    int64_t z = -1, j = -1;
    uint32_t l = 0;
};
FamilyInstance sf_biv_q2(const SfBivQ2Args& a);

/// Multivariate version of sf_biv_q1: axis j0 carries the p^h+1 torus, the
// other axes are full. s1 lists (1-based, into `others`) the axes whose
// length divides q-1; leave empty with s1_given=false to infer.
struct SfMultQ1Args {
    int cse = 0;
    uint32_t j0 = 1;
    uint64_t ph = 0, q = 0;
    std::vector<uint32_t> others;
    std::vector<uint32_t> s1;
    bool s1_given = false;
    int64_t z = -1, t = -1, u = -1, v = -1;
};
FamilyInstance sf_mult_q1(const SfMultQ1Args& a);

struct SfMultQ2Args {
    int cse = 0;
    uint32_t j0 = 1;
    uint32_t h = 0;
    std::vector<uint32_t> others;
    std::vector<uint32_t> s1;
    bool s1_given = false;
    int64_t z = -1;
};
FamilyInstance sf_mult_q2(const SfMultQ2Args& a);

// Attach the evaluation field GF(p^l) to a field-agnostic instance so it can
// be serialized or constructed.
FamilyInstance with_field(FamilyInstance inst, uint32_t p, uint32_t l);

std::string serialize_family(const FamilyInstance& inst);
FamilyInstance parse_family(const std::string& descriptor);
PredictedProfile predict_only(const std::string& descriptor);

struct CatalogFilter {
    std::optional<uint64_t> q, ph;
    std::optional<uint64_t> n_min, n_max;
    std::optional<uint32_t> r, delta;
    std::string preset;  // "", "table1", "table2", "examples", "plain"
};

// Bounded enumeration of family instances, deduplicated by (n,k,d,r,delta).
std::vector<FamilyInstance> list_catalog(const CatalogFilter& filter);

}  // namespace mcc
