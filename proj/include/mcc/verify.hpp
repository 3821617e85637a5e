// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>

#include "mcc/code.hpp"
#include "mcc/families.hpp"

namespace mcc {

enum class DistanceMethod { exhaustive, witness_plus_bound, sampled_upper_bound };

const char* distance_method_name(DistanceMethod m);

// Sampled results are upper bounds only; the method label travels with the
// value so callers cannot mistake one for a certified distance.
struct DistanceResult {
    uint64_t value = 0;
    DistanceMethod method = DistanceMethod::exhaustive;
    std::optional<std::vector<uint32_t>> certificate;  // a codeword of that weight
};

// Exact minimum weight by enumerating every projective message class.
DistanceResult min_distance_exact(const LinearCode& c, uint64_t budget = 20000000);

// ev_P of prod_j prod_{s<e_j} (X_j - beta_{j,s}) over the first e_j points of
// each axis; its weight is exactly dis(e) and its monomials divide X^e.
std::vector<uint32_t> footprint_witness(const EvaluationDomain& dom, const DeltaSet& delta,
                                        const Exponent& e);

// d0 plus a witness attaining it: the exact distance for decreasing sets.
DistanceResult distance_decreasing(const LinearCode& c);

// True iff every k x k generator minor is nonzero.
bool is_mds(const LinearCode& c, uint64_t budget = 1000000);

std::map<uint64_t, uint64_t> weight_distribution(const LinearCode& c, uint64_t budget = 20000000);

DistanceResult sampled_min_weight(const LinearCode& c, uint64_t trials, uint64_t seed = 0);

// Parameter tuples (n,k,d,r,delta) meeting the Singleton-like bound with
// equality, over every nonempty decreasing exponent set of the n1 x n2 grid,
// with locality certified on both qualifying axes.
std::set<std::array<uint64_t, 5>> exhaustive_decreasing_search(const FieldPtr& f, uint32_t n1,
                                                               uint32_t n2);

// The closed-form optimal tuples of the bivariate families, both
// orientations.
std::set<std::array<uint64_t, 5>> predicted_optimal_bivariate(uint32_t n1, uint32_t n2);

// Line-oriented verification report: one CHECK line per test plus a final
// SUMMARY line.
class Reporter {
  public:
    explicit Reporter(std::ostream& os) : os_(os) {}

    void check(const std::string& name, const std::string& instance, bool ok,
               const std::string& details = "");
    void summary();
    bool all_passed() const { return failed_ == 0; }
    uint64_t passed() const { return passed_; }
    uint64_t failed() const { return failed_; }

  private:
    std::ostream& os_;
    uint64_t passed_ = 0, failed_ = 0;
};

}  // namespace mcc
