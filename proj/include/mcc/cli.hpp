// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "mcc/families.hpp"
#include "mcc/locality.hpp"
#include "mcc/verify.hpp"

namespace mcc {

// A constructed code plus everything needed to encode, recover, and re-verify
// it: the descriptor, both fields (construction and symbol), the evaluation
// domain, and the per-axis locality certificates.
struct Bundle {
    std::string descriptor;
    bool from_family = false;
    FamilyInstance inst;    // valid when from_family
    FieldPtr constr_field;  // GF(p^l), where the evaluation points live
    DomainPtr domain;
    LinearCode code;  // symbols over GF(p^h) when h > 0, else over GF(p^l)
    PredictedProfile profile;
    std::vector<LocalityCertificate> certs;
};

// Builds the code. Descriptors are single lines of key=value tokens: either a
// family descriptor (family=...) or an explicit one (explicit sizes=...
// delta=...).
Bundle construct_bundle(const std::string& descriptor);

void write_bundle(const Bundle& b, std::ostream& os);
Bundle read_bundle(std::istream& is);

// Command entry points; return the process exit code (0 ok, 1 verification
// failure, 2 input error).
int cmd_construct(const std::string& descriptor_path, const std::string& out_path);
int cmd_encode(const std::string& bundle_path, const std::string& message_path,
               const std::string& out_path);
int cmd_recover(const std::string& bundle_path, const std::string& word_path,
                const std::string& out_path, uint32_t axis = 0);
int cmd_verify(const std::string& bundle_path, uint64_t budget_exact, uint64_t budget_minors,
               uint64_t trials, uint64_t seed, uint32_t axis = 0);
int cmd_table(const std::vector<std::string>& args, std::ostream& os);

}  // namespace mcc
