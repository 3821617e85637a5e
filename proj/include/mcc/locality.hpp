// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mcc/code.hpp"

namespace mcc {

// Coordinate index lists of the axis-parallel lines. Every line has length
// sizes[axis-1]; the lines partition 0..n-1.
std::vector<std::vector<uint32_t>> lines_of_axis(const GridSpec& g, uint32_t axis);

// The line through one coordinate: all indices whose points differ from it
// only in the given axis, the coordinate itself included.
std::vector<uint32_t> line_through(const GridSpec& g, uint64_t coord, uint32_t axis);

// Lines with the same projected row space share one class, so the exact
// distance is computed once per class.
struct LineClass {
    uint32_t dim = 0;
    uint64_t dist = 0;
    uint64_t count = 0;  // number of lines in the class
};

struct LocalityCertificate {
    uint32_t axis = 0;      // 1-based recovery axis
    uint32_t line_len = 0;  // points per line
    uint32_t supp = 0;      // distinct axis exponents, the dimension of a line projection
    uint32_t r = 0, delta = 0;
    std::vector<std::vector<uint32_t>> lines;
    std::vector<uint32_t> line_class;  // class id per line
    std::vector<LineClass> classes;
};

// Exact per-line erasure certificate: every line's projected code distance is
// computed by enumeration, delta is their minimum and r = line_len - delta + 1.
LocalityCertificate certify_locality(const LinearCode& c, uint32_t axis,
                                     uint64_t budget = 20000000);

enum class RecoverStatus { ok, detected };

struct LineRecovery {
    RecoverStatus status = RecoverStatus::ok;
    std::vector<int64_t> word;  // symbol encodings, -1 marks an erasure
    size_t filled = 0;
};

// Interpolates the erased symbols of one line from its unerased ones. At most
// delta-1 erasures are allowed; an inconsistent system reports detection and
// fills nothing.
LineRecovery recover_line(const LinearCode& c, const LocalityCertificate& cert,
                          std::vector<int64_t> received, size_t line_idx);

struct WordRecovery {
    bool complete = false;
    RecoverStatus status = RecoverStatus::ok;
    std::vector<int64_t> word;
    size_t filled = 0;
    std::vector<uint32_t> stuck;  // coordinates still erased at the fixpoint
    uint32_t sweeps = 0;
};

// Sweeps the certified axes in order, recovering every line within capacity,
// until no sweep makes progress.
WordRecovery recover_word(const LinearCode& c, const std::vector<LocalityCertificate>& certs,
                          std::vector<int64_t> received);

}  // namespace mcc
