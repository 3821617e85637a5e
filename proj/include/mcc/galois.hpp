// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcc {

// Thrown on violated preconditions; the message names the violated clause.
struct spec_error : std::runtime_error {
    explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

// GF(p^l) described by its prime, extension degree and modulus polynomial.
// The modulus is monic of degree l, stored low-coefficient-first (length l+1),
// and is the first irreducible found when the tuple (a_{l-1},...,a_0) is
// enumerated as an ascending base-p number. Elements are encoded as integers
// sum coeffs[i]*p^i with coeffs in [0,p); the same integer is the wire format.
struct FieldSpec {
    uint32_t p = 0;
    uint32_t l = 0;
    std::vector<uint32_t> modulus;
};

class Field {
  public:
    Field(uint32_t p, uint32_t l);

    const FieldSpec& spec() const { return spec_; }
    uint32_t p() const { return spec_.p; }
    uint32_t l() const { return spec_.l; }
    uint64_t q() const { return q_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;

    // Smallest encoded element of multiplicative order q-1.
    uint32_t primitive_element() const { return primitive_; }

    // Multiplicative order of a nonzero element.
    uint64_t element_order(uint32_t a) const;

    std::vector<uint32_t> coeffs(uint32_t a) const;
    uint32_t from_coeffs(const std::vector<uint32_t>& c) const;

    // Fast path helpers. mul_table() is non-null for q <= MUL_TABLE_MAX_Q and
    // holds q*q entries, row-major by the first operand.
    const uint16_t* mul_table() const { return mul_tab_.empty() ? nullptr : mul_tab_.data(); }
    const uint16_t* add_table() const { return add_tab_.empty() ? nullptr : add_tab_.data(); }

    static constexpr uint64_t MUL_TABLE_MAX_Q = 1024;
    static constexpr uint64_t LOG_TABLE_MAX_Q = 1u << 16;

  private:
    uint32_t slow_mul(uint32_t a, uint32_t b) const;

    FieldSpec spec_;
    uint64_t q_ = 0;
    uint32_t primitive_ = 0;
    // exp/log tables for q <= 2^16; above that multiplication reduces the
    // product polynomial directly.
    std::vector<uint32_t> exp_, log_;
    std::vector<uint16_t> mul_tab_, add_tab_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Constructs GF(p^l). Requires p prime, 1 <= l <= 16, p^l <= 2^20.
FieldPtr field_new(uint32_t p, uint32_t l);

// tr_{l/h}(x) = x + x^{p^h} + ... + x^{p^{h(l/h - 1)}}, the trace onto the
// subfield GF(p^h). Requires h | l.
uint32_t trace(const Field& f, uint32_t h, uint32_t x);

// True when x^{p^h} = x, i.e. x lies in the subfield GF(p^h).
bool is_in_subfield(const Field& f, uint32_t h, uint32_t x);

// Componentwise trace of a vector.
std::vector<uint32_t> vec_trace(const Field& f, uint32_t h, const std::vector<uint32_t>& v);

// All elements of the subfield GF(p^h) inside f, ascending by encoding.
std::vector<uint32_t> subfield_elements(const Field& f, uint32_t h);

// The t-th roots of unity, ordered g^{((q-1)/t) * s} for s = 0..t-1 where g is
// the primitive element. Requires t | q-1.
std::vector<uint32_t> roots_of_unity(const Field& f, uint64_t t);

// Identification of the standalone GF(p^h) with the subfield of a larger
// field. The embedding sends the canonical generator of GF(p^h) to the
// smallest-encoded root of GF(p^h)'s modulus among the big field's
// Frobenius^h-fixed elements, so it is deterministic.
struct SubfieldMap {
    FieldPtr sub;               // standalone GF(p^h)
    FieldPtr big;               // GF(p^l), h | l
    std::vector<uint32_t> to_big;   // indexed by subfield encoding
    std::vector<int64_t> to_sub;    // indexed by big encoding, -1 if outside
    uint32_t lift(uint32_t s) const { return to_big[s]; }
    // -1 when x is not in the embedded subfield.
    int64_t drop(uint32_t x) const { return to_sub[x]; }
};

SubfieldMap subfield_map(FieldPtr big, uint32_t h);

// Parse/format the decimal wire encoding.
std::string element_to_string(uint32_t a);
uint32_t element_from_string(const Field& f, const std::string& s);

}  // namespace mcc
