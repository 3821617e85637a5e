// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#include "mcc/galois.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace mcc {
namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over GF(p) for the modulus search only. Coefficients are
// stored low-first; the leading coefficient is nonzero unless the poly is 0.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
    // m is monic.
    trim(a);
    while (a.size() >= m.size()) {
        uint32_t c = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            uint32_t t = (c * m[i]) % p;
            a[shift + i] = (a[shift + i] + p - t) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& m, uint32_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // Make b monic before reducing.
        uint32_t lead = b.back();
        if (lead != 1) {
            uint32_t inv = 1;
            for (uint32_t x = 1; x < p; ++x)
                if ((lead * x) % p == 1) { inv = x; break; }
            for (auto& c : b) c = (c * inv) % p;
        }
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: f of degree l is irreducible over GF(p) iff x^{p^l} = x
// (mod f) and gcd(x^{p^{l/r}} - x, f) = 1 for every prime r dividing l.
bool poly_irreducible(const Poly& f, uint32_t p) {
    uint32_t l = static_cast<uint32_t>(f.size()) - 1;
    Poly x{0, 1};
    uint64_t pl = 1;
    for (uint32_t i = 0; i < l; ++i) pl *= p;
    Poly xq = poly_powmod(x, pl, f, p);
    if (xq != poly_mod(x, f, p)) return false;
    for (uint64_t r : prime_factors(l)) {
        uint64_t e = 1;
        for (uint32_t i = 0; i < l / r; ++i) e *= p;
        Poly xe = poly_powmod(x, e, f, p);
        // gcd(x^{p^{l/r}} - x, f)
        Poly diff = xe;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

Poly find_modulus(uint32_t p, uint32_t l) {
    if (l == 1) return Poly{0, 1};  // x itself; arithmetic is plain mod p
    uint64_t span = 1;
    for (uint32_t i = 0; i < l; ++i) span *= p;
    for (uint64_t t = 0; t < span; ++t) {
        Poly f(l + 1, 0);
        f[l] = 1;
        uint64_t tt = t;
        for (uint32_t i = 0; i < l; ++i) {
            f[i] = static_cast<uint32_t>(tt % p);
            tt /= p;
        }
        if (poly_irreducible(f, p)) return f;
    }
    throw spec_error("galois: no irreducible modulus found");  // unreachable
}

}  // namespace

Field::Field(uint32_t p, uint32_t l) {
    if (!is_prime(p)) throw spec_error("galois: p must be prime");
    if (l < 1 || l > 16) throw spec_error("galois: l must be in [1,16]");
    uint64_t q = 1;
    for (uint32_t i = 0; i < l; ++i) {
        q *= p;
        if (q > (1u << 20)) throw spec_error("galois: p^l exceeds 2^20");
    }
    spec_.p = p;
    spec_.l = l;
    q_ = q;
    Poly m = find_modulus(p, l);
    spec_.modulus.assign(m.begin(), m.end());

    // Primitive element: smallest encoding whose multiplicative order is q-1.
    auto factors = prime_factors(q_ - 1);
    auto slow_pow = [&](uint32_t a, uint64_t e) {
        uint32_t r = 1, b = a;
        while (e) {
            if (e & 1) r = slow_mul(r, b);
            b = slow_mul(b, b);
            e >>= 1;
        }
        return r;
    };
    for (uint32_t v = 1; v < q_; ++v) {
        bool ok = true;
        for (uint64_t r : factors) {
            if (slow_pow(v, (q_ - 1) / r) == 1) { ok = false; break; }
        }
        if (ok) { primitive_ = v; break; }
    }
    if (primitive_ == 0 && q_ > 2) throw spec_error("galois: primitive search failed");
    if (q_ == 2) primitive_ = 1;

    if (q_ <= LOG_TABLE_MAX_Q) {
        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        uint32_t acc = 1;
        for (uint64_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = acc;
            exp_[i + (q_ - 1)] = acc;
            log_[acc] = static_cast<uint32_t>(i);
            acc = slow_mul(acc, primitive_);
        }
    }
    if (q_ <= MUL_TABLE_MAX_Q) {
        mul_tab_.assign(q_ * q_, 0);
        add_tab_.assign(q_ * q_, 0);
        for (uint64_t a = 0; a < q_; ++a) {
            for (uint64_t b = 0; b < q_; ++b) {
                uint32_t m2 = (a && b) ? exp_[log_[a] + log_[b]] : 0;
                mul_tab_[a * q_ + b] = static_cast<uint16_t>(m2);
                // addition digit-wise mod p
                uint64_t x = a, y = b, s = 0, mul = 1;
                for (uint32_t i = 0; i < l; ++i) {
                    s += ((x % p + y % p) % p) * mul;
                    x /= p;
                    y /= p;
                    mul *= p;
                }
                add_tab_[a * q_ + b] = static_cast<uint16_t>(s);
            }
        }
    }
}

uint32_t Field::slow_mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t p = spec_.p, l = spec_.l;
    if (l == 1) return static_cast<uint32_t>((uint64_t(a) * b) % p);
    std::array<uint32_t, 33> prod{};
    std::array<uint32_t, 17> da{}, db{};
    uint32_t x = a;
    for (uint32_t i = 0; i < l; ++i) { da[i] = x % p; x /= p; }
    x = b;
    for (uint32_t i = 0; i < l; ++i) { db[i] = x % p; x /= p; }
    for (uint32_t i = 0; i < l; ++i) {
        if (!da[i]) continue;
        for (uint32_t j = 0; j < l; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    // Reduce by the monic modulus.
    for (int deg = 2 * int(l) - 2; deg >= int(l); --deg) {
        uint32_t c = prod[deg];
        if (!c) continue;
        prod[deg] = 0;
        for (uint32_t i = 0; i < l; ++i) {
            uint32_t t = (c * spec_.modulus[i]) % p;
            prod[deg - l + i] = (prod[deg - l + i] + p - t) % p;
        }
    }
    uint32_t out = 0;
    for (int i = int(l) - 1; i >= 0; --i) out = out * p + prod[i];
    return out;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (!add_tab_.empty()) return add_tab_[uint64_t(a) * q_ + b];
    if (spec_.p == 2) return a ^ b;
    uint32_t p = spec_.p;
    if (spec_.l == 1) return (a + b) % p;
    uint64_t s = 0, mul = 1;
    for (uint32_t i = 0; i < spec_.l; ++i) {
        s += ((a % p + b % p) % p) * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return static_cast<uint32_t>(s);
}

uint32_t Field::neg(uint32_t a) const {
    if (spec_.p == 2) return a;
    uint32_t p = spec_.p;
    if (spec_.l == 1) return (p - a) % p;
    uint64_t s = 0, mul = 1;
    for (uint32_t i = 0; i < spec_.l; ++i) {
        s += ((p - a % p) % p) * mul;
        a /= p;
        mul *= p;
    }
    return static_cast<uint32_t>(s);
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (!mul_tab_.empty()) return mul_tab_[uint64_t(a) * q_ + b];
    if (!exp_.empty()) {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    return slow_mul(a, b);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw spec_error("galois: inverse of zero");
    if (!exp_.empty()) return exp_[(q_ - 1) - log_[a]];
    return pow(a, q_ - 2);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    if (!exp_.empty() && a != 0) {
        uint64_t le = (uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
        return exp_[le];
    }
    if (a == 0) return e == 0 ? 1 : 0;
    uint32_t r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint64_t Field::element_order(uint32_t a) const {
    if (a == 0) throw spec_error("galois: order of zero");
    uint64_t ord = q_ - 1;
    for (uint64_t r : prime_factors(q_ - 1)) {
        while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
    }
    return ord;
}

std::vector<uint32_t> Field::coeffs(uint32_t a) const {
    std::vector<uint32_t> c(spec_.l);
    for (uint32_t i = 0; i < spec_.l; ++i) { c[i] = a % spec_.p; a /= spec_.p; }
    return c;
}

uint32_t Field::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > spec_.l) throw spec_error("galois: coefficient vector too long");
    uint64_t out = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= spec_.p) throw spec_error("galois: coefficient out of range");
        out = out * spec_.p + c[i];
    }
    return static_cast<uint32_t>(out);
}

FieldPtr field_new(uint32_t p, uint32_t l) {
    return std::make_shared<Field>(p, l);
}

uint32_t trace(const Field& f, uint32_t h, uint32_t x) {
    if (h == 0 || f.l() % h != 0) throw spec_error("galois: trace requires h | l");
    uint64_t ph = 1;
    for (uint32_t i = 0; i < h; ++i) ph *= f.p();
    uint32_t acc = 0, cur = x;
    for (uint32_t i = 0; i < f.l() / h; ++i) {
        acc = f.add(acc, cur);
        cur = f.pow(cur, ph);
    }
    return acc;
}

bool is_in_subfield(const Field& f, uint32_t h, uint32_t x) {
    if (h == 0 || f.l() % h != 0) throw spec_error("galois: subfield test requires h | l");
    uint64_t ph = 1;
    for (uint32_t i = 0; i < h; ++i) ph *= f.p();
    return f.pow(x, ph) == x;
}

std::vector<uint32_t> vec_trace(const Field& f, uint32_t h, const std::vector<uint32_t>& v) {
    std::vector<uint32_t> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = trace(f, h, v[i]);
    return out;
}

std::vector<uint32_t> subfield_elements(const Field& f, uint32_t h) {
    if (h == 0 || f.l() % h != 0) throw spec_error("galois: subfield requires h | l");
    uint64_t ph = 1;
    for (uint32_t i = 0; i < h; ++i) ph *= f.p();
    std::vector<uint32_t> out{0};
    uint32_t step = f.pow(f.primitive_element(), (f.q() - 1) / (ph - 1));
    uint32_t cur = 1;
    for (uint64_t i = 0; i < ph - 1; ++i) {
        out.push_back(cur);
        cur = f.mul(cur, step);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint32_t> roots_of_unity(const Field& f, uint64_t t) {
    if (t == 0 || (f.q() - 1) % t != 0)
        throw spec_error("galois: roots_of_unity requires t | q-1");
    uint32_t step = f.pow(f.primitive_element(), (f.q() - 1) / t);
    std::vector<uint32_t> out;
    out.reserve(t);
    uint32_t cur = 1;
    for (uint64_t s = 0; s < t; ++s) {
        out.push_back(cur);
        cur = f.mul(cur, step);
    }
    return out;
}

SubfieldMap subfield_map(FieldPtr big, uint32_t h) {
    if (h == 0 || big->l() % h != 0) throw spec_error("galois: subfield map requires h | l");
    SubfieldMap m;
    m.big = big;
    m.sub = field_new(big->p(), h);
    // Root of the small modulus inside the big field: smallest encoding among
    // the Frobenius^h-fixed elements. Modulus coefficients are < p, so their
    // encodings agree in both fields.
    const auto& mod = m.sub->spec().modulus;
    uint32_t root = 0;
    bool found = false;
    for (uint32_t cand : subfield_elements(*big, h)) {
        uint32_t acc = 0;
        for (size_t i = mod.size(); i-- > 0;) acc = big->add(big->mul(acc, cand), mod[i]);
        if (acc == 0) { root = cand; found = true; break; }
    }
    if (!found) {
        if (h == 1) {
            root = 0;  // unused: degree-1 lifts are coefficient-identical
        } else {
            throw spec_error("galois: no subfield modulus root found");
        }
    }
    m.to_big.assign(m.sub->q(), 0);
    m.to_sub.assign(big->q(), -1);
    for (uint64_t s = 0; s < m.sub->q(); ++s) {
        uint32_t acc = 0;
        uint64_t x = s;
        // Horner on the base-p digits of s, high digit first.
        std::vector<uint32_t> dig(h);
        for (uint32_t i = 0; i < h; ++i) { dig[i] = x % big->p(); x /= big->p(); }
        for (uint32_t i = h; i-- > 0;) acc = big->add(big->mul(acc, root), dig[i]);
        m.to_big[s] = acc;
        m.to_sub[acc] = static_cast<int64_t>(s);
    }
    return m;
}

std::string element_to_string(uint32_t a) { return std::to_string(a); }

uint32_t element_from_string(const Field& f, const std::string& s) {
    if (s.empty()) throw spec_error("galois: empty element literal");
    uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw spec_error("galois: bad element literal '" + s + "'");
        v = v * 10 + (c - '0');
        if (v >= (1u << 21)) throw spec_error("galois: element literal out of range");
    }
    if (v >= f.q()) throw spec_error("galois: element literal out of range");
    return static_cast<uint32_t>(v);
}

}  // namespace mcc
