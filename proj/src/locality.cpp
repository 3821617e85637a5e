// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#include "mcc/locality.hpp"

#include <map>

namespace mcc {

std::vector<std::vector<uint32_t>> lines_of_axis(const GridSpec& g, uint32_t axis) {
    if (axis < 1 || axis > g.m()) throw spec_error("lines_of_axis: axis out of range");
    uint64_t n = 1;
    for (uint32_t s : g.sizes) n *= s;
    std::vector<std::vector<uint32_t>> lines;
    for (uint64_t i = 0; i < n; ++i) {
        Exponent t = coord_tuple(g, i);
        if (t[axis - 1] != 0) continue;
        std::vector<uint32_t> line;
        for (uint32_t e = 0; e < g.sizes[axis - 1]; ++e) {
            t[axis - 1] = e;
            line.push_back(static_cast<uint32_t>(coord_index(g, t)));
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

std::vector<uint32_t> line_through(const GridSpec& g, uint64_t coord, uint32_t axis) {
    if (axis < 1 || axis > g.m()) throw spec_error("line_through: axis out of range");
    Exponent t = coord_tuple(g, coord);
    std::vector<uint32_t> line;
    for (uint32_t e = 0; e < g.sizes[axis - 1]; ++e) {
        t[axis - 1] = e;
        line.push_back(static_cast<uint32_t>(coord_index(g, t)));
    }
    return line;
}

namespace {

Mat line_projection(const LinearCode& c, const std::vector<uint32_t>& line) {
    Mat proj(c.k, line.size());
    for (size_t i = 0; i < c.k; ++i)
        for (size_t j = 0; j < line.size(); ++j) proj.at(i, j) = c.gen.at(i, line[j]);
    rref(*c.field, proj);
    return proj;
}

size_t count_erased(const std::vector<int64_t>& word, const std::vector<uint32_t>& line) {
    size_t e = 0;
    for (uint32_t idx : line) e += word[idx] < 0;
    return e;
}

}  // namespace

LocalityCertificate certify_locality(const LinearCode& c, uint32_t axis, uint64_t budget) {
    if (!c.delta) throw spec_error("certify_locality: code carries no exponent-set metadata");
    const GridSpec& g = c.delta->grid;
    if (axis < 1 || axis > g.m()) throw spec_error("certify_locality: axis out of range");
    uint32_t nl = g.sizes[axis - 1];
    uint32_t supp = supp_size(*c.delta, axis);
    if (supp >= nl)
        throw spec_error("certify_locality: the axis support covers a full line");
    LocalityCertificate cert;
    cert.axis = axis;
    cert.line_len = nl;
    cert.supp = supp;
    cert.lines = lines_of_axis(g, axis);
    std::map<std::vector<uint32_t>, uint32_t> class_of;
    for (const auto& line : cert.lines) {
        Mat proj = line_projection(c, line);
        if (proj.rows == 0)
            throw spec_error("certify_locality: a line carries no code support");
        auto [it, fresh] =
            class_of.try_emplace(proj.a, static_cast<uint32_t>(cert.classes.size()));
        if (fresh) {
            LineClass lc;
            lc.dim = static_cast<uint32_t>(proj.rows);
            lc.dist = min_weight(*c.field, proj, budget);
            cert.classes.push_back(lc);
        }
        cert.line_class.push_back(it->second);
        ++cert.classes[it->second].count;
    }
    uint64_t dmin = nl;
    for (const LineClass& lc : cert.classes) dmin = std::min(dmin, lc.dist);
    cert.delta = static_cast<uint32_t>(dmin);
    cert.r = nl - cert.delta + 1;
    return cert;
}

LineRecovery recover_line(const LinearCode& c, const LocalityCertificate& cert,
                          std::vector<int64_t> received, size_t line_idx) {
    if (received.size() != c.n) throw spec_error("recover_line: word length mismatch");
    if (line_idx >= cert.lines.size()) throw spec_error("recover_line: line index out of range");
    const Field& f = *c.field;
    const std::vector<uint32_t>& line = cert.lines[line_idx];
    size_t erased = 0;
    for (uint32_t idx : line) {
        if (received[idx] < 0) {
            ++erased;
        } else if (static_cast<uint64_t>(received[idx]) >= f.q()) {
            throw spec_error("recover_line: symbol out of range");
        }
    }
    if (erased + 1 > cert.delta)
        throw spec_error("recover_line: too many erasures on the line");
    Mat proj = line_projection(c, line);
    size_t dim = proj.rows;
    // One equation per unerased position, one unknown per projected basis row.
    Mat a(line.size() - erased, dim);
    std::vector<uint32_t> b;
    size_t row = 0;
    for (size_t j = 0; j < line.size(); ++j) {
        if (received[line[j]] < 0) continue;
        for (size_t i = 0; i < dim; ++i) a.at(row, i) = proj.at(i, j);
        b.push_back(static_cast<uint32_t>(received[line[j]]));
        ++row;
    }
    std::vector<uint32_t> y;
    SolveStatus st = solve_unique(f, a, b, y);
    LineRecovery out;
    out.word = std::move(received);
    if (st == SolveStatus::inconsistent) {
        out.status = RecoverStatus::detected;
        return out;
    }
    if (st == SolveStatus::underdetermined)
        throw spec_error("recover_line: interpolation not unique, certificate broken");
    for (size_t j = 0; j < line.size(); ++j) {
        if (out.word[line[j]] >= 0) continue;
        uint32_t v = 0;
        for (size_t i = 0; i < dim; ++i) v = f.add(v, f.mul(y[i], proj.at(i, j)));
        out.word[line[j]] = v;
        ++out.filled;
    }
    return out;
}

WordRecovery recover_word(const LinearCode& c, const std::vector<LocalityCertificate>& certs,
                          std::vector<int64_t> received) {
    if (received.size() != c.n) throw spec_error("recover_word: word length mismatch");
    WordRecovery wr;
    wr.word = std::move(received);
    bool progress = true;
    while (progress) {
        progress = false;
        ++wr.sweeps;
        for (const LocalityCertificate& cert : certs) {
            for (size_t li = 0; li < cert.lines.size(); ++li) {
                size_t er = count_erased(wr.word, cert.lines[li]);
                if (er == 0 || er + 1 > cert.delta) continue;
                LineRecovery lr = recover_line(c, cert, wr.word, li);
                if (lr.status == RecoverStatus::detected) {
                    wr.status = RecoverStatus::detected;
                    continue;
                }
                wr.word = std::move(lr.word);
                wr.filled += lr.filled;
                progress = true;
            }
        }
    }
    for (size_t i = 0; i < wr.word.size(); ++i)
        if (wr.word[i] < 0) wr.stuck.push_back(static_cast<uint32_t>(i));
    wr.complete = wr.stuck.empty();
    return wr;
}

}  // namespace mcc
