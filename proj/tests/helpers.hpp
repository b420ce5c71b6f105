#pragma once

// Test-side oracles and generators. Everything here is deliberately
// independent of the library's Smith-form path: determinants by cofactor
// expansion, span comparisons by a local Hermite-style elimination.

#include <random>
#include <stdexcept>
#include <vector>

#include "fourfold/fourfold.hpp"

namespace testutil {

using fourfold::Int;

inline Int naive_det(const fourfold::IntMat& m) {
    std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        fourfold::IntMat minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        Int term = m(0, j) * naive_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// Row-style Hermite elimination producing a canonical basis of the row
// span: pivots positive, entries above pivots reduced. Two integer spans
// are equal iff their canonical forms are equal.
inline std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return rows;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        // gcd out column c below row r
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 &&
                    (best == rows.size() || std::abs(rows[i][c]) < std::abs(rows[best][c])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[r][c];
                for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[r][k];
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = -rows[r][k];
        for (std::size_t i = 0; i < r; ++i) {
            Int q = rows[i][c] / rows[r][c];
            if (rows[i][c] % rows[r][c] < 0) q -= 1;  // floor division for canonical residues
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[r][k];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

inline std::vector<std::vector<Int>> class_rows(const std::vector<fourfold::HomClass>& classes) {
    std::vector<std::vector<Int>> rows;
    for (const auto& c : classes) rows.push_back(c.coeffs());
    return rows;
}

inline bool same_span(const std::vector<fourfold::HomClass>& a,
                      const std::vector<fourfold::HomClass>& b) {
    return hnf_rows(class_rows(a)) == hnf_rows(class_rows(b));
}

inline bool in_span(const std::vector<Int>& x, const std::vector<std::vector<Int>>& basis) {
    std::vector<std::vector<Int>> with = basis;
    with.push_back(x);
    return hnf_rows(with) == hnf_rows(basis);
}

// --- deterministic random generators ---

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817u);
    return gen;
}

inline Int rand_int(Int lo, Int hi) {
    std::uniform_int_distribution<Int> d(lo, hi);
    return d(rng());
}

inline fourfold::HomClass random_class(const fourfold::DiagonalLattice& lat, Int bound = 4) {
    std::vector<Int> c;
    for (Int i = 0; i < lat.rank(); ++i) c.push_back(rand_int(-bound, bound));
    return fourfold::HomClass(lat, std::move(c));
}

// Random expression the grammar can print and re-parse: a flat connected
// sum of atoms (or a single atom).
inline fourfold::ManifoldExpr random_grammar_expr() {
    using fourfold::ManifoldExpr;
    auto atom = [] {
        switch (rand_int(0, 10)) {
            case 0: return ManifoldExpr::cp2();
            case 1: return ManifoldExpr::cp2bar();
            case 2: return ManifoldExpr::s2xs2();
            case 3: return ManifoldExpr::k3();
            case 4: return ManifoldExpr::z0();
            case 5: return ManifoldExpr::z1();
            case 6: return ManifoldExpr::elliptic(rand_int(1, 6));
            case 7: return ManifoldExpr::x_family(rand_int(1, 4), rand_int(1, 4));
            case 8: return ManifoldExpr::w_family(rand_int(1, 4), rand_int(1, 4));
            case 9: return ManifoldExpr::d_family(rand_int(2, 6));
            default: return ManifoldExpr::g_family(rand_int(2, 6));
        }
    };
    Int terms = rand_int(1, 4);
    std::vector<ManifoldExpr> parts;
    for (Int t = 0; t < terms; ++t) {
        ManifoldExpr a = atom();
        Int mult = rand_int(1, 3);
        for (Int i = 0; i < mult; ++i) parts.push_back(a);
    }
    return ManifoldExpr::conn_sum(std::move(parts));
}

// Random expression that is guaranteed to evaluate: at most one Z/2 piece
// per sum, operators applied within their preconditions.
inline fourfold::ManifoldExpr random_valid_expr() {
    using fourfold::ManifoldExpr;
    auto trivial_atom = [] {
        switch (rand_int(0, 4)) {
            case 0: return ManifoldExpr::cp2();
            case 1: return ManifoldExpr::cp2bar();
            case 2: return ManifoldExpr::s2xs2();
            case 3: return ManifoldExpr::k3();
            default: return ManifoldExpr::elliptic(rand_int(1, 5));
        }
    };
    auto z2_piece = [] {
        switch (rand_int(0, 3)) {
            case 0: return ManifoldExpr::z0();
            case 1: return ManifoldExpr::z1();
            case 2: return ManifoldExpr::w_family(rand_int(1, 4), rand_int(1, 4));
            default: return ManifoldExpr::g_family(rand_int(2, 5));
        }
    };
    switch (rand_int(0, 6)) {
        case 0: return trivial_atom();
        case 1: return z2_piece();
        case 2: {
            std::vector<ManifoldExpr> parts;
            if (rand_int(0, 1)) parts.push_back(z2_piece());
            Int k = rand_int(parts.empty() ? 2 : 1, 4);
            for (Int i = 0; i < k; ++i) parts.push_back(trivial_atom());
            return ManifoldExpr::conn_sum(std::move(parts));
        }
        case 3: return ManifoldExpr::blowup(random_valid_expr(), rand_int(1, 3));
        case 4:
            return ManifoldExpr::knot_surgery(ManifoldExpr::elliptic(rand_int(1, 5)),
                                              fourfold::twist_knot(rand_int(1, 4)),
                                              rand_int(1, 2));
        case 5:
            return ManifoldExpr::free_quotient(ManifoldExpr::elliptic(rand_int(1, 5)),
                                               rand_int(0, 1) ? "j" : "iota", false);
        default: return ManifoldExpr::d_family(rand_int(2, 6));
    }
}

}  // namespace testutil
