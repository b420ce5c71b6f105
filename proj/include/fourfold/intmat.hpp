#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fourfold/checked.hpp"

namespace fourfold {

// Dense integer matrix, row-major. Sized once, entries mutable.
class IntMat {
  public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols, Int fill = 0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const = default;

    std::vector<Int> row(std::size_t i) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }
    std::vector<Int> col(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row i -= q * row j
    void row_axpy(std::size_t i, std::size_t j, Int q) {
        for (std::size_t k = 0; k < cols_; ++k)
            (*this)(i, k) = checked_sub((*this)(i, k), checked_mul(q, (*this)(j, k)));
    }
    // col i -= q * col j
    void col_axpy(std::size_t i, std::size_t j, Int q) {
        for (std::size_t k = 0; k < rows_; ++k)
            (*this)(k, i) = checked_sub((*this)(k, i), checked_mul(q, (*this)(k, j)));
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = checked_neg((*this)(i, k));
    }
    void negate_col(std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = checked_neg((*this)(k, j));
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    IntMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Int aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
        }
    return c;
}

// Leading principal minors det(A[0..k, 0..k]), k = 0..n-1, by fraction-free
// (Bareiss) elimination without pivoting. A zero pivot means the next minor
// is zero; from that point on the remaining minors are reported as 0 and the
// caller must treat them as "not computed by this scheme" (good enough for
// definiteness tests, where a zero minor already decides the answer).
inline std::vector<Int> leading_principal_minors(const IntMat& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("minors need a square matrix");
    std::size_t n = g.rows();
    std::vector<Int> minors(n, 0);
    IntMat a = g;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Int pivot = a(k, k);
        minors[k] = pivot;
        if (pivot == 0) break;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(a(i, j), pivot), checked_mul(a(i, k), a(k, j)));
                a(i, j) = num / prev;  // divides exactly (Bareiss)
            }
        prev = pivot;
    }
    return minors;
}

// Determinant by Bareiss with row pivoting (sign tracked), exact.
inline Int determinant(const IntMat& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("determinant needs a square matrix");
    std::size_t n = g.rows();
    if (n == 0) return 1;
    IntMat a = g;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j))) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : checked_neg(a(n - 1, n - 1));
}

struct SmithResult {
    IntMat d;  // diagonal, d(i,i) >= 0 and d(i,i) | d(i+1,i+1)
    IntMat u;  // unimodular, rows x rows
    IntMat v;  // unimodular, cols x cols
};

// Smith normal form by row/column reduction, pivot chosen as the smallest
// nonzero absolute value in the remaining block. Returns U*A*V = D.
inline SmithResult smith_normal_form(const IntMat& input) {
    std::size_t m = input.rows(), n = input.cols();
    SmithResult r{input, IntMat::identity(m), IntMat::identity(n)};
    IntMat& d = r.d;
    std::size_t t = 0;
    while (t < m && t < n) {
        // locate pivot: smallest |entry| != 0 in d[t.., t..]
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                Int v = checked_abs(d(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // remaining block is zero
        d.swap_rows(t, pi);
        r.u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        r.v.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                d.row_axpy(i, t, q);
                r.u.row_axpy(i, t, q);
                if (d(i, t) != 0) {  // remainder became the smaller pivot
                    d.swap_rows(t, i);
                    r.u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                d.col_axpy(j, t, q);
                r.v.col_axpy(j, t, q);
                if (d(t, j) != 0) {
                    d.swap_cols(t, j);
                    r.v.swap_cols(t, j);
                    clean = false;
                }
            }
        }
        // divisibility: pivot must divide every remaining entry
        for (std::size_t i = t + 1; i < m && d(t, t) != 0; ++i) {
            bool bad = false;
            for (std::size_t j = t + 1; j < n; ++j)
                if (d(i, j) % d(t, t) != 0) {
                    bad = true;
                    break;
                }
            if (bad) {
                // fold row i into row t and redo the clearing pass
                d.row_axpy(t, i, -1);
                r.u.row_axpy(t, i, -1);
                bool c2 = false;
                while (!c2) {
                    c2 = true;
                    for (std::size_t ii = t + 1; ii < m; ++ii) {
                        if (d(ii, t) == 0) continue;
                        Int q = d(ii, t) / d(t, t);
                        d.row_axpy(ii, t, q);
                        r.u.row_axpy(ii, t, q);
                        if (d(ii, t) != 0) {
                            d.swap_rows(t, ii);
                            r.u.swap_rows(t, ii);
                            c2 = false;
                        }
                    }
                    for (std::size_t jj = t + 1; jj < n; ++jj) {
                        if (d(t, jj) == 0) continue;
                        Int q = d(t, jj) / d(t, t);
                        d.col_axpy(jj, t, q);
                        r.v.col_axpy(jj, t, q);
                        if (d(t, jj) != 0) {
                            d.swap_cols(t, jj);
                            r.v.swap_cols(t, jj);
                            c2 = false;
                        }
                    }
                }
                i = t;  // re-scan divisibility from scratch
            }
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            r.u.negate_row(t);
        }
        ++t;
    }
    return r;
}

// Pairwise Lagrange-style size reduction of a lattice basis given as rows.
// Only unimodular row operations are applied, so the integer span is
// unchanged; the vectors just get shorter coordinates. Deterministic.
inline void size_reduce_rows(std::vector<std::vector<Int>>& rows) {
    auto dot = [](const std::vector<Int>& a, const std::vector<Int>& b) {
        Int s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
        return s;
    };
    bool changed = true;
    int sweeps = 0;
    while (changed && sweeps++ < 64) {
        changed = false;
        std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
            return dot(a, a) < dot(b, b);
        });
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j) {
                if (i == j) continue;
                Int njj = dot(rows[j], rows[j]);
                if (njj == 0) continue;
                Int d = dot(rows[i], rows[j]);
                Int q = d >= 0 ? (2 * d + njj) / (2 * njj) : -((-2 * d + njj) / (2 * njj));
                if (q == 0) continue;
                std::vector<Int> cand(rows[i].size());
                for (std::size_t k = 0; k < cand.size(); ++k)
                    cand[k] = checked_sub(rows[i][k], checked_mul(q, rows[j][k]));
                if (dot(cand, cand) < dot(rows[i], rows[i])) {
                    rows[i] = std::move(cand);
                    changed = true;
                }
            }
    }
    for (std::vector<Int>& v : rows)
        for (Int x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : v) y = checked_neg(y);
            break;
        }
}

// Saturated basis of { x : A x = 0 } over the integers: the columns of V
// whose Smith diagonal entry vanishes, size-reduced. Unimodularity of V
// makes the span primitive, i.e. it contains every integer solution.
inline std::vector<std::vector<Int>> integer_kernel(const IntMat& a) {
    std::size_t n = a.cols();
    SmithResult s = smith_normal_form(a);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = 0; j < n; ++j) {
        Int dj = (j < a.rows() && j < n) ? s.d(j, j) : 0;
        if (dj != 0) continue;
        basis.push_back(s.v.col(j));
    }
    size_reduce_rows(basis);
    return basis;
}

}  // namespace fourfold
