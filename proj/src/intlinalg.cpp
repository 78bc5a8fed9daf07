#include "braidalg/intlinalg.hpp"

#include <cstdlib>
#include <numeric>

#include "braidalg/errors.hpp"

namespace braidalg {

namespace {

IMat identity(size_t n) {
    IMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void col_swap(IMat& m, size_t i, size_t j) {
    for (size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void col_neg(IMat& m, size_t i) {
    for (size_t r = 0; r < m.rows; ++r) m.at(r, i) = -m.at(r, i);
}

// col_j += k * col_i
void col_axpy(IMat& m, size_t j, size_t i, int64_t k) {
    for (size_t r = 0; r < m.rows; ++r) m.at(r, j) += k * m.at(r, i);
}

void row_swap(IMat& m, size_t i, size_t j) {
    for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void row_axpy(IMat& m, size_t j, size_t i, int64_t k) {
    for (size_t c = 0; c < m.cols; ++c) m.at(j, c) += k * m.at(i, c);
}

} // namespace

HnfResult hermite_normal_form(const IMat& m) {
    IMat h = m;
    IMat u = identity(m.cols);
    size_t pivot_col = 0;
    for (size_t row = 0; row < h.rows && pivot_col < h.cols; ++row) {
        // eliminate within columns >= pivot_col on this row via gcd steps
        for (;;) {
            size_t nz = h.cols;
            for (size_t c = pivot_col; c < h.cols; ++c)
                if (h.at(row, c) != 0) {
                    nz = c;
                    break;
                }
            if (nz == h.cols) break; // row all zero from pivot_col on
            // find the column with smallest nonzero |entry| to use as pivot
            size_t best = nz;
            for (size_t c = nz + 1; c < h.cols; ++c)
                if (h.at(row, c) != 0 &&
                    std::abs(h.at(row, c)) < std::abs(h.at(row, best)))
                    best = c;
            if (best != pivot_col) {
                col_swap(h, pivot_col, best);
                col_swap(u, pivot_col, best);
            }
            if (h.at(row, pivot_col) < 0) {
                col_neg(h, pivot_col);
                col_neg(u, pivot_col);
            }
            bool done = true;
            int64_t p = h.at(row, pivot_col);
            for (size_t c = pivot_col + 1; c < h.cols; ++c) {
                int64_t v = h.at(row, c);
                if (v == 0) continue;
                int64_t q = v / p;
                // round toward making the remainder canonical in [0, p)
                int64_t r = v - q * p;
                if (r < 0) {
                    q -= 1;
                    r += p;
                }
                col_axpy(h, c, pivot_col, -q);
                col_axpy(u, c, pivot_col, -q);
                if (r != 0) done = false;
            }
            if (done) break;
        }
        if (pivot_col < h.cols && h.at(row, pivot_col) != 0) {
            // reduce earlier columns against this pivot for canonical form
            int64_t p = h.at(row, pivot_col);
            for (size_t c = 0; c < pivot_col; ++c) {
                int64_t v = h.at(row, c);
                int64_t q = v / p;
                int64_t r = v - q * p;
                if (r < 0) q -= 1;
                if (q != 0) {
                    col_axpy(h, c, pivot_col, -q);
                    col_axpy(u, c, pivot_col, -q);
                }
            }
            ++pivot_col;
        }
    }
    return {h, u};
}

std::optional<std::vector<int64_t>> solve_integer(const IMat& m, const std::vector<int64_t>& b) {
    if (b.size() != m.rows) throw Error("solve_integer: dimension mismatch");
    HnfResult hr = hermite_normal_form(m);
    // forward-substitute against the staircase columns of H
    std::vector<int64_t> y(m.cols, 0);
    std::vector<int64_t> rem = b;
    size_t col = 0;
    for (size_t row = 0; row < m.rows; ++row) {
        if (col < hr.h.cols && hr.h.at(row, col) != 0) {
            int64_t p = hr.h.at(row, col);
            if (rem[row] % p != 0) return std::nullopt;
            int64_t k = rem[row] / p;
            y[col] = k;
            for (size_t r = row; r < m.rows; ++r) rem[r] -= k * hr.h.at(r, col);
            ++col;
        }
        if (rem[row] != 0) return std::nullopt;
    }
    for (size_t row = 0; row < m.rows; ++row)
        if (rem[row] != 0) return std::nullopt;
    // x = U * y
    std::vector<int64_t> x(m.cols, 0);
    for (size_t i = 0; i < m.cols; ++i)
        for (size_t j = 0; j < m.cols; ++j) x[i] += hr.u.at(i, j) * y[j];
    return x;
}

SnfResult smith_normal_form(const IMat& m) {
    IMat d = m;
    IMat u = identity(m.rows);
    IMat v = identity(m.cols);
    size_t t = 0;
    while (t < d.rows && t < d.cols) {
        // find smallest nonzero entry in the remaining block
        size_t pr = d.rows, pc = d.cols;
        for (size_t r = t; r < d.rows; ++r)
            for (size_t c = t; c < d.cols; ++c)
                if (d.at(r, c) != 0 &&
                    (pr == d.rows || std::abs(d.at(r, c)) < std::abs(d.at(pr, pc))))
                    pr = r, pc = c;
        if (pr == d.rows) break; // block is zero
        if (pr != t) {
            row_swap(d, pr, t);
            row_swap(u, pr, t);
        }
        if (pc != t) {
            col_swap(d, pc, t);
            col_swap(v, pc, t);
        }
        bool clean = true;
        for (size_t r = t + 1; r < d.rows; ++r) {
            if (d.at(r, t) == 0) continue;
            int64_t q = d.at(r, t) / d.at(t, t);
            row_axpy(d, r, t, -q);
            row_axpy(u, r, t, -q);
            if (d.at(r, t) != 0) clean = false;
        }
        for (size_t c = t + 1; c < d.cols; ++c) {
            if (d.at(t, c) == 0) continue;
            int64_t q = d.at(t, c) / d.at(t, t);
            col_axpy(d, c, t, -q);
            col_axpy(v, c, t, -q);
            if (d.at(t, c) != 0) clean = false;
        }
        if (!clean) continue;
        // divisibility fix-up: d_t must divide every later entry
        bool fixed = true;
        for (size_t r = t + 1; r < d.rows && fixed; ++r)
            for (size_t c = t + 1; c < d.cols && fixed; ++c)
                if (d.at(r, c) % d.at(t, t) != 0) {
                    row_axpy(d, t, r, 1);
                    row_axpy(u, t, r, 1);
                    fixed = false;
                }
        if (!fixed) continue;
        if (d.at(t, t) < 0) {
            col_neg(d, t);
            col_neg(v, t);
        }
        ++t;
    }
    return {d, u, v};
}

} // namespace braidalg
