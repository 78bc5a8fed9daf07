#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace braidalg {

/// Small dense integer matrices, rows x cols, row-major.
struct IMat {
    size_t rows = 0, cols = 0;
    std::vector<int64_t> a;

    IMat() = default;
    IMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    int64_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    int64_t at(size_t r, size_t c) const { return a[r * cols + c]; }
};

/// Column-style Hermite normal form: returns H = M * U with U unimodular,
/// H lower-staircase by columns (pivots descend left to right, zero columns
/// at the end removed when trim_zero_cols).
struct HnfResult {
    IMat h;
    IMat u; // cols(M) x cols(H'), transforms original columns into H
};
HnfResult hermite_normal_form(const IMat& m);

/// Solves M x = b over the integers; nullopt when no integer solution.
std::optional<std::vector<int64_t>> solve_integer(const IMat& m, const std::vector<int64_t>& b);

/// Smith normal form: U * M * V = D diagonal with d_i | d_{i+1}.
struct SnfResult {
    IMat d, u, v;
};
SnfResult smith_normal_form(const IMat& m);

} // namespace braidalg
