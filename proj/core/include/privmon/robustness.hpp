#pragma once

#include <cstdint>
#include <vector>

#include "privmon/rob.hpp"
#include "privmon/stl.hpp"
#include "privmon/trace.hpp"

namespace privmon {

// Index sentinels used by the BOUNDS window cache: b_l starts at +inf
// and b_u at -inf; an empty window is signalled by b_l > b_u.
constexpr int64_t kIdxInf = INT64_MAX;
constexpr int64_t kIdxNegInf = INT64_MIN;

struct IndexWindow {
  int64_t b_l = kIdxInf;
  int64_t b_u = kIdxNegInf;
};

// Incremental time-stamp bounds computation. Indices are 1-based.
// Returns the window of sample indices j with t(j) in t(i) + [lo, hi),
// scanning downward from the previous row's bounds so the total work
// across all rows of one column stays linear.
IndexWindow bounds(const Interval &interval, int64_t i,
                   const std::vector<int64_t> &t, int64_t n,
                   IndexWindow prev);

// Dynamic-programming table: one row per sample, one column per
// encoding slot; cell (i, j) holds the robustness of subformula j at
// sample i (0-based accessors).
struct RobTable {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Rob> cells;
  std::vector<int64_t> b_l;
  std::vector<int64_t> b_u;

  Rob at(size_t i, size_t j) const { return cells[i * cols + j]; }
  Rob &at(size_t i, size_t j) { return cells[i * cols + j]; }
};

// Fills the table bottom-right to top-left and returns it.
RobTable dp_taliro_table(const Trace &trace, const FormulaEncoding &enc);

// Robustness of the trace against the encoded formula at sample 0.
Rob dp_taliro(const Trace &trace, const FormulaEncoding &enc);

// Direct recursive evaluation of the robust semantics; the independent
// oracle the dynamic program and all circuit layers are checked
// against. `i` is 1-based to match the on-paper indexing.
Rob rob_recursive(const Trace &trace, const Formula &f, int64_t i, int width);

} // namespace privmon
