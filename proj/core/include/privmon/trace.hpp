#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace privmon {

// Timed state sequence: samples x(i) taken at strictly increasing
// timestamps t(i), with t(0) = 0. The Designer's secret.
struct Trace {
  std::vector<int64_t> t;
  std::vector<int64_t> x;

  size_t size() const { return t.size(); }

  bool operator==(const Trace &) const = default;
};

// Checks the trace invariants against a word width; throws
// ValidationError with the reason on failure.
void validate_trace(const Trace &trace, int width);

// Extends a short trace to exactly n samples by replicating the last
// value at strictly increasing timestamps.
Trace pad_trace(const Trace &trace, size_t n, int width);

// CSV with header `t,x`, one decimal sample per line.
std::string write_trace_csv(const Trace &trace);
Trace read_trace_csv(const std::string &text);

} // namespace privmon
