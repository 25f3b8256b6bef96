#include "privmon/trace.hpp"

#include <sstream>

#include "privmon/errors.hpp"
#include "privmon/rob.hpp"

namespace privmon {

void validate_trace(const Trace &trace, int width) {
  if (!valid_width(width)) throw ValidationError("unsupported word width");
  if (trace.t.empty()) throw ValidationError("trace must have at least one sample");
  if (trace.t.size() != trace.x.size())
    throw ValidationError("trace timestamp/value lengths differ");
  if (trace.t[0] != 0) throw ValidationError("first timestamp must be 0");
  for (size_t i = 0; i < trace.t.size(); ++i) {
    if (trace.t[i] < 0 || trace.t[i] > pinf(width))
      throw ValidationError("timestamp out of range at sample " +
                            std::to_string(i));
    if (i > 0 && trace.t[i] <= trace.t[i - 1])
      throw ValidationError("timestamps must be strictly increasing");
    if (!in_range(trace.x[i], width))
      throw ValidationError("signal value out of range at sample " +
                            std::to_string(i));
  }
}

Trace pad_trace(const Trace &trace, size_t n, int width) {
  validate_trace(trace, width);
  if (trace.size() > n)
    throw ValidationError("trace longer than the session capacity");
  Trace out = trace;
  while (out.size() < n) {
    int64_t next_t = out.t.back() + 1;
    if (next_t > pinf(width))
      throw ValidationError("trace padding overflows the timestamp range");
    out.t.push_back(next_t);
    out.x.push_back(out.x.back());
  }
  return out;
}

std::string write_trace_csv(const Trace &trace) {
  std::ostringstream out;
  out << "t,x\n";
  for (size_t i = 0; i < trace.size(); ++i)
    out << trace.t[i] << ',' << trace.x[i] << '\n';
  return out.str();
}

Trace read_trace_csv(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || (line != "t,x" && line != "t,x\r"))
    throw ValidationError("trace CSV must start with header 't,x'");
  Trace trace;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    int64_t t, x;
    char comma;
    if (!(ls >> t >> comma >> x) || comma != ',')
      throw ValidationError("malformed trace CSV line " +
                            std::to_string(lineno));
    trace.t.push_back(t);
    trace.x.push_back(x);
  }
  return trace;
}

} // namespace privmon
