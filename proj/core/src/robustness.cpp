#include "privmon/robustness.hpp"

#include <algorithm>

#include "privmon/errors.hpp"

namespace privmon {

IndexWindow bounds(const Interval &interval, int64_t i,
                   const std::vector<int64_t> &t, int64_t n,
                   IndexWindow prev) {
  IndexWindow w = prev;
  const int64_t ti = t[i - 1];

  if (interval.hi_inf) {
    w.b_u = n;
  } else {
    int64_t h = (w.b_u == kIdxNegInf) ? n : w.b_u;
    for (int64_t j = h; j >= i; --j) {
      if (t[j - 1] < ti + interval.hi) {
        w.b_u = j;
        break;
      }
    }
  }

  int64_t h = (w.b_l == kIdxInf) ? n : w.b_l;
  for (int64_t j = h; j >= i; --j) {
    if (t[j - 1] >= ti + interval.lo)
      w.b_l = j;
    else
      break;
  }
  return w;
}

namespace {

struct DpState {
  const Trace &trace;
  const FormulaEncoding &enc;
  int width;
  int64_t n;
  int64_t m;
  RobTable table;

  Rob &R(int64_t i, int64_t j) { return table.at(i - 1, j - 1); }

  Interval interval_of(const EncNode &node) const {
    Interval iv;
    iv.lo = node.lo;
    if (node.hi == pinf(width))
      iv.hi_inf = true;
    else
      iv.hi = node.hi;
    return iv;
  }

  void temporal(int64_t i, int64_t j, const EncNode &node) {
    const NodeKind kind = static_cast<NodeKind>(node.opcode);
    const int64_t c1 = node.k1 + 1;
    const int64_t c2 = node.k2 + 1;
    const Interval iv = interval_of(node);
    const Rob empty = (kind == NodeKind::Always) ? pinf(width) : ninf(width);

    if (i == n) {
      if (iv.lo == 0)
        R(i, j) = (kind == NodeKind::Until) ? R(i, c2) : R(i, c1);
      else
        R(i, j) = empty;
      return;
    }
    if (iv.lo == 0 && iv.hi_inf) {
      switch (kind) {
      case NodeKind::Until:
        R(i, j) = std::max(R(i, c2), std::min(R(i, c1), R(i + 1, j)));
        break;
      case NodeKind::Eventually:
        R(i, j) = std::max(R(i, c1), R(i + 1, j));
        break;
      default:
        R(i, j) = std::min(R(i, c1), R(i + 1, j));
        break;
      }
      return;
    }

    IndexWindow prev{table.b_l[j - 1], table.b_u[j - 1]};
    IndexWindow w = bounds(iv, i, trace.t, n, prev);
    table.b_l[j - 1] = w.b_l;
    table.b_u[j - 1] = w.b_u;

    Rob acc = empty;
    if (kind == NodeKind::Until) {
      // Empty prefix ranges (b_l <= i) contribute the neutral +inf.
      Rob tmp = pinf(width);
      if (w.b_l != kIdxInf) {
        for (int64_t k = i; k < w.b_l; ++k) tmp = std::min(tmp, R(k, c1));
        for (int64_t k = w.b_l; k <= w.b_u; ++k) {
          acc = std::max(acc, std::min(R(k, c2), tmp));
          tmp = std::min(tmp, R(k, c1));
        }
      }
      if (iv.hi_inf)
        acc = std::max(acc, std::min(R(i, c1), R(i + 1, j)));
    } else if (kind == NodeKind::Eventually) {
      if (w.b_l != kIdxInf)
        for (int64_t k = w.b_l; k <= w.b_u; ++k)
          acc = std::max(acc, R(k, c1));
      if (iv.hi_inf) acc = std::max(acc, R(i + 1, j));
    } else {
      if (w.b_l != kIdxInf)
        for (int64_t k = w.b_l; k <= w.b_u; ++k)
          acc = std::min(acc, R(k, c1));
      if (iv.hi_inf) acc = std::min(acc, R(i + 1, j));
    }
    R(i, j) = acc;
  }

  void run() {
    for (int64_t i = n; i >= 1; --i) {
      for (int64_t j = m; j >= 1; --j) {
        const EncNode &node = enc.nodes[j - 1];
        switch (static_cast<NodeKind>(node.opcode)) {
        case NodeKind::True:
          R(i, j) = pinf(width);
          break;
        case NodeKind::AtomGe:
          R(i, j) = sat_sub(trace.x[i - 1], node.threshold, width);
          break;
        case NodeKind::AtomLe:
          R(i, j) = sat_sub(node.threshold, trace.x[i - 1], width);
          break;
        case NodeKind::Not:
          R(i, j) = sat_neg(R(i, node.k1 + 1), width);
          break;
        case NodeKind::And:
          R(i, j) = std::min(R(i, node.k1 + 1), R(i, node.k2 + 1));
          break;
        case NodeKind::Or:
          R(i, j) = std::max(R(i, node.k1 + 1), R(i, node.k2 + 1));
          break;
        case NodeKind::Implies:
          R(i, j) = std::max(sat_neg(R(i, node.k1 + 1), width),
                             R(i, node.k2 + 1));
          break;
        case NodeKind::Iff: {
          Rob a = R(i, node.k1 + 1);
          Rob b = R(i, node.k2 + 1);
          R(i, j) = std::min(std::max(sat_neg(a, width), b),
                             std::max(a, sat_neg(b, width)));
          break;
        }
        default:
          temporal(i, j, node);
          break;
        }
      }
    }
  }
};

} // namespace

RobTable dp_taliro_table(const Trace &trace, const FormulaEncoding &enc) {
  validate_encoding(enc);
  validate_trace(trace, enc.width);

  DpState state{trace, enc, enc.width, static_cast<int64_t>(trace.size()),
                static_cast<int64_t>(enc.nodes.size())};
  state.table.rows = trace.size();
  state.table.cols = enc.nodes.size();
  state.table.cells.assign(state.table.rows * state.table.cols, 0);
  state.table.b_l.assign(enc.nodes.size(), kIdxInf);
  state.table.b_u.assign(enc.nodes.size(), kIdxNegInf);
  state.run();
  return state.table;
}

Rob dp_taliro(const Trace &trace, const FormulaEncoding &enc) {
  return dp_taliro_table(trace, enc).at(0, 0);
}

namespace {

bool in_window(const Trace &trace, int64_t i, int64_t j, const Interval &iv) {
  int64_t tj = trace.t[j - 1];
  int64_t ti = trace.t[i - 1];
  if (tj < ti + iv.lo) return false;
  return iv.hi_inf || tj < ti + iv.hi;
}

Rob rec(const Trace &trace, const Formula &f, int64_t i, int width) {
  const int64_t n = static_cast<int64_t>(trace.size());
  switch (f.kind) {
  case NodeKind::True:
    return pinf(width);
  case NodeKind::AtomGe:
    return sat_sub(trace.x[i - 1], f.threshold, width);
  case NodeKind::AtomLe:
    return sat_sub(f.threshold, trace.x[i - 1], width);
  case NodeKind::Not:
    return sat_neg(rec(trace, *f.left, i, width), width);
  case NodeKind::And:
    return std::min(rec(trace, *f.left, i, width),
                    rec(trace, *f.right, i, width));
  case NodeKind::Or:
    return std::max(rec(trace, *f.left, i, width),
                    rec(trace, *f.right, i, width));
  case NodeKind::Implies:
    return std::max(sat_neg(rec(trace, *f.left, i, width), width),
                    rec(trace, *f.right, i, width));
  case NodeKind::Iff: {
    Rob a = rec(trace, *f.left, i, width);
    Rob b = rec(trace, *f.right, i, width);
    return std::min(std::max(sat_neg(a, width), b),
                    std::max(a, sat_neg(b, width)));
  }
  case NodeKind::Until: {
    Rob acc = ninf(width);
    for (int64_t j = i; j <= n; ++j) {
      if (!in_window(trace, i, j, f.interval)) continue;
      Rob hold = pinf(width);
      for (int64_t k = i; k < j; ++k)
        hold = std::min(hold, rec(trace, *f.left, k, width));
      acc = std::max(acc, std::min(rec(trace, *f.right, j, width), hold));
    }
    return acc;
  }
  case NodeKind::Always: {
    Rob acc = pinf(width);
    for (int64_t j = i; j <= n; ++j)
      if (in_window(trace, i, j, f.interval))
        acc = std::min(acc, rec(trace, *f.left, j, width));
    return acc;
  }
  default: {
    Rob acc = ninf(width);
    for (int64_t j = i; j <= n; ++j)
      if (in_window(trace, i, j, f.interval))
        acc = std::max(acc, rec(trace, *f.left, j, width));
    return acc;
  }
  }
}

} // namespace

Rob rob_recursive(const Trace &trace, const Formula &f, int64_t i, int width) {
  validate_trace(trace, width);
  if (i < 1 || i > static_cast<int64_t>(trace.size()))
    throw ValidationError("evaluation index out of range");
  return rec(trace, f, i, width);
}

} // namespace privmon
