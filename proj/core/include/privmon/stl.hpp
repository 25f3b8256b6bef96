#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "privmon/rob.hpp"

namespace privmon {

enum class NodeKind : uint8_t {
  True = 0,
  AtomGe = 1,   // x >= c and x > c; robustness x - c
  AtomLe = 2,   // x <= c and x < c; robustness c - x
  Not = 3,
  And = 4,
  Or = 5,
  Implies = 6,
  Iff = 7,
  Until = 8,
  Always = 9,
  Eventually = 10,
};

constexpr int kOpcodeBits = 4;

bool is_temporal(NodeKind k);
int arity(NodeKind k);

// Half-open interval [lo, hi) in time units; hi may be +inf.
struct Interval {
  int64_t lo = 0;
  int64_t hi = 0;
  bool hi_inf = false;

  bool operator==(const Interval &) const = default;
};

// Immutable formula syntax tree. Unary operators keep their child in
// `left`; atoms carry `threshold`, temporal operators carry `interval`.
struct Formula {
  NodeKind kind = NodeKind::True;
  std::unique_ptr<Formula> left;
  std::unique_ptr<Formula> right;
  int64_t threshold = 0;
  Interval interval;

  static std::unique_ptr<Formula> truth();
  static std::unique_ptr<Formula> atom_ge(int64_t c);
  static std::unique_ptr<Formula> atom_le(int64_t c);
  static std::unique_ptr<Formula> negation(std::unique_ptr<Formula> f);
  static std::unique_ptr<Formula> binary(NodeKind k, std::unique_ptr<Formula> l,
                                         std::unique_ptr<Formula> r);
  static std::unique_ptr<Formula> until(std::unique_ptr<Formula> l,
                                        std::unique_ptr<Formula> r, Interval i);
  static std::unique_ptr<Formula> always(std::unique_ptr<Formula> f, Interval i);
  static std::unique_ptr<Formula> eventually(std::unique_ptr<Formula> f,
                                             Interval i);

  std::unique_ptr<Formula> clone() const;
};

bool equal(const Formula &a, const Formula &b);

size_t node_count(const Formula &f);
size_t depth(const Formula &f);

// Grammar: atoms `x >= c` / `x > c` / `x <= c` / `x < c`, `TRUE`, `!`,
// `&&`, `||`, `->`, `<->`, `U[l,u)`, `G[l,u)`, `F[l,u)` with `inf` as u.
// Precedence: unary > U > && > || > -> > <->; U is left-associative.
std::unique_ptr<Formula> parse_formula(const std::string &text);

// Minimally parenthesized text; parse_formula(to_string(f)) == f.
std::string to_string(const Formula &f);

// One slot of the flat, fixed-size formula encoding. Child indices are
// 0-based positions in the node array and always exceed the parent's
// index. `hi` uses pinf(width) as the +inf sentinel.
struct EncNode {
  uint8_t opcode = 0;
  uint32_t k1 = 0;
  uint32_t k2 = 0;
  int64_t lo = 0;
  int64_t hi = 0;
  int64_t threshold = 0;

  bool operator==(const EncNode &) const = default;
};

// The Verifier's secret input to the monitor circuit: exactly m_max
// nodes laid out breadth-first with the root at index 0 and unused
// slots padded with inert True nodes.
struct FormulaEncoding {
  int width = 32;
  std::vector<EncNode> nodes;

  size_t m_max() const { return nodes.size(); }

  bool operator==(const FormulaEncoding &) const = default;
};

FormulaEncoding encode(const Formula &f, size_t m_max, int width);

// Number of slots reachable from the root.
size_t live_count(const FormulaEncoding &enc);

// Rebuilds the syntax tree from the reachable slots.
std::unique_ptr<Formula> decode(const FormulaEncoding &enc);

// Extends the node array with inert True padding up to m_max; the
// robustness of any trace against the result is unchanged.
FormulaEncoding pad_encoding(const FormulaEncoding &enc, size_t m_max);

// Checks arities, forward-only child references, interval shape, and
// that padding slots are inert. Throws ValidationError on violation.
void validate_encoding(const FormulaEncoding &enc);

// Text format: one node per line, `idx opcode k1 k2 l u v`, decimal.
std::string write_encoding(const FormulaEncoding &enc);
FormulaEncoding read_encoding(const std::string &text, int width);

} // namespace privmon
