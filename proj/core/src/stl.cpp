#include "privmon/stl.hpp"

#include <cctype>
#include <deque>
#include <sstream>

#include "privmon/errors.hpp"

namespace privmon {

bool is_temporal(NodeKind k) {
  return k == NodeKind::Until || k == NodeKind::Always ||
         k == NodeKind::Eventually;
}

int arity(NodeKind k) {
  switch (k) {
  case NodeKind::True:
  case NodeKind::AtomGe:
  case NodeKind::AtomLe:
    return 0;
  case NodeKind::Not:
  case NodeKind::Always:
  case NodeKind::Eventually:
    return 1;
  default:
    return 2;
  }
}

static void check_interval(const Interval &i) {
  if (i.lo < 0) throw ValidationError("interval lower bound must be >= 0");
  if (!i.hi_inf && i.lo >= i.hi)
    throw ValidationError("interval requires l < u");
}

std::unique_ptr<Formula> Formula::truth() {
  auto f = std::make_unique<Formula>();
  f->kind = NodeKind::True;
  return f;
}

std::unique_ptr<Formula> Formula::atom_ge(int64_t c) {
  auto f = std::make_unique<Formula>();
  f->kind = NodeKind::AtomGe;
  f->threshold = c;
  return f;
}

std::unique_ptr<Formula> Formula::atom_le(int64_t c) {
  auto f = std::make_unique<Formula>();
  f->kind = NodeKind::AtomLe;
  f->threshold = c;
  return f;
}

std::unique_ptr<Formula> Formula::negation(std::unique_ptr<Formula> child) {
  auto f = std::make_unique<Formula>();
  f->kind = NodeKind::Not;
  f->left = std::move(child);
  return f;
}

std::unique_ptr<Formula> Formula::binary(NodeKind k,
                                         std::unique_ptr<Formula> l,
                                         std::unique_ptr<Formula> r) {
  auto f = std::make_unique<Formula>();
  f->kind = k;
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}

std::unique_ptr<Formula> Formula::until(std::unique_ptr<Formula> l,
                                        std::unique_ptr<Formula> r,
                                        Interval i) {
  check_interval(i);
  auto f = binary(NodeKind::Until, std::move(l), std::move(r));
  f->interval = i;
  return f;
}

std::unique_ptr<Formula> Formula::always(std::unique_ptr<Formula> child,
                                         Interval i) {
  check_interval(i);
  auto f = std::make_unique<Formula>();
  f->kind = NodeKind::Always;
  f->left = std::move(child);
  f->interval = i;
  return f;
}

std::unique_ptr<Formula> Formula::eventually(std::unique_ptr<Formula> child,
                                             Interval i) {
  check_interval(i);
  auto f = std::make_unique<Formula>();
  f->kind = NodeKind::Eventually;
  f->left = std::move(child);
  f->interval = i;
  return f;
}

std::unique_ptr<Formula> Formula::clone() const {
  auto f = std::make_unique<Formula>();
  f->kind = kind;
  f->threshold = threshold;
  f->interval = interval;
  if (left) f->left = left->clone();
  if (right) f->right = right->clone();
  return f;
}

bool equal(const Formula &a, const Formula &b) {
  if (a.kind != b.kind || a.threshold != b.threshold ||
      !(a.interval == b.interval))
    return false;
  if (!!a.left != !!b.left || !!a.right != !!b.right) return false;
  if (a.left && !equal(*a.left, *b.left)) return false;
  if (a.right && !equal(*a.right, *b.right)) return false;
  return true;
}

size_t node_count(const Formula &f) {
  size_t n = 1;
  if (f.left) n += node_count(*f.left);
  if (f.right) n += node_count(*f.right);
  return n;
}

size_t depth(const Formula &f) {
  size_t d = 0;
  if (f.left) d = depth(*f.left);
  if (f.right) d = std::max(d, depth(*f.right));
  return d + 1;
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok {
  End,
  LParen,
  RParen,
  Not,
  AndAnd,
  OrOr,
  Arrow,
  Iff,
  True,
  X,
  G,
  F,
  U,
  Inf,
  Int,
  Ge,
  Gt,
  Le,
  Lt,
  LBracket,
  Comma,
};

struct Lexer {
  const std::string &text;
  size_t pos = 0;
  Tok tok = Tok::End;
  size_t tok_pos = 0;
  int64_t value = 0;

  explicit Lexer(const std::string &t) : text(t) { next(); }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, tok_pos);
  }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    switch (c) {
    case '(': tok = Tok::LParen; ++pos; return;
    case ')': tok = Tok::RParen; ++pos; return;
    case '[': tok = Tok::LBracket; ++pos; return;
    case ',': tok = Tok::Comma; ++pos; return;
    case '!': tok = Tok::Not; ++pos; return;
    case '&':
      if (pos + 1 < text.size() && text[pos + 1] == '&') {
        tok = Tok::AndAnd;
        pos += 2;
        return;
      }
      throw ParseError("expected '&&'", pos);
    case '|':
      if (pos + 1 < text.size() && text[pos + 1] == '|') {
        tok = Tok::OrOr;
        pos += 2;
        return;
      }
      throw ParseError("expected '||'", pos);
    case '<':
      if (pos + 2 < text.size() && text[pos + 1] == '-' && text[pos + 2] == '>') {
        tok = Tok::Iff;
        pos += 3;
        return;
      }
      if (pos + 1 < text.size() && text[pos + 1] == '=') {
        tok = Tok::Le;
        pos += 2;
        return;
      }
      tok = Tok::Lt;
      ++pos;
      return;
    case '>':
      if (pos + 1 < text.size() && text[pos + 1] == '=') {
        tok = Tok::Ge;
        pos += 2;
        return;
      }
      tok = Tok::Gt;
      ++pos;
      return;
    case '-':
      if (pos + 1 < text.size() && text[pos + 1] == '>') {
        tok = Tok::Arrow;
        pos += 2;
        return;
      }
      if (pos + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
        lex_int();
        return;
      }
      throw ParseError("unexpected '-'", pos);
    default:
      break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      lex_int();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[pos])))
        ++pos;
      std::string word = text.substr(start, pos - start);
      if (word == "TRUE") { tok = Tok::True; return; }
      if (word == "x")    { tok = Tok::X; return; }
      if (word == "G")    { tok = Tok::G; return; }
      if (word == "F")    { tok = Tok::F; return; }
      if (word == "U")    { tok = Tok::U; return; }
      if (word == "inf")  { tok = Tok::Inf; return; }
      throw ParseError("unknown word '" + word + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  void lex_int() {
    size_t start = pos;
    bool neg = text[pos] == '-';
    if (neg) ++pos;
    int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      int digit = text[pos] - '0';
      if (v > (INT64_MAX - digit) / 10)
        throw ParseError("integer literal too large", start);
      v = v * 10 + digit;
      ++pos;
    }
    value = neg ? -v : v;
    tok = Tok::Int;
    tok_pos = start;
  }

  bool accept(Tok t) {
    if (tok != t) return false;
    next();
    return true;
  }

  void expect(Tok t, const char *what) {
    if (tok != t) fail(std::string("expected ") + what);
    next();
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(const std::string &text) : lex(text) {}

  std::unique_ptr<Formula> parse() {
    auto f = parse_iff();
    if (lex.tok != Tok::End) lex.fail("unexpected trailing input");
    return f;
  }

  Interval parse_interval() {
    lex.expect(Tok::LBracket, "'['");
    if (lex.tok != Tok::Int) lex.fail("expected interval lower bound");
    size_t lo_pos = lex.tok_pos;
    int64_t lo = lex.value;
    lex.next();
    if (lo < 0) throw ParseError("negative interval bound", lo_pos);
    lex.expect(Tok::Comma, "','");
    Interval iv;
    iv.lo = lo;
    if (lex.accept(Tok::Inf)) {
      iv.hi_inf = true;
    } else {
      if (lex.tok != Tok::Int) lex.fail("expected interval upper bound or 'inf'");
      size_t hi_pos = lex.tok_pos;
      iv.hi = lex.value;
      lex.next();
      if (iv.hi < 0) throw ParseError("negative interval bound", hi_pos);
      if (lo >= iv.hi) throw ParseError("interval requires l < u", hi_pos);
    }
    lex.expect(Tok::RParen, "')'");
    return iv;
  }

  std::unique_ptr<Formula> parse_iff() {
    auto f = parse_implies();
    while (lex.accept(Tok::Iff))
      f = Formula::binary(NodeKind::Iff, std::move(f), parse_implies());
    return f;
  }

  std::unique_ptr<Formula> parse_implies() {
    auto f = parse_or();
    if (lex.accept(Tok::Arrow))
      f = Formula::binary(NodeKind::Implies, std::move(f), parse_implies());
    return f;
  }

  std::unique_ptr<Formula> parse_or() {
    auto f = parse_and();
    while (lex.accept(Tok::OrOr))
      f = Formula::binary(NodeKind::Or, std::move(f), parse_and());
    return f;
  }

  std::unique_ptr<Formula> parse_and() {
    auto f = parse_until();
    while (lex.accept(Tok::AndAnd))
      f = Formula::binary(NodeKind::And, std::move(f), parse_until());
    return f;
  }

  std::unique_ptr<Formula> parse_until() {
    auto f = parse_unary();
    while (lex.accept(Tok::U)) {
      Interval iv = parse_interval();
      f = Formula::until(std::move(f), parse_unary(), iv);
    }
    return f;
  }

  std::unique_ptr<Formula> parse_unary() {
    if (lex.accept(Tok::Not)) return Formula::negation(parse_unary());
    if (lex.accept(Tok::G)) {
      Interval iv = parse_interval();
      return Formula::always(parse_unary(), iv);
    }
    if (lex.accept(Tok::F)) {
      Interval iv = parse_interval();
      return Formula::eventually(parse_unary(), iv);
    }
    return parse_primary();
  }

  std::unique_ptr<Formula> parse_primary() {
    if (lex.accept(Tok::True)) return Formula::truth();
    if (lex.accept(Tok::LParen)) {
      auto f = parse_iff();
      lex.expect(Tok::RParen, "')'");
      return f;
    }
    if (lex.accept(Tok::X)) {
      bool ge;
      if (lex.accept(Tok::Ge) || lex.accept(Tok::Gt)) {
        ge = true;
      } else if (lex.accept(Tok::Le) || lex.accept(Tok::Lt)) {
        ge = false;
      } else {
        lex.fail("expected comparison operator after 'x'");
      }
      if (lex.tok != Tok::Int) lex.fail("expected threshold constant");
      int64_t c = lex.value;
      lex.next();
      return ge ? Formula::atom_ge(c) : Formula::atom_le(c);
    }
    lex.fail("expected formula");
  }
};

} // namespace

std::unique_ptr<Formula> parse_formula(const std::string &text) {
  Parser p(text);
  return p.parse();
}

// --------------------------------------------------------------- printing

namespace {

int print_prec(NodeKind k) {
  switch (k) {
  case NodeKind::Iff: return 1;
  case NodeKind::Implies: return 2;
  case NodeKind::Or: return 3;
  case NodeKind::And: return 4;
  case NodeKind::Until: return 5;
  case NodeKind::Not:
  case NodeKind::Always:
  case NodeKind::Eventually: return 6;
  default: return 7;
  }
}

std::string interval_text(const Interval &i) {
  std::string hi = i.hi_inf ? "inf" : std::to_string(i.hi);
  return "[" + std::to_string(i.lo) + "," + hi + ")";
}

void print_node(const Formula &f, int min_prec, std::string &out) {
  int prec = print_prec(f.kind);
  bool parens = prec < min_prec;
  if (parens) out += "(";
  switch (f.kind) {
  case NodeKind::True:
    out += "TRUE";
    break;
  case NodeKind::AtomGe:
    out += "x >= " + std::to_string(f.threshold);
    break;
  case NodeKind::AtomLe:
    out += "x <= " + std::to_string(f.threshold);
    break;
  case NodeKind::Not:
    out += "!";
    print_node(*f.left, prec, out);
    break;
  case NodeKind::Always:
    out += "G" + interval_text(f.interval) + " ";
    print_node(*f.left, prec, out);
    break;
  case NodeKind::Eventually:
    out += "F" + interval_text(f.interval) + " ";
    print_node(*f.left, prec, out);
    break;
  case NodeKind::Until:
    print_node(*f.left, prec, out);
    out += " U" + interval_text(f.interval) + " ";
    print_node(*f.right, prec + 1, out);
    break;
  case NodeKind::And:
  case NodeKind::Or:
  case NodeKind::Iff: {
    const char *op = f.kind == NodeKind::And ? " && "
                     : f.kind == NodeKind::Or ? " || "
                                              : " <-> ";
    print_node(*f.left, prec, out);
    out += op;
    print_node(*f.right, prec + 1, out);
    break;
  }
  case NodeKind::Implies:
    print_node(*f.left, prec + 1, out);
    out += " -> ";
    print_node(*f.right, prec, out);
    break;
  }
  if (parens) out += ")";
}

} // namespace

std::string to_string(const Formula &f) {
  std::string out;
  print_node(f, 0, out);
  return out;
}

// --------------------------------------------------------------- encoding

static void check_word(int64_t v, int width, const char *what) {
  if (!in_range(v, width))
    throw ValidationError(std::string(what) + " does not fit in " +
                          std::to_string(width) + "-bit word");
}

FormulaEncoding encode(const Formula &f, size_t m_max, int width) {
  if (!valid_width(width)) throw ValidationError("unsupported word width");
  size_t needed = node_count(f);
  if (needed > m_max)
    throw ValidationError("formula needs " + std::to_string(needed) +
                          " nodes but the encoding holds " +
                          std::to_string(m_max));

  FormulaEncoding enc;
  enc.width = width;
  enc.nodes.resize(m_max);

  // Breadth-first layout: the root lands at slot 0 and children are
  // appended left before right, so every child index exceeds its
  // parent's as Algorithm-style reverse-topological order requires.
  std::deque<std::pair<const Formula *, size_t>> queue;
  queue.emplace_back(&f, 0);
  size_t next = 1;
  while (!queue.empty()) {
    auto [node, idx] = queue.front();
    queue.pop_front();
    EncNode &slot = enc.nodes[idx];
    slot.opcode = static_cast<uint8_t>(node->kind);
    if (node->kind == NodeKind::AtomGe || node->kind == NodeKind::AtomLe) {
      check_word(node->threshold, width, "atom threshold");
      slot.threshold = node->threshold;
    }
    if (is_temporal(node->kind)) {
      check_word(node->interval.lo, width, "interval lower bound");
      if (node->interval.hi_inf) {
        slot.hi = pinf(width);
      } else {
        if (node->interval.hi >= pinf(width))
          throw ValidationError("finite interval upper bound collides with "
                                "the +inf sentinel");
        slot.hi = node->interval.hi;
      }
      slot.lo = node->interval.lo;
    }
    if (node->left) {
      slot.k1 = static_cast<uint32_t>(next);
      queue.emplace_back(node->left.get(), next++);
    }
    if (node->right) {
      slot.k2 = static_cast<uint32_t>(next);
      queue.emplace_back(node->right.get(), next++);
    }
  }
  return enc;
}

size_t live_count(const FormulaEncoding &enc) {
  if (enc.nodes.empty()) return 0;
  std::vector<bool> seen(enc.nodes.size(), false);
  std::deque<size_t> queue{0};
  size_t count = 0;
  while (!queue.empty()) {
    size_t idx = queue.front();
    queue.pop_front();
    if (idx >= enc.nodes.size() || seen[idx]) continue;
    seen[idx] = true;
    ++count;
    const EncNode &n = enc.nodes[idx];
    NodeKind k = static_cast<NodeKind>(n.opcode);
    if (arity(k) >= 1) queue.push_back(n.k1);
    if (arity(k) == 2) queue.push_back(n.k2);
  }
  return count;
}

static std::unique_ptr<Formula> decode_at(const FormulaEncoding &enc,
                                          size_t idx) {
  if (idx >= enc.nodes.size())
    throw ValidationError("encoding child index out of range");
  const EncNode &n = enc.nodes[idx];
  if (n.opcode > static_cast<uint8_t>(NodeKind::Eventually))
    throw ValidationError("encoding has unknown opcode " +
                          std::to_string(n.opcode));
  NodeKind k = static_cast<NodeKind>(n.opcode);
  int ar = arity(k);
  if (ar >= 1 && n.k1 <= idx)
    throw ValidationError("encoding child reference is not forward-only");
  if (ar == 2 && n.k2 <= idx)
    throw ValidationError("encoding child reference is not forward-only");

  Interval iv;
  if (is_temporal(k)) {
    iv.lo = n.lo;
    if (n.hi == pinf(enc.width)) {
      iv.hi_inf = true;
    } else {
      iv.hi = n.hi;
    }
  }
  switch (k) {
  case NodeKind::True: return Formula::truth();
  case NodeKind::AtomGe: return Formula::atom_ge(n.threshold);
  case NodeKind::AtomLe: return Formula::atom_le(n.threshold);
  case NodeKind::Not: return Formula::negation(decode_at(enc, n.k1));
  case NodeKind::And:
  case NodeKind::Or:
  case NodeKind::Implies:
  case NodeKind::Iff:
    return Formula::binary(k, decode_at(enc, n.k1), decode_at(enc, n.k2));
  case NodeKind::Until:
    return Formula::until(decode_at(enc, n.k1), decode_at(enc, n.k2), iv);
  case NodeKind::Always: return Formula::always(decode_at(enc, n.k1), iv);
  default: return Formula::eventually(decode_at(enc, n.k1), iv);
  }
}

std::unique_ptr<Formula> decode(const FormulaEncoding &enc) {
  if (enc.nodes.empty()) throw ValidationError("empty encoding");
  return decode_at(enc, 0);
}

FormulaEncoding pad_encoding(const FormulaEncoding &enc, size_t m_max) {
  if (enc.nodes.size() > m_max)
    throw ValidationError("encoding already larger than requested capacity");
  FormulaEncoding out = enc;
  out.nodes.resize(m_max);
  return out;
}

void validate_encoding(const FormulaEncoding &enc) {
  if (!valid_width(enc.width)) throw ValidationError("unsupported word width");
  if (enc.nodes.empty()) throw ValidationError("empty encoding");

  std::vector<bool> reachable(enc.nodes.size(), false);
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    size_t idx = queue.front();
    queue.pop_front();
    if (idx >= enc.nodes.size())
      throw ValidationError("encoding child index out of range");
    if (reachable[idx]) continue;
    reachable[idx] = true;
    const EncNode &n = enc.nodes[idx];
    if (n.opcode > static_cast<uint8_t>(NodeKind::Eventually))
      throw ValidationError("encoding has unknown opcode");
    NodeKind k = static_cast<NodeKind>(n.opcode);
    int ar = arity(k);
    if (ar >= 1) {
      if (n.k1 <= idx)
        throw ValidationError("encoding child reference is not forward-only");
      queue.push_back(n.k1);
    }
    if (ar == 2) {
      if (n.k2 <= idx)
        throw ValidationError("encoding child reference is not forward-only");
      queue.push_back(n.k2);
    }
    if (is_temporal(k)) {
      if (n.lo < 0 || !in_range(n.lo, enc.width))
        throw ValidationError("encoding interval lower bound out of range");
      if (!in_range(n.hi, enc.width))
        throw ValidationError("encoding interval upper bound out of range");
      if (n.lo >= n.hi)
        throw ValidationError("encoding interval requires l < u");
    }
    if ((k == NodeKind::AtomGe || k == NodeKind::AtomLe) &&
        !in_range(n.threshold, enc.width))
      throw ValidationError("encoding atom threshold out of range");
  }
  for (size_t idx = 0; idx < enc.nodes.size(); ++idx) {
    if (!reachable[idx] &&
        enc.nodes[idx].opcode != static_cast<uint8_t>(NodeKind::True))
      throw ValidationError("padding slot " + std::to_string(idx) +
                            " is not an inert True node");
  }
}

std::string write_encoding(const FormulaEncoding &enc) {
  std::ostringstream out;
  for (size_t i = 0; i < enc.nodes.size(); ++i) {
    const EncNode &n = enc.nodes[i];
    out << i << ' ' << static_cast<int>(n.opcode) << ' ' << n.k1 << ' '
        << n.k2 << ' ' << n.lo << ' ' << n.hi << ' ' << n.threshold << '\n';
  }
  return out.str();
}

FormulaEncoding read_encoding(const std::string &text, int width) {
  FormulaEncoding enc;
  enc.width = width;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    size_t idx;
    int opcode;
    EncNode n;
    if (!(ls >> idx >> opcode >> n.k1 >> n.k2 >> n.lo >> n.hi >> n.threshold))
      throw ValidationError("malformed encoding line " +
                            std::to_string(lineno));
    if (idx != enc.nodes.size())
      throw ValidationError("encoding line " + std::to_string(lineno) +
                            " has unexpected index");
    if (opcode < 0 || opcode > static_cast<int>(NodeKind::Eventually))
      throw ValidationError("encoding line " + std::to_string(lineno) +
                            " has unknown opcode");
    n.opcode = static_cast<uint8_t>(opcode);
    enc.nodes.push_back(n);
  }
  validate_encoding(enc);
  return enc;
}

} // namespace privmon
