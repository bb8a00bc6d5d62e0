#include "pvcastle/dsl.hpp"

#include <cctype>
#include <sstream>

namespace pvcastle {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::size_t end = pos < text.size() ? pos + 1 : pos;
    std::ostringstream msg;
    msg << "expected " << expected << " at offset " << pos;
    throw ParseError(msg.str(), SourceSpan{pos, end});
  }

  bool consume(char c) {
    skip_ws();
    if (eof() || peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) fail(what);
  }
  bool consume_word(std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) != word) return false;
    pos += word.size();
    return true;
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("an integer");
    return Int(std::string(text.substr(start, pos - start)), 10);
  }

  void expect_end(const char* what) {
    skip_ws();
    if (!eof()) fail(what);
  }
};

}  // namespace

Solution parse_solution(std::string_view text) {
  Cursor c{text};
  c.expect('(', "'('");
  Int a = c.integer();
  c.expect(';', "';'");
  std::vector<Int> parts;
  parts.push_back(c.integer());
  while (c.consume(',')) parts.push_back(c.integer());
  c.expect(')', "')'");
  c.expect_end("end of input");
  if (a < 2) throw ValueError("solution: a must be >= 2");
  for (const Int& m : parts)
    if (m < 1) throw ValueError("solution: parts must be positive");
  return Solution(std::move(a), std::move(parts));
}

namespace {

FactorSpec parse_factor(Cursor& c) {
  if (c.consume_word("gl")) {
    c.expect('(', "'(' after gl");
    c.skip_ws();
    const std::size_t where = c.pos;
    Int n = c.integer();
    if (n != 1)
      throw ParseError("gl is only available as gl(1)",
                       SourceSpan{where, c.pos});
    c.expect(')', "')'");
    return FactorSpec::gl1();
  }
  if (c.consume_word("sl")) {
    c.expect('(', "'(' after sl");
    c.skip_ws();
    const std::size_t where = c.pos;
    Int n = c.integer();
    if (n < 1 || !n.fits_ulong_p())
      throw ParseError("sl dimension out of range", SourceSpan{where, c.pos});
    c.expect(')', "')'");
    return FactorSpec::sl(static_cast<std::size_t>(n.get_ui()));
  }
  c.fail("a factor (gl(1) or sl(n))");
}

RepKind parse_rep(Cursor& c) {
  c.skip_ws();
  if (c.consume_word("3L1")) return RepKind::Sym3;
  if (c.consume_word("2L1")) return RepKind::Sym2;
  if (c.consume_word("L2")) return RepKind::Ext2;
  if (c.consume_word("L1*")) return RepKind::L1Dual;
  if (c.consume_word("L1")) return RepKind::L1;
  c.fail("a representation (L1, L1*, 2L1, 3L1 or L2)");
}

Representation build_slot(const FactorSpec& factor, RepKind kind) {
  if (factor.kind == FactorKind::GL1) {
    if (kind != RepKind::L1)
      throw UnsupportedRep("only L1 is defined on gl(1)");
    return gl1_rep();
  }
  const std::size_t n = factor.n;
  switch (kind) {
    case RepKind::L1:
      return identity_rep(n);
    case RepKind::L1Dual:
      return dual_rep(identity_rep(n));
    case RepKind::Sym2:
      if (n < 2) throw UnsupportedRep("2L1 needs sl(n) with n >= 2");
      return sym_power(2, n);
    case RepKind::Sym3:
      if (n < 2) throw UnsupportedRep("3L1 needs sl(n) with n >= 2");
      return sym_power(3, n);
    case RepKind::Ext2:
      if (n < 2) throw UnsupportedRep("L2 needs sl(n) with n >= 2");
      return ext_square(n);
  }
  throw UnsupportedRep("unknown representation");
}

const char* rep_name(RepKind kind) {
  switch (kind) {
    case RepKind::L1:
      return "L1";
    case RepKind::L1Dual:
      return "L1*";
    case RepKind::Sym2:
      return "2L1";
    case RepKind::Sym3:
      return "3L1";
    case RepKind::Ext2:
      return "L2";
  }
  return "?";
}

}  // namespace

Triplet parse_triplet(std::string_view text) {
  Cursor c{text};
  std::vector<FactorSpec> factors;
  factors.push_back(parse_factor(c));
  while (c.consume('+')) factors.push_back(parse_factor(c));
  c.expect(':', "':'");
  std::vector<RepKind> kinds;
  kinds.push_back(parse_rep(c));
  while (c.consume('#')) kinds.push_back(parse_rep(c));
  c.expect_end("end of input");

  if (factors.size() != kinds.size())
    throw ArityMismatch("factor count differs from representation count");

  std::vector<Representation> slots;
  slots.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i)
    slots.push_back(build_slot(factors[i], kinds[i]));
  return Triplet{general_tensor(slots), std::move(kinds)};
}

std::string render(const Solution& s) {
  std::ostringstream out;
  out << '(' << s.a.get_str() << ';';
  for (std::size_t i = 0; i < s.parts.size(); ++i)
    out << (i == 0 ? " " : ", ") << s.parts[i].get_str();
  out << ')';
  return out.str();
}

std::string render(const Triplet& t) {
  const auto& factors = t.algebra().factors;
  if (t.rep_kinds.size() != factors.size())
    throw Error("render: triplet carries no representation tags");
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out << '+';
    if (factors[i].kind == FactorKind::GL1)
      out << "gl(1)";
    else
      out << "sl(" << factors[i].n << ')';
  }
  out << " : ";
  for (std::size_t i = 0; i < t.rep_kinds.size(); ++i) {
    if (i) out << '#';
    out << rep_name(t.rep_kinds[i]);
  }
  return out.str();
}

}  // namespace pvcastle
