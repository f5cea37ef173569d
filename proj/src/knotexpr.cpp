#include "hfc/knotexpr.hpp"

#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hfc {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool try_consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }
  bool try_keyword(const std::string& kw) {
    skip_ws();
    if (s.compare(pos, kw.size(), kw) == 0) {
      pos += kw.size();
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (s[start] == '-' && pos == start + 1)) fail("expected integer");
    return std::stoi(s.substr(start, pos - start));
  }
  [[noreturn]] void fail(const std::string& msg) {
    std::ostringstream os;
    os << "parse error at position " << pos << ": " << msg;
    throw std::invalid_argument(os.str());
  }
};

// --- expression grammar ----------------------------------------------------

KnotExpr parse_expr(Cursor& c);

// the Alexander polynomial denoted by an atom that is a single knot
LaurentPoly atom_alexander(Cursor& c) {
  if (c.try_keyword("T(")) {
    int p = c.integer();
    c.expect(',');
    int q = c.integer();
    c.expect(')');
    return torus_alexander(p, q);
  }
  if (c.try_keyword("C(")) {
    int p = c.integer();
    c.expect(',');
    int q = c.integer();
    c.expect(';');
    KnotExpr inner = parse_expr(c);
    c.expect(')');
    if (inner.mirror_t25_count != 0)
      c.fail("mirror factor not allowed inside a cable");
    if (inner.summands.size() != 1)
      c.fail("cable companion must be a single knot");
    // recover the companion's Alexander polynomial from its staircase
    return cable_alexander(alexander_from_staircase(inner.summands[0]), p, q);
  }
  if (c.try_keyword("Kn(")) {
    int n = c.integer();
    c.expect(')');
    return family_alexander(n);
  }
  c.fail("expected T(...), C(...), Kn(...) or -T(2,5)");
}

void parse_atom(Cursor& c, int repeat, KnotExpr& out) {
  if (c.try_keyword("-T(2,5)")) {
    out.mirror_t25_count += repeat;
    return;
  }
  if (c.peek() == '-') c.fail("only -T(2,5) may be mirrored");
  LaurentPoly f = atom_alexander(c);
  StaircaseList l = staircase_from_alexander(f);
  for (int i = 0; i < repeat; ++i) out.summands.push_back(l);
}

void parse_term(Cursor& c, KnotExpr& out) {
  c.skip_ws();
  size_t save = c.pos;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    int k = c.integer();
    if (c.try_consume('*')) {
      if (k < 1) c.fail("repeat count must be positive");
      parse_atom(c, k, out);
      return;
    }
    c.pos = save;
    c.fail("expected '*' after repeat count");
  }
  parse_atom(c, 1, out);
}

KnotExpr parse_expr(Cursor& c) {
  KnotExpr out;
  parse_term(c, out);
  while (c.try_consume('#')) parse_term(c, out);
  return out;
}

}  // namespace

KnotExpr parse_knot_expr(const std::string& text) {
  Cursor c{text};
  KnotExpr e = parse_expr(c);
  if (!c.eof()) c.fail("trailing input");
  return e;
}

LaurentPoly parse_alexander_descriptor(const std::string& text) {
  Cursor c{text};
  std::function<LaurentPoly(Cursor&)> desc = [&](Cursor& cur) -> LaurentPoly {
    if (cur.try_keyword("torus")) {
      int p = cur.integer();
      int q = cur.integer();
      return torus_alexander(p, q);
    }
    if (cur.try_keyword("cable")) {
      int p = cur.integer();
      int q = cur.integer();
      cur.expect('(');
      LaurentPoly base = desc(cur);
      cur.expect(')');
      return cable_alexander(base, p, q);
    }
    if (cur.try_keyword("Kn")) {
      int n = cur.integer();
      return family_alexander(n);
    }
    cur.fail("expected 'torus', 'cable' or 'Kn'");
  };
  LaurentPoly f = desc(c);
  if (!c.eof()) c.fail("trailing input");
  return f;
}

StaircaseList fold_representative(const KnotExpr& e) {
  if (e.summands.empty())
    throw std::invalid_argument("fold_representative: no staircase summands");
  StaircaseList acc = e.summands[0];
  for (size_t i = 1; i < e.summands.size(); ++i)
    acc = representative_staircase(acc, e.summands[i]);
  return acc;
}

}  // namespace hfc
