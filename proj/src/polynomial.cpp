#include "nfw/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace nfw {

Polynomial derivative(const Polynomial& p, int var) {
  if (var < 0 || var >= p.nvars()) throw std::invalid_argument("derivative: bad variable index");
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    Rational k = c * make_rational(e[var]);
    d[var] -= 1;
    r.add_term(d, k);
  }
  return r;
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  bool accept(char c) {
    if (!eof() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Int parse_uint(Cursor& c) {
  c.skip_ws();
  if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    throw ParseError("expected unsigned integer", c.pos);
  Int v = 0;
  while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = checked_add(checked_mul(v, 10), c.peek() - '0');
    ++c.pos;
  }
  return v;
}

// rational := int ['/' uint]; the leading sign is consumed by the caller.
Rational parse_rational_tail(Cursor& c, bool negative) {
  Int num = parse_uint(c);
  Int den = 1;
  size_t save = c.pos;
  c.skip_ws();
  if (c.accept('/')) {
    den = parse_uint(c);
    if (den == 0) throw ParseError("zero denominator", c.pos);
  } else {
    c.pos = save;
  }
  Rational r = make_rational(negative ? -num : num, den);
  return r;
}

int lookup_var(Cursor& c, const std::vector<std::string>& vars) {
  size_t start = c.pos;
  while (!c.eof() && ident_char(c.peek())) ++c.pos;
  std::string name(c.s.substr(start, c.pos - start));
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  throw ParseError("unknown variable '" + name + "'", start);
}

// var ['^' uint] appended onto an exponent in progress.
void parse_power(Cursor& c, const std::vector<std::string>& vars, Exponent& e) {
  int v = lookup_var(c, vars);
  Int k = 1;
  size_t save = c.pos;
  c.skip_ws();
  if (c.accept('^')) {
    k = parse_uint(c);
  } else {
    c.pos = save;
  }
  e[v] = checked_add(e[v], k);
}

void parse_term(Cursor& c, const std::vector<std::string>& vars, bool negative, Polynomial& out) {
  c.skip_ws();
  if (c.eof()) throw ParseError("expected term", c.pos);
  Rational coeff = make_rational(negative ? -1 : 1);
  bool saw_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coeff = parse_rational_tail(c, negative);
    saw_coeff = true;
    size_t save = c.pos;
    c.skip_ws();
    if (!c.accept('*')) c.pos = save;
    c.skip_ws();
  }
  Exponent e(vars.empty() ? 0 : vars.size());
  e = Exponent(IntVec(vars.size(), 0));
  bool saw_var = false;
  while (!c.eof() && (std::isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '_')) {
    parse_power(c, vars, e);
    saw_var = true;
    size_t save = c.pos;
    c.skip_ws();
    if (!c.accept('*')) {
      c.pos = save;
      break;
    }
    c.skip_ws();
    if (c.eof() || !(std::isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '_'))
      throw ParseError("expected variable after '*'", c.pos);
  }
  if (!saw_coeff && !saw_var) throw ParseError("expected term", c.pos);
  out.add_term(e, coeff);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  Cursor c{text};
  Polynomial p(static_cast<int>(vars.size()));
  c.skip_ws();
  bool negative = c.accept('-');
  parse_term(c, vars, negative, p);
  for (;;) {
    c.skip_ws();
    if (c.eof()) break;
    if (c.accept('+')) {
      parse_term(c, vars, false, p);
    } else if (c.accept('-')) {
      parse_term(c, vars, true, p);
    } else {
      throw ParseError("expected '+' or '-'", c.pos);
    }
  }
  return p;
}

std::string to_string(const Rational& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  // Largest term first under the canonical graded order.
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace nfw
