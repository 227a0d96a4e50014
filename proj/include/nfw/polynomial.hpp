#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "nfw/base.hpp"

namespace nfw {

// Monomial exponent vector.  Entries may be negative (Laurent monomials show
// up as initial-part data even though the surface grammar only produces
// natural exponents).
struct Exponent {
  IntVec e;

  Exponent() = default;
  explicit Exponent(IntVec v) : e(std::move(v)) {}
  explicit Exponent(size_t n) : e(n, 0) {}

  size_t size() const { return e.size(); }
  Int operator[](size_t i) const { return e[i]; }
  Int& operator[](size_t i) { return e[i]; }

  Int total_degree() const {
    Int d = 0;
    for (Int x : e) d = checked_add(d, x);
    return d;
  }

  Exponent operator+(const Exponent& o) const { return Exponent(vec_add(e, o.e)); }
  Exponent operator-(const Exponent& o) const { return Exponent(vec_sub(e, o.e)); }

  bool operator==(const Exponent& o) const { return e == o.e; }
  bool operator!=(const Exponent& o) const { return e != o.e; }

  bool is_zero() const {
    for (Int x : e)
      if (x != 0) return false;
    return true;
  }
};

// Graded lexicographic order; the canonical term order for storage and
// printing (not the order the Groebner engine runs under).
inline bool grlex_less(const Exponent& a, const Exponent& b) {
  Int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return lex_less(a.e, b.e);
}

struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const { return grlex_less(a, b); }
};

using TermMap = std::map<Exponent, Rational, GrlexLess>;

// Sparse polynomial with exact rational coefficients.  Immutable in spirit:
// every operation returns a fresh value.  Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial monomial(Exponent e, Rational c) {
    Polynomial p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::vector<Exponent> support() const {
    std::vector<Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("add_term: arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    check_arity(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    check_arity(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_arity(o);
    Polynomial r(nvars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }

  Polynomial operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }

  Polynomial shifted(const Exponent& s) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
    return r;
  }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  void check_arity(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  }

  int nvars_;
  TermMap terms_;
};

Polynomial derivative(const Polynomial& p, int var);

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Grammar:
//   poly     := ['-'] term (('+'|'-') term)*
//   term     := [rational ['*']] monomial | rational
//   monomial := var ['^' uint] ('*' var ['^' uint])*
//   rational := int ['/' uint]
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars);
std::string to_string(const Rational& r);

}  // namespace nfw
