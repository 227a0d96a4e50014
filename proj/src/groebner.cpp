#include "nfw/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace nfw {

namespace {

bool grevlex_less(const Exponent& a, const Exponent& b) {
  const Int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

bool pure_lex_less(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool divides(const Exponent& d, const Exponent& e) {
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

Exponent exponent_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Polynomial make_monic(const Polynomial& p, TermOrder order) {
  return p * (Rational(1) / leading_term(p, order).second);
}

void check_polynomial_input(const Polynomial& p, int nvars, const char* who) {
  if (p.nvars() != nvars) throw std::invalid_argument(std::string(who) + ": arity mismatch");
  for (const auto& [e, c] : p.terms()) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw std::invalid_argument(std::string(who) + ": negative exponent; shift Laurent input first");
    }
  }
}

// Dimension read off the staircase of leading monomials: the largest variable
// set S such that no leading monomial is supported inside S.
Int dim_from_basis(const std::vector<Polynomial>& gb, int nvars, TermOrder order) {
  if (gb.empty()) return nvars;
  if (nvars > 62) throw std::invalid_argument("ideal dimension: too many variables");
  std::vector<std::uint64_t> supports;
  supports.reserve(gb.size());
  for (const auto& f : gb) {
    const Exponent lm = leading_term(f, order).first;
    if (lm.total_degree() == 0) return -1;  // unit ideal
    std::uint64_t mask = 0;
    for (size_t i = 0; i < lm.size(); ++i) {
      if (lm[i] > 0) mask |= std::uint64_t{1} << i;
    }
    supports.push_back(mask);
  }
  Int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << nvars); ++s) {
    bool independent = true;
    for (const std::uint64_t m : supports) {
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max<Int>(best, std::popcount(s));
  }
  return best;
}

}  // namespace

bool term_less(const Exponent& a, const Exponent& b, TermOrder order) {
  if (a.size() != b.size()) throw std::invalid_argument("term_less: arity mismatch");
  return order == TermOrder::GrevLex ? grevlex_less(a, b) : pure_lex_less(a, b);
}

std::pair<Exponent, Rational> leading_term(const Polynomial& p, TermOrder order) {
  if (p.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
  const auto* best = &*p.terms().begin();
  for (const auto& t : p.terms()) {
    if (term_less(best->first, t.first, order)) best = &t;
  }
  return {best->first, best->second};
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, TermOrder order) {
  std::vector<std::pair<Exponent, Rational>> leads;
  std::vector<const Polynomial*> divisors;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    leads.push_back(leading_term(g, order));
    divisors.push_back(&g);
  }
  Polynomial rest = p;
  Polynomial remainder(p.nvars());
  while (!rest.is_zero()) {
    const auto [e, c] = leading_term(rest, order);
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (divides(leads[i].first, e)) {
        rest = rest - divisors[i]->shifted(e - leads[i].first) * (c / leads[i].second);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.add_term(e, c);
      rest.add_term(e, -c);
    }
  }
  return remainder;
}

std::vector<Polynomial> groebner(std::vector<Polynomial> gens, int nvars, TermOrder order,
                                 const GroebnerOptions& opts) {
  std::vector<Polynomial> g;
  for (const auto& f : gens) {
    check_polynomial_input(f, nvars, "groebner");
    if (!f.is_zero()) g.push_back(make_monic(f, order));
  }
  if (g.empty()) return {};

  std::vector<std::pair<int, int>> pending;
  auto queue_with_all = [&](int j) {
    for (int i = 0; i < j; ++i) pending.emplace_back(i, j);
  };
  for (int j = 0; j < static_cast<int>(g.size()); ++j) queue_with_all(j);

  int processed = 0;
  for (size_t cursor = 0; cursor < pending.size(); ++cursor) {
    const auto [i, j] = pending[cursor];
    if (++processed > opts.max_pairs) throw GroebnerLimitError("groebner: S-pair limit exceeded");
    const Exponent lmi = leading_term(g[i], order).first;
    const Exponent lmj = leading_term(g[j], order).first;
    const Exponent lcm = exponent_lcm(lmi, lmj);
    if (lcm == lmi + lmj) continue;  // coprime leading monomials: S-pair reduces to zero
    if (lcm.total_degree() > opts.max_degree) throw GroebnerLimitError("groebner: degree limit exceeded");
    const Polynomial spair = g[i].shifted(lcm - lmi) - g[j].shifted(lcm - lmj);
    const Polynomial h = normal_form(spair, g, order);
    if (h.is_zero()) continue;
    if (leading_term(h, order).first.total_degree() > opts.max_degree) {
      throw GroebnerLimitError("groebner: degree limit exceeded");
    }
    g.push_back(make_monic(h, order));
    queue_with_all(static_cast<int>(g.size()) - 1);
  }

  // Minimalize: drop members whose leading monomial another one divides.
  std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return term_less(leading_term(a, order).first, leading_term(b, order).first, order);
  });
  std::vector<Polynomial> minimal;
  std::vector<Exponent> kept;
  for (const auto& f : g) {
    const Exponent lm = leading_term(f, order).first;
    bool redundant = false;
    for (const auto& k : kept) {
      if (divides(k, lm)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      minimal.push_back(f);
      kept.push_back(lm);
    }
  }

  // Reduce tails against the rest of the basis.
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(make_monic(normal_form(minimal[i], others, order), order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return term_less(leading_term(a, order).first, leading_term(b, order).first, order);
  });
  return reduced;
}

Int ideal_dim_affine(const std::vector<Polynomial>& gens, int nvars, const GroebnerOptions& opts) {
  const auto gb = groebner(gens, nvars, TermOrder::GrevLex, opts);
  return dim_from_basis(gb, nvars, TermOrder::GrevLex);
}

Int ideal_dim_torus(const std::vector<Polynomial>& gens, int nvars, const GroebnerOptions& opts) {
  std::vector<Polynomial> ext;
  for (const auto& f : gens) {
    if (f.nvars() != nvars) throw std::invalid_argument("ideal_dim_torus: arity mismatch");
    if (f.is_zero()) continue;
    IntVec shift(nvars, 0);
    for (const auto& [e, c] : f.terms()) {
      for (int i = 0; i < nvars; ++i) shift[i] = std::min(shift[i], e[i]);
    }
    Polynomial lifted(nvars + 1);
    for (const auto& [e, c] : f.terms()) {
      Exponent le(static_cast<size_t>(nvars) + 1);
      for (int i = 0; i < nvars; ++i) le[i] = checked_sub(e[i], shift[i]);
      lifted.add_term(le, c);
    }
    ext.push_back(std::move(lifted));
  }
  Polynomial saturator(nvars + 1);
  saturator.add_term(Exponent(IntVec(static_cast<size_t>(nvars) + 1, 1)), Rational(1));
  saturator.add_term(Exponent(static_cast<size_t>(nvars) + 1), Rational(-1));
  ext.push_back(std::move(saturator));
  return ideal_dim_affine(ext, nvars + 1, opts);
}

}  // namespace nfw
