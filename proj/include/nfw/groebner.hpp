#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nfw/polynomial.hpp"

namespace nfw {

// Term orders for the Buchberger engine.  Storage order of Polynomial stays
// graded-lexicographic; these only steer leading-term selection.
enum class TermOrder { GrevLex, Lex };

bool term_less(const Exponent& a, const Exponent& b, TermOrder order);

// Largest term under the order; throws std::invalid_argument for zero input.
std::pair<Exponent, Rational> leading_term(const Polynomial& p, TermOrder order);

struct GroebnerOptions {
  int max_pairs = 50000;  // S-pairs examined before aborting
  Int max_degree = 96;    // highest total degree allowed into the basis
};

// Honest resource exhaustion: the caller reports "inconclusive" instead of
// guessing a verdict.
struct GroebnerLimitError : std::runtime_error {
  explicit GroebnerLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Remainder of p modulo the basis: no term of the result is divisible by any
// basis leading monomial.  Zero basis members are ignored.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, TermOrder order);

// Reduced Groebner basis (monic, auto-reduced, sorted by leading monomial).
// Input polynomials must have non-negative exponents.  Zero generators are
// dropped; an empty result means the zero ideal.
std::vector<Polynomial> groebner(std::vector<Polynomial> gens, int nvars, TermOrder order,
                                 const GroebnerOptions& opts = {});

// Krull dimension of the affine zero set in C^nvars: the largest variable
// subset meeting the support of no leading monomial of a grevlex basis.
// Returns -1 for the unit ideal (empty zero set), nvars for the zero ideal.
Int ideal_dim_affine(const std::vector<Polynomial>& gens, int nvars, const GroebnerOptions& opts = {});

// Dimension of the zero set intersected with the torus (C*)^nvars.  Localizes
// by the coordinate product: appends the relation w*z_1...z_nvars = 1 and
// measures the resulting graph in nvars+1 variables, which is isomorphic to
// the torus part.  Laurent generators are admitted (each is scaled by a
// monomial, which moves no torus zeros).  Returns -1 when empty.
Int ideal_dim_torus(const std::vector<Polynomial>& gens, int nvars, const GroebnerOptions& opts = {});

}  // namespace nfw
