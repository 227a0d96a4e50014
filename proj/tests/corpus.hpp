#pragma once

// Shared inputs used across the test suites.  Each entry notes the polyhedral
// data it is chosen for; values quoted in tests are frozen from independent
// hand computation or the oracles in oracles.hpp.

#include <string>
#include <vector>

#include "nfw/polynomial.hpp"

namespace corpus {

inline const std::vector<std::string> vars1{"z1"};
inline const std::vector<std::string> vars2{"z1", "z2"};
inline const std::vector<std::string> vars3{"z1", "z2", "z3"};
inline const std::vector<std::string> vars6{"z1", "z2", "z3", "z4", "z5", "z6"};

inline nfw::Polynomial p2(const std::string& text) { return nfw::parse_polynomial(text, vars2); }
inline nfw::Polynomial p3(const std::string& text) { return nfw::parse_polynomial(text, vars3); }
inline nfw::Polynomial p6(const std::string& text) { return nfw::parse_polynomial(text, vars6); }

// Single compact facet with normal (3,2), threshold 6.
inline nfw::Polynomial cusp() { return p2("z1^2 + z2^3"); }

// Single compact facet with normal (4,3), threshold 12.
inline nfw::Polynomial quasi34() { return p2("z1^3 + z2^4"); }

// Two compact facets (1,2) and (2,1), both threshold 3; they share the
// vertex (1,1), so every facet pair intersects.
inline nfw::Polynomial node_cubic() { return p2("z1^3 + z1*z2 + z2^3"); }

// Three compact facets (1,1), (1,2), (2,1); the outer two are disjoint.
inline nfw::Polynomial chain_quartic() { return p2("z1^4 + z1^2*z2 + z1*z2^2 + z2^4"); }

// Single facet (1,1), threshold 1.
inline nfw::Polynomial line() { return p2("z1 + z2"); }

// k = n = 2 monomial pair: the product support gives the single facet (2,1)
// with threshold 4.
inline std::vector<nfw::Polynomial> monomial_pair() { return {p2("2*z1"), p2("3*z2^2")}; }

// Three variables, two compact facets (1,2,1) and (2,1,1), both threshold 3.
inline nfw::Polynomial cubic3() { return p3("z1^3 + z2^3 + z3^3 + z1*z2"); }

// Six-variable pair with mirrored supports; neither polytope is
// full-dimensional on its own (six affinely independent points span dimension
// five), but the paired-facet-dimension predicate holds for the summed
// polytope.
inline std::vector<nfw::Polynomial> mirrored_six() {
  return {p6("z1 + z2 + z3 + z4^2 + z5^2 + z6^2"), p6("z1^2 + z2^2 + z3^2 + z4 + z5 + z6")};
}

}  // namespace corpus
