#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>

#include "corpus.hpp"
#include "nfw/base.hpp"
#include "nfw/polynomial.hpp"

using namespace nfw;

TEST_CASE("checked arithmetic throws instead of wrapping") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  const Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_sub(std::numeric_limits<Int>::min(), 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
}

TEST_CASE("vector helpers") {
  CHECK(dot({1, 2, 3}, {4, 5, 6}) == 32);
  CHECK(vec_add({1, 2}, {3, 4}) == IntVec{4, 6});
  CHECK(vec_sub({1, 2}, {3, 4}) == IntVec{-2, -2});
  CHECK(vec_le({1, 2}, {1, 3}));
  CHECK_FALSE(vec_le({2, 2}, {1, 3}));
  CHECK(lex_less({1, 2}, {1, 3}));
  CHECK_FALSE(lex_less({2, 1}, {1, 3}));
  CHECK(primitive({4, 6}) == IntVec{2, 3});
  CHECK(primitive({0, 0}) == IntVec{0, 0});
  CHECK(gcd_of({12, 18, 30}) == 6);
  CHECK(lcm_checked(4, 6) == 12);
  CHECK_THROWS_AS(dot({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("rational helpers") {
  CHECK(make_rational(6, 4) == Rational(3, 2));
  CHECK(rat_is_integer(make_rational(8, 4)));
  CHECK_FALSE(rat_is_integer(make_rational(1, 3)));
}

TEST_CASE("fnv1a digest is the standard 64-bit variant") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("abc") == "e71fa2190541574b");
}

TEST_CASE("exponents and the graded order") {
  Exponent a({1, 2}), b({2, 1}), c({0, 1});
  CHECK(a.total_degree() == 3);
  CHECK((a + b).e == IntVec{3, 3});
  CHECK((a - c).e == IntVec{1, 1});
  CHECK(grlex_less(c, a));        // lower degree first
  CHECK(grlex_less(a, b));        // same degree: lexicographic
  CHECK_FALSE(grlex_less(a, a));
}

TEST_CASE("polynomial arithmetic") {
  const auto f = corpus::p2("z1^2 + z2^3");
  const auto g = corpus::p2("z1 + z2");
  CHECK(f.term_count() == 2);
  CHECK((f * g).term_count() == 4);
  CHECK((f + f) == f * Rational(2));
  CHECK((f - f).is_zero());
  CHECK(f.coeff(Exponent({2, 0})) == 1);
  CHECK(f.coeff(Exponent({1, 1})) == 0);
  const auto shifted = g.shifted(Exponent({1, 0}));
  CHECK(shifted.coeff(Exponent({2, 0})) == 1);
  CHECK(shifted.coeff(Exponent({1, 1})) == 1);
  CHECK_THROWS_AS(f + corpus::p3("z1"), std::invalid_argument);
}

TEST_CASE("parser handles coefficients, signs, and powers") {
  const auto p = corpus::p2("2*z1^2 - 3/2*z2 + 1");
  CHECK(p.coeff(Exponent({2, 0})) == 2);
  CHECK(p.coeff(Exponent({0, 1})) == Rational(-3, 2));
  CHECK(p.coeff(Exponent({0, 0})) == 1);

  CHECK(corpus::p2("-z1 + z1") .is_zero());
  CHECK(corpus::p2("z1*z2^2").coeff(Exponent({1, 2})) == 1);
  CHECK(corpus::p2("3*z1") == corpus::p2("z1 + 2*z1"));
}

TEST_CASE("parser rejects malformed input with positions") {
  CHECK_THROWS_AS(corpus::p2("z3 + 1"), ParseError);
  CHECK_THROWS_AS(corpus::p2("z1 +"), ParseError);
  CHECK_THROWS_AS(corpus::p2("z1 ^"), ParseError);
  CHECK_THROWS_AS(corpus::p2(""), ParseError);
  CHECK_THROWS_AS(corpus::p2("z1 $ z2"), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
  for (const auto& text : {"z1^2 + z2^3", "z1^3 + z1*z2 + z2^3", "2*z1 - 1/2*z2 + 7"}) {
    const auto p = corpus::p2(text);
    CHECK(corpus::p2(to_string(p, corpus::vars2)) == p);
  }
  CHECK(to_string(Polynomial(2), corpus::vars2) == "0");
}

TEST_CASE("derivatives") {
  const auto f = corpus::node_cubic();
  const auto fx = derivative(f, 0);
  const auto fy = derivative(f, 1);
  CHECK(fx == corpus::p2("3*z1^2 + z2"));
  CHECK(fy == corpus::p2("z1 + 3*z2^2"));
  CHECK(derivative(corpus::p2("z2^3"), 0).is_zero());
}
