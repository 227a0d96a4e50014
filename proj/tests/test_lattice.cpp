#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "nfw/lattice.hpp"
#include "nfw/newton.hpp"
#include "oracles.hpp"

using namespace nfw;

namespace {

// Coefficients of 1/((1-t^3)(1-t^2)) for l = 0..12.
constexpr Int kAmbient32[] = {1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3};

FiltrationSpec cusp_spec() { return filtration_of(newton_polyhedron_of(corpus::cusp())); }

FiltrationSpec node_spec() { return filtration_of(newton_polyhedron_of(corpus::node_cubic())); }

}  // namespace

TEST_CASE("filtration data from a polyhedron") {
  const auto cusp = cusp_spec();
  CHECK(cusp.n == 2);
  REQUIRE(cusp.r() == 1);
  CHECK(cusp.normals[0] == IntVec{3, 2});
  CHECK(cusp.offsets == IntVec{6});
  CHECK(cusp.M == 6);
  CHECK(filtration_of(newton_polyhedron_of(corpus::cusp()), true).M == 6);

  const auto node = node_spec();
  REQUIRE(node.r() == 2);
  CHECK(node.normals[0] == IntVec{1, 2});
  CHECK(node.normals[1] == IntVec{2, 1});
  CHECK(node.offsets == IntVec{3, 3});
  CHECK(node.M == 3);
}

TEST_CASE("validation rejects malformed weight data") {
  FiltrationSpec good = cusp_spec();
  validate(good);

  FiltrationSpec bad = good;
  bad.normals[0][1] = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = good;
  bad.offsets.push_back(4);
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = good;
  bad.offsets[0] = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = good;
  bad.M = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = good;
  bad.normals.clear();
  bad.offsets.clear();
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("value vectors") {
  CHECK(value_of(cusp_spec(), {1, 1}) == IntVec{5});
  CHECK(value_of(node_spec(), {1, 1}) == IntVec{3, 3});
  CHECK(value_of(node_spec(), {0, 0}) == IntVec{0, 0});
  CHECK_THROWS_AS(value_of(node_spec(), {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("graded dimensions of the ambient ring") {
  const auto cusp = cusp_spec();
  CHECK(dim_graded_ambient(cusp, {6}) == 2);   // z1^2 and z2^3 sit on level 6
  CHECK(dim_graded_ambient(cusp, {1}) == 0);   // no monomial has weight 1
  CHECK(dim_graded_ambient(cusp, {0}) == 1);
  CHECK(dim_graded_ambient(cusp, {-4}) == 0);

  const auto node = node_spec();
  CHECK(dim_graded_ambient(node, {1, 1}) == 2);  // z1 and z2
  CHECK(dim_graded_ambient(node, {0, 0}) == 1);
  CHECK(dim_graded_ambient(node, {-1, -1}) == 0);

  // Cross-check a three-variable example against the brute-force count.
  const auto spec3 = filtration_of(newton_polyhedron_of(corpus::cubic3()));
  REQUIRE(spec3.r() == 2);
  for (Int a = 0; a <= 4; ++a) {
    for (Int b = 0; b <= 4; ++b) {
      CHECK(dim_graded_ambient(spec3, {a, b}) == oracle::count_graded(spec3.normals, {a, b}));
    }
  }
}

TEST_CASE("direct series of graded dimensions") {
  const auto cusp = cusp_spec();
  const auto l = l_series_direct(cusp, Window::cube(1, 0, 12));
  for (Int i = 0; i <= 12; ++i) {
    CHECK(coefficient(l, {i}) == kAmbient32[i]);
  }
  // The vanishing fact answers queries outside the window.
  CHECK(l.known({-3}) == BigInt(0));

  // With a single weight row the graded count equals the ambient coefficient.
  const auto amb = ambient_poincare(cusp, Window::cube(1, 0, 12));
  CHECK(compare_on_window(l, amb, Window::cube(1, 0, 12)).equal);
}

TEST_CASE("ambient series matches direct enumeration") {
  const auto node = node_spec();
  const auto amb = ambient_poincare(node, Window::cube(2, 0, 6));
  for (Int a = 0; a <= 6; ++a) {
    for (Int b = 0; b <= 6; ++b) {
      CHECK(coefficient(amb, {a, b}) == oracle::count_value_equal(node.normals, {a, b}));
    }
  }
}

TEST_CASE("transform of the direct series gives the ambient series") {
  const auto node = node_spec();
  const Window out = Window::cube(2, 0, 6);
  const auto l = l_series_direct(node, transform_input_window(out));
  const auto p = filtration_transform(l, out);
  const auto amb = ambient_poincare(node, out);
  CHECK(compare_on_window(p, amb, out).equal);
}

TEST_CASE("one-index weight") {
  const auto cusp = cusp_spec();
  CHECK(psi(cusp, {0, 0}) == 0);
  CHECK(psi(cusp, {1, 1}) == 5);
  CHECK(psi(cusp, {0, 3}) == 6);
  CHECK(psi(cusp, {2, 0}) == 6);

  const auto node = node_spec();
  CHECK(psi(node, {1, 0}) == 1);  // min(1, 2) with M = nu = 3
  CHECK(psi(node, {1, 1}) == 3);

  // An inconsistent M is reported, not silently rounded.
  FiltrationSpec broken = cusp;
  broken.M = 1;
  CHECK_THROWS_AS(psi(broken, {0, 1}), std::logic_error);
}

TEST_CASE("one-index dimensions and minimum-level counts") {
  const auto node = node_spec();
  CHECK(dim_one_index(node, 0) == 1);
  CHECK(dim_one_index(node, 1) == 2);
  CHECK(dim_one_index(node, 2) == 2);
  CHECK(dim_one_index(node, 3) == 3);
  CHECK(dim_one_index(node, -2) == 0);
  for (Int l = 0; l <= 6; ++l) {
    CHECK(m_l_count(node, l) == dim_one_index(node, l));  // psi = min level here
  }
  CHECK(m_l_count(node, -1) == 0);

  // For a single weight row psi coincides with the row value.
  const auto cusp = cusp_spec();
  for (Int l = 0; l <= 12; ++l) {
    CHECK(dim_one_index(cusp, l) == kAmbient32[l]);
  }
}

TEST_CASE("one-index series") {
  const auto cusp = cusp_spec();
  const auto p = p_hat_direct(cusp, Window::cube(1, 0, 12));
  for (Int l = 0; l <= 12; ++l) {
    CHECK(coefficient(p, {l}) == kAmbient32[l]);
  }
  CHECK(p.known({-1}) == BigInt(0));
  CHECK_THROWS_AS(p_hat_direct(cusp, Window::cube(2, 0, 3)), std::invalid_argument);
}

TEST_CASE("minimum levels partition the points they bound") {
  const auto node = node_spec();
  const Int cap = 7;
  Int total = 0;
  for (Int l = 0; l <= cap; ++l) total += m_l_count(node, l);
  Int direct = 0;
  oracle::scan_box(2, cap, [&](const IntVec& q) {
    const Int v1 = q[0] + 2 * q[1];
    const Int v2 = 2 * q[0] + q[1];
    if (std::min(v1, v2) <= cap) ++direct;
  });
  CHECK(total == direct);
}

TEST_CASE("weighted counts report") {
  const auto node_report = weighted_counts_report(node_spec(), 6);
  CHECK(node_report.psi_vs_min.equal);
  CHECK_FALSE(node_report.psi_vs_diagonal.equal);
  CHECK(node_report.psi_vs_diagonal.detail.find("[1]") != std::string::npos);
  CHECK_FALSE(node_report.min_vs_diagonal.equal);
  CHECK(coefficient(node_report.by_psi, {1}) == 2);
  CHECK(coefficient(node_report.ambient_diagonal, {1}) == 0);
  CHECK(coefficient(node_report.ambient_diagonal, {3}) == 1);

  const auto cusp_report = weighted_counts_report(cusp_spec(), 8);
  CHECK(cusp_report.psi_vs_min.equal);
  CHECK(cusp_report.psi_vs_diagonal.equal);
  CHECK(cusp_report.min_vs_diagonal.equal);

  CHECK_THROWS_AS(weighted_counts_report(node_spec(), -1), std::invalid_argument);
}
