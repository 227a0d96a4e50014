#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "json.hpp"
#include "nfw/artin.hpp"
#include "nfw/newton.hpp"
#include "oracles.hpp"

using namespace nfw;

namespace {

FiltrationSpec cusp_spec() { return filtration_of(newton_polyhedron_of(corpus::cusp())); }

FiltrationSpec node_spec() { return filtration_of(newton_polyhedron_of(corpus::node_cubic())); }

std::vector<Polynomial> partials_of(const Polynomial& f) {
  std::vector<Polynomial> gs;
  for (int i = 0; i < f.nvars(); ++i) gs.push_back(derivative(f, i));
  return gs;
}

}  // namespace

TEST_CASE("quotient bases") {
  const auto cusp = cusp_spec();

  const auto tiny = artinian_basis(cusp, {2});
  REQUIRE(tiny.dim() == 2);
  CHECK(tiny.basis[0] == IntVec{0, 0});
  CHECK(tiny.basis[1] == IntVec{0, 1});
  CHECK(tiny.index.at(IntVec{0, 1}) == 1);

  CHECK(artinian_basis(cusp, {-1}).dim() == 0);
  CHECK(artinian_basis(cusp, {6}).dim() == 7);

  // Closure under coordinatewise decrease.
  const auto a6 = artinian_basis(cusp, {6});
  for (const auto& q : a6.basis) {
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      IntVec down = q;
      down[i] -= 1;
      CHECK(a6.index.count(down) == 1);
    }
  }

  const auto node = node_spec();
  const auto b = artinian_basis(node, {3, 3});
  Int expected = 0;
  oracle::scan_box(2, 6, [&](const IntVec& q) {
    const Int v1 = q[0] + 2 * q[1];
    const Int v2 = 2 * q[0] + q[1];
    if (v1 <= 3 || v2 <= 3) ++expected;
  });
  CHECK(b.dim() == expected);
}

TEST_CASE("class vectors truncate deep terms") {
  const auto cusp = cusp_spec();
  const auto a = artinian_basis(cusp, {6});
  const auto f = corpus::cusp();  // both terms sit exactly at level 6
  const QVec v = class_vector(a, f);
  Int nonzero = 0;
  for (const auto& c : v) {
    if (c != 0) ++nonzero;
  }
  CHECK(nonzero == 2);

  // A term of value 8 is deeper than every threshold and vanishes.
  const auto deep = parse_polynomial("z1^2*z2", corpus::vars2);
  const QVec dv = class_vector(a, deep);
  CHECK(std::all_of(dv.begin(), dv.end(), [](const Rational& c) { return c == 0; }));
}

TEST_CASE("ideal images") {
  const auto cusp = cusp_spec();
  const auto a = artinian_basis(cusp, {6});

  CHECK(ideal_image(a, {corpus::cusp()}).dim() == 1);

  const auto one = parse_polynomial("1", corpus::vars2);
  CHECK(ideal_image(a, {one}).dim() == a.dim());

  const auto deep = parse_polynomial("z1^2*z2^2", corpus::vars2);
  CHECK(ideal_image(a, {deep}).dim() == 0);

  CHECK(ideal_image(a, {}).dim() == 0);
  CHECK_THROWS_AS(ideal_image(a, {Polynomial(2)}), std::invalid_argument);
}

TEST_CASE("induced graded dimensions") {
  const auto cusp = cusp_spec();
  const std::vector<Polynomial> f{corpus::cusp()};
  CHECK(induced_dim(cusp, {6}, f) == 1);
  CHECK(induced_dim(cusp, {0}, f) == 1);
  CHECK(induced_dim(cusp, {1}, f) == 0);

  // With no generators the induced dimension is the ambient one.
  for (Int l = 0; l <= 10; ++l) {
    CHECK(induced_dim(cusp, {l}, {}) == dim_graded_ambient(cusp, {l}));
  }

  // Never exceeds the ambient dimension.
  const auto node = node_spec();
  for (Int ma = 0; ma <= 4; ++ma) {
    for (Int mb = 0; mb <= 4; ++mb) {
      const Int ind = induced_dim(node, {ma, mb}, {corpus::node_cubic()});
      CHECK(ind >= 0);
      CHECK(ind <= dim_graded_ambient(node, {ma, mb}));
    }
  }
}

TEST_CASE("hypersurface induced dimensions match the factorized series") {
  // For the cusp the induced dimensions over l = 0..12 reproduce the
  // coefficients of (1 - t^6) / ((1 - t^3)(1 - t^2)).
  const auto cusp = cusp_spec();
  const std::vector<Polynomial> f{corpus::cusp()};
  const auto expected = mul_one_minus(ambient_poincare(cusp, Window::cube(1, 0, 12)), {6});
  for (Int l = 0; l <= 12; ++l) {
    CHECK(induced_dim(cusp, {l}, f) == coefficient(expected, {l}));
  }
}

TEST_CASE("bar dimensions") {
  const auto cusp = cusp_spec();
  const std::vector<Polynomial> f{corpus::cusp()};
  const auto nu = nu_matrix(f, cusp.normals);
  REQUIRE(nu == std::vector<IntVec>{{6}});
  CHECK(bar_dim(cusp, {6}, f, nu) == 1);

  // Below every term value all generator multiples are deep, so the bar
  // dimension falls back to the ambient one.
  CHECK(bar_dim(cusp, {5}, f, nu) == dim_graded_ambient(cusp, {5}));

  // Two monomial generators under the same weights: bar dimensions reproduce
  // (1 - t^3)(1 - t^4) / ((1 - t^3)(1 - t^2)) = 1 + t^2.
  const auto gs = corpus::monomial_pair();
  const auto nug = nu_matrix(gs, cusp.normals);
  REQUIRE(nug == std::vector<IntVec>{{3}, {4}});
  const Int expected_bar[] = {1, 0, 1, 0, 0, 0, 0, 0, 0};
  for (Int l = 0; l <= 8; ++l) {
    CHECK(bar_dim(cusp, {l}, gs, nug) == expected_bar[l]);
  }
}

TEST_CASE("level intersection comparison") {
  const auto cusp = cusp_spec();
  const std::vector<Polynomial> f1{corpus::cusp()};
  for (Int l = 0; l <= 8; ++l) {
    CHECK(level_intersection_equal(cusp, {l}, f1));  // single row: trivially equal
  }

  const auto node = node_spec();
  const std::vector<Polynomial> f3{corpus::node_cubic()};
  // Multiples of a unit vector coincide by definition.
  CHECK(level_intersection_equal(node, {4, 0}, f3));
  CHECK(level_intersection_equal(node, {0, 4}, f3));
  // Regression value for a bistellar germ at a mixed threshold.
  CHECK(level_intersection_equal(node, {2, 2}, f3));
  CHECK_THROWS_AS(level_intersection_equal(node, {-1, 2}, f3), std::invalid_argument);
}

TEST_CASE("one-index quotients and dimensions") {
  const auto cusp = cusp_spec();
  // psi = 3q1 + 2q2 here, so the level-l quotient is {3q1+2q2 <= l}.
  CHECK(one_index_quotient(cusp, 6).dim() == 7);
  CHECK(one_index_quotient(cusp, -1).dim() == 0);

  const std::vector<Polynomial> f{corpus::cusp()};
  CHECK(rho_of(cusp, corpus::cusp()) == 6);
  const auto gs = corpus::monomial_pair();
  CHECK(rho_of(cusp, gs[0]) == 3);
  CHECK(rho_of(cusp, gs[1]) == 4);
  CHECK_THROWS_AS(rho_of(cusp, Polynomial(2)), std::invalid_argument);

  // With no generators the one-index induced dimension counts psi levels.
  for (Int l = 0; l <= 10; ++l) {
    CHECK(induced_dim_one(cusp, l, {}) == dim_one_index(cusp, l));
  }

  // The graded identity between the restricted-shift object and the induced
  // object at one-index level, for inputs with simplicial cone structure.
  IntVec rho;
  for (const auto& g : gs) rho.push_back(rho_of(cusp, g));
  for (Int l = 0; l <= 12; ++l) {
    CHECK(bar_dim_one(cusp, l, gs, rho) == induced_dim_one(cusp, l, gs));
  }
  const auto node = node_spec();
  const std::vector<Polynomial> f3{corpus::node_cubic()};
  const IntVec rho3{rho_of(node, corpus::node_cubic())};
  for (Int l = 0; l <= 9; ++l) {
    CHECK(bar_dim_one(node, l, f3, rho3) == induced_dim_one(node, l, f3));
  }
}

TEST_CASE("total quotient dimensions") {
  CHECK(quotient_total_dim(corpus::monomial_pair()) == 2);

  const auto z1 = parse_polynomial("z1", corpus::vars2);
  const auto z2 = parse_polynomial("z2", corpus::vars2);
  CHECK(quotient_total_dim({z1, z2}) == 1);

  CHECK(quotient_total_dim(partials_of(corpus::node_cubic())) == 1);
  CHECK(quotient_total_dim(partials_of(corpus::cusp())) == 2);
  CHECK(quotient_total_dim(partials_of(corpus::quasi34())) == 6);

  // A non-finite quotient is reported, not looped on: (z1, z1) leaves z2 free.
  CHECK_THROWS_AS(quotient_total_dim({z1, z1}, 16), std::runtime_error);
  CHECK_THROWS_AS(quotient_total_dim({z1}), std::invalid_argument);
}

TEST_CASE("graded report serialization") {
  const auto cusp = cusp_spec();
  const std::vector<Polynomial> f{corpus::cusp()};
  const auto nu = nu_matrix(f, cusp.normals);
  const auto report = graded_report(cusp, f, nu, Window::cube(1, 0, 6));
  REQUIRE(report.rows.size() == 7);
  CHECK(report.rows[6].mu == IntVec{6});
  CHECK(report.rows[6].ambient == 2);
  CHECK(report.rows[6].induced == 1);
  CHECK(report.rows[6].bar == 1);
  for (const auto& row : report.rows) {
    CHECK(row.induced >= 0);
    CHECK(row.induced <= row.ambient);
    CHECK(row.bar >= 0);
    CHECK(row.bar <= row.ambient);
  }

  const auto j = nlohmann::json::parse(graded_report_to_json(report));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 7);
  CHECK(j[6][0] == nlohmann::json::array({6}));
  CHECK(j[6][1] == 2);
  CHECK(j[6][2] == 1);
  CHECK(j[6][3] == 1);
}
