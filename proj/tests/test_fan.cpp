#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "json.hpp"
#include "nfw/fan.hpp"

using namespace nfw;

namespace {

QVec qpoint(const std::vector<Rational>& v) { return v; }

SimplicialFan fan_of(const Polynomial& g, InsertOrder order = InsertOrder::FacetOrder) {
  return build_fan(newton_polyhedron_of(g).normals(), g.nvars(), order);
}

}  // namespace

TEST_CASE("empty normal list keeps the orthant") {
  const auto fan = build_fan({}, 2);
  REQUIRE(fan.rays.size() == 2);
  REQUIRE(fan.maximal_cones.size() == 1);
  CHECK(fan.maximal_cones[0] == std::vector<int>{0, 1});
}

TEST_CASE("single interior ray splits the quadrant") {
  const auto fan = build_fan({{1, 1}}, 2);
  REQUIRE(fan.rays.size() == 3);
  REQUIRE(fan.maximal_cones.size() == 2);
  const int e1 = fan.ray_index({1, 0});
  const int e2 = fan.ray_index({0, 1});
  const int p = fan.ray_index({1, 1});
  REQUIRE(p >= 0);
  CHECK(fan.rays[static_cast<size_t>(p)].facet_ids == std::vector<int>{0});
  auto has_cone = [&](std::vector<int> cone) {
    std::sort(cone.begin(), cone.end());
    return std::find(fan.maximal_cones.begin(), fan.maximal_cones.end(), cone) != fan.maximal_cones.end();
  };
  CHECK(has_cone({e1, p}));
  CHECK(has_cone({e2, p}));
}

TEST_CASE("two rays sort angularly between the axes") {
  const auto fan = build_fan({{1, 2}, {2, 1}}, 2);
  REQUIRE(fan.maximal_cones.size() == 3);
  const int e1 = fan.ray_index({1, 0});
  const int e2 = fan.ray_index({0, 1});
  const int steep = fan.ray_index({1, 2});
  const int shallow = fan.ray_index({2, 1});
  auto has_cone = [&](std::vector<int> cone) {
    std::sort(cone.begin(), cone.end());
    return std::find(fan.maximal_cones.begin(), fan.maximal_cones.end(), cone) != fan.maximal_cones.end();
  };
  // (2,1) neighbours the x-axis, (1,2) the y-axis.
  CHECK(has_cone({e1, shallow}));
  CHECK(has_cone({shallow, steep}));
  CHECK(has_cone({steep, e2}));

  CHECK(fan == build_fan({{2, 1}, {1, 2}}, 2));
  CHECK(fan == build_fan({{1, 2}, {2, 1}}, 2, InsertOrder::ReverseFacetOrder));
}

TEST_CASE("ray coinciding with an axis keeps both labels") {
  const auto fan = build_fan({{1}}, 1);
  REQUIRE(fan.rays.size() == 1);
  CHECK(fan.rays[0].axes == std::vector<int>{0});
  CHECK(fan.rays[0].facet_ids == std::vector<int>{0});
  REQUIRE(fan.maximal_cones.size() == 1);
}

TEST_CASE("three-variable fans are valid for both insertion orders") {
  const auto np = newton_polyhedron_of(corpus::cubic3());
  for (const auto order : {InsertOrder::FacetOrder, InsertOrder::ReverseFacetOrder}) {
    const auto fan = build_fan(np.normals(), 3, order);
    CHECK(fan_refines_dual(fan, np));
    CHECK(fan_fills_orthant(fan));
    for (const auto& cone : fan.maximal_cones) CHECK(cone.size() == 3);
  }
}

TEST_CASE("corpus fans refine the dual subdivision and fill the orthant") {
  for (const auto& g : {corpus::cusp(), corpus::node_cubic(), corpus::chain_quartic(), corpus::line()}) {
    const auto np = newton_polyhedron_of(g);
    const auto fan = build_fan(np.normals(), np.n);
    CHECK(fan_refines_dual(fan, np));
    CHECK(fan_fills_orthant(fan));
  }
}

TEST_CASE("random points of the orthant land in some maximal cone") {
  const auto fan = fan_of(corpus::node_cubic());
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(0, 30), den(1, 7);
  for (int trial = 0; trial < 1000; ++trial) {
    const QVec v = qpoint({make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))});
    CHECK(locate_cone(fan, v) >= 0);
  }
  CHECK(locate_cone(fan, qpoint({Rational(-1), Rational(2)})) == -1);
}

TEST_CASE("piecewise linear interpolation of ray values") {
  // Single facet (1,1): on cone(e1, p) the form with h(e1)=0, h(p)=1 is q2.
  const auto fan = fan_of(corpus::line());
  const auto h = pl_from_offsets(fan, {Rational(1)});
  CHECK(pl_eval(fan, h, qpoint({Rational(1), Rational(1)})) == 1);
  CHECK(pl_eval(fan, h, qpoint({Rational(5), Rational(0)})) == 0);
  CHECK(pl_eval(fan, h, qpoint({Rational(0), Rational(3)})) == 0);
  CHECK(pl_eval(fan, h, qpoint({Rational(7), Rational(2)})) == 2);  // min(q1,q2) on both cones
}

TEST_CASE("values add when the fan is shared") {
  const auto fan = fan_of(corpus::node_cubic());
  const auto h1 = pl_from_offsets(fan, {Rational(3), Rational(1)});
  const auto h2 = pl_from_offsets(fan, {Rational(-1), Rational(2)});
  const auto sum = pl_from_offsets(fan, {Rational(2), Rational(3)});
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(0, 20), den(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const QVec v = qpoint({make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))});
    CHECK(pl_eval(fan, h1, v) + pl_eval(fan, h2, v) == pl_eval(fan, sum, v));
  }
}

TEST_CASE("wall agreement of the cone forms") {
  const auto fan = fan_of(corpus::node_cubic());
  const auto h = pl_from_offsets(fan, {Rational(5), Rational(7)});
  for (size_t a = 0; a < fan.maximal_cones.size(); ++a) {
    for (int ray : fan.maximal_cones[a]) {
      Rational acc(0);
      for (int i = 0; i < fan.n; ++i) {
        acc += h.cone_forms[a][static_cast<size_t>(i)] * Rational(fan.rays[static_cast<size_t>(ray)].dir[static_cast<size_t>(i)]);
      }
      CHECK(acc == h.ray_values[static_cast<size_t>(ray)]);
    }
  }
}

TEST_CASE("a facet label on an axis ray overrides the axis convention") {
  const auto fan = build_fan({{1}}, 1);
  const auto h = pl_from_offsets(fan, {Rational(4)});
  CHECK(h.ray_values[0] == 4);
  CHECK(pl_eval(fan, h, {Rational(2)}) == 8);
}

TEST_CASE("convexity in the support-function sense") {
  const auto fan = fan_of(corpus::cusp());
  CHECK(is_convex(fan, pl_from_offsets(fan, {Rational(6)})));
  CHECK_FALSE(is_convex(fan, pl_from_offsets(fan, {Rational(-6)})));
  CHECK(is_convex(fan, pl_from_offsets(fan, {Rational(0)})));
}

TEST_CASE("threshold sums give convex interpolants") {
  // Sums of rows of the threshold matrix yield convex functions.
  for (const auto& g : {corpus::cusp(), corpus::node_cubic(), corpus::line()}) {
    const auto np = newton_polyhedron_of(g);
    const auto fan = build_fan(np.normals(), np.n);
    const IntVec nu = nu_row(g, np.normals());
    std::vector<Rational> vals;
    for (Int v : nu) vals.emplace_back(static_cast<long>(v));
    CHECK(is_convex(fan, pl_from_offsets(fan, vals)));
  }
}

TEST_CASE("fan serialization") {
  const auto fan = fan_of(corpus::node_cubic());
  const auto j = nlohmann::json::parse(fan_to_json(fan));
  CHECK(j["n"] == 2);
  CHECK(j["rays"].size() == 4);
  CHECK(j["maximal_cones"].size() == 3);
}

TEST_CASE("scaling factor for the collapsed weight") {
  const auto cusp_np = newton_polyhedron_of(corpus::cusp());
  CHECK(compute_M(cusp_np) == 6);
  CHECK(compute_M(cusp_np, true) == 6);  // the minimum hits every residue

  const auto node_np = newton_polyhedron_of(corpus::node_cubic());
  CHECK(compute_M(node_np) == 3);
  CHECK(compute_M(node_np, true) == 3);

  const std::vector<IntVec> unit_rows{{1}};
  CHECK(compute_M(unit_rows, IntVec{1}) == 1);
  CHECK(compute_M(unit_rows, IntVec{1}, true) == 1);
  // With thresholds 2 and 3 the minimum's denominator always divides 6 but
  // both prime factors occur.
  const std::vector<IntVec> ones_rows{{1, 1}, {1, 1}};
  CHECK(compute_M(ones_rows, IntVec{2, 3}) == 6);
  const std::vector<IntVec> degenerate{{1, 0}};
  CHECK_THROWS_AS(compute_M(degenerate, IntVec{2}, true), std::invalid_argument);
}
