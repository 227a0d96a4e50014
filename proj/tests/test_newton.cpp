#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "corpus.hpp"
#include "nfw/newton.hpp"
#include "oracles.hpp"

using namespace nfw;

namespace {

std::vector<Exponent> pts(const std::vector<IntVec>& vs) {
  std::vector<Exponent> out;
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

// Compares the library's facet list against the exhaustive normal scan.
void check_against_scan(const Polynomial& g, Int bound) {
  const auto np = newton_polyhedron_of(g);
  std::vector<IntVec> raw;
  for (const auto& e : g.support()) raw.push_back(e.e);
  const auto scanned = oracle::facet_scan(raw, np.n, bound);
  REQUIRE(np.facets.size() == scanned.size());
  for (size_t i = 0; i < scanned.size(); ++i) {
    CHECK(np.facets[i].normal == scanned[i].normal);
    CHECK(np.facets[i].offset == scanned[i].offset);
  }
}

}  // namespace

TEST_CASE("single-facet polyhedra") {
  const auto np = newton_polyhedron(pts({{2, 0}, {0, 3}}));
  REQUIRE(np.facets.size() == 1);
  CHECK(np.facets[0].normal == IntVec{3, 2});
  CHECK(np.facets[0].offset == 6);
  CHECK(np.facets[0].points.size() == 2);
  CHECK(np.vertices.size() == 2);

  const auto simple = newton_polyhedron(pts({{1, 0}, {0, 1}}));
  REQUIRE(simple.facets.size() == 1);
  CHECK(simple.facets[0].normal == IntVec{1, 1});
  CHECK(simple.facets[0].offset == 1);
}

TEST_CASE("two facets sharing a vertex") {
  const auto np = newton_polyhedron(pts({{3, 0}, {1, 1}, {0, 3}}));
  REQUIRE(np.facets.size() == 2);
  CHECK(np.facets[0].normal == IntVec{1, 2});
  CHECK(np.facets[0].offset == 3);
  CHECK(np.facets[1].normal == IntVec{2, 1});
  CHECK(np.facets[1].offset == 3);
  CHECK(np.vertices.size() == 3);  // (1,1) is a vertex where the facets meet
  CHECK(is_bistellar(np));
}

TEST_CASE("chain of three facets, outer pair disjoint") {
  const auto np = newton_polyhedron_of(corpus::chain_quartic());
  REQUIRE(np.facets.size() == 3);
  CHECK(np.facets[0].normal == IntVec{1, 1});
  CHECK(np.facets[0].offset == 3);
  CHECK(np.facets[1].normal == IntVec{1, 2});
  CHECK(np.facets[1].offset == 4);
  CHECK(np.facets[2].normal == IntVec{2, 1});
  CHECK(np.facets[2].offset == 4);
  CHECK_FALSE(is_bistellar(np));
}

TEST_CASE("dominated points do not become vertices") {
  // (1,1) cuts below the segment (2,0)-(0,3), splitting the hull into facets
  // (1,1) offset 2 and (2,1) offset 3; (3,3) lies in (1,1) + the orthant.
  const auto np = newton_polyhedron(pts({{2, 0}, {0, 3}, {1, 1}, {3, 3}}));
  REQUIRE(np.facets.size() == 2);
  CHECK(np.facets[0].normal == IntVec{1, 1});
  CHECK(np.facets[0].offset == 2);
  CHECK(np.facets[1].normal == IntVec{2, 1});
  CHECK(np.facets[1].offset == 3);
  REQUIRE(np.vertices.size() == 3);
  for (int v : np.vertices) {
    const auto& q = np.support[static_cast<size_t>(v)].e;
    CHECK(q != IntVec{3, 3});
  }
}

TEST_CASE("three variables") {
  const auto np = newton_polyhedron_of(corpus::cubic3());
  REQUIRE(np.facets.size() == 2);
  CHECK(np.facets[0].normal == IntVec{1, 2, 1});
  CHECK(np.facets[0].offset == 3);
  CHECK(np.facets[1].normal == IntVec{2, 1, 1});
  CHECK(np.facets[1].offset == 3);
  CHECK(is_bistellar(np));
  // Every facet's equality set spans an affine plane.
  for (const auto& f : np.facets) {
    std::vector<Exponent> on_facet;
    for (int idx : f.points) on_facet.push_back(np.support[static_cast<size_t>(idx)]);
    CHECK(affine_dim(on_facet) == np.n - 1);
  }
}

TEST_CASE("dimension one collapses to the minimum vertex") {
  const auto np = newton_polyhedron(pts({{3}, {5}}));
  REQUIRE(np.facets.size() == 1);
  CHECK(np.facets[0].normal == IntVec{1});
  CHECK(np.facets[0].offset == 3);
  REQUIRE(np.vertices.size() == 1);
  CHECK(np.support[static_cast<size_t>(np.vertices[0])].e == IntVec{3});
}

TEST_CASE("facet enumeration matches the exhaustive oracle") {
  check_against_scan(corpus::cusp(), 8);
  check_against_scan(corpus::node_cubic(), 8);
  check_against_scan(corpus::chain_quartic(), 8);
  check_against_scan(corpus::line(), 8);
  check_against_scan(corpus::cubic3(), 5);
}

TEST_CASE("support validation") {
  CHECK_THROWS_AS(newton_polyhedron({}), std::invalid_argument);
  CHECK_THROWS_AS(newton_polyhedron(pts({{-1, 0}})), std::invalid_argument);
}

TEST_CASE("convenient predicate") {
  CHECK(is_convenient(corpus::cusp().support(), 2));
  CHECK_FALSE(is_convenient(corpus::p2("z1^2 + z1*z2").support(), 2));
  CHECK(is_convenient(sum_supports({corpus::line(), corpus::p2("z1^2 + z2^2")}), 2));
}

TEST_CASE("product supports and threshold additivity") {
  const auto g1 = corpus::cusp();
  const auto g2 = corpus::line();
  const auto support = sum_supports({g1, g2});
  const auto np = newton_polyhedron(support);
  REQUIRE(np.facets.size() == 2);
  CHECK(np.facets[0].normal == IntVec{1, 1});
  CHECK(np.facets[0].offset == 3);
  CHECK(np.facets[1].normal == IntVec{3, 2});
  CHECK(np.facets[1].offset == 8);

  // Row minima add up to the product's facet offsets.
  const auto nu = nu_matrix({g1, g2}, np.normals());
  CHECK(nu[0] == IntVec{2, 6});
  CHECK(nu[1] == IntVec{1, 2});
  for (size_t j = 0; j < np.facets.size(); ++j) {
    CHECK(nu[0][j] + nu[1][j] == np.facets[j].offset);
  }
}

TEST_CASE("threshold rows") {
  const auto np = newton_polyhedron_of(corpus::cusp());
  CHECK(nu_row(corpus::cusp(), np.normals()) == IntVec{6});
  CHECK(nu_row(corpus::line(), {{1, 1}}) == IntVec{1});
  CHECK_THROWS_AS(nu_row(Polynomial(2), {{1, 1}}), std::invalid_argument);
}

TEST_CASE("initial parts") {
  const auto np = newton_polyhedron_of(corpus::cusp());
  CHECK(initial_part(corpus::cusp(), np.normals(), {0}) == corpus::cusp());

  const auto fat = corpus::p2("z1^2 + z2^3 + z1*z2^2");
  CHECK(initial_part(fat, newton_polyhedron_of(fat).normals(), {0}) == corpus::cusp());

  // The two outer facets of the quartic have no common support point.
  const auto quartic = corpus::chain_quartic();
  const auto qnp = newton_polyhedron_of(quartic);
  CHECK(initial_part(quartic, qnp.normals(), {1, 2}).is_zero());
  CHECK(initial_part(quartic, qnp.normals(), {0}) == corpus::p2("z1^2*z2 + z1*z2^2"));
}

TEST_CASE("initial parts over cones") {
  const auto g = corpus::cusp();
  const IntVec p{3, 2};
  CHECK(initial_part_cone(g, {}, {p}, std::vector<Int>{6}) == g);
  CHECK(initial_part_cone(g, {0}, {p}, std::vector<Int>{6}) == corpus::p2("z2^3"));
  CHECK(initial_part_cone(g, {0, 1}, {}, std::vector<Int>{}).is_zero());
  // Fractional thresholds keep only exact matches; value 1/2 is never hit.
  CHECK(initial_part_cone(corpus::line(), {}, {{1, 1}}, std::vector<Rational>{Rational(1, 2)}).is_zero());
  CHECK(initial_part_cone(corpus::line(), {}, {{1, 1}}, std::vector<Rational>{Rational(1)}) == corpus::line());
}

TEST_CASE("polytopes") {
  const auto square = make_polytope(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(affine_dim(square.points) == 2);
  CHECK(is_full(square));
  const auto facets = polytope_facets(square);
  REQUIRE(facets.size() == 4);  // parallel facet pairs must both survive

  const auto segment = make_polytope(pts({{0, 0}, {2, 2}}));
  CHECK(affine_dim(segment.points) == 1);
  CHECK_FALSE(is_full(segment));
  CHECK_THROWS_AS(polytope_facets(segment), std::invalid_argument);

  const auto face = min_face(square, {1, 0});
  REQUIRE(face.size() == 2);
  for (int idx : face) CHECK(square.points[static_cast<size_t>(idx)].e[0] == 0);
}

TEST_CASE("minkowski sums") {
  const auto a = make_polytope(pts({{1, 0}, {0, 1}}));
  const auto sum = minkowski_sum(a, a);
  REQUIRE(sum.points.size() == 3);
  CHECK(sum.points[0].e == IntVec{0, 2});
  CHECK(sum.points[1].e == IntVec{1, 1});
  CHECK(sum.points[2].e == IntVec{2, 0});
}

TEST_CASE("six-variable polytopes are full") {
  const auto gs = corpus::mirrored_six();
  const auto a = make_polytope(gs[0].support());
  const auto b = make_polytope(gs[1].support());
  CHECK(affine_dim(a.points) == 5);  // six axis points span a 5-plane
  const auto sum = minkowski_sum(a, b);
  CHECK(affine_dim(sum.points) == 6);
  CHECK(is_full(sum));
}
