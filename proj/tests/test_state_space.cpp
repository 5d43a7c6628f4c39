#include "doctest.h"
#include "oracles.hpp"

#include "gptlab/state_space.hpp"

#include <functional>

using namespace gptlab;

namespace {

StateSpace square_model() {
  return StateSpace::build(3, Vector{0, 0, 1}, {Vector{1, 1, 1}, Vector{1, -1, 1}, Vector{-1, 1, 1}, Vector{-1, -1, 1}});
}

StateSpace triangle_model() {
  return StateSpace::build(3, Vector{1, 1, 1}, {Vector{1, 0, 0}, Vector{0, 1, 0}, Vector{0, 0, 1}});
}

StateSpace pentagon_model() {
  auto base = VPolytope::from_extreme_points(
      2, {Vector{0, 2}, Vector{2, 1}, Vector{1, -1}, Vector{-1, -1}, Vector{-2, 1}});
  return StateSpace::lift(base);
}

std::vector<StateSpace> small_zoo() {
  return {square_model(), triangle_model(), pentagon_model()};
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

std::vector<Vector> oracle_pure_effects(const StateSpace& a) {
  std::vector<oracle::Halfspace> ineqs;
  for (const auto& v : a.states()) {
    ineqs.push_back({v, 1});
    ineqs.push_back({-v, 0});
  }
  return oracle::enumerate_vertices(ineqs, {}, a.dim());
}

}  // namespace

TEST_CASE("build validates its input") {
  auto sq = square_model();
  CHECK(sq.dim() == 3);
  CHECK(sq.states().size() == 4);

  CHECK(kind_of([] { StateSpace::build(2, Vector{0, 1}, {Vector{1, 2}, Vector{0, 1}}); }) == ErrorKind::NotNormalized);
  CHECK(kind_of([] { StateSpace::build(3, Vector{0, 0, 1}, {Vector{1, 0, 1}, Vector{0, 0, 1}}); }) ==
        ErrorKind::NotGenerating);
  CHECK(kind_of([] { StateSpace::build(3, Vector{0, 0, 1}, {}); }) == ErrorKind::EmptyStateSet);

  // Non-extreme input states are dropped.
  auto reduced = StateSpace::build(2, Vector{0, 1}, {Vector{0, 1}, Vector{1, 1}, Vector::parse({"1/2", "1"})});
  CHECK(reduced.states().size() == 2);
}

TEST_CASE("lift examples") {
  auto unit_square = VPolytope::from_extreme_points(2, {Vector{0, 0}, Vector{1, 0}, Vector{0, 1}, Vector{1, 1}});
  auto a = StateSpace::lift(unit_square);
  CHECK(a.dim() == 3);
  CHECK(a.states().size() == 4);
  CHECK(a.unit() == Vector{0, 0, 1});

  auto point = StateSpace::lift(VPolytope::from_extreme_points(0, {Vector{}}));
  CHECK(point.dim() == 1);
  CHECK(classify(point) == Classification::Classical);

  CHECK(pentagon_model().states().size() == 5);
  CHECK(kind_of([] { StateSpace::lift(VPolytope(2)); }) == ErrorKind::EmptyStateSet);
}

TEST_CASE("subnormalized states") {
  auto sq = square_model().subnormalized();
  CHECK(sq.size() == 5);
  CHECK(sq.has_vertex(Vector{0, 0, 0}));
  CHECK(dimension(sq) == 3);

  auto single = StateSpace::build(1, Vector{1}, {Vector{1}}).subnormalized();
  CHECK(single == VPolytope::from_extreme_points(1, {Vector{0}, Vector{1}}));

  auto tri = triangle_model().subnormalized();
  CHECK(tri.size() == 4);
  CHECK(is_simplex(tri));
}

TEST_CASE("effect polytopes") {
  auto sq = square_model();
  CHECK(sq.effect_polytope().inequalities.size() == 8);
  // The octahedron: 6 vertices, 8 triangular facets.
  auto octahedron = VPolytope::from_extreme_points(3, sq.pure_effects());
  CHECK(octahedron.size() == 6);
  CHECK(v_to_h(octahedron).inequalities.size() == 8);

  auto single = StateSpace::build(1, Vector{1}, {Vector{1}});
  CHECK(single.pure_effects() == std::vector<Vector>{Vector{0}, Vector{1}});

  auto tri = triangle_model();
  CHECK(tri.effect_polytope().inequalities.size() == 6);
  CHECK(tri.pure_effects() == oracle_pure_effects(tri));
  CHECK(tri.pure_effects().size() == 8);
}

TEST_CASE("pure effects match the enumeration oracle") {
  for (const auto& a : small_zoo()) {
    const auto& pure = a.pure_effects();
    CHECK(pure == oracle_pure_effects(a));
    CHECK(std::find(pure.begin(), pure.end(), Vector::zero(a.dim())) != pure.end());
    CHECK(std::find(pure.begin(), pure.end(), a.unit()) != pure.end());
    for (const auto& f : pure) CHECK(is_pure(a, f));
  }
  CHECK(square_model().pure_effects().size() == 6);
  // The pentagon has its five edge effects, their five complements, 0 and u_A.
  CHECK(pentagon_model().pure_effects().size() == 12);
}

TEST_CASE("complementary effects") {
  for (const auto& a : small_zoo()) {
    CHECK(complementary(a, a.unit()).is_zero());
    std::vector<Vector> complements;
    for (const auto& f : a.pure_effects()) {
      CHECK(complementary(a, complementary(a, f)) == f);
      complements.push_back(complementary(a, f));
      CHECK(impossible_face(a, f) == certain_face(a, complementary(a, f)));
    }
    std::sort(complements.begin(), complements.end());
    CHECK(complements == a.pure_effects());
  }
}

TEST_CASE("certain and impossible faces") {
  auto sq = square_model();
  Vector top{0, Rational(1, 2), Rational(1, 2)};  // 1 on y = 1, 0 on y = -1
  REQUIRE(is_pure(sq, top));
  auto top_edge = VPolytope::from_extreme_points(3, {Vector{-1, 1, 1}, Vector{1, 1, 1}});
  auto bottom_edge = VPolytope::from_extreme_points(3, {Vector{-1, -1, 1}, Vector{1, -1, 1}});
  CHECK(certain_face(sq, top) == top_edge);
  CHECK(impossible_face(sq, top) == bottom_edge);
  CHECK(impossible_face(sq, complementary(sq, top)) == top_edge);
  CHECK(certain_face(sq, sq.unit()) == sq.omega());
  CHECK(certain_face(sq, Vector::zero(3)).empty());
  CHECK(impossible_face(sq, sq.unit()).empty());

  auto pent = pentagon_model();
  for (const auto& f : pent.pure_effects()) {
    if (certain_face(pent, f).size() == 2) CHECK(impossible_face(pent, f).size() == 1);
  }

  for (const auto& a : small_zoo()) {
    for (const auto& f : a.pure_effects()) {
      if (!f.is_zero()) CHECK_FALSE(certain_face(a, f).empty());
      for (const auto& face : {certain_face(a, f), impossible_face(a, f)}) {
        if (face.empty()) continue;
        CHECK(is_face(a.omega(), face));
        CHECK(intersect_with_affine(a.omega(), affine_hull(face.vertices())) == face);
      }
    }
  }
}

TEST_CASE("purity of arbitrary effects") {
  auto sq = square_model();
  CHECK_FALSE(is_pure(sq, Vector{0, 0, Rational(1, 2)}));
  CHECK_FALSE(is_pure(sq, Vector{0, 0, 2}));
  CHECK(is_effect(sq, Vector{0, 0, Rational(1, 2)}));
  CHECK_FALSE(is_effect(sq, Vector{1, 0, 0}));
  CHECK_THROWS_AS(require_pure(sq, Vector{0, 0, Rational(1, 2)}), Error);
}

TEST_CASE("unanimity faces") {
  auto sq = square_model();
  std::vector<Vector> edge{Vector{-1, 1, 1}, Vector{1, 1, 1}};
  auto u_edge = unanimity_face(sq, edge);
  CHECK(u_edge == VPolytope::from_extreme_points(3, {sq.unit(), Vector{0, Rational(1, 2), Rational(1, 2)}}));

  CHECK(unanimity_face(sq, sq.states()) == VPolytope::from_extreme_points(3, {sq.unit()}));
  CHECK(unanimity_face(sq, std::vector<Vector>{}).vertices() == sq.pure_effects());
  CHECK(kind_of([&] { unanimity_face(sq, std::vector<Vector>{Vector{0, 0, 1}}); }) == ErrorKind::NotAStateVertex);

  // Every small subset gives a face of the effect polytope.
  for (const auto& a : small_zoo()) {
    auto effects = VPolytope::from_extreme_points(a.dim(), a.pure_effects());
    const auto& states = a.states();
    const std::size_t n = states.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > 3) continue;
      std::vector<Vector> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) s.push_back(states[i]);
      }
      auto face = unanimity_face(a, s);
      CHECK(face.has_vertex(a.unit()));
      CHECK(is_face(effects, face));
    }
  }
}

TEST_CASE("classification") {
  CHECK(classify(triangle_model()) == Classification::Classical);
  CHECK(classify(square_model()) == Classification::DiscreteNonClassical);
  std::vector<Vector> e;
  for (std::size_t i = 0; i < 4; ++i) e.push_back(Vector::unit(4, i));
  CHECK(classify(StateSpace::build(4, Vector{1, 1, 1, 1}, e)) == Classification::Classical);
  CHECK(to_string(Classification::DiscreteNonClassical) == "DiscreteNonClassical");
}

TEST_CASE("the origin is never affinely generated by states") {
  for (const auto& a : small_zoo()) {
    const auto& states = a.states();
    for (unsigned mask = 1; mask < (1u << states.size()); ++mask) {
      std::vector<Vector> s;
      for (std::size_t i = 0; i < states.size(); ++i) {
        if (mask & (1u << i)) s.push_back(states[i]);
      }
      CHECK_FALSE(affine_hull(s).contains(Vector::zero(a.dim())));
    }
  }
}

TEST_CASE("measurements sum to the unit effect") {
  auto sq = square_model();
  Vector top{0, Rational(1, 2), Rational(1, 2)};
  std::vector<Vector> m{top, complementary(sq, top)};
  CHECK(is_measurement(sq, m));
  m.pop_back();
  CHECK_FALSE(is_measurement(sq, m));
}
