#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "sarkisov/enumerator.hpp"
#include "sarkisov/solver.hpp"

using namespace sarkisov;

namespace {

std::set<oracle::Solution> as_set(const std::vector<RightSolution>& v) {
  std::set<oracle::Solution> out;
  for (const auto& s : v) out.insert(oracle::from_solver(s));
  return out;
}

oracle::Quad quad(const IntersectionQuadruple& q) { return {q.a, q.b, q.c, q.d}; }

}  // namespace

TEST_CASE("solver union equals the bounded brute-force scan for every left side") {
  for (int g = 3; g <= 10; ++g) {
    for (const auto& left : enumerate_left_specs(g, BoundsMode::paper)) {
      const auto all = solve_right_all(left.quadruple);
      CHECK_MESSAGE(as_set(all) == oracle::brute_force_right(quad(left.quadruple)),
                    "g=", g, " left ", to_string(left.spec.type), " ",
                    left.spec.target_name(), " ", left.spec.data_string());
      CHECK(as_set(all).size() == all.size());
    }
  }
}

TEST_CASE("dP side of X_16 (1,6) is L = 3A - E with e = 48") {
  const auto sols = solve_right_del_pezzo({4, 6, 0, -6});
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].coordinates == DivisorClass{3, 1});
  CHECK(sols[0].spec.aux == 6);
  CHECK(sols[0].e == 48);
}

TEST_CASE("E3 on X_{2,3} reaches Q along a (12,12) curve with e = 8") {
  bool found = false;
  for (const auto& s : solve_right_divisorial_e1({4, 2, -2, 2}))
    if (s.spec.family->canonical_name == "Q") {
      CHECK(s.spec.centre == CurveCentre{12, 12});
      CHECK(s.coordinates == DivisorClass{5, 3});
      CHECK(s.e == 8);
      REQUIRE(s.derived.has_value());
      CHECK(s.derived->target_degree == 54);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("point contraction invariants") {
  const auto e2 = point_invariants(PointKind::E2);
  CHECK(e2.n2 == 4);
  CHECK(e2.n1 == -2);
  CHECK(e2.n0 == 1);
  CHECK(e2.degree_gain == 8);
  const auto e3 = point_invariants(PointKind::E3E4);
  CHECK(e3.n2 == 2);
  CHECK(e3.n1 == -2);
  CHECK(e3.n0 == 2);
  CHECK(e3.degree_gain == 2);
}

TEST_CASE("every solution has e >= 1 and positive coordinates") {
  for (int g = 3; g <= 12; ++g)
    for (const auto& left : enumerate_left_specs(g, BoundsMode::relaxed))
      for (const auto& s : solve_right_all(left.quadruple)) {
        CHECK(s.e >= 1);
        CHECK(s.coordinates.x >= 1);
        CHECK(s.coordinates.y >= 1);
      }
}

TEST_CASE("fibration sides respect the degree windows") {
  for (int g = 3; g <= 12; ++g)
    for (const auto& left : enumerate_left_specs(g, BoundsMode::relaxed)) {
      for (const auto& s : solve_right_conic_bundle(left.quadruple)) {
        CHECK(*s.spec.aux >= 0);
        CHECK(*s.spec.aux <= kMaxDiscriminantDegree);
      }
      for (const auto& s : solve_right_del_pezzo(left.quadruple)) {
        CHECK(*s.spec.aux >= 1);
        CHECK(*s.spec.aux <= kMaxDelPezzoDegree);
      }
    }
}
