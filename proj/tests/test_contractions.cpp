#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "sarkisov/contractions.hpp"

using namespace sarkisov;

namespace {

const FanoFamily& fam(const char* name) { return *lookup_by_name(name); }

ContractionSpec e1(const char* target, std::int64_t pa, std::int64_t deg) {
  return {ContractionType::E1, &fam(target), CurveCentre{pa, deg}, std::nullopt};
}

}  // namespace

TEST_CASE("contraction type names round-trip") {
  for (auto t : {ContractionType::E1, ContractionType::E2, ContractionType::E3E4,
                 ContractionType::CB, ContractionType::dP})
    CHECK(parse_contraction_type(to_string(t)) == t);
  CHECK_FALSE(parse_contraction_type("E5").has_value());
  CHECK(parse_bounds_mode("relaxed") == BoundsMode::relaxed);
  CHECK_FALSE(parse_bounds_mode("loose").has_value());
}

TEST_CASE("left quadruples of table anchors") {
  // X_22 (0,8): blow-up of a rational octic on X_22.
  CHECK(left_quadruple(e1("X_22", 0, 8)) == IntersectionQuadruple{4, 10, -2, -6});
  // X_16 (1,6): dP side of T1 row 12.
  CHECK(left_quadruple(e1("X_16", 1, 6)) == IntersectionQuadruple{4, 6, 0, -6});
  CHECK(left_quadruple({ContractionType::E3E4, &fam("X_{2,3}"), CurveCentre{0, 0}, {}}) ==
        IntersectionQuadruple{4, 2, -2, 2});
  CHECK(left_quadruple({ContractionType::E2, &fam("X_12"), std::nullopt, {}}) ==
        IntersectionQuadruple{4, 4, -2, 1});
}

TEST_CASE("left quadruple agrees with the blow-up oracle") {
  for (const auto& f : all_families())
    for (std::int64_t pa = 0; pa <= 20; ++pa)
      for (std::int64_t deg = 1; deg * f.fano_index <= f.a_cubed; ++deg) {
        const auto o = oracle::blow_up_curve(f.a_cubed, f.fano_index * deg, pa);
        const ContractionSpec s{ContractionType::E1, &f, CurveCentre{pa, deg}, {}};
        if (o.a < 4 || o.a % 2 != 0 || o.b <= 1) {
          CHECK_THROWS_AS(left_quadruple(s), InvalidMidpoint);
        } else {
          CHECK(left_quadruple(s) == IntersectionQuadruple{o.a, o.b, o.c, o.d});
        }
      }
}

TEST_CASE("invalid midpoints are rejected") {
  // Odd A^3: V_1 (0,1) would give 8 - 2*2 - 2 = 2 < 4.
  CHECK_THROWS_AS(left_quadruple(e1("V_1", 0, 1)), InvalidMidpoint);
  CHECK_THROWS_AS(left_quadruple({ContractionType::E2, &fam("X_4"), std::nullopt, {}}),
                  InvalidMidpoint);
  CHECK_THROWS_AS(left_quadruple({ContractionType::CB, nullptr, std::nullopt, 5}),
                  InvalidMidpoint);
  CHECK_THROWS_AS(left_quadruple({ContractionType::E1, &fam("X_22"), std::nullopt, {}}),
                  InvalidMidpoint);
}

TEST_CASE("relaxed left centres match the brute-force scan") {
  for (std::int64_t a = 4; a <= 22; a += 2)
    for (const auto& f : all_families()) {
      std::set<oracle::Centre> got;
      for (const auto& c : enumerate_left_centres(a, f, BoundsMode::relaxed))
        got.insert({c.pa, c.deg_h});
      CHECK(got == oracle::brute_force_left_centres(a, f));
    }
}

TEST_CASE("sharper bounds only bite at midpoint degree 4") {
  for (std::int64_t a = 6; a <= 22; a += 2)
    for (const auto& f : all_families()) {
      const auto paper = enumerate_left_centres(a, f, BoundsMode::paper);
      const auto relaxed = enumerate_left_centres(a, f, BoundsMode::relaxed);
      CHECK(paper == relaxed);
    }
}

TEST_CASE("degree-4 centres on Q have genus 3k with k <= 8") {
  std::vector<std::int64_t> genera;
  for (const auto& c : enumerate_left_centres(4, fam("Q"), BoundsMode::paper)) {
    CHECK(c.pa % 3 == 0);
    genera.push_back(c.pa);
  }
  CHECK(genera == std::vector<std::int64_t>{0, 3, 6, 9, 12, 15, 18, 21, 24});
  // (12,12) on Q: the E3-E1 link of T1 row 37 lands here.
  const auto q = enumerate_left_centres(4, fam("Q"), BoundsMode::paper);
  CHECK(std::find(q.begin(), q.end(), CurveCentre{12, 12}) != q.end());
}

TEST_CASE("degree-4 centres obey the per-index genus bounds") {
  for (const auto& f : all_families())
    for (const auto& c : enumerate_left_centres(4, f, BoundsMode::paper)) {
      switch (f.fano_index) {
        case 1: CHECK(c.pa <= *f.genus - 1); break;
        case 2: CHECK(c.pa % 2 == 1); CHECK(c.pa <= 2 * (2 * f.h_cubed - 1) + 1); break;
        case 3: CHECK(c.pa % 3 == 0); break;
        case 4: CHECK((c.pa + 1) % 4 == 0); CHECK(c.pa <= 27); break;
      }
    }
}

TEST_CASE("enumerate_left_centres rejects bad midpoint degrees") {
  CHECK_THROWS_AS(enumerate_left_centres(2, fam("Q"), BoundsMode::paper), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_left_centres(5, fam("Q"), BoundsMode::paper), std::invalid_argument);
}

TEST_CASE("spec strings") {
  CHECK(e1("X_22", 0, 8).data_string() == "(0,8)");
  CHECK(ContractionSpec{ContractionType::CB, nullptr, {}, 7}.data_string() == "delta=7");
  CHECK(ContractionSpec{ContractionType::CB, nullptr, {}, 7}.target_name() == "P2");
  CHECK(ContractionSpec{ContractionType::dP, nullptr, {}, 6}.data_string() == "k=6");
  CHECK(ContractionSpec{ContractionType::dP, nullptr, {}, 6}.target_name() == "P1");
  CHECK(ContractionSpec{ContractionType::E2, &fam("X_12"), {}, {}}.data_string() == "-");
}
