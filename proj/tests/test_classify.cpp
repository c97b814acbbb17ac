#include <doctest.h>

#include <algorithm>
#include <set>

#include "sarkisov/classify.hpp"
#include "sarkisov/reference.hpp"
#include "sarkisov/render.hpp"

using namespace sarkisov;

TEST_CASE("genus 3 case list") {
  const Classification c = classify(3);
  CHECK(c.plane_case);
  CHECK(c.del_pezzo_degree == 4);
  CHECK(c.max_generator_degree == 10);
  CHECK(c.link_count == 38);
}

TEST_CASE("genus-3 scroll list covers every E1 centre of table 1") {
  std::set<std::pair<std::string, CurveCentre>> have;
  for (const auto& s : classify(3).scrolls)
    for (const auto& f : s.families) have.insert({f, s.centre});
  for (const auto& row : load_reference()) {
    if (row.genus != 3) continue;
    for (const auto& sides : reference_sides(row))
      for (const auto* side : {&sides.left, &sides.right})
        if (side->type == ContractionType::E1)
          CHECK_MESSAGE(have.count({side->family->table_name(), *side->centre}) == 1,
                        row.label());
  }
}

TEST_CASE("del Pezzo pencil case by genus") {
  for (int g = 3; g <= 10; ++g) {
    const Classification c = classify(g);
    const bool expected = g <= 8 && g != 6;
    CHECK(c.del_pezzo_degree.has_value() == expected);
    if (expected) CHECK(*c.del_pezzo_degree == g + 1);
    CHECK(c.plane_case == (g <= 8));
  }
}

TEST_CASE("genus range") {
  CHECK_THROWS_AS(classify(2), std::invalid_argument);
  CHECK_THROWS_AS(classify(11), std::invalid_argument);
}

TEST_CASE("rendered summary") {
  const std::string g6 = render_classification(classify(6));
  CHECK(g6.find("del Pezzo fibrations") == std::string::npos);
  const std::string g3 = render_classification(classify(3));
  CHECK(g3.find("degree 4") != std::string::npos);
  CHECK(g3.find("max generator degree: 10") != std::string::npos);
  CHECK(g3.find("(12,12)") != std::string::npos);
}
