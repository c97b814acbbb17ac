#include <doctest.h>

#include <json.hpp>

#include "sarkisov/annotator.hpp"
#include "sarkisov/render.hpp"

using namespace sarkisov;

TEST_CASE("format_class") {
  CHECK(format_class({3, 1}) == "3A - E~");
  CHECK(format_class({5, 3}) == "5A - 3E~");
  CHECK(format_class({1, 0}) == "A");
  CHECK(format_class({0, -1}) == "E~");
  CHECK(format_class({0, 2}) == "-2E~");
  CHECK(format_class({-1, -2}) == "-A + 2E~");
  CHECK(format_class({0, 0}) == "0");
}

TEST_CASE("output format names") {
  for (auto f : {OutputFormat::text_table, OutputFormat::json, OutputFormat::csv})
    CHECK(parse_output_format(to_string(f)) == f);
  CHECK_FALSE(parse_output_format("xml").has_value());
}

TEST_CASE("json keeps a fixed key order and one object per link") {
  std::vector<NumericalLink> links;
  for (const auto& l : enumerate_links(3, BoundsMode::paper))
    links.push_back(annotate(l, default_fact_base()));
  const auto j = nlohmann::ordered_json::parse(render_links(links, OutputFormat::json));
  REQUIRE(j.size() == links.size());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j[0].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"row", "genus", "types", "left", "right", "e", "x", "y",
                                         "verdict", "flags", "note"});
  CHECK(j[0]["row"] == 1);
  CHECK(j.back()["row"] == links.size());
}

TEST_CASE("csv quotes centres") {
  const auto links = enumerate_links(10, BoundsMode::paper);
  const std::string csv = render_links(links, OutputFormat::csv);
  CHECK(csv.find("\"(0,1)\"") != std::string::npos);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "row,genus,types,left_target,left_data,right_target,right_data,e,x,y,R,flags");
}

TEST_CASE("text table has a header and one line per link") {
  const auto links = enumerate_links(9, BoundsMode::paper);
  const std::string text = render_links(links, OutputFormat::text_table);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(links.size() + 1));
  CHECK(text.rfind("row", 0) == 0);
}

TEST_CASE("catalog renders all families") {
  const auto j = nlohmann::json::parse(render_catalog(OutputFormat::json));
  CHECK(j.size() == 17);
  const std::string text = render_catalog(OutputFormat::text_table);
  CHECK(text.find("X_{2,2,2}") != std::string::npos);
}
