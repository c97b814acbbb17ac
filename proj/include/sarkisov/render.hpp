#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sarkisov/classify.hpp"
#include "sarkisov/enumerator.hpp"
#include "sarkisov/link.hpp"
#include "sarkisov/reference.hpp"

namespace sarkisov {

enum class OutputFormat { text_table, json, csv };

std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> parse_output_format(std::string_view s);

/// Links in the given order, numbered from 1. JSON keys keep a fixed order.
std::string render_links(const std::vector<NumericalLink>& links, OutputFormat format);
std::string render_catalog(OutputFormat format);
std::string render_diff(const DiffReport& report);
std::string render_explanation(const Explanation& explanation);
std::string render_classification(const Classification& c);

/// "3A - E~", "A", "-2E~" ...
std::string format_class(DivisorClass c);

}  // namespace sarkisov
