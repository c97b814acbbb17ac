#include "sarkisov/link.hpp"

namespace sarkisov {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::plus: return "+";
    case Verdict::question: return "?";
    case Verdict::blank: return "";
  }
  return "?";
}

std::string_view to_string(Flag f) {
  switch (f) {
    case Flag::excluded: return "excluded";
    case Flag::known_construction: return "known";
    case Flag::unlisted: return "unlisted";
    case Flag::dp_degree_cap: return "dp-degree-cap";
  }
  return "?";
}

std::string NumericalLink::types() const {
  return std::string(to_string(left.type)) + "-" + std::string(to_string(right.type));
}

std::string NumericalLink::key() const {
  return "g=" + std::to_string(genus) + " " + std::string(to_string(left.type)) + " " +
         left.target_name() + " " + left.data_string() + " -> " +
         std::string(to_string(right.type)) + " " + right.target_name() + " " +
         right.data_string();
}

bool same_numerics(const NumericalLink& lhs, const NumericalLink& rhs) {
  return lhs.genus == rhs.genus && same_spec(lhs.left, rhs.left) &&
         same_spec(lhs.right, rhs.right) && lhs.e == rhs.e &&
         lhs.coordinates == rhs.coordinates;
}

}  // namespace sarkisov
