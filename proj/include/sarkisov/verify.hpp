#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sarkisov/link.hpp"

namespace sarkisov {

/// One equation of a link's Diophantine system with both sides evaluated.
struct IdentityCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;

  bool holds() const { return lhs == rhs; }
};

/// The link's Diophantine system written out as polynomials in the left data
/// (A_Z^3, A_{Z_1}.Gamma, p_a(Gamma)), the flop correction and the right
/// coordinates. This deliberately bypasses triple_product.
std::vector<IdentityCheck> link_system(const NumericalLink& link);

/// True iff every equation of link_system holds and e >= 1.
bool verify_link(const NumericalLink& link);

}  // namespace sarkisov
