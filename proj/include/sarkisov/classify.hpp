#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sarkisov/contractions.hpp"

namespace sarkisov {

/// A rational scroll over a curve of the given genus and degree, and the
/// families it arises on through an E1 side of some link.
struct ScrollCentre {
  CurveCentre centre;
  std::vector<std::string> families;
};

/// Case list for a non-factorial midpoint of genus `genus` (3..10):
///  1. factorial;  2. contains a plane;  3. midpoint of a link between two
///  del Pezzo fibrations;  4. conic bundle structure;  5. contains a scroll.
struct Classification {
  int genus = 0;
  bool plane_case = false;
  /// Degree of the del Pezzo surfaces in case 3; empty when the case is absent.
  std::optional<int> del_pezzo_degree;
  std::vector<ScrollCentre> scrolls;
  /// Largest anticanonical degree of a class group generator over all links:
  /// per link the smaller of the two divisorial (or fibre-pullback) degrees.
  std::int64_t max_generator_degree = 0;
  std::size_t link_count = 0;
};

/// Throws std::invalid_argument for genus outside [3, 10].
Classification classify(int genus, BoundsMode mode = BoundsMode::paper);

}  // namespace sarkisov
