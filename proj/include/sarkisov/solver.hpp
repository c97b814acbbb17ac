#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sarkisov/contractions.hpp"
#include "sarkisov/lattice.hpp"

namespace sarkisov {

/// Intersection numbers of the right-side exceptional divisor D on the flopped
/// model, and the anticanonical degree of the model it contracts to.
struct RightDerived {
  std::int64_t n2 = 0;  // A^2.D
  std::int64_t n1 = 0;  // A.D^2
  std::int64_t n0 = 0;  // D^3
  std::int64_t target_degree = 0;

  friend bool operator==(const RightDerived&, const RightDerived&) = default;
};

struct RightSolution {
  ContractionSpec spec;
  DivisorClass coordinates;
  std::int64_t e = 0;
  std::optional<RightDerived> derived;  // divisorial kinds only
};

enum class PointKind { E2, E3E4 };

/// Right-side E1 contractions D = xA - yE~ onto index-y families. (0,0)
/// centres come back tagged E3E4.
std::vector<RightSolution> solve_right_divisorial_e1(const IntersectionQuadruple& q);

/// Right-side contractions of D to a point. Targets are all families of the
/// forced degree, whatever their index.
std::vector<RightSolution> solve_right_point(const IntersectionQuadruple& q, PointKind kind);

std::vector<RightSolution> solve_right_conic_bundle(const IntersectionQuadruple& q);

std::vector<RightSolution> solve_right_del_pezzo(const IntersectionQuadruple& q);

/// Union of the four solvers, duplicates (same kind, target and class) merged.
std::vector<RightSolution> solve_right_all(const IntersectionQuadruple& q);

/// Fixed intersection numbers (A^2.D, A.D^2, D^3) and degree jump of a point
/// contraction.
struct PointInvariants {
  std::int64_t n2, n1, n0, degree_gain;
};
PointInvariants point_invariants(PointKind kind);

inline constexpr std::int64_t kMaxDelPezzoDegree = 9;
inline constexpr std::int64_t kMaxDiscriminantDegree = 12;

}  // namespace sarkisov
