#pragma once

#include <cstdint>
#include <vector>

namespace sarkisov {

/// Intersection numbers (A^3, A^2.E, A.E^2, E^3) on a rank-2 small
/// modification, A the anticanonical class and E a second divisor.
struct IntersectionQuadruple {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  friend bool operator==(const IntersectionQuadruple&, const IntersectionQuadruple&) = default;
};

/// The class x*A - y*E.
struct DivisorClass {
  std::int64_t x = 0;
  std::int64_t y = 0;

  static constexpr DivisorClass anticanonical() { return {1, 0}; }
  /// The class E itself, i.e. 0*A - (-1)*E.
  static constexpr DivisorClass divisor() { return {0, -1}; }

  friend DivisorClass operator+(DivisorClass l, DivisorClass r) { return {l.x + r.x, l.y + r.y}; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

// Checked 64-bit arithmetic; overflow throws std::overflow_error.
std::int64_t checked_add(std::int64_t lhs, std::int64_t rhs);
std::int64_t checked_sub(std::int64_t lhs, std::int64_t rhs);
std::int64_t checked_mul(std::int64_t lhs, std::int64_t rhs);

/// Floor of the square root of n >= 0, computed in integers.
std::int64_t isqrt(std::int64_t n);

/// Trilinear intersection d1.d2.d3 expanded over the basis values of `q`.
std::int64_t triple_product(const IntersectionQuadruple& q, DivisorClass d1,
                            DivisorClass d2, DivisorClass d3);

/// The quadruple after flopping: E^3 drops by e >= 1, everything else fixed.
IntersectionQuadruple flop(const IntersectionQuadruple& q, std::int64_t e);

/// All integer t with p t^2 + q t + r = 0, ascending. Degenerates to the
/// linear case when p == 0. Throws std::invalid_argument on the zero polynomial.
std::vector<std::int64_t> integer_quadratic_roots(std::int64_t p, std::int64_t q,
                                                  std::int64_t r);

}  // namespace sarkisov
