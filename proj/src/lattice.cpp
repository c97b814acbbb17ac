#include "sarkisov/lattice.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace sarkisov {

std::int64_t checked_add(std::int64_t lhs, std::int64_t rhs) {
  std::int64_t out;
  if (__builtin_add_overflow(lhs, rhs, &out))
    throw std::overflow_error("integer overflow in " + std::to_string(lhs) + " + " +
                              std::to_string(rhs));
  return out;
}

std::int64_t checked_sub(std::int64_t lhs, std::int64_t rhs) {
  std::int64_t out;
  if (__builtin_sub_overflow(lhs, rhs, &out))
    throw std::overflow_error("integer overflow in " + std::to_string(lhs) + " - " +
                              std::to_string(rhs));
  return out;
}

std::int64_t checked_mul(std::int64_t lhs, std::int64_t rhs) {
  std::int64_t out;
  if (__builtin_mul_overflow(lhs, rhs, &out))
    throw std::overflow_error("integer overflow in " + std::to_string(lhs) + " * " +
                              std::to_string(rhs));
  return out;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt of negative number");
  // Newton iteration from above; converges to floor(sqrt(n)).
  if (n < 2) return n;
  std::int64_t x = n;
  std::int64_t y = x / 2 + x % 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

std::int64_t triple_product(const IntersectionQuadruple& q, DivisorClass d1,
                            DivisorClass d2, DivisorClass d3) {
  // Coefficients of prod_i (x_i + (-y_i) t); the t^k coefficient pairs with
  // the basis value carrying k copies of E.
  std::array<std::int64_t, 4> poly{1, 0, 0, 0};
  for (const DivisorClass& cls : {d1, d2, d3}) {
    std::array<std::int64_t, 4> next{};
    for (std::size_t k = 0; k < 4; ++k) {
      if (poly[k] == 0) continue;
      next[k] = checked_add(next[k], checked_mul(poly[k], cls.x));
      if (k + 1 < 4) next[k + 1] = checked_sub(next[k + 1], checked_mul(poly[k], cls.y));
    }
    poly = next;
  }
  const std::array<std::int64_t, 4> basis{q.a, q.b, q.c, q.d};
  std::int64_t total = 0;
  for (std::size_t k = 0; k < 4; ++k) total = checked_add(total, checked_mul(poly[k], basis[k]));
  return total;
}

IntersectionQuadruple flop(const IntersectionQuadruple& q, std::int64_t e) {
  if (e <= 0)
    throw std::invalid_argument("flop correction must be a positive integer, got " +
                                std::to_string(e));
  return {q.a, q.b, q.c, checked_sub(q.d, e)};
}

std::vector<std::int64_t> integer_quadratic_roots(std::int64_t p, std::int64_t q,
                                                  std::int64_t r) {
  if (p == 0 && q == 0 && r == 0)
    throw std::invalid_argument("integer_quadratic_roots: identically zero polynomial");
  std::vector<std::int64_t> roots;
  if (p == 0) {
    if (q != 0 && r % q == 0) roots.push_back(-r / q);
    return roots;
  }
  const std::int64_t disc = checked_sub(checked_mul(q, q), checked_mul(4, checked_mul(p, r)));
  if (disc < 0) return roots;
  const std::int64_t s = isqrt(disc);
  if (checked_mul(s, s) != disc) return roots;
  const std::int64_t denom = checked_mul(2, p);
  const std::int64_t neg_q = checked_sub(0, q);
  for (std::int64_t num : {checked_sub(neg_q, s), checked_add(neg_q, s)}) {
    if (num % denom == 0) roots.push_back(num / denom);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace sarkisov
