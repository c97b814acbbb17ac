#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "sarkisov/lattice.hpp"

using namespace sarkisov;

TEST_CASE("checked arithmetic throws on overflow") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_sub(-big, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big / 2, 3), std::overflow_error);
  CHECK(checked_mul(-7, 6) == -42);
}

TEST_CASE("isqrt is the floor square root") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(0, std::int64_t{1} << 62);
  for (std::int64_t n : {0, 1, 2, 3, 4, 15, 16, 17}) {
    const auto r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t n = dist(rng);
    const auto r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) > n / (r + 1));
  }
  CHECK_THROWS(isqrt(-1));
}

TEST_CASE("triple_product agrees with the hand expansion and is symmetric") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(-9, 9);
  for (int i = 0; i < 500; ++i) {
    const IntersectionQuadruple q{small(rng), small(rng), small(rng), small(rng)};
    const oracle::Quad o{q.a, q.b, q.c, q.d};
    const DivisorClass d1{small(rng), small(rng)}, d2{small(rng), small(rng)},
        d3{small(rng), small(rng)};
    const auto v = triple_product(q, d1, d2, d3);
    CHECK(v == oracle::product(o, d1.x, d1.y, d2.x, d2.y, d3.x, d3.y));
    CHECK(v == triple_product(q, d2, d3, d1));
    CHECK(v == triple_product(q, d3, d2, d1));
    // Additivity in the first slot.
    CHECK(triple_product(q, d1 + d2, d2, d3) == v + triple_product(q, d2, d2, d3));
  }
}

TEST_CASE("basis values") {
  const IntersectionQuadruple q{4, 6, 0, -6};
  const auto A = DivisorClass::anticanonical();
  const auto E = DivisorClass::divisor();
  CHECK(triple_product(q, A, A, A) == 4);
  CHECK(triple_product(q, A, A, E) == 6);
  CHECK(triple_product(q, A, E, E) == 0);
  CHECK(triple_product(q, E, E, E) == -6);
}

TEST_CASE("flop lowers E^3 only") {
  const IntersectionQuadruple q{4, 2, -2, 2};
  CHECK(flop(q, 8) == IntersectionQuadruple{4, 2, -2, -6});
  CHECK_THROWS_AS(flop(q, 0), std::invalid_argument);
  CHECK_THROWS_AS(flop(q, -3), std::invalid_argument);
}

TEST_CASE("integer_quadratic_roots recovers planted roots") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> root(-50, 50), lead(1, 9);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t r1 = root(rng), r2 = root(rng), k = lead(rng);
    const auto roots = integer_quadratic_roots(k, -k * (r1 + r2), k * r1 * r2);
    std::vector<std::int64_t> want{std::min(r1, r2), std::max(r1, r2)};
    if (r1 == r2) want.pop_back();
    CHECK(roots == want);
  }
}

TEST_CASE("integer_quadratic_roots edge cases") {
  CHECK(integer_quadratic_roots(1, 0, 1).empty());
  CHECK(integer_quadratic_roots(1, 0, -2).empty());
  CHECK(integer_quadratic_roots(2, 1, -1) == std::vector<std::int64_t>{-1});  // 1/2 dropped
  CHECK(integer_quadratic_roots(0, 3, -9) == std::vector<std::int64_t>{3});
  CHECK(integer_quadratic_roots(0, 2, -3).empty());
  CHECK(integer_quadratic_roots(0, 0, 5).empty());
  CHECK_THROWS_AS(integer_quadratic_roots(0, 0, 0), std::invalid_argument);
}
