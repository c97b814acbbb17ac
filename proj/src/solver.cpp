#include "sarkisov/solver.hpp"

#include <numeric>

namespace sarkisov {
namespace {

std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// D^3 of xA - yE on the model with intersection numbers q.
std::int64_t cube(const IntersectionQuadruple& q, std::int64_t x, std::int64_t y) {
  const DivisorClass cls{x, y};
  return triple_product(q, cls, cls, cls);
}

// Value of the binary form a x^2 - 2b xy + c y^2 = A.(xA - yE)^2.
std::int64_t quadratic_form(const IntersectionQuadruple& q, std::int64_t x, std::int64_t y) {
  return triple_product(q, DivisorClass::anticanonical(), {x, y}, {x, y});
}

// Solves c3 * e = rhs for a positive integer e.
std::optional<std::int64_t> positive_quotient(std::int64_t rhs, std::int64_t c3) {
  if (c3 == 0 || rhs % c3 != 0) return std::nullopt;
  const std::int64_t e = rhs / c3;
  if (e < 1) return std::nullopt;
  return e;
}

}  // namespace

PointInvariants point_invariants(PointKind kind) {
  // E2: D = P^2 with normal bundle O(-1), A = alpha^*A' - 2D.
  // E3/E4: D a quadric with O_D(D) = O(-1), A = alpha^*A' - D.
  if (kind == PointKind::E2) return {4, -2, 1, 8};
  return {2, -2, 2, 2};
}

std::vector<RightSolution> solve_right_divisorial_e1(const IntersectionQuadruple& q) {
  std::vector<RightSolution> out;
  const auto [a, b, c, d] = q;
  for (std::int64_t y = 1; y <= 4; ++y) {
    const std::int64_t y3 = y * y * y;
    for (const FanoFamily& family : all_families()) {
      if (family.fano_index != y) continue;
      // (A + D)^2 . A = A'^3 with A + D = (x + 1)A - yE.
      const auto roots = integer_quadratic_roots(
          a, checked_sub(checked_mul(2, a), checked_mul(2 * y, b)),
          checked_sub(checked_add(checked_sub(a, checked_mul(2 * y, b)), checked_mul(y * y, c)),
                      family.a_cubed));
      for (std::int64_t x : roots) {
        if (x < 1 || floor_mod(x + 1, y) != 0) continue;
        const std::int64_t n2 = checked_sub(checked_mul(x, a), checked_mul(y, b));
        const std::int64_t n1 = quadratic_form(q, x, y);
        if (n2 < 2 || n1 % 2 != 0 || n1 < -2) continue;
        const std::int64_t along_curve = checked_add(n2, n1);  // (A + D).D.A = y deg C
        if (along_curve % y != 0) continue;
        const std::int64_t deg = along_curve / y;
        if (deg < 0 || checked_mul(y, deg) > family.a_cubed) continue;
        const std::int64_t n0 = checked_sub(-n2, checked_mul(2, n1));
        // D^3 after the flop = D^3 before + y^3 e.
        const auto e = positive_quotient(checked_sub(n0, cube(q, x, y)), y3);
        if (!e) continue;
        RightSolution s;
        const CurveCentre centre{(n1 + 2) / 2, deg};
        s.spec.type = (centre == CurveCentre{0, 0}) ? ContractionType::E3E4 : ContractionType::E1;
        s.spec.family = &family;
        s.spec.centre = centre;
        s.coordinates = {x, y};
        s.e = *e;
        s.derived = RightDerived{n2, n1, n0, family.a_cubed};
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

std::vector<RightSolution> solve_right_point(const IntersectionQuadruple& q, PointKind kind) {
  std::vector<RightSolution> out;
  const auto [n2, n1, n0, gain] = point_invariants(kind);
  const auto [a, b, c, d] = q;
  // Eliminating x = (n2 + y b) / a from a x^2 - 2bxy + c y^2 = n1 leaves
  // (ac - b^2) y^2 = a n1 - n2^2.
  const std::int64_t lead = checked_sub(checked_mul(a, c), checked_mul(b, b));
  const std::int64_t rhs = checked_sub(checked_mul(a, n1), checked_mul(n2, n2));
  std::vector<std::int64_t> ys;
  if (lead == 0) return out;  // rhs < 0 always, so no y solves 0 = rhs
  for (std::int64_t y : integer_quadratic_roots(lead, 0, -rhs))
    if (y >= 1) ys.push_back(y);
  const auto targets = lookup_by_degree(checked_add(a, gain));
  for (std::int64_t y : ys) {
    const std::int64_t num = checked_add(n2, checked_mul(y, b));
    if (num % a != 0) continue;
    const std::int64_t x = num / a;
    if (x < 1) continue;
    if (quadratic_form(q, x, y) != n1) continue;
    const auto e = positive_quotient(checked_sub(n0, cube(q, x, y)), y * y * y);
    if (!e) continue;
    for (const FanoFamily* family : targets) {
      RightSolution s;
      s.spec.type = kind == PointKind::E2 ? ContractionType::E2 : ContractionType::E3E4;
      s.spec.family = family;
      if (kind == PointKind::E3E4) s.spec.centre = CurveCentre{0, 0};
      s.coordinates = {x, y};
      s.e = *e;
      s.derived = RightDerived{n2, n1, n0, family->a_cubed};
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<RightSolution> solve_right_conic_bundle(const IntersectionQuadruple& q) {
  std::vector<RightSolution> out;
  const auto [a, b, c, d] = q;
  for (std::int64_t y = 1; y <= 2; ++y) {
    // L^2.A = 2
    for (std::int64_t x : integer_quadratic_roots(a, checked_mul(-2 * y, b),
                                                  checked_sub(checked_mul(y * y, c), 2))) {
      if (x < 1 || std::gcd(x, y) != 1) continue;
      const std::int64_t delta =
          kMaxDiscriminantDegree - checked_sub(checked_mul(x, a), checked_mul(y, b));
      if (delta < 0 || delta > kMaxDiscriminantDegree) continue;
      // L^3 = 0 after the flop.
      const auto e = positive_quotient(-cube(q, x, y), y * y * y);
      if (!e) continue;
      RightSolution s;
      s.spec.type = ContractionType::CB;
      s.spec.aux = delta;
      s.coordinates = {x, y};
      s.e = *e;
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<RightSolution> solve_right_del_pezzo(const IntersectionQuadruple& q) {
  std::vector<RightSolution> out;
  const auto [a, b, c, d] = q;
  for (std::int64_t y = 1; y <= 3; ++y) {
    // L^2.A = 0
    for (std::int64_t x : integer_quadratic_roots(a, checked_mul(-2 * y, b), checked_mul(y * y, c))) {
      if (x < 1 || std::gcd(x, y) != 1) continue;
      const std::int64_t degree = checked_sub(checked_mul(x, a), checked_mul(y, b));
      if (degree < 1 || degree > kMaxDelPezzoDegree) continue;
      // L^2.E~ = 0 after the flop: x^2 b - 2xy c + y^2 (d - e) = 0.
      const std::int64_t rhs = triple_product(q, {x, y}, {x, y}, DivisorClass::divisor());
      const auto e = positive_quotient(rhs, y * y);
      if (!e) continue;
      RightSolution s;
      s.spec.type = ContractionType::dP;
      s.spec.aux = degree;
      s.coordinates = {x, y};
      s.e = *e;
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<RightSolution> solve_right_all(const IntersectionQuadruple& q) {
  std::vector<RightSolution> out = solve_right_divisorial_e1(q);
  auto merge = [&out](std::vector<RightSolution> more) {
    for (auto& s : more) {
      bool duplicate = false;
      for (const auto& t : out)
        duplicate = duplicate || (same_spec(s.spec, t.spec) && s.coordinates == t.coordinates);
      if (!duplicate) out.push_back(std::move(s));
    }
  };
  merge(solve_right_point(q, PointKind::E2));
  merge(solve_right_point(q, PointKind::E3E4));
  merge(solve_right_conic_bundle(q));
  merge(solve_right_del_pezzo(q));
  return out;
}

}  // namespace sarkisov
