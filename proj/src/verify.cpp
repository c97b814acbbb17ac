#include "sarkisov/verify.hpp"

#include "sarkisov/lattice.hpp"
#include "sarkisov/solver.hpp"

namespace sarkisov {
namespace {

// Checked integer so the transcribed polynomials read like the originals.
struct Z {
  std::int64_t v;
  Z(std::int64_t value) : v(value) {}  // NOLINT(google-explicit-constructor)
  friend Z operator+(Z l, Z r) { return checked_add(l.v, r.v); }
  friend Z operator-(Z l, Z r) { return checked_sub(l.v, r.v); }
  friend Z operator*(Z l, Z r) { return checked_mul(l.v, r.v); }
  Z operator-() const { return checked_sub(0, v); }
};

// Left-side data entering every system: A_Z^3, A_Z^2.E, A_Z.E^2 and -E^3,
// expressed through the centre of the left contraction.
struct LeftData {
  Z a = 0, b = 0, c = 0, minus_e3 = 0;
  Z target_degree = 0;
  Z expected_a = 0;  // what the blow-up relations give for A_Z^3
};

LeftData left_data(const NumericalLink& link) {
  const ContractionSpec& left = link.left;
  LeftData out;
  out.a = link.midpoint_degree();
  if (left.family == nullptr) return out;
  const Z big_a1 = left.family->a_cubed;
  out.target_degree = big_a1;
  if (left.type == ContractionType::E2) {
    out.b = 4;
    out.c = -2;
    out.minus_e3 = -1;
    out.expected_a = big_a1 - 8;
    return out;
  }
  // E1, and E3/E4 as the degenerate centre (0, 0).
  const CurveCentre centre = left.centre.value_or(CurveCentre{0, 0});
  const Z a_gamma = Z(left.family->fano_index) * centre.deg_h;
  const Z pa = centre.pa;
  out.b = a_gamma + 2 - Z(2) * pa;
  out.c = Z(2) * pa - 2;
  out.minus_e3 = a_gamma - 2 + Z(2) * pa;
  out.expected_a = big_a1 - Z(2) * a_gamma - 2 + Z(2) * pa;
  return out;
}

void push(std::vector<IdentityCheck>& out, std::string name, Z lhs, Z rhs) {
  out.push_back({std::move(name), lhs.v, rhs.v});
}

void divisorial_e1_system(const NumericalLink& link, const LeftData& l,
                          std::vector<IdentityCheck>& out) {
  const Z e = link.e;
  const Z x = link.coordinates.x;
  const Z y = link.coordinates.y;
  const FanoFamily* target = link.right.family;
  const CurveCentre centre = link.right.centre.value_or(CurveCentre{0, 0});
  push(out, "y = i(Z~_1)", y, target ? target->fano_index : 0);
  const bool k_integral = y.v != 0 && (x.v + 1) % y.v == 0;
  push(out, "x + 1 = yk", k_integral ? 1 : 0, 1);
  if (!k_integral) return;
  const Z k = (x.v + 1) / y.v;
  push(out, "(A+D)^3 = A'^3", y * y * (l.a * k * k - Z(2) * l.b * k + l.c),
       target ? target->a_cubed : 0);
  push(out, "(A+D)^2 D = 0",
       l.a * k * k * (y * k - 1) + l.b * (Z(2) * k - Z(3) * k * k * y) +
           l.c * (Z(3) * k * y - 1) + (l.minus_e3 + e) * y,
       0);
  push(out, "(A+D)DA = y deg C",
       l.a * k * (y * k - 1) - l.b * (Z(2) * y * k - 1) + l.c * y, centre.deg_h);
  push(out, "AD^2 = 2p_a(C) - 2",
       l.a * (y * k - 1) * (y * k - 1) - Z(2) * l.b * y * (y * k - 1) + l.c * y * y,
       Z(2) * centre.pa - 2);
}

void point_system(const NumericalLink& link, const LeftData& l, PointKind kind,
                  std::vector<IdentityCheck>& out) {
  const auto inv = point_invariants(kind);
  const Z e = link.e;
  const Z x = link.coordinates.x;
  const Z y = link.coordinates.y;
  push(out, "A^2 D", l.a * x - l.b * y, inv.n2);
  push(out, "A D^2", l.a * x * x - Z(2) * l.b * x * y + l.c * y * y, inv.n1);
  push(out, "D^3",
       l.a * x * x * x - Z(3) * l.b * x * x * y + Z(3) * l.c * x * y * y + (l.minus_e3 + e) * y * y * y,
       inv.n0);
  push(out, "A'^3", l.a + inv.degree_gain, link.right.family ? link.right.family->a_cubed : 0);
}

void conic_bundle_system(const NumericalLink& link, const LeftData& l,
                         std::vector<IdentityCheck>& out) {
  const Z e = link.e;
  const Z x = link.coordinates.x;
  const Z y = link.coordinates.y;
  push(out, "L^3 = 0",
       l.a * x * x * x - Z(3) * l.b * x * x * y + Z(3) * l.c * x * y * y + (l.minus_e3 + e) * y * y * y,
       0);
  push(out, "L^2 A = 2", l.a * x * x - Z(2) * l.b * x * y + l.c * y * y, 2);
  push(out, "L A^2 = 12 - deg Delta", l.a * x - l.b * y, Z(12) - link.right.aux.value_or(-1));
}

void del_pezzo_system(const NumericalLink& link, const LeftData& l,
                      std::vector<IdentityCheck>& out) {
  const Z e = link.e;
  const Z x = link.coordinates.x;
  const Z y = link.coordinates.y;
  push(out, "L^2 A = 0", l.a * x * x - Z(2) * l.b * x * y + l.c * y * y, 0);
  push(out, "L^2 E~ = 0", l.b * x * x - Z(2) * l.c * x * y - (l.minus_e3 + e) * y * y, 0);
  push(out, "L A^2 = d", l.a * x - l.b * y, link.right.aux.value_or(-1));
}

}  // namespace

std::vector<IdentityCheck> link_system(const NumericalLink& link) {
  std::vector<IdentityCheck> out;
  const LeftData l = left_data(link);
  push(out, "A_Z^3 = 2g - 2", l.expected_a, l.a);
  switch (link.right.type) {
    case ContractionType::E1:
      divisorial_e1_system(link, l, out);
      break;
    case ContractionType::E2:
      point_system(link, l, PointKind::E2, out);
      break;
    case ContractionType::E3E4:
      point_system(link, l, PointKind::E3E4, out);
      break;
    case ContractionType::CB:
      conic_bundle_system(link, l, out);
      break;
    case ContractionType::dP:
      del_pezzo_system(link, l, out);
      break;
  }
  return out;
}

bool verify_link(const NumericalLink& link) {
  if (link.e < 1 || link.left.family == nullptr) return false;
  for (const auto& check : link_system(link))
    if (!check.holds()) return false;
  return true;
}

}  // namespace sarkisov
