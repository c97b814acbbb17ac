// Independent oracles for the tests. Nothing here calls the solver, the
// lattice engine or the quadruple builder; every quantity is re-derived from
// the intersection polynomials by plain integer scanning.
#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "sarkisov/catalog.hpp"
#include "sarkisov/solver.hpp"

namespace oracle {

using i64 = std::int64_t;

struct Quad {
  i64 a, b, c, d;
};

// (u1 A - v1 E)(u2 A - v2 E)(u3 A - v3 E), expanded by hand.
inline i64 product(const Quad& q, i64 u1, i64 v1, i64 u2, i64 v2, i64 u3, i64 v3) {
  const i64 t0 = u1 * u2 * u3;
  const i64 t1 = u1 * u2 * v3 + u1 * v2 * u3 + v1 * u2 * u3;
  const i64 t2 = u1 * v2 * v3 + v1 * u2 * v3 + v1 * v2 * u3;
  const i64 t3 = v1 * v2 * v3;
  return t0 * q.a - t1 * q.b + t2 * q.c - t3 * q.d;
}

inline i64 cube(const Quad& q, i64 u, i64 v) { return product(q, u, v, u, v, u, v); }

// Blow-up of a curve C of arithmetic genus pa and A'-degree ad on a 3-fold
// of anticanonical degree big_a, with A = f^*A' - E. Uses f^*A'^2.E = 0,
// f^*A'.E^2 = -ad and E^3 = -deg N_C = -(ad + 2pa - 2).
inline Quad blow_up_curve(i64 big_a, i64 ad, i64 pa) {
  const i64 normal = ad + 2 * pa - 2;
  const i64 fa_e2 = -ad;
  const i64 e3 = -normal;
  return {big_a + 3 * fa_e2 - e3,  // (f^*A' - E)^3
          -2 * fa_e2 + e3,         // (f^*A' - E)^2 E
          fa_e2 - e3,              // (f^*A' - E) E^2
          e3};
}

struct Solution {
  int kind;  // 0 E1, 1 E2, 2 E3E4, 3 CB, 4 dP
  int family_index;
  i64 family_degree;
  i64 p, q;  // centre (pa, deg) for E1, (0,0) for E3E4, aux for CB/dP in p
  i64 x, y, e;
  friend auto operator<=>(const Solution&, const Solution&) = default;
};

inline int kind_of(sarkisov::ContractionType t) { return static_cast<int>(t); }

inline Solution from_solver(const sarkisov::RightSolution& s) {
  Solution o{kind_of(s.spec.type), 0, 0, 0, 0, s.coordinates.x, s.coordinates.y, s.e};
  if (s.spec.family) {
    o.family_index = s.spec.family->fano_index;
    o.family_degree = s.spec.family->a_cubed;
  }
  if (s.spec.centre) {
    o.p = s.spec.centre->pa;
    o.q = s.spec.centre->deg_h;
  }
  if (s.spec.aux) o.p = *s.spec.aux;
  return o;
}

// Largest A^2.D any right side can have: a divisorial contraction onto a
// family of degree <= 64 has A^2.D = A'.C + 2 - 2pa <= 66.
inline constexpr i64 kMaxRightDegree = 66;

// Every right-hand solution for the pre-flop quadruple q, by scanning a box of
// (x, y) that provably contains all of them.
inline std::set<Solution> brute_force_right(const Quad& q) {
  // Divisorial and fibration sides all have y <= 4. Point contractions have
  // A.D^2 = -2 and A^2.D <= 4, so (b^2 - ac) y^2 = (A^2.D)^2 - a A.D^2 <= 16 + 2a;
  // a non-negative discriminant leaves no such y at all.
  const i64 disc = q.b * q.b - q.a * q.c;
  i64 y_max = 4;
  while (disc > 0 && disc * (y_max + 1) * (y_max + 1) <= 16 + 2 * q.a) ++y_max;
  const i64 x_max = (kMaxRightDegree + y_max * (q.b < 0 ? -q.b : q.b)) / q.a + 1;

  std::set<Solution> out;
  for (i64 y = 1; y <= y_max; ++y) {
    for (i64 x = 1; x <= x_max; ++x) {
      const i64 n2 = product(q, 1, 0, 1, 0, x, y);  // A^2.D
      const i64 n1 = product(q, 1, 0, x, y, x, y);  // A.D^2
      const i64 d3 = cube(q, x, y);                 // D^3 before the flop
      auto flopped = [&](i64 e) { return Quad{q.a, q.b, q.c, q.d - e}; };

      // E1 (and its (0,0) degeneration) onto a family of index y.
      if (y <= 4 && (x + 1) % y == 0 && n2 >= 2 && n1 >= -2 && n1 % 2 == 0 &&
          (n2 + n1) % y == 0) {
        const i64 deg = (n2 + n1) / y;
        const i64 pa = (n1 + 2) / 2;
        const i64 want_d3 = -n2 - 2 * n1;  // (A + D)^2 D = 0
        const i64 y3 = y * y * y;
        if ((want_d3 - d3) % y3 == 0 && (want_d3 - d3) / y3 >= 1 && deg >= 0) {
          const i64 e = (want_d3 - d3) / y3;
          const i64 target = cube(flopped(e), x + 1, y);  // (A + D)^3
          for (const auto& f : sarkisov::all_families()) {
            if (f.fano_index != y || f.a_cubed != target || y * deg > f.a_cubed) continue;
            const bool point = pa == 0 && deg == 0;
            out.insert({point ? 2 : 0, f.fano_index, f.a_cubed, pa, deg, x, y, e});
          }
        }
      }

      // Contractions to points: A = alpha^*A' - mD.
      for (const auto& [kind, m2, m1, m0, mult] :
           {std::tuple{1, 4, -2, 1, 2}, std::tuple{2, 2, -2, 2, 1}}) {
        if (n2 != m2 || n1 != m1) continue;
        const i64 y3 = y * y * y;
        if ((m0 - d3) % y3 != 0 || (m0 - d3) / y3 < 1) continue;
        const i64 e = (m0 - d3) / y3;
        const Quad post = flopped(e);
        // A + mD = (1 + m x) A - m y E on the flopped model.
        const i64 target = cube(post, 1 + mult * x, mult * y);
        for (const auto& f : sarkisov::all_families())
          if (f.a_cubed == target)
            out.insert({kind, f.fano_index, f.a_cubed, 0, 0, x, y, e});
      }

      // Conic bundle over P2: L^2.A = 2, L^3 = 0 after the flop.
      if (y <= 2 && std::gcd(x, y) == 1 && n1 == 2 && n2 <= 12 && n2 >= 0 &&
          (-d3) % (y * y * y) == 0 && -d3 / (y * y * y) >= 1) {
        const i64 e = -d3 / (y * y * y);
        if (cube(flopped(e), x, y) == 0) out.insert({3, 0, 0, 12 - n2, 0, x, y, e});
      }

      // del Pezzo fibration over P1: L^2.A = 0, L^2.E = 0 after the flop.
      if (y <= 3 && std::gcd(x, y) == 1 && n1 == 0 && n2 >= 1 && n2 <= 9) {
        const i64 l2e_pre = product(q, x, y, x, y, 0, -1);
        if (l2e_pre % (y * y) == 0 && l2e_pre / (y * y) >= 1) {
          const i64 e = l2e_pre / (y * y);
          if (product(flopped(e), x, y, x, y, 0, -1) == 0) out.insert({4, 0, 0, n2, 0, x, y, e});
        }
      }
    }
  }
  return out;
}

// Left centres (pa, deg) on `f` whose blow-up has anticanonical degree
// `midpoint_a`, scanning pa and deg over a generous box.
struct Centre {
  i64 pa, deg;
  friend auto operator<=>(const Centre&, const Centre&) = default;
};

inline std::set<Centre> brute_force_left_centres(i64 midpoint_a, const sarkisov::FanoFamily& f) {
  std::set<Centre> out;
  for (i64 pa = 0; pa <= 100; ++pa)
    for (i64 deg = 1; deg <= 100; ++deg) {
      const i64 ad = f.fano_index * deg;
      if (ad > f.a_cubed) continue;
      const Quad q = blow_up_curve(f.a_cubed, ad, pa);
      if (q.a == midpoint_a && q.b >= 2) out.insert({pa, deg});
    }
  return out;
}

}  // namespace oracle
