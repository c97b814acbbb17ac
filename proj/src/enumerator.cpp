#include "sarkisov/enumerator.hpp"

#include <algorithm>
#include <future>
#include <tuple>

#include "sarkisov/solver.hpp"

namespace sarkisov {
namespace {

int type_rank(ContractionType t) { return static_cast<int>(t); }

auto sort_key(const NumericalLink& l) {
  auto family_key = [](const ContractionSpec& s) {
    return s.family ? std::make_tuple(-s.family->a_cubed, s.family->fano_index)
                    : std::make_tuple(std::int64_t{0}, 0);
  };
  const CurveCentre none{-1, -1};
  return std::make_tuple(family_key(l.left), type_rank(l.left.type), l.left.centre.value_or(none),
                         type_rank(l.right.type), family_key(l.right),
                         l.right.centre.value_or(none), l.right.aux.value_or(-1), l.e,
                         l.coordinates.x, l.coordinates.y);
}

std::vector<NumericalLink> solve_left(int genus, const LeftSpec& left) {
  std::vector<NumericalLink> out;
  for (RightSolution& s : solve_right_all(left.quadruple)) {
    NumericalLink link;
    link.genus = genus;
    link.left = left.spec;
    link.right = std::move(s.spec);
    link.e = s.e;
    link.coordinates = s.coordinates;
    if (link.right.type == ContractionType::dP && link.right.aux == kMaxDelPezzoDegree)
      link.annotations.flags.insert(Flag::dp_degree_cap);
    out.push_back(std::move(link));
  }
  return out;
}

}  // namespace

std::vector<LeftSpec> enumerate_left_specs(int genus, BoundsMode mode) {
  const std::int64_t a = 2 * static_cast<std::int64_t>(genus) - 2;
  std::vector<LeftSpec> out;
  auto add = [&out](ContractionSpec spec) {
    const IntersectionQuadruple q = left_quadruple(spec);
    out.push_back({std::move(spec), q});
  };
  for (const FanoFamily& family : all_families()) {
    for (const CurveCentre& centre : enumerate_left_centres(a, family, mode))
      add({ContractionType::E1, &family, centre, std::nullopt});
    if (family.a_cubed == a + 8) add({ContractionType::E2, &family, std::nullopt, std::nullopt});
    if (family.a_cubed == a + 2)
      add({ContractionType::E3E4, &family, CurveCentre{0, 0}, std::nullopt});
  }
  return out;
}

bool canonical_less(const NumericalLink& lhs, const NumericalLink& rhs) {
  return sort_key(lhs) < sort_key(rhs);
}

std::vector<NumericalLink> enumerate_links(int genus, BoundsMode mode, unsigned jobs) {
  if (genus < kMinGenus || genus > kMaxGenus)
    throw std::invalid_argument("genus must lie in [3, 12], got " + std::to_string(genus));
  const std::vector<LeftSpec> lefts = enumerate_left_specs(genus, mode);

  std::vector<std::vector<NumericalLink>> parts(lefts.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < lefts.size(); ++i) parts[i] = solve_left(genus, lefts[i]);
  } else {
    // Strided partition; each worker writes only its own slots.
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < lefts.size(); i += jobs) parts[i] = solve_left(genus, lefts[i]);
      }));
    }
    for (auto& f : workers) f.get();
  }

  std::vector<NumericalLink> links;
  for (auto& part : parts)
    for (auto& link : part) links.push_back(std::move(link));
  std::sort(links.begin(), links.end(), canonical_less);
  return links;
}

bool mirror_applies(const NumericalLink& link) {
  return is_divisorial(link.right.type) && link.coordinates.y == 1 && link.right.family &&
         link.right.family->fano_index == 1 && is_divisorial(link.left.type) &&
         link.left.family && link.left.family->fano_index == 1;
}

NumericalLink mirrored(const NumericalLink& link) {
  NumericalLink m;
  m.genus = link.genus;
  m.left = link.right;
  m.right = link.left;
  m.e = link.e;
  return m;
}

std::vector<MirrorViolation> mirror_check(const std::vector<NumericalLink>& links) {
  std::vector<MirrorViolation> violations;
  for (const NumericalLink& link : links) {
    if (!mirror_applies(link)) continue;
    const NumericalLink want = mirrored(link);
    const bool found = std::any_of(links.begin(), links.end(), [&](const NumericalLink& other) {
      return other.genus == want.genus && same_spec(other.left, want.left) &&
             same_spec(other.right, want.right) && other.e == want.e;
    });
    if (!found) violations.push_back({link, want.key() + " e=" + std::to_string(want.e)});
  }
  return violations;
}

Explanation explain_link(const NumericalLink& link) {
  Explanation ex;
  ex.link = link;
  try {
    ex.pre_flop = left_quadruple(link.left);
  } catch (const InvalidMidpoint& err) {
    throw UnverifiableLink("left contraction", err.what());
  }
  if (link.e < 1) throw UnverifiableLink("e >= 1", "flop correction must be positive");
  ex.post_flop = flop(ex.pre_flop, link.e);
  ex.right_class = link.coordinates;

  const IntersectionQuadruple& q = ex.post_flop;
  const DivisorClass a = DivisorClass::anticanonical();
  const DivisorClass d = link.coordinates;
  const DivisorClass e_tilde = DivisorClass::divisor();
  auto t = [&q](DivisorClass u, DivisorClass v, DivisorClass w) { return triple_product(q, u, v, w); };
  auto add = [&ex](std::string name, std::int64_t lhs, std::int64_t rhs) {
    ex.identities.push_back({std::move(name), lhs, rhs});
  };

  add("A^3 = 2g - 2", q.a, link.midpoint_degree());
  switch (link.right.type) {
    case ContractionType::E1:
    case ContractionType::E3E4:
    case ContractionType::E2: {
      // A = alpha^*A' - m D with m = 2 for E2, 1 otherwise.
      const std::int64_t m = link.right.type == ContractionType::E2 ? 2 : 1;
      const DivisorClass pullback{a.x + m * d.x, a.y + m * d.y};
      const std::int64_t target = link.right.family ? link.right.family->a_cubed : 0;
      if (link.right.type == ContractionType::E2) {
        add("A^2 D = 4", t(a, a, d), 4);
        add("A D^2 = -2", t(a, d, d), -2);
        add("D^3 = 1", t(d, d, d), 1);
        add("(A+2D)^3 = A'^3", t(pullback, pullback, pullback), target);
        break;
      }
      const CurveCentre c = link.right.centre.value_or(CurveCentre{0, 0});
      const std::int64_t index = link.right.family ? link.right.family->fano_index : 0;
      add("(A+D)^2 D = 0", t(pullback, pullback, d), 0);
      add("(A+D)^3 = A'^3", t(pullback, pullback, pullback), target);
      add("(A+D)^2 A = A'^3", t(pullback, pullback, a), target);
      add("(A+D) D A = i deg C",
          t(pullback, d, a), link.right.type == ContractionType::E1 ? index * c.deg_h : 0);
      add("A D^2 = 2p_a(C) - 2", t(a, d, d), 2 * c.pa - 2);
      break;
    }
    case ContractionType::CB:
      add("L^3 = 0", t(d, d, d), 0);
      add("L^2 A = 2", t(d, d, a), 2);
      add("L A^2 = 12 - deg Delta", t(d, a, a), 12 - link.right.aux.value_or(-1));
      break;
    case ContractionType::dP:
      add("L^2 A = 0", t(d, d, a), 0);
      add("L^2 E~ = 0", t(d, d, e_tilde), 0);
      add("L A^2 = d", t(d, a, a), link.right.aux.value_or(-1));
      break;
  }
  for (const IdentityCheck& check : ex.identities) {
    if (!check.holds())
      throw UnverifiableLink(check.name, "identity " + check.name + " fails: " +
                                             std::to_string(check.lhs) + " != " +
                                             std::to_string(check.rhs));
  }
  return ex;
}

}  // namespace sarkisov
