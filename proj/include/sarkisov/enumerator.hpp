#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sarkisov/contractions.hpp"
#include "sarkisov/link.hpp"
#include "sarkisov/verify.hpp"

namespace sarkisov {

inline constexpr int kMinGenus = 3;
inline constexpr int kMaxGenus = 12;

/// A left contraction together with the midpoint quadruple it determines.
struct LeftSpec {
  ContractionSpec spec;
  IntersectionQuadruple quadruple;
};

/// Every left contraction onto a catalog family whose blow-up is a midpoint of
/// the given genus: E1 over enumerate_left_centres, E2 onto degree 2g + 6 and
/// E3/E4 onto degree 2g.
std::vector<LeftSpec> enumerate_left_specs(int genus, BoundsMode mode);

/// All numerical links centred on a genus-`genus` midpoint, in canonical order.
/// `jobs > 1` solves left specs on worker threads; output is identical.
/// Throws std::invalid_argument for genus outside [3, 12].
std::vector<NumericalLink> enumerate_links(int genus, BoundsMode mode, unsigned jobs = 1);

/// Strict weak ordering behind the canonical link order.
bool canonical_less(const NumericalLink& lhs, const NumericalLink& rhs);

struct MirrorViolation {
  NumericalLink link;
  std::string expected_key;
};

/// Links with an index-1 divisorial right side (y = 1) and a left side onto an
/// index-1 family must appear reversed with the same e.
std::vector<MirrorViolation> mirror_check(const std::vector<NumericalLink>& links);

/// The reversed link (right and left swapped) for a link mirror_check covers.
NumericalLink mirrored(const NumericalLink& link);
bool mirror_applies(const NumericalLink& link);

class UnverifiableLink : public std::runtime_error {
 public:
  UnverifiableLink(std::string identity, const std::string& what)
      : std::runtime_error(what), identity_(std::move(identity)) {}
  const std::string& identity() const { return identity_; }

 private:
  std::string identity_;
};

/// Intersection ledger of a link evaluated with the multilinear engine.
struct Explanation {
  NumericalLink link;
  IntersectionQuadruple pre_flop;
  IntersectionQuadruple post_flop;
  DivisorClass right_class;
  std::vector<IdentityCheck> identities;
};

/// Throws UnverifiableLink naming the first identity that fails.
Explanation explain_link(const NumericalLink& link);

}  // namespace sarkisov
