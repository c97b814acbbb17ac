#include "sarkisov/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sarkisov/enumerator.hpp"

namespace sarkisov {
namespace {

constexpr int kMaxClassifiedGenus = 10;
constexpr int kMaxPlaneGenus = 8;

void add_scroll(std::map<CurveCentre, std::vector<std::string>>& scrolls,
                const ContractionSpec& side) {
  if (side.type != ContractionType::E1 || !side.centre || !side.family) return;
  auto& families = scrolls[*side.centre];
  const std::string& name = side.family->table_name();
  if (std::find(families.begin(), families.end(), name) == families.end())
    families.push_back(name);
}

}  // namespace

Classification classify(int genus, BoundsMode mode) {
  if (genus < kMinGenus || genus > kMaxClassifiedGenus)
    throw std::invalid_argument("classify needs genus in [3, 10], got " + std::to_string(genus));

  Classification out;
  out.genus = genus;
  out.plane_case = genus <= kMaxPlaneGenus;
  if (genus <= kMaxPlaneGenus && genus != 6) out.del_pezzo_degree = genus + 1;

  const std::vector<NumericalLink> links = enumerate_links(genus, mode);
  out.link_count = links.size();

  std::map<CurveCentre, std::vector<std::string>> scrolls;
  for (const NumericalLink& link : links) {
    add_scroll(scrolls, link.left);
    add_scroll(scrolls, link.right);

    const IntersectionQuadruple q = left_quadruple(link.left);
    // A^2.D is unchanged by the flop, so the pre-flop quadruple suffices.
    const std::int64_t right_degree = link.coordinates.x * q.a - link.coordinates.y * q.b;
    out.max_generator_degree = std::max(out.max_generator_degree, std::min(q.b, right_degree));
  }
  for (auto& [centre, families] : scrolls) out.scrolls.push_back({centre, std::move(families)});
  return out;
}

}  // namespace sarkisov
