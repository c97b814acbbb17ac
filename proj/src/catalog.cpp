#include "sarkisov/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace sarkisov {
namespace {

std::vector<FanoFamily> build_catalog() {
  std::vector<FanoFamily> families;
  // Index 1: genus 2..10 and 12; there is no genus-11 family.
  for (int g : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
    FanoFamily f;
    f.fano_index = 1;
    f.a_cubed = 2 * g - 2;
    f.h_cubed = f.a_cubed;
    f.genus = g;
    f.canonical_name = "X_" + std::to_string(f.a_cubed);
    if (g == 4) f.aliases = {"X_{2,3}"};
    if (g == 5) f.aliases = {"X_{2,2,2}"};
    families.push_back(std::move(f));
  }
  for (int d = 1; d <= 5; ++d) {
    FanoFamily f;
    f.fano_index = 2;
    f.h_cubed = d;
    f.a_cubed = 8 * d;
    f.canonical_name = "V_" + std::to_string(d);
    families.push_back(std::move(f));
  }
  families.push_back(FanoFamily{3, 2, 54, std::nullopt, "Q", {}});
  families.push_back(FanoFamily{4, 1, 64, std::nullopt, "P3", {}});
  return families;
}

const std::vector<FanoFamily>& catalog() {
  static const std::vector<FanoFamily> families = build_catalog();
  return families;
}

}  // namespace

bool FanoFamily::has_name(std::string_view name) const {
  return canonical_name == name ||
         std::find(aliases.begin(), aliases.end(), name) != aliases.end();
}

std::span<const FanoFamily> all_families() { return catalog(); }

std::vector<const FanoFamily*> lookup_by_degree(std::int64_t a_cubed) {
  std::vector<const FanoFamily*> out;
  for (const auto& f : catalog())
    if (f.a_cubed == a_cubed) out.push_back(&f);
  return out;
}

const FanoFamily* lookup_by_index_and_degree(int fano_index, std::int64_t a_cubed) {
  if (fano_index < 1 || fano_index > 4)
    throw std::invalid_argument("Fano index must lie in 1..4, got " +
                                std::to_string(fano_index));
  for (const auto& f : catalog())
    if (f.fano_index == fano_index && f.a_cubed == a_cubed) return &f;
  return nullptr;
}

const FanoFamily* lookup_by_name(std::string_view name) {
  for (const auto& f : catalog())
    if (f.has_name(name)) return &f;
  return nullptr;
}

}  // namespace sarkisov
