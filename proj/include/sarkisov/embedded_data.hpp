#pragma once

#include <string_view>
#include <vector>

namespace sarkisov::embedded {

struct DataFile {
  std::string_view name;
  std::string_view text;
};

/// Bundled reference tables, sorted by file name.
const std::vector<DataFile>& reference_files();
std::string_view reference_manifest();
std::string_view default_facts();

}  // namespace sarkisov::embedded
