#pragma once

#include <string>
#include <vector>

#include "ordifind/context.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(ORDIFIND_DATA_DIR) + "/" + name; }

/// The social media platforms context shipped in data/.
inline ordifind::FormalContext socmed() { return ordifind::load_context(data_path("socmed.cxt")); }

/// Sorted name list for a set of indices.
inline std::vector<std::string> names(const std::vector<std::size_t>& idx,
                                      const std::vector<std::string>& all) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

}  // namespace fixtures
