#pragma once

#include <string>
#include <vector>

#include "unicas/harness/report.hpp"

namespace unicas::harness {

struct Table {
  int id = 0;
  std::string caption;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  std::string note;
};

inline constexpr int kTableCount = 6;

/// Builds table `id` (1..6) from the library; throws std::out_of_range for
/// other ids.
Table build_table(int id);

std::string render_table(const Table& table, Format format);

}  // namespace unicas::harness
