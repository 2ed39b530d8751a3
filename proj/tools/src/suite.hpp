#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace menichetti::suite {

struct Options {
  std::uint64_t seed = 20240611;
  std::uint64_t census_budget = std::uint64_t(1) << 24;
  unsigned jobs = 1;
};

struct Outcome {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0;
};

constexpr int kItemCount = 12;

const std::vector<std::string>& suite_names();
// Item ids of a named suite; throws on an unknown name.
std::vector<int> suite_items(std::string_view suite);
std::string item_title(int id);
Outcome run_item(int id, const Options& options = {});

// "PASS  7 title (1.23 s)" followed by indented detail lines.
std::string format_outcome(const Outcome& o, bool with_details);

}  // namespace menichetti::suite
