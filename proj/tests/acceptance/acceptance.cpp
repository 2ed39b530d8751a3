// Runs the acceptance items and prints one PASS/FAIL line each.
// Usage: acceptance [--details] [--jobs N] [item ...]
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "suite.hpp"

int main(int argc, char** argv) {
  using namespace menichetti::suite;
  Options opt;
  bool details = false;
  std::vector<int> items;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--details") {
      details = true;
    } else if (a == "--jobs" && i + 1 < argc) {
      opt.jobs = static_cast<unsigned>(std::stoul(argv[++i]));
    } else {
      int id = std::atoi(a.c_str());
      if (id < 1 || id > kItemCount) {
        std::cerr << "unknown item " << a << "\n";
        return 1;
      }
      items.push_back(id);
    }
  }
  if (items.empty())
    for (int id = 1; id <= kItemCount; ++id) items.push_back(id);

  int failed = 0;
  for (int id : items) {
    auto o = run_item(id, opt);
    std::cout << format_outcome(o, details) << std::flush;
    failed += !o.pass;
  }
  return failed ? 2 : 0;
}
