// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <iostream>
#include <string>
#include <thread>

#include "criteria.hpp"

int main(int argc, char** argv) {
  qmt::Limits limits;
  limits.threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));

  bool all = true;
  for (const auto& r : qmt::acceptance::run_criteria(limits, only)) {
    std::cout << qmt::acceptance::format_line(r) << std::endl;
    all = all && r.passed();
  }
  return all ? 0 : 1;
}
