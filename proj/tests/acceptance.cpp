// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <cstdlib>
#include <iostream>

#include "trigsb/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  bool all = true;
  for (const auto& r : trigsb::acceptance::run_all(seed)) {
    all &= r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << "criterion " << r.id << " (" << r.title << "): " << r.detail << "\n";
  }
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
