#include <iostream>

#include "bicrit/harness.hpp"

// Runs every acceptance criterion and prints one pass/fail line per
// criterion. Exit status 0 iff all pass.
int main() {
  auto report = bicrit::accept(std::nullopt, &std::cout);
  std::cout << (report.all_pass ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
  return report.all_pass ? 0 : 1;
}
