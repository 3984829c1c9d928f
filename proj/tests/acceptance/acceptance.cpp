#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#include "kmforms/checks.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  for (const auto& c : kmforms::all_checks()) {
    const auto t0 = std::chrono::steady_clock::now();
    const kmforms::Report r = kmforms::run_check(c);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << c.id << " " << (r.passed ? "PASS" : "FAIL") << "  " << c.summary << "  ("
              << std::fixed << std::setprecision(3) << secs << " s)\n";
    if (verbose || !r.passed) {
      for (const auto& l : r.lines) std::cout << "    " << l << "\n";
    }
    if (!r.passed) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
