#pragma once

#include <string>
#include <vector>

namespace kmforms {

// Outcome of a verification: pass/fail plus human-readable detail lines.
// The first failure line is the witness.
struct Report {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;

  void note(std::string line) { lines.push_back(std::move(line)); }
  void fail(std::string line) {
    passed = false;
    lines.push_back("FAIL: " + std::move(line));
  }
  void merge(const Report& other) {
    if (!other.passed) passed = false;
    for (const auto& l : other.lines) lines.push_back(other.name + ": " + l);
  }
  std::string first_failure() const {
    for (const auto& l : lines) {
      if (l.rfind("FAIL: ", 0) == 0) return l.substr(6);
    }
    return {};
  }
};

}  // namespace kmforms
