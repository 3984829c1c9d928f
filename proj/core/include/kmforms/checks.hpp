#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kmforms/report.hpp"

namespace kmforms {

struct CheckOptions {
  std::optional<std::int64_t> order;  // q-order for series checks
  std::optional<std::int64_t> bound;  // trace or lambda bound, per check
};

struct CheckInfo {
  std::string id;     // A1 .. A13
  std::string alias;  // descriptive name
  std::string summary;
  std::function<Report(const CheckOptions&)> run;
};

const std::vector<CheckInfo>& all_checks();
// By id or alias, case-sensitive; nullptr when unknown.
const CheckInfo* find_check(const std::string& name);

// Library errors thrown by the check are turned into a failed report.
Report run_check(const CheckInfo& check, const CheckOptions& options = {});

}  // namespace kmforms
