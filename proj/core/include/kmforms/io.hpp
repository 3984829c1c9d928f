#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "kmforms/coefficient_table.hpp"

namespace kmforms {

const char* library_version();

enum class Format { kJson, kCsv };

Format parse_format(const std::string& name);
// From the extension (.json / .csv); DomainError otherwise.
Format format_for_path(const std::filesystem::path& path);

// Deterministic bytes: rows sorted by (n, l, m), coefficients as strings.
std::string serialize(const SiegelCoefficientTable& table, Format format);
// ParseError with line and byte offset on malformed input.
SiegelCoefficientTable parse_table(const std::string& text, Format format);

void save_table(const SiegelCoefficientTable& table, const std::filesystem::path& path,
                Format format);
SiegelCoefficientTable load_table(const std::filesystem::path& path,
                                  std::optional<Format> format = {});

// ConfigurationError unless the table is in the expected unit.
void require_unit(const SiegelCoefficientTable& table, const Unit& expected);

// gzip JSON files keyed by form, unit, truncation type and library version.
// A stored table at bound B serves any request of the same type with bound <= B.
// An unreadable entry counts as a miss.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);
  // KMFORMS_CACHE, else $XDG_CACHE_HOME/kmforms, else ~/.cache/kmforms.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path key_path(const std::string& form, const Unit& unit,
                                 TruncationKind kind) const;

  std::optional<SiegelCoefficientTable> lookup(const std::string& form, const Unit& unit,
                                               const Truncation& truncation) const;
  // Keeps the larger of the stored and the new table.
  void store(const SiegelCoefficientTable& table) const;

  SiegelCoefficientTable get_or_compute(
      const std::string& form, const Unit& unit, const Truncation& truncation,
      const std::function<SiegelCoefficientTable(const Truncation&)>& compute) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace kmforms
