#include "kmforms/io.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <zlib.h>

#include "json.hpp"
#include "kmforms/errors.hpp"

namespace kmforms {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<long, long> line_and_offset(const std::string& text, std::size_t byte) {
  long line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  return {line, static_cast<long>(byte - line_start)};
}

Truncation parse_truncation(const std::string& type, std::int64_t bound) {
  if (type == "trace") return {TruncationKind::kTrace, bound};
  if (type == "lambda") return {TruncationKind::kLambda, bound};
  throw DomainError("unknown truncation type '" + type + "'");
}

std::int64_t parse_int(const std::string& s) {
  std::size_t pos = 0;
  const long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument(s);
  return v;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' ? c : '_';
  return out;
}

SiegelCoefficientTable parse_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    const auto [line, off] = line_and_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, off);
  }
  // structural problems are reported against the first line
  auto structural = [](const std::string& what) { return ParseError(what, 1, 0); };
  if (!j.is_object()) throw structural("top level is not an object");
  for (const char* key : {"form", "unit", "truncation", "coefficients"}) {
    if (!j.contains(key)) throw structural(std::string("missing key '") + key + "'");
  }
  SiegelCoefficientTable t;
  try {
    t.form = j.at("form").get<std::string>();
    t.unit = Unit::parse(j.at("unit").get<std::string>());
    const auto& tr = j.at("truncation");
    const auto& b = tr.at("bound");
    t.truncation = parse_truncation(tr.at("type").get<std::string>(),
                                    b.is_string() ? parse_int(b.get<std::string>()) : b.get<std::int64_t>());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw structural(std::string("bad header: ") + e.what());
  }
  const auto& rows = j.at("coefficients");
  if (!rows.is_array()) throw structural("coefficients is not an array");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    try {
      if (!r.is_array() || r.size() != 4) throw std::invalid_argument("row is not [n,l,m,c]");
      Triple e{};
      for (int k = 0; k < 3; ++k) {
        e[k] = r[k].is_string() ? parse_int(r[k].get<std::string>()) : r[k].get<std::int64_t>();
      }
      const Rational c = r[3].is_string() ? parse_rational(r[3].get<std::string>())
                                          : Rational(r[3].get<std::int64_t>());
      if (t.entries.count(e)) throw std::invalid_argument("duplicate exponent " + triple_str(e));
      t.set(e, c);
    } catch (const std::exception& ex) {
      throw structural("coefficient row " + std::to_string(i) + ": " + ex.what());
    }
  }
  return t;
}

SiegelCoefficientTable parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  std::optional<std::string> form, unit, trunc;
  bool header = false;
  SiegelCoefficientTable t;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("metadata line without '='", lineno, 0);
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      const std::string value = line.substr(eq + 1);
      if (key == "form") form = value;
      else if (key == "unit") unit = value;
      else if (key == "truncation") trunc = value;
      else throw ParseError("unknown metadata key '" + key + "'", lineno, 1);
      continue;
    }
    if (!header) {
      if (line != "n,l,m,c") throw ParseError("expected header n,l,m,c", lineno, 0);
      if (!form || !unit || !trunc) throw ParseError("metadata must precede the header", lineno, 0);
      try {
        t.form = *form;
        t.unit = Unit::parse(*unit);
        const auto colon = trunc->find(':');
        if (colon == std::string::npos) throw DomainError("truncation needs type:bound");
        t.truncation = parse_truncation(trunc->substr(0, colon), parse_int(trunc->substr(colon + 1)));
      } catch (const std::exception& e) {
        throw ParseError(std::string("bad metadata: ") + e.what(), lineno, 0);
      }
      header = true;
      continue;
    }
    std::size_t start = 0;
    std::array<std::string, 4> fields;
    for (int k = 0; k < 4; ++k) {
      const auto comma = line.find(',', start);
      if ((k < 3) == (comma == std::string::npos)) {
        throw ParseError("expected 4 fields", lineno, static_cast<long>(start));
      }
      fields[k] = line.substr(start, k < 3 ? comma - start : std::string::npos);
      try {
        if (k < 3) {
          parse_int(fields[k]);
        } else {
          parse_rational(fields[k]);
        }
      } catch (const std::exception&) {
        throw ParseError("bad field '" + fields[k] + "'", lineno, static_cast<long>(start));
      }
      start = comma + 1;
    }
    const Triple e{parse_int(fields[0]), parse_int(fields[1]), parse_int(fields[2])};
    if (t.entries.count(e)) throw ParseError("duplicate exponent " + triple_str(e), lineno, 0);
    t.set(e, parse_rational(fields[3]));
  }
  if (!header) throw ParseError("missing header n,l,m,c", lineno, 0);
  return t;
}

std::string read_gz(const std::filesystem::path& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (!f) return {};
  std::string out;
  char buf[1 << 16];
  int n;
  while ((n = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(n));
  const bool ok = n == 0;
  gzclose(f);
  if (!ok) throw ConfigurationError("corrupt cache file " + path.string());
  return out;
}

void write_gz(const std::filesystem::path& path, const std::string& data) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  gzFile f = gzopen(tmp.c_str(), "wb");
  if (!f) throw ConfigurationError("cannot write cache file " + tmp.string());
  const int n = gzwrite(f, data.data(), static_cast<unsigned>(data.size()));
  gzclose(f);
  if (n != static_cast<int>(data.size())) throw ConfigurationError("short write to " + tmp.string());
  std::filesystem::rename(tmp, path);
}

}  // namespace

const char* library_version() { return KMFORMS_VERSION; }

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw DomainError("unknown format '" + name + "'");
}

Format format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".json") return Format::kJson;
  if (ext == ".csv") return Format::kCsv;
  throw DomainError("cannot infer format from '" + path.string() + "'");
}

std::string serialize(const SiegelCoefficientTable& table, Format format) {
  std::ostringstream out;
  if (format == Format::kJson) {
    out << "{\n  \"form\": " << ordered_json(table.form).dump() << ",\n";
    out << "  \"unit\": " << ordered_json(table.unit.name()).dump() << ",\n";
    out << "  \"truncation\": {\"type\": \"" << table.truncation.kind_name()
        << "\", \"bound\": " << table.truncation.bound << "},\n";
    out << "  \"coefficients\": [";
    bool first = true;
    for (const auto& [e, c] : table.entries) {
      out << (first ? "\n" : ",\n") << "    [" << e[0] << "," << e[1] << "," << e[2] << ",\""
          << to_string(c) << "\"]";
      first = false;
    }
    out << (first ? "]\n}\n" : "\n  ]\n}\n");
  } else {
    out << "# form=" << table.form << "\n";
    out << "# unit=" << table.unit.name() << "\n";
    out << "# truncation=" << table.truncation.kind_name() << ":" << table.truncation.bound << "\n";
    out << "n,l,m,c\n";
    for (const auto& [e, c] : table.entries) {
      out << e[0] << "," << e[1] << "," << e[2] << "," << to_string(c) << "\n";
    }
  }
  return out.str();
}

SiegelCoefficientTable parse_table(const std::string& text, Format format) {
  return format == Format::kJson ? parse_json(text) : parse_csv(text);
}

void save_table(const SiegelCoefficientTable& table, const std::filesystem::path& path,
                Format format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigurationError("cannot open " + path.string() + " for writing");
  out << serialize(table, format);
  if (!out) throw ConfigurationError("write to " + path.string() + " failed");
}

SiegelCoefficientTable load_table(const std::filesystem::path& path, std::optional<Format> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigurationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str(), format.value_or(format_for_path(path)));
}

void require_unit(const SiegelCoefficientTable& table, const Unit& expected) {
  if (!(table.unit == expected)) {
    throw ConfigurationError("table " + table.form + " is in unit " + table.unit.name() +
                             ", expected " + expected.name());
  }
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::default_dir() {
  if (const char* env = std::getenv("KMFORMS_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "kmforms";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "kmforms";
  }
  return std::filesystem::temp_directory_path() / "kmforms";
}

std::filesystem::path TableCache::key_path(const std::string& form, const Unit& unit,
                                           TruncationKind kind) const {
  const Truncation t{kind, 0};
  return dir_ / (sanitize(form) + "__" + sanitize(unit.name()) + "__" + t.kind_name() + "__v" +
                 sanitize(library_version()) + ".json.gz");
}

std::optional<SiegelCoefficientTable> TableCache::lookup(const std::string& form, const Unit& unit,
                                                         const Truncation& truncation) const {
  const auto path = key_path(form, unit, truncation.kind);
  if (!std::filesystem::exists(path)) return std::nullopt;
  SiegelCoefficientTable t;
  try {
    t = parse_table(read_gz(path), Format::kJson);
  } catch (const ParseError&) {
    return std::nullopt;  // unreadable entry, recomputed and overwritten
  } catch (const ConfigurationError&) {
    return std::nullopt;
  }
  if (t.form != form || !(t.unit == unit) || t.truncation.kind != truncation.kind) {
    throw ConfigurationError("cache file " + path.string() + " does not match its key");
  }
  if (t.truncation.bound < truncation.bound) return std::nullopt;
  return t.restricted(truncation);
}

void TableCache::store(const SiegelCoefficientTable& table) const {
  std::filesystem::create_directories(dir_);
  const auto path = key_path(table.form, table.unit, table.truncation.kind);
  if (std::filesystem::exists(path)) {
    try {
      const SiegelCoefficientTable old = parse_table(read_gz(path), Format::kJson);
      if (old.truncation.bound >= table.truncation.bound) return;
    } catch (const Error&) {
      // unreadable entries are overwritten
    }
  }
  write_gz(path, serialize(table, Format::kJson));
}

SiegelCoefficientTable TableCache::get_or_compute(
    const std::string& form, const Unit& unit, const Truncation& truncation,
    const std::function<SiegelCoefficientTable(const Truncation&)>& compute) const {
  if (auto hit = lookup(form, unit, truncation)) return *hit;
  SiegelCoefficientTable t = compute(truncation);
  store(t);
  return t;
}

}  // namespace kmforms
