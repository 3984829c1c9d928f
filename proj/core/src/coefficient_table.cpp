#include "kmforms/coefficient_table.hpp"

#include <sstream>

#include "kmforms/errors.hpp"

namespace kmforms {

std::string triple_str(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
         ")";
}

std::string Unit::name() const {
  if (*this == kUnitOrthogonal) return "pi_i/2-orthogonal";
  if (scales[0] == scales[1] && scales[1] == scales[2]) {
    switch (scales[0]) {
      case 1: return "2pi_i";
      case 2: return "pi_i";
      case 4: return "pi_i/2";
      case 8: return "pi_i/4";
      default: break;
    }
  }
  return "scales:" + std::to_string(scales[0]) + "," + std::to_string(scales[1]) + "," +
         std::to_string(scales[2]);
}

Unit Unit::parse(const std::string& text) {
  if (text == "pi_i/2-orthogonal") return kUnitOrthogonal;
  if (text == "2pi_i") return Unit{{1, 1, 1}};
  if (text == "pi_i") return Unit{{2, 2, 2}};
  if (text == "pi_i/2") return Unit{{4, 4, 4}};
  if (text == "pi_i/4") return Unit{{8, 8, 8}};
  if (text.rfind("scales:", 0) == 0) {
    std::istringstream in(text.substr(7));
    Unit u;
    char c1 = 0, c2 = 0;
    if (in >> u.scales[0] >> c1 >> u.scales[1] >> c2 >> u.scales[2] && c1 == ',' && c2 == ',' &&
        in.peek() == std::char_traits<char>::eof() && u.scales[0] > 0 && u.scales[1] > 0 &&
        u.scales[2] > 0) {
      return u;
    }
  }
  throw DomainError("unknown unit '" + text + "'");
}

std::string Truncation::kind_name() const {
  return kind == TruncationKind::kTrace ? "trace" : "lambda";
}

std::int64_t twice_lambda(const Unit& unit, const Triple& e) {
  if (unit == kUnitPiI) return 2 * e[0] + 2 * e[2] - e[1] - 3;
  if (unit == kUnitOrthogonal) return 2 * e[0] + 2 * e[2] + e[1] - 3;
  throw ConfigurationError("unit " + unit.name() + " carries no product grading");
}

Rational SiegelCoefficientTable::at(const Triple& e) const {
  auto it = entries.find(e);
  return it == entries.end() ? Rational(0) : it->second;
}

bool SiegelCoefficientTable::covers(const Triple& e) const {
  if (truncation.kind == TruncationKind::kTrace) return e[0] + e[2] <= truncation.bound;
  return twice_lambda(unit, e) <= 2 * truncation.bound;
}

void SiegelCoefficientTable::set(const Triple& e, const Rational& c) {
  if (c == 0) {
    entries.erase(e);
  } else {
    entries[e] = c;
  }
}

SiegelCoefficientTable SiegelCoefficientTable::restricted(const Truncation& t) const {
  SiegelCoefficientTable out;
  out.form = form;
  out.unit = unit;
  out.truncation = t;
  for (const auto& [e, c] : entries) {
    if (out.covers(e)) out.entries.emplace(e, c);
  }
  return out;
}

SiegelCoefficientTable SiegelCoefficientTable::scaled(const Rational& c) const {
  SiegelCoefficientTable out = *this;
  if (c == 0) {
    out.entries.clear();
    return out;
  }
  for (auto& [e, v] : out.entries) v *= c;
  return out;
}

bool SiegelCoefficientTable::all_integral() const {
  for (const auto& [e, c] : entries) {
    if (!is_integral(c)) return false;
  }
  return true;
}

std::string TableMismatch::str() const {
  return "at " + triple_str(exponent) + ": expected " + to_string(expected) + ", got " +
         to_string(actual);
}

std::optional<TableMismatch> first_mismatch(const SiegelCoefficientTable& expected,
                                            const SiegelCoefficientTable& actual) {
  std::map<Triple, std::pair<Rational, Rational>> both;
  for (const auto& [e, c] : expected.entries) {
    if (actual.covers(e)) both[e].first = c;
  }
  for (const auto& [e, c] : actual.entries) {
    if (expected.covers(e)) both[e].second = c;
  }
  for (const auto& [e, p] : both) {
    if (p.first != p.second) return TableMismatch{e, p.first, p.second};
  }
  return std::nullopt;
}

GradedSeries table_to_series(const SiegelCoefficientTable& t, const Weights& weights,
                             std::int64_t bound) {
  const std::array<std::int64_t, 3> w{weights[0], weights[1], weights[2]};
  const SeriesLayout layout = SeriesLayout::make(3, t.unit.scales, w, bound);
  Accumulator acc;
  for (const auto& [e, c] : t.entries) acc.emplace(Exponent{e[0], e[1], e[2]}, c);
  return GradedSeries::from_accumulator(layout, std::move(acc));
}

SiegelCoefficientTable series_to_table(const GradedSeries& s, const std::string& form,
                                       const Truncation& truncation) {
  if (s.layout().dim != 3) throw ConfigurationError("table needs a three-variable series");
  SiegelCoefficientTable t;
  t.form = form;
  t.unit = Unit{{s.layout().scales[0], s.layout().scales[1], s.layout().scales[2]}};
  t.truncation = truncation;
  for (const auto& term : s.terms()) {
    const Triple e{term.exponent[0], term.exponent[1], term.exponent[2]};
    if (t.covers(e)) t.entries.emplace(e, term.coefficient);
  }
  return t;
}

}  // namespace kmforms
