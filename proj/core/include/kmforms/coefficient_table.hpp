#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "kmforms/rational.hpp"
#include "kmforms/series.hpp"

namespace kmforms {

using Triple = std::array<std::int64_t, 3>;

std::string triple_str(const Triple& t);

// Exponent unit of a three-variable table: stored exponent = scale * true
// exponent in exp(2 pi i z) units, per variable.
struct Unit {
  std::array<std::int64_t, 3> scales{2, 2, 2};

  std::string name() const;
  static Unit parse(const std::string& text);
  friend bool operator==(const Unit&, const Unit&) = default;
};

// exp(pi i (n z1 + l z2 + m z3)): Delta_5, the Maass lift, example 1.
inline constexpr Unit kUnitPiI{{2, 2, 2}};
// exp((pi i/2)(n z1' + 2 l z2' + m z3')): example 2 orthogonal side.
inline constexpr Unit kUnitOrthogonal{{4, 2, 4}};
// exp(2 pi i (n z1 + l z2 + m z3)): product exponents.
inline constexpr Unit kUnitTwoPiI{{1, 1, 1}};

enum class TruncationKind { kTrace, kLambda };

// trace: n + m <= bound in the table's own coordinates.
// lambda: the normalized product grading of the example the unit belongs to
// (2 lambda = 2n + 2m - l - 3 for kUnitPiI, 2n + 2m + l - 3 for kUnitOrthogonal).
struct Truncation {
  TruncationKind kind = TruncationKind::kTrace;
  std::int64_t bound = 0;

  std::string kind_name() const;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

// Twice the normalized lambda of a table exponent; ConfigurationError for
// units without a product grading.
std::int64_t twice_lambda(const Unit& unit, const Triple& e);

class SiegelCoefficientTable {
 public:
  std::string form;
  Unit unit;
  Truncation truncation;
  std::map<Triple, Rational> entries;  // nonzero only

  Rational at(const Triple& e) const;
  bool covers(const Triple& e) const;
  void set(const Triple& e, const Rational& c);

  SiegelCoefficientTable restricted(const Truncation& t) const;
  SiegelCoefficientTable scaled(const Rational& c) const;
  bool all_integral() const;
};

struct TableMismatch {
  Triple exponent;
  Rational expected;
  Rational actual;
  std::string str() const;
};

// First exponent (in key order) covered by both tables where they differ.
std::optional<TableMismatch> first_mismatch(const SiegelCoefficientTable& expected,
                                            const SiegelCoefficientTable& actual);

// Table <-> three-variable series in the same coordinates.
GradedSeries table_to_series(const SiegelCoefficientTable& t, const Weights& weights,
                             std::int64_t bound);
SiegelCoefficientTable series_to_table(const GradedSeries& s, const std::string& form,
                                       const Truncation& truncation);

}  // namespace kmforms
