#pragma once

#include <array>
#include <span>
#include <vector>

#include "kmforms/coefficient_table.hpp"
#include "kmforms/lattice.hpp"
#include "kmforms/report.hpp"
#include "kmforms/series.hpp"

namespace kmforms {

struct ThetaCharacteristic {
  std::array<int, 2> a{};
  std::array<int, 2> b{};

  bool is_even() const { return (a[0] * b[0] + a[1] * b[1]) % 2 == 0; }
  friend bool operator==(const ThetaCharacteristic&, const ThetaCharacteristic&) = default;
};

// The ten even characteristics, ordered by (a1, a2, b1, b2) lexicographically.
std::vector<ThetaCharacteristic> even_characteristics();

// Theta series in exp(pi i z)/4 units (q-scale 8 on each variable).
// kTrace keeps n + m <= bound (pi i units); kLambda keeps the normalized
// product grading of Delta_5 <= bound, i.e. 2n - l + 2m <= 8 bound + 12 in
// the series' own coordinates.
GradedSeries theta_constant(const ThetaCharacteristic& c, const Truncation& truncation);

// Product of the ten even theta constants as a table in exp(pi i z) units.
// Support and divisibility by 64 are asserted.
SiegelCoefficientTable delta5(const Truncation& truncation);
SiegelCoefficientTable delta5(std::int64_t trace_bound);

// sum_{n,l} f(n,l,m) x^(n,l): two variables with the table's (z1, z2)
// scales, grading by n, bound the largest n for which the slice is complete.
GradedSeries fourier_jacobi_slice(const SiegelCoefficientTable& t, std::int64_t m);

// Antisymmetry in l, n<->m symmetry, wall vanishing and the sign rule for
// each given reflection, on every coefficient inside the bound.
Report symmetry_audit(const SiegelCoefficientTable& t, const ExampleData& ex,
                      std::span<const WeylElement> reflections);

}  // namespace kmforms
