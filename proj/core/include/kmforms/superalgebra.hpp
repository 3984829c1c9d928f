#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "kmforms/lattice.hpp"
#include "kmforms/report.hpp"
#include "kmforms/series.hpp"

namespace kmforms {

// Real simple roots P(M) and imaginary simple roots a -> mu(a); mu > 0 means
// mu distinct even roots at a, mu < 0 means |mu| distinct odd roots.
struct SimpleRootSystem {
  int example = 1;
  std::int64_t bound = 0;
  std::vector<LatticeVector> real_roots;
  std::map<IntVector, Integer> imaginary;
};

// ConstructionError when a Serre-data condition fails.
SimpleRootSystem build_simple_roots(const SimpleMultiplicityTable& mult, int example);

// One simple-root vector of the enumerator with its norm and signed count.
struct EnumRoot {
  Exponent exponent;
  std::int64_t norm = 0;
  Integer mu;
};

// kSuper: epsilon(s) = (-1)^(even roots in s); kPlain: (-1)^|s|.
enum class EpsilonSign { kSuper, kPlain };

// sum over multisets s of pairwise perpendicular simple roots of
// epsilon(s) x^(pi(s)). Even roots are used at most once per copy; odd roots
// repeat only when isotropic. pairing[i][j] is (root_i, root_j).
GradedSeries epsilon_enumerate(const SeriesLayout& layout, std::span<const EnumRoot> roots,
                               const std::vector<std::vector<std::int64_t>>& pairing,
                               EpsilonSign sign);

// sum epsilon(s) x^(pi(s)) over the imaginary roots, exponents in lattice
// coordinates graded by lambda. UnexpectedGeometry when two imaginary roots
// are perpendicular without lying on a common isotropic ray.
GradedSeries epsilon_correction_sum(const SimpleRootSystem& system, std::int64_t bound);

// Enumerator against the closed forms for one diagonal system: entries of
// diag are 0 or negative, odd marks the odd indices.
Report diagonal_denominator_check(std::span<const std::int64_t> diag, std::span<const bool> odd,
                                  std::int64_t bound);

// Every diagonal system with up to max_indices indices, entries in {0, -2}.
Report diagonal_sweep(int max_indices, std::int64_t bound);

// The example's form table at lambda <= bound: Delta_5 or F_2.
SiegelCoefficientTable example_form_table(int example, const Truncation& truncation);

// Correction factor: the epsilon sum of the extracted system equals
// 1 - sum m(a) x^a and, ray by ray, prod (1 - q^k)^tau.
Report correction_factor_check(int example, std::int64_t bound, std::int64_t expected_tau);

// Product exponents of the normalized form against f(nm, l) of the example's
// weak Jacobi form, and the product side against the form, on lambda <= bound.
Report denominator_identity_verify(int example, std::int64_t bound);

}  // namespace kmforms
