#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "kmforms/coefficient_table.hpp"
#include "kmforms/jacobi.hpp"

namespace kmforms {

enum class LiftCharacter { kTrivial, kKroneckerMinus4 };

// Output (n,l,m) = sum_{d | (n,l,m)} chi(d) d^w input(nm/d^2, l/d) over the
// support: n, m = residue mod modulus, l odd, disc_factor*nm - l^2 > 0.
struct LiftSpec {
  std::string form_name;
  int divisor_weight = 4;
  LiftCharacter character = LiftCharacter::kTrivial;
  std::array<std::int64_t, 2> input_scales{2, 2};
  Unit output_unit = kUnitPiI;
  std::int64_t modulus = 2;
  std::int64_t residue = 1;
  std::int64_t disc_factor = 4;

  bool in_support(const Triple& e) const;
};

// psi_5,1/2 -> Delta_5/64 in pi i units.
LiftSpec maass_lift_spec();
// psi_2,1/2 -> F_2 in the orthogonal unit (4,2,4).
LiftSpec paramodular_lift_spec();

int kronecker_minus4(std::int64_t d);

// ConfigurationError when an input coefficient below the truncation lies
// beyond the input series' depth or the scales disagree.
SiegelCoefficientTable arithmetic_lift(const JacobiSeries& input, const LiftSpec& spec,
                                       const Truncation& truncation);

// Largest input depth (stored q-exponent nm) the lift touches.
std::int64_t lift_input_depth(const LiftSpec& spec, const Truncation& truncation);

// F_2 as the character lift of psi_2,1/2 computed to the needed order.
SiegelCoefficientTable f2_table(const Truncation& truncation);

}  // namespace kmforms
