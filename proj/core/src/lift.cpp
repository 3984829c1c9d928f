#include "kmforms/lift.hpp"

#include <algorithm>
#include <numeric>

#include "kmforms/errors.hpp"

namespace kmforms {

bool LiftSpec::in_support(const Triple& e) const {
  const auto [n, l, m] = e;
  return positive_mod(n, modulus) == residue && positive_mod(m, modulus) == residue &&
         positive_mod(l, 2) == 1 && n > 0 && m > 0 && disc_factor * n * m - l * l > 0;
}

LiftSpec maass_lift_spec() {
  LiftSpec s;
  s.form_name = "psi5-lift";
  return s;
}

LiftSpec paramodular_lift_spec() {
  LiftSpec s;
  s.form_name = "F2";
  s.divisor_weight = 1;
  s.character = LiftCharacter::kKroneckerMinus4;
  s.input_scales = {4, 2};
  s.output_unit = kUnitOrthogonal;
  s.modulus = 4;
  s.disc_factor = 2;
  return s;
}

int kronecker_minus4(std::int64_t d) {
  if (d <= 0) throw DomainError("kronecker_minus4 needs positive d, got " + std::to_string(d));
  if (d % 2 == 0) return 0;
  return d % 4 == 1 ? 1 : -1;
}

namespace {

template <class Visit>
void for_each_support_point(const LiftSpec& spec, const SiegelCoefficientTable& frame,
                            Visit&& visit) {
  const Truncation& t = frame.truncation;
  // Every covered support point has n + m <= box: trace bounds n + m
  // directly; lambda bounds it through |l| < sqrt(disc_factor nm).
  const std::int64_t box = t.kind == TruncationKind::kTrace ? t.bound : 2 * (2 * t.bound + 3);
  for (std::int64_t n = spec.residue; n <= box; n += spec.modulus) {
    for (std::int64_t m = spec.residue; n + m <= box; m += spec.modulus) {
      const std::int64_t lmax = isqrt(spec.disc_factor * n * m) + 1;
      for (std::int64_t l = -lmax; l <= lmax; ++l) {
        const Triple e{n, l, m};
        if (spec.in_support(e) && frame.covers(e)) visit(e);
      }
    }
  }
}

SiegelCoefficientTable empty_frame(const LiftSpec& spec, const Truncation& truncation) {
  if (truncation.bound < 0) throw DomainError("truncation bound must be >= 0");
  SiegelCoefficientTable out;
  out.form = spec.form_name;
  out.unit = spec.output_unit;
  out.truncation = truncation;
  return out;
}

}  // namespace

SiegelCoefficientTable arithmetic_lift(const JacobiSeries& input, const LiftSpec& spec,
                                       const Truncation& truncation) {
  const auto& layout = input.series.layout();
  if (layout.dim != 2 || layout.scales[0] != spec.input_scales[0] ||
      layout.scales[1] != spec.input_scales[1]) {
    throw ConfigurationError("lift input " + input.name + " is not in the expected unit");
  }
  SiegelCoefficientTable out = empty_frame(spec, truncation);
  for_each_support_point(spec, out, [&](const Triple& e) {
    const auto [n, l, m] = e;
    const std::int64_t g = std::gcd(std::gcd(n, l), m);
    Rational sum = 0;
    for (std::int64_t d = 1; d <= g; ++d) {
      if (g % d) continue;
      if ((n * m) % (d * d) != 0) throw IdentityViolation("nm/d^2 not integral at " + triple_str(e));
      const std::int64_t nn = n * m / (d * d);
      if (nn > input.depth()) {
        throw ConfigurationError(input.name + " needed at depth " + std::to_string(nn) +
                                 " but computed only to " + std::to_string(input.depth()));
      }
      Rational term = input.at(nn, l / d) * Rational(ipow(d, spec.divisor_weight));
      if (spec.character == LiftCharacter::kKroneckerMinus4) term *= kronecker_minus4(d);
      sum += term;
    }
    out.set(e, sum);
  });
  return out;
}

std::int64_t lift_input_depth(const LiftSpec& spec, const Truncation& truncation) {
  std::int64_t depth = 0;
  for_each_support_point(spec, empty_frame(spec, truncation),
                         [&](const Triple& e) { depth = std::max(depth, e[0] * e[2]); });
  return depth;
}

SiegelCoefficientTable f2_table(const Truncation& truncation) {
  const LiftSpec spec = paramodular_lift_spec();
  const std::int64_t q_unit = spec.input_scales[0];
  const std::int64_t order = std::max<std::int64_t>(1, (lift_input_depth(spec, truncation) + q_unit - 1) / q_unit);
  return arithmetic_lift(psi_half_forms(PsiKind::kPsi2Half, order), spec, truncation);
}

}  // namespace kmforms
