#include "kmforms/theta.hpp"

#include <algorithm>

#include "kmforms/errors.hpp"

namespace kmforms {

namespace {

constexpr std::array<std::int64_t, 3> kThetaScales{8, 8, 8};

SeriesLayout theta_layout(const Truncation& t) {
  if (t.bound < 0) throw DomainError("truncation bound must be >= 0");
  if (t.kind == TruncationKind::kTrace) {
    return SeriesLayout::make(3, kThetaScales, std::array<std::int64_t, 3>{1, 0, 1}, 4 * t.bound);
  }
  // 2n - l + 2m in quarter pi i units is 2(u^2 - uv + v^2); the Delta_5
  // leading term (4,4,4) sits at 12 and each lambda step costs 8.
  return SeriesLayout::make(3, kThetaScales, std::array<std::int64_t, 3>{2, -1, 2},
                            8 * t.bound + 12);
}

}  // namespace

std::vector<ThetaCharacteristic> even_characteristics() {
  std::vector<ThetaCharacteristic> out;
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2) {
          ThetaCharacteristic c{{a1, a2}, {b1, b2}};
          if (c.is_even()) out.push_back(c);
        }
  return out;
}

GradedSeries theta_constant(const ThetaCharacteristic& c, const Truncation& truncation) {
  for (int x : {c.a[0], c.a[1], c.b[0], c.b[1]}) {
    if (x != 0 && x != 1) throw DomainError("characteristic entries must be bits");
  }
  if (!c.is_even()) throw DomainError("odd theta characteristic");
  const SeriesLayout layout = theta_layout(truncation);

  // u = 2 l1 + a1, v = 2 l2 + a2; Z[l + a/2] in quarter units is
  // u^2 z1 + 2uv z2 + v^2 z3. Both gradings dominate (3/4) max(u^2, v^2).
  const std::int64_t r = isqrt(2 * layout.bound) + 2;
  Accumulator acc;
  for (std::int64_t u = -r; u <= r; ++u) {
    if (positive_mod(u, 2) != c.a[0]) continue;
    for (std::int64_t v = -r; v <= r; ++v) {
      if (positive_mod(v, 2) != c.a[1]) continue;
      const Exponent e{u * u, 2 * u * v, v * v};
      if (layout.grade(e) > layout.bound) continue;
      const std::int64_t l1 = (u - c.a[0]) / 2;
      const std::int64_t l2 = (v - c.a[1]) / 2;
      const bool negative = positive_mod(c.b[0] * l1 + c.b[1] * l2, 2) == 1;
      acc[e] += negative ? -1 : 1;
    }
  }
  return GradedSeries::from_accumulator(layout, std::move(acc));
}

SiegelCoefficientTable delta5(const Truncation& truncation) {
  if (truncation.kind == TruncationKind::kTrace && truncation.bound < 3) {
    throw DomainError("delta5 needs trace bound >= 3");
  }
  GradedSeries prod;
  bool first = true;
  for (const auto& c : even_characteristics()) {
    GradedSeries th = theta_constant(c, truncation);
    prod = first ? th : series_mul(prod, th);
    first = false;
  }

  // quarter pi i units -> pi i units
  const std::array<std::int64_t, 3> scales{2, 2, 2};
  const GradedSeries pi_units =
      truncation.kind == TruncationKind::kTrace
          ? prod.rescaled(scales, std::array<std::int64_t, 3>{1, 0, 1}, truncation.bound)
          : prod.rescaled(scales, std::array<std::int64_t, 3>{2, -1, 2}, 2 * truncation.bound + 3);

  SiegelCoefficientTable t = series_to_table(pi_units, "delta5", truncation);
  for (const auto& [e, c] : t.entries) {
    const auto [n, l, m] = e;
    const Integer z = to_integer(c, "delta5 " + triple_str(e));
    const bool odd = positive_mod(n, 2) == 1 && positive_mod(l, 2) == 1 && positive_mod(m, 2) == 1;
    if (!odd || n <= 0 || m <= 0 || 4 * n * m - l * l <= 0) {
      throw IdentityViolation("delta5 coefficient " + to_string(z) + " outside support at " +
                              triple_str(e));
    }
    if (z % 64 != 0) {
      throw IdentityViolation("delta5 coefficient " + to_string(z) + " not divisible by 64 at " +
                              triple_str(e));
    }
  }
  return t;
}

SiegelCoefficientTable delta5(std::int64_t trace_bound) {
  return delta5(Truncation{TruncationKind::kTrace, trace_bound});
}

GradedSeries fourier_jacobi_slice(const SiegelCoefficientTable& t, std::int64_t m) {
  std::int64_t nmax = -1;
  if (t.truncation.kind == TruncationKind::kTrace) {
    nmax = t.truncation.bound - m;
  } else {
    // Largest n with every possible l (|l| <= 2 sqrt(nm)) covered.
    for (std::int64_t n = 0;; ++n) {
      const std::int64_t lmax = isqrt(4 * n * std::max<std::int64_t>(m, 0)) + 1;
      if (!t.covers({n, lmax, m}) || !t.covers({n, -lmax, m})) break;
      nmax = n;
    }
  }
  if (nmax < 0) {
    throw ConfigurationError("slice m=" + std::to_string(m) + " lies outside the table bound");
  }
  const SeriesLayout layout =
      SeriesLayout::make(2, std::array<std::int64_t, 2>{t.unit.scales[0], t.unit.scales[1]},
                         std::array<std::int64_t, 2>{1, 0}, nmax);
  Accumulator acc;
  for (const auto& [e, c] : t.entries) {
    if (e[2] == m) acc.emplace(Exponent{e[0], e[1]}, c);
  }
  return GradedSeries::from_accumulator(layout, std::move(acc));
}

Report symmetry_audit(const SiegelCoefficientTable& t, const ExampleData& ex,
                      std::span<const WeylElement> reflections) {
  Report r;
  r.name = "symmetry-audit";
  const ExponentMap map = exponent_map(ex.id);
  std::size_t checked_l = 0, checked_swap = 0, checked_refl = 0;
  std::size_t bad_l = 0, bad_swap = 0, bad_wall = 0, bad_refl = 0;
  auto witness = [&r](const std::string& what, const Triple& e, const Rational& a,
                      const Triple& e2, const Rational& b) {
    r.fail(what + ": f" + triple_str(e) + "=" + to_string(a) + " vs f" + triple_str(e2) + "=" +
           to_string(b));
  };

  for (const auto& [e, c] : t.entries) {
    const Triple neg{e[0], -e[1], e[2]};
    if (t.covers(neg)) {
      ++checked_l;
      if (t.at(neg) != -c) {
        ++bad_l;
        witness("l-antisymmetry", e, c, neg, t.at(neg));
      }
    }
    const Triple swp{e[2], e[1], e[0]};
    if (t.covers(swp)) {
      ++checked_swap;
      if (t.at(swp) != c) {
        ++bad_swap;
        witness("n<->m symmetry", e, c, swp, t.at(swp));
      }
    }
    const LatticeVector v = map.from_exponent(e);
    for (const auto& d : ex.fundamental.roots) {
      if (ex.lattice.pair(v, d) == 0) {
        ++bad_wall;
        r.fail("nonzero coefficient " + to_string(c) + " on wall " + vector_str(d) + " at " +
               triple_str(e));
      }
    }
    for (const auto& w : reflections) {
      const LatticeVector wv = w.apply(v);
      bool integral = true;
      for (const auto& x : wv) integral = integral && is_integral(x * 2);
      if (!integral) continue;
      Triple e2;
      try {
        e2 = map.to_exponent(wv);
      } catch (const DomainError&) {
        continue;
      }
      if (!t.covers(e2)) continue;
      ++checked_refl;
      if (t.at(e2) != c * w.det) {
        ++bad_refl;
        witness("reflection sign rule", e, c, e2, t.at(e2));
      }
    }
  }
  r.note("l-antisymmetry: " + std::to_string(checked_l) + " pairs, " + std::to_string(bad_l) +
         " violations");
  r.note("n<->m symmetry: " + std::to_string(checked_swap) + " pairs, " +
         std::to_string(bad_swap) + " violations");
  r.note("wall vanishing: " + std::to_string(t.entries.size()) + " coefficients, " +
         std::to_string(bad_wall) + " violations");
  r.note("reflections: " + std::to_string(checked_refl) + " pairs, " + std::to_string(bad_refl) +
         " violations");
  return r;
}

}  // namespace kmforms
