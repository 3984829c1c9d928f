#include "kmforms/jacobi.hpp"

#include <array>
#include <numeric>

#include "kmforms/errors.hpp"

namespace kmforms {

namespace {

SeriesLayout one_var(std::int64_t scale, std::int64_t bound) {
  return SeriesLayout::make(1, std::array<std::int64_t, 1>{scale}, std::array<std::int64_t, 1>{1},
                            bound);
}

SeriesLayout two_var(std::int64_t s1, std::int64_t s2, std::int64_t bound) {
  return SeriesLayout::make(2, std::array<std::int64_t, 2>{s1, s2},
                            std::array<std::int64_t, 2>{1, 0}, bound);
}

Integer divisor_power_sum(std::int64_t n, unsigned k) {
  Integer s = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += ipow(d, k);
    if (d * d != n) s += ipow(n / d, k);
  }
  return s;
}

// q-series as a two-variable series with no r dependence.
GradedSeries embed(const GradedSeries& q, std::int64_t r_scale) {
  const SeriesLayout l = two_var(q.layout().scales[0], r_scale, q.bound());
  Accumulator acc;
  for (const auto& t : q.terms()) acc.emplace(Exponent{t.exponent[0], 0}, t.coefficient);
  return GradedSeries::from_accumulator(l, std::move(acc));
}

void require_integral(const GradedSeries& s, const std::string& name) {
  for (const auto& t : s.terms()) {
    if (!is_integral(t.coefficient)) {
      throw IdentityViolation(name + " has non-integral coefficient " + to_string(t.coefficient) +
                              " at " + t.exponent.str());
    }
  }
}

// Kronecker symbol (D/n) for n >= 1.
int kronecker(std::int64_t d, std::int64_t n) {
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (d % 2 == 0) return 0;
    const std::int64_t r = positive_mod(d, 8);
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (d/n), n odd
  std::int64_t a = positive_mod(d, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool squarefree(std::int64_t n) {
  n = n < 0 ? -n : n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

bool fundamental_discriminant(std::int64_t d) {
  if (positive_mod(d, 4) == 1) return squarefree(d);
  if (positive_mod(d, 4) != 0) return false;
  const std::int64_t e = d / 4;
  const std::int64_t r = positive_mod(e, 4);
  return (r == 2 || r == 3) && squarefree(e);
}

int mobius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

Rational bernoulli_poly(int r, const Rational& x) {
  if (r == 3) return x * x * x - Rational(3, 2) * x * x + Rational(1, 2) * x;
  // r == 5
  const Rational x2 = x * x;
  return x2 * x2 * x - Rational(5, 2) * x2 * x2 + Rational(5, 3) * x2 * x - Rational(1, 6) * x;
}

// zeta(1 - 2r) = -B_{2r}/(2r): B_6 = 1/42 gives zeta(-5) = -1/252,
// B_10 = 5/66 gives zeta(-9) = -1/132.
Rational zeta_negative(int r) { return r == 3 ? Rational(-1, 252) : Rational(-1, 132); }

GradedSeries jacobi_product_tail(const SeriesLayout& layout, std::int64_t q_unit,
                                 std::int64_t r_unit, int eta_power, std::int64_t order) {
  // prod_{n>=1} (1 - q^(n-1) r)(1 - q^n r^-1)(1 - q^n)^eta_power
  GradedSeries p = GradedSeries::one(layout);
  for (std::int64_t n = 1; n <= order + 1; ++n) {
    p = p * binomial_factor(layout, Exponent{q_unit * (n - 1), r_unit}, 1);
    p = p * binomial_factor(layout, Exponent{q_unit * n, -r_unit}, 1);
    p = p * binomial_factor(layout, Exponent{q_unit * n, 0}, eta_power);
  }
  return p;
}

void require_equal(const GradedSeries& a, const GradedSeries& b, const std::string& what) {
  if (a == b) return;
  for (const auto& t : a.terms()) {
    if (b.coefficient(t.exponent) != t.coefficient) {
      throw IdentityViolation(what + " differ at " + t.exponent.str() + ": " +
                              to_string(t.coefficient) + " vs " +
                              to_string(b.coefficient(t.exponent)));
    }
  }
  for (const auto& t : b.terms()) {
    if (a.coefficient(t.exponent) != t.coefficient) {
      throw IdentityViolation(what + " differ at " + t.exponent.str() + ": " +
                              to_string(a.coefficient(t.exponent)) + " vs " +
                              to_string(t.coefficient));
    }
  }
  throw IdentityViolation(what + " differ in layout");
}

}  // namespace

Rational JacobiSeries::at(std::int64_t n, std::int64_t l) const {
  return series.coefficient(Exponent{n, l});
}

GradedSeries classical_qseries(QSeriesKind kind, std::int64_t order, int power) {
  if (order < 0) throw DomainError("order must be >= 0");
  switch (kind) {
    case QSeriesKind::kEtaPower: {
      if (power < 1) throw DomainError("eta power must be >= 1");
      const SeriesLayout l = one_var(24, 24 * order);
      std::vector<ProductFactor> f;
      for (std::int64_t n = 1; n <= order; ++n) f.push_back({Exponent{24 * n}, power});
      return product_expand(l, f).shifted(Exponent{power}).truncated(24 * order);
    }
    case QSeriesKind::kE4:
    case QSeriesKind::kE6: {
      const bool e4 = kind == QSeriesKind::kE4;
      std::vector<std::pair<Exponent, Rational>> t{{Exponent{0}, 1}};
      for (std::int64_t n = 1; n <= order; ++n) {
        t.emplace_back(Exponent{n}, Rational(e4 ? Integer(240) * divisor_power_sum(n, 3)
                                                : Integer(-504) * divisor_power_sum(n, 5)));
      }
      return GradedSeries::from_terms(one_var(1, order), std::move(t));
    }
    case QSeriesKind::kDelta12: {
      const SeriesLayout l = one_var(1, order);
      std::vector<ProductFactor> f;
      for (std::int64_t n = 1; n <= order; ++n) f.push_back({Exponent{n}, 24});
      return product_expand(l, f).shifted(Exponent{1}).truncated(order);
    }
  }
  throw DomainError("unknown q-series kind");
}

JacobiSeries theta11(std::int64_t order, ThetaForm form) {
  if (order < 0) throw DomainError("order must be >= 0");
  const SeriesLayout layout = two_var(8, 2, 8 * order);
  JacobiSeries out;
  out.name = "theta11";
  out.weight = Rational(1, 2);
  out.index = Rational(1, 2);
  if (form == ThetaForm::kSum) {
    // sum_n (-1)^n q^((2n+1)^2/8) r^((2n+1)/2)
    Accumulator acc;
    for (std::int64_t k = -(isqrt(8 * order) + 2); k <= isqrt(8 * order) + 2; ++k) {
      if (positive_mod(k, 2) == 0) continue;
      const std::int64_t n = (k - 1) / 2;
      if (k * k > 8 * order) continue;
      acc[Exponent{k * k, k}] += positive_mod(n, 2) ? -1 : 1;
    }
    out.series = GradedSeries::from_accumulator(layout, std::move(acc));
  } else {
    // -q^(1/8) r^(-1/2) prod (1 - q^(n-1) r)(1 - q^n r^-1)(1 - q^n)
    out.series = jacobi_product_tail(layout, 8, 2, 1, order)
                     .shifted(Exponent{1, -1})
                     .scaled(-1)
                     .truncated(8 * order);
  }
  return out;
}

Rational cohen_number(int r, std::int64_t n) {
  if (r != 3 && r != 5) throw DomainError("cohen_number implemented for r in {3,5} only");
  if (n < 0) return 0;
  if (n == 0) return zeta_negative(r);
  if (positive_mod(n, 4) == 1 || positive_mod(n, 4) == 2) return 0;

  // -n = D f^2 with D fundamental
  std::int64_t f = isqrt(n);
  for (; f >= 1; --f) {
    if (n % (f * f) == 0 && fundamental_discriminant(-n / (f * f))) break;
  }
  if (f < 1) throw IdentityViolation("no fundamental discriminant for -" + std::to_string(n));
  const std::int64_t d = -n / (f * f);
  const std::int64_t k = -d;

  // L(1-r, chi_D) = -B_{r,chi}/r with B_{r,chi} = k^(r-1) sum_a chi(a) B_r(a/k)
  Rational b = 0;
  for (std::int64_t a = 1; a <= k; ++a) {
    const int chi = kronecker(d, a);
    if (chi != 0) b += chi * bernoulli_poly(r, frac(a, k));
  }
  b *= Rational(ipow(k, r - 1));
  const Rational l_value = -b / r;

  Integer corr = 0;
  for (std::int64_t e = 1; e <= f; ++e) {
    if (f % e) continue;
    const int mu = mobius(e);
    if (mu == 0) continue;
    const int chi = kronecker(d, e);
    if (chi == 0) continue;
    corr += mu * chi * ipow(e, r - 1) * divisor_power_sum(f / e, 2 * r - 1);
  }
  return l_value * Rational(corr);
}

JacobiSeries jacobi_eisenstein(int k, std::int64_t order) {
  if (k != 4 && k != 6) throw DomainError("jacobi_eisenstein needs k in {4,6}");
  if (order < 0) throw DomainError("order must be >= 0");
  const Rational zeta = zeta_negative(k - 1);  // zeta(3 - 2k)
  Accumulator acc;
  for (std::int64_t n = 0; n <= order; ++n) {
    const std::int64_t lmax = isqrt(4 * n);
    for (std::int64_t l = -lmax; l <= lmax; ++l) {
      const Rational c = cohen_number(k - 1, 4 * n - l * l) / zeta;
      if (!is_integral(c)) {
        throw IdentityViolation("E_" + std::to_string(k) + ",1 coefficient " + to_string(c) +
                                " at (" + std::to_string(n) + "," + std::to_string(l) +
                                ") is not integral");
      }
      if (c != 0) acc.emplace(Exponent{n, l}, c);
    }
  }
  JacobiSeries out;
  out.name = "E" + std::to_string(k) + ",1";
  out.series = GradedSeries::from_accumulator(two_var(1, 1, order), std::move(acc));
  out.weight = k;
  out.index = 1;
  return out;
}

JacobiSeries weak_jacobi(WeakJacobiKind kind, std::int64_t order) {
  if (order < 1) throw DomainError("weak_jacobi needs order >= 1");
  JacobiSeries out;
  if (kind == WeakJacobiKind::kPhi12_1) {
    const GradedSeries e4 = embed(classical_qseries(QSeriesKind::kE4, order), 1);
    const GradedSeries e6 = embed(classical_qseries(QSeriesKind::kE6, order), 1);
    const GradedSeries e41 = jacobi_eisenstein(4, order).series;
    const GradedSeries e61 = jacobi_eisenstein(6, order).series;
    out.series = (e4 * e4 * e41 - e6 * e61).scaled(Rational(1, 144));
    out.name = "phi12,1";
    out.weight = 12;
    out.index = 1;
  } else {
    // numerator of weight 12, divided by q * prod (1 - q^n)^24 via a shift
    // and a unit division
    const std::int64_t top = order + 1;
    const GradedSeries e41 = jacobi_eisenstein(4, top).series;
    const GradedSeries e61 = jacobi_eisenstein(6, top).series;
    GradedSeries num;
    if (kind == WeakJacobiKind::kPhi0_1) {
      num = weak_jacobi(WeakJacobiKind::kPhi12_1, top).series;
      out.name = "phi0,1";
      out.index = 1;
    } else {
      const GradedSeries e4 = embed(classical_qseries(QSeriesKind::kE4, top), 1);
      num = (e4 * e41 * e41 - e61 * e61).scaled(Rational(1, 288));
      out.name = "phi0,2";
      out.index = 2;
    }
    for (const auto& t : num.level(0)) {
      throw IdentityViolation(out.name + ": numerator has q^0 term at " + t.exponent.str() +
                              ", not divisible by Delta_12");
    }
    const GradedSeries shifted = num.shifted(Exponent{-1, 0});
    std::vector<ProductFactor> f;
    for (std::int64_t n = 1; n <= order; ++n) f.push_back({Exponent{n}, 24});
    const GradedSeries unit = embed(product_expand(one_var(1, order), f), 1);
    out.series = series_divide(shifted, unit);
    out.weight = 0;
  }
  require_integral(out.series, out.name);
  return out;
}

JacobiSeries psi_half_forms(PsiKind kind, std::int64_t order) {
  if (order < 1) throw DomainError("psi_half_forms needs order >= 1");
  const bool five = kind == PsiKind::kPsi5Half;
  const int eta_power = five ? 9 : 3;
  const std::int64_t q_unit = five ? 2 : 4;  // z1 scale of the output

  // eta^p theta_11 at z1 scale 24
  const GradedSeries eta = embed(classical_qseries(QSeriesKind::kEtaPower, order, eta_power), 2);
  const GradedSeries th = theta11(order, ThetaForm::kSum)
                              .series.rescaled(std::array<std::int64_t, 2>{24, 2},
                                               std::array<std::int64_t, 2>{1, 0}, 24 * order);
  // the psi_2,1/2 product and theta-sum displays carry the opposite sign to
  // eta^3 theta_11; those displays (c(1,1) = -1) are followed
  const GradedSeries prod = five ? eta * th : (eta * th).scaled(-1);
  const GradedSeries built = prod.rescaled(std::array<std::int64_t, 2>{q_unit, 2},
                                           std::array<std::int64_t, 2>{1, 0}, q_unit * order);

  const SeriesLayout layout = two_var(q_unit, 2, q_unit * order);
  const GradedSeries product =
      jacobi_product_tail(layout, q_unit, 2, five ? 10 : 4, order)
          .shifted(Exponent{1, -1})
          .scaled(five ? -1 : 1)
          .truncated(q_unit * order);
  require_equal(built, product, five ? "eta^9 theta_11 and the psi_5,1/2 product"
                                     : "-eta^3 theta_11 and the psi_2,1/2 product");

  if (!five) {
    // theta_11 times eta^3 = sum_{m = 1 mod 4} m q^(m^2/8)
    Accumulator acc;
    const std::int64_t lim = isqrt(8 * order) + 2;
    for (std::int64_t k = -lim; k <= lim; ++k) {
      if (positive_mod(k, 2) == 0) continue;
      for (std::int64_t m = -lim; m <= lim; ++m) {
        if (positive_mod(m, 4) != 1) continue;
        const std::int64_t n = (k * k + m * m) / 2;
        if (n > q_unit * order) continue;
        acc[Exponent{n, k}] += positive_mod((k + 1) / 2, 2) ? -m : m;
      }
    }
    require_equal(built, GradedSeries::from_accumulator(layout, std::move(acc)),
                  "psi_2,1/2 and its theta-sum form");
  }

  for (const auto& t : built.terms()) {
    const std::int64_t n = t.exponent[0], l = t.exponent[1];
    const bool ok = five ? (positive_mod(n, 2) == 1 && positive_mod(l, 2) == 1)
                         : (positive_mod(n, 4) == 1 && positive_mod(l, 2) == 1);
    if (!ok) {
      throw IdentityViolation("coefficient outside support at " + t.exponent.str());
    }
  }

  JacobiSeries out;
  out.name = five ? "psi5,1/2" : "psi2,1/2";
  out.series = built;
  out.weight = five ? Rational(5) : Rational(2);
  out.index = Rational(1, 2);
  return out;
}

JacobiCoefficients::JacobiCoefficients(JacobiSeries phi, std::int64_t index)
    : phi_(std::move(phi)), index_(index) {
  const auto& l = phi_.series.layout();
  if (l.dim != 2 || l.scales[0] != 1 || l.scales[1] != 1) {
    throw ConfigurationError("JacobiCoefficients needs a series in exp(2 pi i) units");
  }
  if (index_ < 1) throw DomainError("index must be >= 1");
}

Integer JacobiCoefficients::at(std::int64_t n, std::int64_t l) const {
  const std::int64_t t = index_;
  const std::int64_t lr = positive_mod(l + t - 1, 2 * t) - (t - 1);  // in [-(t-1), t]
  const std::int64_t r = (lr - l) / (2 * t);
  const std::int64_t nr = n + l * r + t * r * r;
  if (nr < 0) return 0;
  if (nr > phi_.depth()) {
    throw ConfigurationError(phi_.name + " needed at depth " + std::to_string(nr) +
                             " but computed only to " + std::to_string(phi_.depth()));
  }
  return phi_.at(nr, lr).get_num();
}

std::int64_t depth_for_discriminant(std::int64_t index, std::int64_t disc) {
  const std::int64_t num = disc + index * index;
  return num <= 0 ? 0 : (num + 4 * index - 1) / (4 * index);
}

GradedSeries hecke_T_minus(const JacobiCoefficients& phi, int weight, std::int64_t m,
                           const SeriesLayout& out) {
  if (m < 1) throw DomainError("Hecke index m must be >= 1");
  if (out.dim != 3) throw ConfigurationError("hecke output must be three-variable");
  const std::int64_t t = phi.index();
  Accumulator acc;
  for (std::int64_t a = 1; a <= m; ++a) {
    if (m % a) continue;
    const std::int64_t d = m / a;
    // m^(2k-1) d^(1-k)
    Rational factor = 1;
    const int em = 2 * weight - 1, ed = 1 - weight;
    factor *= em >= 0 ? Rational(ipow(m, em)) : Rational(1) / Rational(ipow(m, -em));
    factor *= ed >= 0 ? Rational(ipow(d, ed)) : Rational(1) / Rational(ipow(d, -ed));
    for (std::int64_t n = 0;; ++n) {
      const std::int64_t lmax = isqrt(4 * t * d * n + t * t);
      bool any = false;
      for (std::int64_t l = -lmax; l <= lmax; ++l) {
        const Exponent e{a * n, a * l, m * t};
        if (out.grade(e) > out.bound) continue;
        any = true;
        const Integer c = phi.at(d * n, l);
        if (c != 0) acc[e] += factor * Rational(c);
      }
      // past n > t d the minimum grade over l only grows
      if (!any && n > 4 * t * d + 4) break;
    }
  }
  return GradedSeries::from_accumulator(out, std::move(acc));
}

Report log_identity_check(const JacobiCoefficients& phi01, std::int64_t bound) {
  Report rep;
  rep.name = "log-identity";
  if (phi01.index() != 1) throw ConfigurationError("log identity check needs index 1");
  const SeriesLayout layout = SeriesLayout::make(3, std::array<std::int64_t, 3>{1, 1, 1},
                                                 std::array<std::int64_t, 3>{2, -1, 2}, bound);

  // 2(n + m) - l >= n + m - 1 on the weak support, so n + m <= bound + 1
  std::vector<ProductFactor> factors;
  for (std::int64_t n = 0; n <= bound + 1; ++n)
    for (std::int64_t m = 1; n + m <= bound + 1; ++m) {
      const std::int64_t lmax = isqrt(4 * n * m + 1);
      for (std::int64_t l = std::max(-lmax, 2 * n + 2 * m - bound); l <= lmax; ++l) {
        const Integer f = phi01.at(n * m, l);
        if (f != 0) factors.push_back({Exponent{n, l, m}, f});
      }
    }
  const GradedSeries neg_log = formal_log(product_expand(layout, factors)).scaled(-1);

  // divisor-sum form
  Accumulator expected;
  for (std::int64_t a = 0; a <= bound + 1; ++a)
    for (std::int64_t c = 1; a + c <= bound + 1; ++c) {
      const std::int64_t bmax = isqrt(4 * a * c + c * c) + 1;
      for (std::int64_t b = std::max(-bmax, 2 * a + 2 * c - bound); b <= bmax; ++b) {
        const std::int64_t g = std::gcd(std::gcd(a, b), c);
        Rational v = 0;
        for (std::int64_t t = 1; t <= g; ++t) {
          if (g % t) continue;
          v += Rational(phi01.at(a * c / (t * t), b / t)) / t;
        }
        if (v != 0) expected.emplace(Exponent{a, b, c}, v);
      }
    }
  const GradedSeries divisor_sum = GradedSeries::from_accumulator(layout, std::move(expected));

  GradedSeries hecke(layout);
  for (std::int64_t m = 1; m <= bound + 1; ++m) hecke = hecke + hecke_T_minus(phi01, 0, m, layout);

  auto compare = [&rep](const GradedSeries& x, const GradedSeries& y, const std::string& what) {
    std::size_t bad = 0;
    for (const auto& t : x.terms()) {
      if (y.coefficient(t.exponent) != t.coefficient) {
        if (bad++ == 0) {
          rep.fail(what + " at " + t.exponent.str() + ": " + to_string(t.coefficient) + " vs " +
                   to_string(y.coefficient(t.exponent)));
        }
      }
    }
    for (const auto& t : y.terms()) {
      if (x.coefficient(t.exponent) == 0) {
        if (bad++ == 0) rep.fail(what + " extra term at " + t.exponent.str());
      }
    }
    rep.note(what + ": " + std::to_string(x.size()) + " terms, " + std::to_string(bad) +
             " mismatches");
  };
  compare(neg_log, divisor_sum, "-log vs divisor sum");
  compare(neg_log, hecke, "-log vs sum of Hecke images");
  rep.note("coefficient at (1,1,1): " + to_string(neg_log.coefficient(Exponent{1, 1, 1})));
  rep.note("coefficient at (2,2,2): " + to_string(neg_log.coefficient(Exponent{2, 2, 2})));
  return rep;
}

}  // namespace kmforms
