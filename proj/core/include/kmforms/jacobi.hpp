#pragma once

#include <cstdint>
#include <string>

#include "kmforms/rational.hpp"
#include "kmforms/report.hpp"
#include "kmforms/series.hpp"

namespace kmforms {

// Two-variable series in (n, l) with grading by n, plus weight/index tags.
// The z1 and z2 scales of the series are the unit convention.
struct JacobiSeries {
  std::string name;
  GradedSeries series;
  Rational weight;
  Rational index;

  // Coefficient at stored coordinates (n, l).
  Rational at(std::int64_t n, std::int64_t l) const;
  // Largest stored n the series is complete to.
  std::int64_t depth() const { return series.bound(); }
};

enum class QSeriesKind { kEtaPower, kE4, kE6, kDelta12 };

// One-variable q-series through q^order (true units). eta^p uses scale 24 so
// its prefix q^(p/24) is an integer exponent; the others use scale 1.
GradedSeries classical_qseries(QSeriesKind kind, std::int64_t order, int power = 1);

enum class ThetaForm { kSum, kProduct };

// theta_11 through q^order, z1 scale 8, z2 scale 2.
JacobiSeries theta11(std::int64_t order, ThetaForm form);

// H(r, N) for r in {3, 5}.
Rational cohen_number(int r, std::int64_t n);

// E_{k,1}, k in {4, 6}, in exp(2 pi i) units through q^order.
JacobiSeries jacobi_eisenstein(int k, std::int64_t order);

enum class WeakJacobiKind { kPhi12_1, kPhi0_1, kPhi0_2 };

JacobiSeries weak_jacobi(WeakJacobiKind kind, std::int64_t order);

enum class PsiKind { kPsi5Half, kPsi2Half };

// psi_{5,1/2} = eta^9 theta_11 in exp(pi i) units (scales 2,2);
// psi_{2,1/2} = -eta^3 theta_11 (sign of its product display) with z1 in exp(pi i/2) units (scales 4,2).
// Both are checked against their product forms. order is in q units.
JacobiSeries psi_half_forms(PsiKind kind, std::int64_t order);

// Coefficients c(n, l) of an integral-index Jacobi form at any depth,
// reduced through c(n, l) = c(n + l r + t r^2, l + 2 t r).
class JacobiCoefficients {
 public:
  JacobiCoefficients(JacobiSeries phi, std::int64_t index);
  const JacobiSeries& form() const { return phi_; }
  std::int64_t index() const { return index_; }
  // ConfigurationError when the reduced coefficient lies beyond the depth.
  Integer at(std::int64_t n, std::int64_t l) const;

 private:
  JacobiSeries phi_;
  std::int64_t index_;
};

// Depth needed so that every c(n, l) with 4 t n - l^2 <= disc can be reduced.
std::int64_t depth_for_discriminant(std::int64_t index, std::int64_t disc);

// m^2 (phi~ | T_-(m)) as a three-variable series in exp(2 pi i) units:
// coefficient m^(2k-1) sum_{ad=m} d^(1-k) c(dn, l) at (an, al, m t).
// The output layout supplies the grading and bound.
GradedSeries hecke_T_minus(const JacobiCoefficients& phi, int weight, std::int64_t m,
                           const SeriesLayout& out);

// -log of prod_{n>=0, m>0, l} (1 - x^(n,l,m))^f(nm,l) against the divisor
// sum and against sum_m m^2 (phi~ | T_-(m)), on 2(n+m) - l <= bound.
Report log_identity_check(const JacobiCoefficients& phi01, std::int64_t bound);

}  // namespace kmforms
