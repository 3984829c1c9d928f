#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kmforms/exponent.hpp"
#include "kmforms/rational.hpp"

namespace kmforms {

using Weights = std::array<std::int64_t, Exponent::kMaxDim>;

// Variable count, per-variable scales (stored = scale * true exponent, with
// true exponents in exp(2 pi i z) units), grading weights and the bound on
// the grading. Two series combine only when dim, scales and weights agree.
struct SeriesLayout {
  std::size_t dim = 1;
  Weights scales{1, 1, 1, 1};
  Weights weights{1, 0, 0, 0};
  std::int64_t bound = 0;

  std::int64_t grade(const Exponent& e) const;
  bool same_frame(const SeriesLayout& o) const;

  static SeriesLayout make(std::size_t dim, std::span<const std::int64_t> scales,
                           std::span<const std::int64_t> weights, std::int64_t bound);
};

using Accumulator = std::unordered_map<Exponent, Rational, ExponentHash>;

struct Term {
  Exponent exponent;
  std::int64_t grade;
  Rational coefficient;
};

// Immutable sparse truncated series. Terms are kept sorted by (grade, coords),
// zero coefficients are never stored and every term has 0 <= grade <= bound.
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(SeriesLayout layout);

  static GradedSeries one(const SeriesLayout& layout);
  static GradedSeries monomial(const SeriesLayout& layout, const Exponent& e, const Rational& c);
  // Sums duplicate exponents, drops zeros and terms above the bound.
  // A term with negative grade is a DomainError.
  static GradedSeries from_terms(const SeriesLayout& layout,
                                 std::vector<std::pair<Exponent, Rational>> terms);
  static GradedSeries from_accumulator(const SeriesLayout& layout, Accumulator&& acc);

  const SeriesLayout& layout() const { return layout_; }
  std::int64_t bound() const { return layout_.bound; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;

  // Terms with grade exactly g, as a contiguous range.
  std::span<const Term> level(std::int64_t g) const;

  GradedSeries truncated(std::int64_t bound) const;
  // New scales must be multiples or divisors of the old ones; a coordinate
  // that does not divide exactly is a DomainError. The grading is replaced
  // by the given weights and bound.
  GradedSeries rescaled(std::span<const std::int64_t> scales, std::span<const std::int64_t> weights,
                        std::int64_t bound) const;
  // Same exponents under a different grading and bound; terms above the new
  // bound are dropped.
  GradedSeries regraded(std::span<const std::int64_t> weights, std::int64_t bound) const;
  // Multiplication by x^e; the bound moves with the grade of e.
  GradedSeries shifted(const Exponent& e) const;
  GradedSeries scaled(const Rational& c) const;

  friend bool operator==(const GradedSeries& a, const GradedSeries& b);

 private:
  SeriesLayout layout_;
  std::vector<Term> terms_;
  std::vector<std::size_t> level_start_;  // level_start_[g] = first index with grade >= g

  void index_levels();
};

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_add(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_sub(const GradedSeries& a, const GradedSeries& b);
GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);

// a / b where b's grade-0 part is a nonzero constant and every other term of
// b has positive grade. Exact up to the bound.
GradedSeries series_divide(const GradedSeries& a, const GradedSeries& b);

enum class LogExp { kLog, kExp };

// log needs constant term 1, exp needs constant term 0; all other terms need
// grade > 0.
GradedSeries formal_log_exp(const GradedSeries& s, LogExp direction);
GradedSeries formal_log(const GradedSeries& s);
GradedSeries formal_exp(const GradedSeries& s);

struct ProductFactor {
  Exponent exponent;
  Integer multiplicity;
};

// prod (1 - x^a)^e(a) truncated at layout.bound. Every a needs grade > 0.
GradedSeries product_expand(const SeriesLayout& layout, std::span<const ProductFactor> factors);

// (1 - x^a)^e for e >= 0 by binomial expansion; a may have grade 0.
GradedSeries binomial_factor(const SeriesLayout& layout, const Exponent& a, std::int64_t e);

// Unique e(.) with s = prod (1 - x^a)^e(a) up to the bound. Exponents are
// processed by increasing grade, then lexicographically; a non-integral
// exponent raises IdentityViolation naming it.
std::map<Exponent, Integer> extract_product_exponents(const GradedSeries& s);

}  // namespace kmforms
