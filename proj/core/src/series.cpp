#include "kmforms/series.hpp"

#include <algorithm>
#include <set>

#include "kmforms/errors.hpp"

namespace kmforms {

namespace {

std::string layout_str(const SeriesLayout& l) {
  std::string s = "dim=" + std::to_string(l.dim) + " scales=(";
  for (std::size_t i = 0; i < l.dim; ++i) s += (i ? "," : "") + std::to_string(l.scales[i]);
  s += ") weights=(";
  for (std::size_t i = 0; i < l.dim; ++i) s += (i ? "," : "") + std::to_string(l.weights[i]);
  return s + ")";
}

void require_frame(const SeriesLayout& a, const SeriesLayout& b) {
  if (!a.same_frame(b)) {
    throw ConfigurationError("incompatible series layouts: " + layout_str(a) + " vs " +
                             layout_str(b));
  }
}

void require_dim(const SeriesLayout& l, const Exponent& e) {
  if (e.dim() != l.dim) {
    throw ConfigurationError("exponent " + e.str() + " does not match series dimension " +
                             std::to_string(l.dim));
  }
}

bool all_integral(const GradedSeries& s) {
  for (const auto& t : s.terms()) {
    if (!is_integral(t.coefficient)) return false;
  }
  return true;
}

SeriesLayout with_bound(SeriesLayout l, std::int64_t bound) {
  l.bound = bound;
  return l;
}

// Level-indexed scratch storage for the triangular recursions below.
using Levels = std::vector<std::vector<std::pair<Exponent, Rational>>>;

void require_positive_tail(const GradedSeries& s, const char* what) {
  for (const auto& t : s.level(0)) {
    if (!t.exponent.is_zero()) {
      throw DomainError(std::string(what) + ": non-constant term " + t.exponent.str() +
                        " has grade 0; grading is not strictly positive");
    }
  }
}

}  // namespace

std::int64_t SeriesLayout::grade(const Exponent& e) const {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < dim; ++i) g += weights[i] * e[i];
  return g;
}

bool SeriesLayout::same_frame(const SeriesLayout& o) const {
  if (dim != o.dim) return false;
  for (std::size_t i = 0; i < dim; ++i) {
    if (scales[i] != o.scales[i] || weights[i] != o.weights[i]) return false;
  }
  return true;
}

SeriesLayout SeriesLayout::make(std::size_t dim, std::span<const std::int64_t> scales,
                                std::span<const std::int64_t> weights, std::int64_t bound) {
  if (dim == 0 || dim > Exponent::kMaxDim || scales.size() != dim || weights.size() != dim) {
    throw ConfigurationError("bad series layout dimensions");
  }
  SeriesLayout l;
  l.dim = dim;
  l.scales = {1, 1, 1, 1};
  l.weights = {0, 0, 0, 0};
  for (std::size_t i = 0; i < dim; ++i) {
    if (scales[i] < 1) throw ConfigurationError("exponent scale must be >= 1");
    l.scales[i] = scales[i];
    l.weights[i] = weights[i];
  }
  l.bound = bound;
  return l;
}

GradedSeries::GradedSeries(SeriesLayout layout) : layout_(layout) { index_levels(); }

GradedSeries GradedSeries::one(const SeriesLayout& layout) {
  return monomial(layout, Exponent::zero(layout.dim), 1);
}

GradedSeries GradedSeries::monomial(const SeriesLayout& layout, const Exponent& e,
                                    const Rational& c) {
  return from_terms(layout, {{e, c}});
}

GradedSeries GradedSeries::from_terms(const SeriesLayout& layout,
                                      std::vector<std::pair<Exponent, Rational>> terms) {
  Accumulator acc;
  for (auto& [e, c] : terms) {
    require_dim(layout, e);
    acc[e] += c;
  }
  return from_accumulator(layout, std::move(acc));
}

GradedSeries GradedSeries::from_accumulator(const SeriesLayout& layout, Accumulator&& acc) {
  GradedSeries s(layout);
  s.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c == 0) continue;
    const std::int64_t g = layout.grade(e);
    if (g < 0) {
      throw DomainError("term " + e.str() + " has negative grade " + std::to_string(g));
    }
    if (g > layout.bound) continue;
    s.terms_.push_back(Term{e, g, std::move(c)});
  }
  std::sort(s.terms_.begin(), s.terms_.end(), [](const Term& a, const Term& b) {
    if (a.grade != b.grade) return a.grade < b.grade;
    return a.exponent < b.exponent;
  });
  s.index_levels();
  return s;
}

void GradedSeries::index_levels() {
  const std::int64_t b = std::max<std::int64_t>(layout_.bound, 0);
  level_start_.assign(static_cast<std::size_t>(b) + 2, terms_.size());
  std::size_t i = 0;
  for (std::int64_t g = 0; g <= b + 1; ++g) {
    while (i < terms_.size() && terms_[i].grade < g) ++i;
    level_start_[static_cast<std::size_t>(g)] = i;
  }
}

std::span<const Term> GradedSeries::level(std::int64_t g) const {
  if (g < 0 || g > layout_.bound) return {};
  const auto lo = level_start_[static_cast<std::size_t>(g)];
  const auto hi = level_start_[static_cast<std::size_t>(g) + 1];
  return std::span<const Term>(terms_).subspan(lo, hi - lo);
}

Rational GradedSeries::coefficient(const Exponent& e) const {
  require_dim(layout_, e);
  const auto lvl = level(layout_.grade(e));
  auto it = std::lower_bound(lvl.begin(), lvl.end(), e,
                             [](const Term& t, const Exponent& x) { return t.exponent < x; });
  if (it != lvl.end() && it->exponent == e) return it->coefficient;
  return 0;
}

Rational GradedSeries::constant_term() const { return coefficient(Exponent::zero(layout_.dim)); }

GradedSeries GradedSeries::truncated(std::int64_t bound) const {
  GradedSeries s(with_bound(layout_, bound));
  for (const auto& t : terms_) {
    if (t.grade <= bound) s.terms_.push_back(t);
  }
  s.index_levels();
  return s;
}

GradedSeries GradedSeries::rescaled(std::span<const std::int64_t> scales,
                                    std::span<const std::int64_t> weights,
                                    std::int64_t bound) const {
  const SeriesLayout nl = SeriesLayout::make(layout_.dim, scales, weights, bound);
  Accumulator acc;
  for (const auto& t : terms_) {
    Exponent e = t.exponent;
    for (std::size_t i = 0; i < layout_.dim; ++i) {
      const std::int64_t from = layout_.scales[i];
      const std::int64_t to = nl.scales[i];
      if (to % from == 0) {
        e[i] *= to / from;
      } else if (from % to == 0) {
        if (e[i] % (from / to) != 0) {
          throw DomainError("exponent " + t.exponent.str() + " not representable at scale " +
                            std::to_string(to));
        }
        e[i] /= from / to;
      } else {
        throw ConfigurationError("scales " + std::to_string(from) + " and " + std::to_string(to) +
                                 " are not commensurate by an integer factor");
      }
    }
    acc.emplace(e, t.coefficient);
  }
  return from_accumulator(nl, std::move(acc));
}

GradedSeries GradedSeries::regraded(std::span<const std::int64_t> weights,
                                    std::int64_t bound) const {
  return rescaled(std::span<const std::int64_t>(layout_.scales.data(), layout_.dim), weights,
                  bound);
}

GradedSeries GradedSeries::shifted(const Exponent& e) const {
  require_dim(layout_, e);
  const std::int64_t g = layout_.grade(e);
  GradedSeries s(with_bound(layout_, layout_.bound + g));
  s.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.grade + g < 0) {
      throw DomainError("shift by " + e.str() + " moves " + t.exponent.str() +
                        " to negative grade");
    }
    s.terms_.push_back(Term{t.exponent + e, t.grade + g, t.coefficient});
  }
  s.index_levels();
  return s;
}

GradedSeries GradedSeries::scaled(const Rational& c) const {
  GradedSeries s(layout_);
  if (c == 0) return s;
  s.terms_ = terms_;
  for (auto& t : s.terms_) t.coefficient *= c;
  s.index_levels();
  return s;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
  if (!a.layout_.same_frame(b.layout_) || a.layout_.bound != b.layout_.bound) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponent != b.terms_[i].exponent ||
        a.terms_[i].coefficient != b.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
  require_frame(a.layout(), b.layout());
  const std::int64_t bound = std::min(a.bound(), b.bound());
  const SeriesLayout layout = with_bound(a.layout(), bound);
  const auto bt = b.terms();

  if (all_integral(a) && all_integral(b)) {
    std::unordered_map<Exponent, Integer, ExponentHash> acc;
    for (const auto& ta : a.terms()) {
      if (ta.grade > bound) break;
      const Integer& ca = ta.coefficient.get_num();
      for (const auto& tb : bt) {
        if (ta.grade + tb.grade > bound) break;
        Integer& slot = acc[ta.exponent + tb.exponent];
        mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), tb.coefficient.get_num_mpz_t());
      }
    }
    Accumulator out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) {
      if (c != 0) out.emplace(e, Rational(c));
    }
    return GradedSeries::from_accumulator(layout, std::move(out));
  }

  Accumulator acc;
  Rational prod;
  for (const auto& ta : a.terms()) {
    if (ta.grade > bound) break;
    for (const auto& tb : bt) {
      if (ta.grade + tb.grade > bound) break;
      mpq_mul(prod.get_mpq_t(), ta.coefficient.get_mpq_t(), tb.coefficient.get_mpq_t());
      acc[ta.exponent + tb.exponent] += prod;
    }
  }
  return GradedSeries::from_accumulator(layout, std::move(acc));
}

namespace {

GradedSeries combine(const GradedSeries& a, const GradedSeries& b, int sign) {
  require_frame(a.layout(), b.layout());
  const std::int64_t bound = std::min(a.bound(), b.bound());
  Accumulator acc;
  for (const auto& t : a.terms()) acc[t.exponent] += t.coefficient;
  for (const auto& t : b.terms()) {
    if (sign > 0) {
      acc[t.exponent] += t.coefficient;
    } else {
      acc[t.exponent] -= t.coefficient;
    }
  }
  return GradedSeries::from_accumulator(with_bound(a.layout(), bound), std::move(acc));
}

GradedSeries from_levels(const SeriesLayout& layout, Levels&& levels) {
  Accumulator acc;
  for (auto& lvl : levels) {
    for (auto& [e, c] : lvl) acc.emplace(e, std::move(c));
  }
  return GradedSeries::from_accumulator(layout, std::move(acc));
}

std::vector<std::pair<Exponent, Rational>> drain(Accumulator& acc) {
  std::vector<std::pair<Exponent, Rational>> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) out.emplace_back(e, std::move(c));
  }
  return out;
}

}  // namespace

GradedSeries series_add(const GradedSeries& a, const GradedSeries& b) { return combine(a, b, 1); }
GradedSeries series_sub(const GradedSeries& a, const GradedSeries& b) { return combine(a, b, -1); }
GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) { return series_mul(a, b); }
GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) { return series_add(a, b); }
GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) { return series_sub(a, b); }

GradedSeries series_divide(const GradedSeries& a, const GradedSeries& b) {
  require_frame(a.layout(), b.layout());
  require_positive_tail(b, "divisor");
  const Rational c0 = b.constant_term();
  if (c0 == 0) throw DomainError("divisor has zero constant term");
  const std::int64_t bound = std::min(a.bound(), b.bound());

  Levels q(static_cast<std::size_t>(bound) + 1);
  Rational prod;
  for (std::int64_t g = 0; g <= bound; ++g) {
    Accumulator acc;
    for (const auto& t : a.level(g)) acc[t.exponent] += t.coefficient;
    for (std::int64_t g1 = 1; g1 <= g; ++g1) {
      for (const auto& tb : b.level(g1)) {
        for (const auto& [e, c] : q[static_cast<std::size_t>(g - g1)]) {
          mpq_mul(prod.get_mpq_t(), tb.coefficient.get_mpq_t(), c.get_mpq_t());
          acc[tb.exponent + e] -= prod;
        }
      }
    }
    auto lvl = drain(acc);
    for (auto& [e, c] : lvl) c /= c0;
    q[static_cast<std::size_t>(g)] = std::move(lvl);
  }
  return from_levels(with_bound(a.layout(), bound), std::move(q));
}

GradedSeries formal_log(const GradedSeries& s) {
  if (s.constant_term() != 1) {
    throw DomainError("log needs constant term 1, got " + to_string(s.constant_term()));
  }
  require_positive_tail(s, "log");
  const std::int64_t bound = s.bound();

  // T = D(log s) with D the grading derivative: D(s) = s * T.
  Levels t(static_cast<std::size_t>(bound) + 1);
  Rational prod;
  for (std::int64_t g = 1; g <= bound; ++g) {
    Accumulator acc;
    for (const auto& ts : s.level(g)) acc[ts.exponent] += ts.coefficient * g;
    for (std::int64_t g1 = 1; g1 < g; ++g1) {
      for (const auto& ts : s.level(g1)) {
        for (const auto& [e, c] : t[static_cast<std::size_t>(g - g1)]) {
          mpq_mul(prod.get_mpq_t(), ts.coefficient.get_mpq_t(), c.get_mpq_t());
          acc[ts.exponent + e] -= prod;
        }
      }
    }
    t[static_cast<std::size_t>(g)] = drain(acc);
  }
  for (std::int64_t g = 1; g <= bound; ++g) {
    for (auto& [e, c] : t[static_cast<std::size_t>(g)]) c /= g;
  }
  return from_levels(s.layout(), std::move(t));
}

GradedSeries formal_exp(const GradedSeries& s) {
  if (s.constant_term() != 0) {
    throw DomainError("exp needs constant term 0, got " + to_string(s.constant_term()));
  }
  require_positive_tail(s, "exp");
  const std::int64_t bound = s.bound();

  // D(E) = E * D(s), solved level by level.
  Levels e(static_cast<std::size_t>(bound) + 1);
  e[0].emplace_back(Exponent::zero(s.layout().dim), 1);
  Rational prod;
  for (std::int64_t g = 1; g <= bound; ++g) {
    Accumulator acc;
    for (std::int64_t g1 = 1; g1 <= g; ++g1) {
      for (const auto& ts : s.level(g1)) {
        const Rational ds = ts.coefficient * g1;
        for (const auto& [x, c] : e[static_cast<std::size_t>(g - g1)]) {
          mpq_mul(prod.get_mpq_t(), ds.get_mpq_t(), c.get_mpq_t());
          acc[ts.exponent + x] += prod;
        }
      }
    }
    auto lvl = drain(acc);
    for (auto& [x, c] : lvl) c /= g;
    e[static_cast<std::size_t>(g)] = std::move(lvl);
  }
  return from_levels(s.layout(), std::move(e));
}

GradedSeries formal_log_exp(const GradedSeries& s, LogExp direction) {
  return direction == LogExp::kLog ? formal_log(s) : formal_exp(s);
}

GradedSeries product_expand(const SeriesLayout& layout, std::span<const ProductFactor> factors) {
  Accumulator acc;
  for (const auto& f : factors) {
    require_dim(layout, f.exponent);
    const std::int64_t g = layout.grade(f.exponent);
    if (g <= 0) {
      throw DomainError("product factor " + f.exponent.str() + " has non-positive grade");
    }
    if (f.multiplicity == 0) continue;
    // log (1 - x^a)^e = -e * sum_k x^(ka)/k
    for (std::int64_t k = 1; k * g <= layout.bound; ++k) {
      acc[f.exponent * k] -= frac(f.multiplicity, k);
    }
  }
  return formal_exp(GradedSeries::from_accumulator(layout, std::move(acc)));
}

GradedSeries binomial_factor(const SeriesLayout& layout, const Exponent& a, std::int64_t e) {
  require_dim(layout, a);
  if (e < 0) throw DomainError("binomial_factor needs a non-negative power");
  const std::int64_t g = layout.grade(a);
  if (g < 0) throw DomainError("binomial factor " + a.str() + " has negative grade");
  Accumulator acc;
  for (std::int64_t j = 0; j <= e && j * g <= layout.bound; ++j) {
    Integer c = binomial(e, j);
    if (j % 2) c = -c;
    acc[a * j] += Rational(c);
  }
  return GradedSeries::from_accumulator(layout, std::move(acc));
}

std::map<Exponent, Integer> extract_product_exponents(const GradedSeries& s) {
  const GradedSeries log_s = formal_log(s);
  const SeriesLayout& layout = s.layout();

  std::map<Exponent, Integer> found;
  std::set<std::pair<std::int64_t, Exponent>> pending;
  for (const auto& t : log_s.terms()) pending.emplace(t.grade, t.exponent);

  // log s = -sum_a e(a) sum_k x^(ka)/k, so at beta:
  // e(beta) = -c(beta) - sum_{k>=2, beta=k*alpha} e(alpha)/k.
  while (!pending.empty()) {
    const auto [g, beta] = *pending.begin();
    pending.erase(pending.begin());
    Rational val = -log_s.coefficient(beta);
    for (std::int64_t k = 2; k <= g; ++k) {
      if (g % k != 0 || !beta.divisible_by(k)) continue;
      auto it = found.find(beta.divided_by(k));
      if (it != found.end()) val -= frac(it->second, k);
    }
    if (val == 0) continue;
    if (!is_integral(val)) {
      throw IdentityViolation("non-integral product exponent " + to_string(val) + " at " +
                              beta.str());
    }
    found.emplace(beta, val.get_num());
    for (std::int64_t k = 2; k * g <= layout.bound; ++k) pending.emplace(k * g, beta * k);
  }
  return found;
}

}  // namespace kmforms
