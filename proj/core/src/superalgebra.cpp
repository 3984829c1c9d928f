#include "kmforms/superalgebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "kmforms/errors.hpp"
#include "kmforms/jacobi.hpp"
#include "kmforms/lift.hpp"
#include "kmforms/theta.hpp"

namespace kmforms {

namespace {

SeriesLayout lattice_layout(const ExampleData& ex, std::int64_t bound) {
  const std::array<std::int64_t, 3> w{ex.lambda_weights[0], ex.lambda_weights[1],
                                      ex.lambda_weights[2]};
  return SeriesLayout::make(3, std::array<std::int64_t, 3>{1, 1, 1}, w, bound);
}

Exponent to_exponent3(const IntVector& a) { return Exponent{a[0], a[1], a[2]}; }

bool same_ray(const IntVector& a, const IntVector& b) {
  const IntVector cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                        a[0] * b[1] - a[1] * b[0]};
  const bool parallel = cross[0] == 0 && cross[1] == 0 && cross[2] == 0;
  return parallel && a[0] * b[0] + a[1] * b[1] + a[2] * b[2] > 0;
}

// Counts compared term by term; the first mismatch becomes the witness.
std::size_t compare_series(Report& rep, const GradedSeries& got, const GradedSeries& want,
                           const std::string& what) {
  std::size_t bad = 0;
  auto check = [&](const Exponent& e) {
    const Rational a = got.coefficient(e), b = want.coefficient(e);
    if (a != b && bad++ == 0) {
      rep.fail(what + " at " + e.str() + ": " + to_string(a) + " vs " + to_string(b));
    }
  };
  for (const auto& t : got.terms()) check(t.exponent);
  for (const auto& t : want.terms()) {
    if (got.coefficient(t.exponent) == 0) check(t.exponent);
  }
  return bad;
}

GradedSeries geometric(const SeriesLayout& layout, std::size_t var, int sign) {
  std::vector<std::pair<Exponent, Rational>> terms;
  Exponent e = Exponent::zero(layout.dim);
  for (std::int64_t k = 0; k <= layout.bound; ++k) {
    e[var] = k;
    terms.emplace_back(e, (sign < 0 && k % 2) ? -1 : 1);
  }
  return GradedSeries::from_terms(layout, std::move(terms));
}

}  // namespace

SimpleRootSystem build_simple_roots(const SimpleMultiplicityTable& mult, int example) {
  const ExampleData& ex = example_data(example);
  const HyperbolicLattice& lat = ex.lattice;
  SimpleRootSystem sys;
  sys.example = example;
  sys.bound = mult.bound;
  sys.real_roots = ex.fundamental.roots;

  for (const auto& [a, v] : mult.m) {
    if (a == IntVector{0, 0, 0}) continue;
    const std::int64_t norm = lat.pair(a, a);
    if (norm > 0) {
      throw ConstructionError("positive-norm vector " + vector_str(a) + " carries m = " +
                              to_string(v));
    }
    if (norm < 0) sys.imaginary.emplace(a, v);
  }
  for (const auto& ray : mult.rays) {
    for (std::size_t k = 1; k <= ray.tau.size(); ++k) {
      if (ray.tau[k - 1] == 0) continue;
      const auto s = static_cast<std::int64_t>(k);
      sys.imaginary.emplace(IntVector{s * ray.generator[0], s * ray.generator[1],
                                      s * ray.generator[2]},
                            ray.tau[k - 1]);
    }
  }

  for (std::size_t i = 0; i < sys.real_roots.size(); ++i) {
    const LatticeVector& r = sys.real_roots[i];
    const Rational rr = lat.pair(r, r);
    if (rr <= 0) throw ConstructionError("real root " + vector_str(r) + " has norm " + to_string(rr));
    for (std::size_t j = 0; j < sys.real_roots.size(); ++j) {
      if (i == j) continue;
      const Rational p = lat.pair(r, sys.real_roots[j]);
      if (p > 0 || !is_integral(2 * p / rr)) {
        throw ConstructionError("real roots " + vector_str(r) + ", " +
                                vector_str(sys.real_roots[j]) + " pair to " + to_string(p));
      }
    }
    for (const auto& [a, v] : sys.imaginary) {
      const Rational p = lat.pair(r, to_rational(a));
      if (p > 0 || !is_integral(2 * p / rr)) {
        throw ConstructionError("real root " + vector_str(r) + " and imaginary " + vector_str(a) +
                                " pair to " + to_string(p));
      }
    }
  }
  for (auto i = sys.imaginary.begin(); i != sys.imaginary.end(); ++i) {
    if (!in_m2(ex, i->first)) throw ConstructionError(vector_str(i->first) + " is not in M_II");
    for (auto j = std::next(i); j != sys.imaginary.end(); ++j) {
      if (lat.pair(i->first, j->first) > 0) {
        throw ConstructionError("imaginary roots " + vector_str(i->first) + ", " +
                                vector_str(j->first) + " pair positively");
      }
    }
  }
  return sys;
}

GradedSeries epsilon_enumerate(const SeriesLayout& layout, std::span<const EnumRoot> roots,
                               const std::vector<std::vector<std::int64_t>>& pairing,
                               EpsilonSign sign) {
  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::int64_t> grade(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    grade[i] = layout.grade(roots[i].exponent);
    if (grade[i] <= 0) throw DomainError("simple root " + roots[i].exponent.str() + " has grade <= 0");
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return grade[a] < grade[b]; });

  Accumulator acc;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const Exponent&, std::int64_t, const Integer&)> dfs =
      [&](std::size_t start, const Exponent& cur, std::int64_t g, const Integer& coef) {
        acc[cur] += Rational(coef);
        for (std::size_t p = start; p < order.size(); ++p) {
          const std::size_t i = order[p];
          if (g + grade[i] > layout.bound) break;
          bool perpendicular = true;
          for (std::size_t c : chosen) perpendicular = perpendicular && pairing[i][c] == 0;
          if (!perpendicular) continue;
          const EnumRoot& r = roots[i];
          const bool odd = r.mu < 0;
          const Integer count = odd ? Integer(-r.mu) : r.mu;
          chosen.push_back(i);
          Exponent e = cur;
          for (std::int64_t j = 1; g + j * grade[i] <= layout.bound; ++j) {
            if (j >= 2 && r.norm != 0) break;
            e = e + r.exponent;
            Integer w;
            if (!odd) {
              if (count < j) break;
              w = binomial(count.get_si(), j);
              if (j % 2) w = -w;
            } else {
              // odd isotropic: multisets of size j from |mu| copies
              w = r.norm == 0 ? binomial(count.get_si() + j - 1, j) : count;
              if (sign == EpsilonSign::kPlain && j % 2) w = -w;
            }
            dfs(p + 1, e, g + j * grade[i], coef * w);
          }
          chosen.pop_back();
        }
      };
  dfs(0, Exponent::zero(layout.dim), 0, Integer(1));
  return GradedSeries::from_accumulator(layout, std::move(acc));
}

GradedSeries epsilon_correction_sum(const SimpleRootSystem& system, std::int64_t bound) {
  const ExampleData& ex = example_data(system.example);
  if (bound > system.bound) {
    throw ConfigurationError("correction sum bound " + std::to_string(bound) +
                             " exceeds the system bound " + std::to_string(system.bound));
  }
  const SeriesLayout layout = lattice_layout(ex, bound);
  std::vector<IntVector> vecs;
  std::vector<EnumRoot> roots;
  for (const auto& [a, mu] : system.imaginary) {
    if (lambda_of(ex, a) > bound) continue;
    vecs.push_back(a);
    roots.push_back({to_exponent3(a), ex.lattice.pair(a, a), mu});
  }
  std::vector<std::vector<std::int64_t>> pairing(roots.size(),
                                                 std::vector<std::int64_t>(roots.size()));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      pairing[i][j] = ex.lattice.pair(vecs[i], vecs[j]);
      if (i < j && pairing[i][j] == 0 &&
          !(roots[i].norm == 0 && roots[j].norm == 0 && same_ray(vecs[i], vecs[j]))) {
        throw UnexpectedGeometry("imaginary roots " + vector_str(vecs[i]) + " and " +
                                 vector_str(vecs[j]) + " are perpendicular off a common ray");
      }
    }
  return epsilon_enumerate(layout, roots, pairing, EpsilonSign::kSuper);
}

Report diagonal_denominator_check(std::span<const std::int64_t> diag, std::span<const bool> odd,
                                  std::int64_t bound) {
  const std::size_t n = diag.size();
  if (n < 1 || n > Exponent::kMaxDim || odd.size() != n) {
    throw DomainError("diagonal system needs 1.." + std::to_string(Exponent::kMaxDim) + " indices");
  }
  std::string desc = "diag(";
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i] > 0) throw DomainError("diagonal entries must be <= 0");
    desc += (i ? "," : "") + std::to_string(diag[i]) + (odd[i] ? "o" : "e");
  }
  desc += ")";

  std::vector<std::int64_t> ones(n, 1), scales(n, 1);
  const SeriesLayout layout = SeriesLayout::make(n, scales, ones, bound);
  std::vector<EnumRoot> roots;
  std::vector<std::vector<std::int64_t>> pairing(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e = Exponent::zero(n);
    e[i] = 1;
    roots.push_back({e, diag[i], odd[i] ? Integer(-1) : Integer(1)});
    pairing[i][i] = diag[i];
  }

  Report rep;
  rep.name = desc;
  for (EpsilonSign mode : {EpsilonSign::kSuper, EpsilonSign::kPlain}) {
    GradedSeries closed = GradedSeries::one(layout);
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e = Exponent::zero(n);
      e[i] = 1;
      GradedSeries f;
      if (!odd[i]) {
        f = binomial_factor(layout, e, 1);
      } else if (diag[i] < 0) {
        f = mode == EpsilonSign::kSuper ? GradedSeries::one(layout) + GradedSeries::monomial(layout, e, 1)
                                        : binomial_factor(layout, e, 1);
      } else {
        f = geometric(layout, i, mode == EpsilonSign::kSuper ? 1 : -1);
      }
      closed = closed * f;
    }
    const GradedSeries enumerated = epsilon_enumerate(layout, roots, pairing, mode);
    compare_series(rep, enumerated, closed,
                   std::string(mode == EpsilonSign::kSuper ? "super character" : "ch") + " of " + desc);
  }
  return rep;
}

Report diagonal_sweep(int max_indices, std::int64_t bound) {
  Report rep;
  rep.name = "diagonal-sweep";
  std::size_t systems = 0, failed = 0;
  for (int n = 1; n <= max_indices; ++n) {
    const int codes = 1 << (2 * n);
    for (int code = 0; code < codes; ++code) {
      std::vector<std::int64_t> diag(n);
      std::array<bool, Exponent::kMaxDim> odd{};
      for (int i = 0; i < n; ++i) {
        diag[i] = (code >> (2 * i)) & 1 ? -2 : 0;
        odd[i] = (code >> (2 * i + 1)) & 1;
      }
      const Report r = diagonal_denominator_check(diag, std::span<const bool>(odd.data(), n), bound);
      ++systems;
      if (!r.passed) {
        if (failed++ < 5) rep.merge(r);
        rep.passed = false;
      }
    }
  }
  rep.note(std::to_string(systems) + " diagonal systems at bound " + std::to_string(bound) + ", " +
           std::to_string(failed) + " mismatched");
  return rep;
}

SiegelCoefficientTable example_form_table(int example, const Truncation& truncation) {
  example_data(example);
  return example == 1 ? delta5(truncation) : f2_table(truncation);
}

Report correction_factor_check(int example, std::int64_t bound, std::int64_t expected_tau) {
  const ExampleData& ex = example_data(example);
  Report rep;
  rep.name = "correction-factor";
  const SimpleMultiplicityTable mult = extract_simple_multiplicities(
      example_form_table(example, Truncation{TruncationKind::kLambda, bound}), example);
  const SimpleRootSystem sys = build_simple_roots(mult, example);
  const GradedSeries s = epsilon_correction_sum(sys, bound);

  const SeriesLayout layout = lattice_layout(ex, bound);
  Accumulator bracket;
  bracket[Exponent{0, 0, 0}] = 1;
  for (const auto& [a, v] : mult.m) {
    if (a != IntVector{0, 0, 0}) bracket[to_exponent3(a)] -= Rational(v);
  }
  const std::size_t bad =
      compare_series(rep, s, GradedSeries::from_accumulator(layout, std::move(bracket)),
                     "epsilon sum vs 1 - sum m(a) x^a");
  rep.note("epsilon sum: " + std::to_string(s.size()) + " terms over " +
           std::to_string(sys.imaginary.size()) + " imaginary roots, " + std::to_string(bad) +
           " mismatches");

  for (const auto& ray : mult.rays) {
    const std::int64_t step = lambda_of(ex, ray.generator);
    const SeriesLayout ray_layout = SeriesLayout::make(1, std::array<std::int64_t, 1>{1},
                                                       std::array<std::int64_t, 1>{1}, bound / step);
    std::vector<EnumRoot> roots;
    std::vector<ProductFactor> factors;
    for (std::size_t k = 1; k <= ray.tau.size(); ++k) {
      const auto s_k = static_cast<std::int64_t>(k);
      if (ray.tau[k - 1] != 0) roots.push_back({Exponent{s_k}, 0, ray.tau[k - 1]});
      factors.push_back({Exponent{s_k}, expected_tau});
      if (ray.tau[k - 1] != expected_tau) {
        rep.fail("tau(" + std::to_string(k) + " " + vector_str(ray.generator) + ") = " +
                 to_string(ray.tau[k - 1]) + ", expected " + std::to_string(expected_tau));
      }
    }
    std::vector<std::vector<std::int64_t>> pairing(roots.size(),
                                                   std::vector<std::int64_t>(roots.size(), 0));
    const GradedSeries along = epsilon_enumerate(ray_layout, roots, pairing, EpsilonSign::kSuper);
    compare_series(rep, along, product_expand(ray_layout, factors),
                   "ray " + vector_str(ray.generator) + " against prod (1-q^k)^" +
                       std::to_string(expected_tau));
    std::string taus;
    for (const auto& t : ray.tau) taus += (taus.empty() ? "" : ",") + to_string(t);
    rep.note("ray " + vector_str(ray.generator) + ": tau = " + taus);
  }
  return rep;
}

Report denominator_identity_verify(int example, std::int64_t bound) {
  const ExampleData& ex = example_data(example);
  const ExponentMap map = exponent_map(example);
  Report rep;
  rep.name = "denominator-identity";

  const SiegelCoefficientTable table =
      example_form_table(example, Truncation{TruncationKind::kLambda, bound});
  const SeriesLayout layout = SeriesLayout::make(
      3, std::array<std::int64_t, 3>{1, 1, 1},
      std::array<std::int64_t, 3>{ex.product_weights[0], ex.product_weights[1], ex.product_weights[2]},
      bound);

  // Phi / e(rho) in product exponents
  Accumulator acc;
  for (const auto& [e, c] : table.entries) {
    LatticeVector v = map.from_exponent(e);
    IntVector a{};
    for (int i = 0; i < 3; ++i) {
      const Rational x = v[i] - ex.fundamental.rho[i];
      if (!is_integral(x)) throw IdentityViolation("exponent " + triple_str(e) + " is not rho + M");
      a[i] = to_int64(x.get_num());
    }
    acc.emplace(to_exponent3(map.to_product_exponent(a)), c / Rational(ex.normalizer));
  }
  const GradedSeries normalized = GradedSeries::from_accumulator(layout, std::move(acc));
  const auto extracted = extract_product_exponents(normalized);

  // positive roots n, m >= 0 with positive grade on the weak support
  const std::int64_t t = example == 1 ? 1 : 2;
  std::vector<Triple> box;
  std::int64_t max_disc = 0;
  for (std::int64_t n = 0; n <= bound + 2; ++n)
    for (std::int64_t m = 0; n + m <= bound + 2; ++m) {
      const std::int64_t lmax = isqrt(4 * t * n * m + t * t);
      for (std::int64_t l = -lmax; l <= lmax; ++l) {
        const std::int64_t g = layout.grade(Exponent{n, l, m});
        if (g <= 0 || g > bound) continue;
        box.push_back({n, l, m});
        max_disc = std::max(max_disc, 4 * t * n * m - l * l);
      }
    }
  const JacobiCoefficients phi(
      weak_jacobi(example == 1 ? WeakJacobiKind::kPhi0_1 : WeakJacobiKind::kPhi0_2,
                  std::max<std::int64_t>(1, depth_for_discriminant(t, max_disc))),
      t);

  std::size_t bad = 0, nonzero = 0;
  std::vector<ProductFactor> factors;
  std::map<Exponent, Integer> expected;
  for (const auto& b : box) {
    const Integer f = phi.at(b[0] * b[2], b[1]);
    if (f == 0) continue;
    const Exponent e{b[0], b[1], b[2]};
    expected.emplace(e, f);
    factors.push_back({e, f});
  }
  for (const auto& [e, f] : expected) {
    auto it = extracted.find(e);
    const Integer got = it == extracted.end() ? Integer(0) : it->second;
    if (got != f && bad++ == 0) {
      rep.fail("product exponent at " + e.str() + ": extracted " + to_string(got) + ", f(nm,l) = " +
               to_string(f));
    }
  }
  for (const auto& [e, v] : extracted) {
    ++nonzero;
    if (!expected.count(e) && bad++ == 0) {
      rep.fail("extracted exponent " + to_string(v) + " at " + e.str() + " where f(nm,l) = 0");
    }
  }
  rep.note("extraction vs " + phi.form().name + ": " + std::to_string(nonzero) +
           " nonzero exponents on lambda <= " + std::to_string(bound) + ", " +
           std::to_string(bad) + " mismatches");

  const GradedSeries product = product_expand(layout, factors);
  const std::size_t bad_side = compare_series(rep, product, normalized, "product side vs form");
  rep.note("product side vs normalized " + table.form + ": " + std::to_string(product.size()) +
           " terms, " + std::to_string(bad_side) + " mismatches");

  std::string row;
  for (std::int64_t l = -2; l <= 2; ++l) {
    auto it = extracted.find(Exponent{1, l, 0});
    row += (row.empty() ? "" : " ") + (it == extracted.end() ? std::string("0") : to_string(it->second));
  }
  // q^0 row of the weak Jacobi form: 10 at l=0 for phi0,1, 4 for phi0,2
  const std::string want_row = example == 1 ? "0 1 10 1 0" : "0 1 4 1 0";
  if (row == want_row) {
    rep.note("exponents at (1,l,0), l=-2..2: " + row);
  } else {
    rep.fail("exponents at (1,l,0), l=-2..2: " + row + ", expected " + want_row);
  }
  if (example == 1) {
    auto it = extracted.find(Exponent{1, 1, 1});
    const Integer v = it == extracted.end() ? Integer(0) : it->second;
    if (v != -64) rep.fail("exponent at (1,1,1) = " + to_string(v) + ", expected -64");
    rep.note("exponent at (1,1,1): " + to_string(v));
  }
  return rep;
}

}  // namespace kmforms
