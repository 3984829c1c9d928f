#include "kmforms/checks.hpp"

#include <chrono>

#include "kmforms/errors.hpp"
#include "kmforms/jacobi.hpp"
#include "kmforms/lattice.hpp"
#include "kmforms/lift.hpp"
#include "kmforms/superalgebra.hpp"
#include "kmforms/theta.hpp"

namespace kmforms {

namespace {

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + to_string(x);
  return s;
}

void expect_row(Report& r, const std::string& what, const std::vector<Rational>& got,
                const std::vector<Rational>& want) {
  if (got == want) {
    r.note(what + ": " + join(got));
  } else {
    r.fail(what + ": got " + join(got) + ", expected " + join(want));
  }
}

std::vector<Rational> row(const JacobiSeries& s, std::int64_t n, std::int64_t l0, std::int64_t l1) {
  std::vector<Rational> out;
  for (std::int64_t l = l0; l <= l1; ++l) out.push_back(s.at(n, l));
  return out;
}

void expect_table(Report& r, const std::string& what, const SiegelCoefficientTable& want,
                  const SiegelCoefficientTable& got) {
  if (auto m = first_mismatch(want, got)) {
    r.fail(what + " " + m->str());
  } else {
    r.note(what + ": " + std::to_string(want.entries.size()) + " vs " +
           std::to_string(got.entries.size()) + " coefficients, no mismatch");
  }
}

Report a1(const CheckOptions& o) {
  Report r;
  const std::int64_t trace = o.bound.value_or(16);
  const auto t0 = std::chrono::steady_clock::now();
  // support and 64 | f are asserted during construction
  const SiegelCoefficientTable t = delta5(trace);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (t.at({1, 1, 1}) != 64) r.fail("f(1,1,1) = " + to_string(t.at({1, 1, 1})));
  r.note("trace <= " + std::to_string(trace) + ": " + std::to_string(t.entries.size()) +
         " nonzero coefficients, all divisible by 64 on n,l,m odd, 4nm - l^2 > 0");
  r.note("f(1,1,1) = " + to_string(t.at({1, 1, 1})));
  r.note("built in " + std::to_string(secs) + " s");
  if (secs > 10) r.fail("construction took " + std::to_string(secs) + " s");
  return r;
}

Report a2(const CheckOptions& o) {
  Report r;
  const std::int64_t order = o.order.value_or(8);
  if (order < 0) throw DomainError("order must be >= 0");
  const SiegelCoefficientTable t = delta5(2 * order + 2);
  std::vector<ProductFactor> f;
  for (std::int64_t k = 1; k <= order; ++k) f.push_back({Exponent{k}, 9});
  const GradedSeries prod = product_expand(
      SeriesLayout::make(1, std::array<std::int64_t, 1>{1}, std::array<std::int64_t, 1>{1}, order), f);
  std::vector<Rational> lhs, rhs;
  for (std::int64_t k = 0; k <= order; ++k) {
    lhs.push_back(t.at({1 + 2 * k, 1, 1}) / 64);
    rhs.push_back(prod.coefficient(Exponent{k}));
  }
  expect_row(r, "f(1+2t,1,1)/64 against prod (1-q^k)^9 through q^" + std::to_string(order), lhs, rhs);
  const std::vector<Rational> frozen{1, -9, 27, -12, -90, 135, 54, -99, -189};
  for (std::size_t k = 0; k < frozen.size() && k < rhs.size(); ++k) {
    if (rhs[k] != frozen[k]) r.fail("oracle q^" + std::to_string(k) + ": " + to_string(rhs[k]));
  }
  return r;
}

Report a3(const CheckOptions& o) {
  Report r;
  const std::int64_t trace = o.bound.value_or(16);
  const GradedSeries slice = fourier_jacobi_slice(delta5(trace), 1).scaled(Rational(1, 64));
  const std::int64_t order = slice.bound() / 2 + 1;
  // psi_half_forms already equates eta^9 theta_11 with the product form
  const JacobiSeries psi = psi_half_forms(PsiKind::kPsi5Half, order);
  const GradedSeries want = psi.series.truncated(slice.bound());
  std::size_t bad = 0;
  for (const auto& s : {slice, want}) {
    for (const auto& term : s.terms()) {
      if (slice.coefficient(term.exponent) != want.coefficient(term.exponent) && bad++ == 0) {
        r.fail("slice vs psi at " + term.exponent.str() + ": " +
               to_string(slice.coefficient(term.exponent)) + " vs " +
               to_string(want.coefficient(term.exponent)));
      }
    }
  }
  r.note("m=1 slice of Delta_5/64 through q^(" + std::to_string(slice.bound()) + "/2): " +
         std::to_string(slice.size()) + " terms, eta^9 theta_11 = product form, " +
         std::to_string(bad) + " mismatches");
  return r;
}

Report a4(const CheckOptions& o) {
  Report r;
  const Truncation tr{TruncationKind::kTrace, o.bound.value_or(16)};
  const LiftSpec spec = maass_lift_spec();
  const std::int64_t order = lift_input_depth(spec, tr) / 2 + 1;
  const SiegelCoefficientTable lift =
      arithmetic_lift(psi_half_forms(PsiKind::kPsi5Half, order), spec, tr);
  expect_table(r, "lift of psi_5,1/2 vs Delta_5/64", delta5(tr).scaled(Rational(1, 64)), lift);
  for (const auto& [e, c] : lift.entries) {
    if (!spec.in_support(e)) r.fail("lift outside support at " + triple_str(e));
  }
  r.note("g(1,1) = " + to_string(lift.at({1, 1, 1})) + ", g(3,1) = " + to_string(lift.at({3, 1, 1})));
  return r;
}

Report a5(const CheckOptions& o) { return denominator_identity_verify(1, o.bound.value_or(24)); }

Report a6(const CheckOptions& o) {
  const SiegelCoefficientTable t = delta5(Truncation{TruncationKind::kLambda, o.bound.value_or(24)});
  const auto w = weyl_enumerate(1, 3);
  return symmetry_audit(t, example_data(1), w);
}

Report a7(const CheckOptions& o) {
  Report r;
  const std::int64_t bound = o.bound.value_or(24);
  const SiegelCoefficientTable t = delta5(Truncation{TruncationKind::kLambda, bound});
  const SimpleMultiplicityTable m = extract_simple_multiplicities(t, 1);
  int levels = 0;
  const SiegelCoefficientTable sum = sum_side_reconstruct(m, 1, bound, &levels);
  expect_table(r, "Weyl-orbit sum vs Delta_5/64", t.scaled(Rational(1, 64)), sum);
  r.note(std::to_string(m.m.size()) + " nonzero m(a), orbit levels used: " + std::to_string(levels));
  return r;
}

Report a8(const CheckOptions& o) {
  Report r;
  const std::int64_t bound = o.bound.value_or(24);
  const SimpleMultiplicityTable m =
      extract_simple_multiplicities(delta5(Truncation{TruncationKind::kLambda, bound}), 1);
  const std::vector<IntVector> want{{0, 0, 2}, {2, -2, 2}, {2, 0, 0}};
  std::vector<IntVector> got;
  for (const auto& ray : m.rays) got.push_back(ray.generator);
  if (got != want) r.fail("isotropic ray generators differ from 2f2, 2f-2, 2f2-2f3+2f-2");
  for (const auto& ray : m.rays) {
    std::string taus;
    for (const auto& t : ray.tau) taus += (taus.empty() ? "" : ",") + to_string(t);
    if (ray.tau.size() < 6) r.fail("ray " + vector_str(ray.generator) + " computed only to k=" +
                                   std::to_string(ray.tau.size()));
    for (std::size_t k = 0; k < ray.tau.size(); ++k) {
      if (ray.tau[k] != 9) r.fail("tau(" + std::to_string(k + 1) + "*" + vector_str(ray.generator) + ") = " + to_string(ray.tau[k]));
    }
    r.note("ray " + vector_str(ray.generator) + ": tau = " + taus);
  }
  return r;
}

Report a9(const CheckOptions& o) {
  Report r;
  const std::int64_t bound = o.bound.value_or(24);
  const SiegelCoefficientTable f2 = f2_table(Truncation{TruncationKind::kLambda, bound});
  const Triple lead{1, -1, 1};
  for (const auto& [e, c] : f2.entries) {
    if (twice_lambda(f2.unit, e) < twice_lambda(f2.unit, lead)) {
      r.fail("coefficient below the leading exponent at " + triple_str(e));
    }
  }
  if (f2.at(lead) != 1) r.fail("F2 at (1,-1,1) = " + to_string(f2.at(lead)));
  r.note("F2 at (1,-1,1) = " + to_string(f2.at(lead)) + ", " + std::to_string(f2.entries.size()) +
         " coefficients on lambda <= " + std::to_string(bound));
  r.merge(denominator_identity_verify(2, bound));
  r.merge(correction_factor_check(2, bound, 3));
  return r;
}

Report a10(const CheckOptions& o) {
  Report r;
  r.merge(diagonal_sweep(4, 12));
  r.merge(correction_factor_check(1, o.bound.value_or(24), 9));
  return r;
}

Report a11(const CheckOptions&) { return wedge_square_check(); }

Report a12(const CheckOptions&) {
  Report r;
  const std::vector<std::vector<std::vector<std::int64_t>>> grams{
      {{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}},
      {{4, -4, -12, -4}, {-4, 4, -4, -12}, {-12, -4, 4, -4}, {-4, -12, -4, 4}}};
  const std::vector<std::size_t> weyl_counts{22, 53};
  for (int ex = 1; ex <= 2; ++ex) {
    const ExampleData& d = example_data(ex);
    const std::string tag = "example " + std::to_string(ex);
    const auto& want = grams[ex - 1];
    bool same = d.fundamental.root_gram.size() == want.size();
    for (std::size_t i = 0; same && i < want.size(); ++i)
      for (std::size_t j = 0; j < want.size(); ++j) same = same && d.fundamental.root_gram[i][j] == want[i][j];
    if (same) {
      r.note(tag + ": Gram of P(M) matches the printed matrix");
    } else {
      r.fail(tag + ": Gram of P(M) differs from the printed matrix");
    }
    for (const auto& delta : d.fundamental.roots) {
      const Rational lhs = d.lattice.pair(d.fundamental.rho, delta);
      const Rational rhs = -d.lattice.pair(delta, delta) / 2;
      if (lhs != rhs) r.fail(tag + ": (rho," + vector_str(delta) + ") = " + to_string(lhs));
    }
    r.note(tag + ": rho = " + vector_str(d.fundamental.rho) + ", (rho,d) = -(d,d)/2 on all roots");
    const auto sig = d.lattice.signature();
    if (sig != std::pair<int, int>{2, 1}) r.fail(tag + ": signature is not (2,1)");
    Report cone = cone_inclusion_check(ex);
    cone.name = tag + " cone";
    r.merge(cone);
    const std::size_t count = weyl_enumerate(ex, 3).size();
    if (count != weyl_counts[ex - 1]) {
      r.fail(tag + ": " + std::to_string(count) + " Weyl elements of length <= 3, expected " +
             std::to_string(weyl_counts[ex - 1]));
    } else {
      r.note(tag + ": " + std::to_string(count) + " Weyl elements of length <= 3");
    }
  }
  return r;
}

Report a13(const CheckOptions& o) {
  Report r;
  const std::int64_t order = o.order.value_or(10);
  for (int k : {4, 6}) {
    const JacobiSeries e = jacobi_eisenstein(k, order);
    for (const auto& t : e.series.terms()) {
      if (!is_integral(t.coefficient)) r.fail(e.name + " non-integral at " + t.exponent.str());
    }
    r.note(e.name + ": " + std::to_string(e.series.size()) + " integral coefficients through q^" +
           std::to_string(order));
  }
  const JacobiSeries phi = weak_jacobi(WeakJacobiKind::kPhi12_1, std::max<std::int64_t>(order, 2));
  expect_row(r, "phi12,1 q^1 row, l=-2..2", row(phi, 1, -2, 2), {0, 1, 10, 1, 0});
  // the printed q^2 row ends in 10 r^-2; evenness in l forces 10 r^2
  expect_row(r, "phi12,1 q^2 row, l=-3..3 (even-corrected)", row(phi, 2, -3, 3),
             {0, 10, -88, -132, -88, 10, 0});
  return r;
}

}  // namespace

const std::vector<CheckInfo>& all_checks() {
  static const std::vector<CheckInfo> checks{
      {"A1", "delta5-construction", "theta product at trace <= 16: f(1,1,1)=64, 64 | f, support", a1},
      {"A2", "eta9-identity", "1 + sum f(1+2t,1,1)/64 q^t = prod (1-q^k)^9", a2},
      {"A3", "fourier-jacobi", "m=1 slice of Delta_5/64 = eta^9 theta_11 = product form", a3},
      {"A4", "maass-lift", "lift of psi_5,1/2 = Delta_5/64 on trace <= 16", a4},
      {"A5", "product-exponents", "product exponents of Delta_5/64 = f(nm,l) of phi0,1 on lambda <= 24", a5},
      {"A6", "symmetry", "antisymmetry in l, n<->m symmetry, wall vanishing, reflection signs", a6},
      {"A7", "sum-side", "Weyl-orbit sum from m(a) = Delta_5/64 on lambda <= 24", a7},
      {"A8", "isotropic-tau", "tau(k a0) = 9 on the three isotropic rays, every computed k (at least 6)", a8},
      {"A9", "second-example", "F2 lift, product exponents = f2(nm,l), tau = 3", a9},
      {"A10", "epsilon-combinatorics", "epsilon enumeration vs closed forms and correction factor", a10},
      {"A11", "wedge-square", "wedge-square images of the generators", a11},
      {"A12", "lattice-data", "Gram matrices, Weyl vectors, cone rays, Weyl counts", a12},
      {"A13", "eisenstein-integrality", "E4,1 and E6,1 integral, phi12,1 rows", a13},
  };
  return checks;
}

const CheckInfo* find_check(const std::string& name) {
  for (const auto& c : all_checks()) {
    if (c.id == name || c.alias == name) return &c;
  }
  return nullptr;
}

Report run_check(const CheckInfo& check, const CheckOptions& options) {
  Report r;
  try {
    r = check.run(options);
  } catch (const Error& e) {
    r = Report{};
    r.fail(e.what());
  }
  r.name = check.id;
  return r;
}

}  // namespace kmforms
