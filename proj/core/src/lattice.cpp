#include "kmforms/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kmforms/errors.hpp"

namespace kmforms {

namespace {

bool matrix_less(const Matrix3& a, const Matrix3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int c = cmp(a[i][j], b[i][j]);
      if (c != 0) return c < 0;
    }
  return false;
}

struct MatrixLess {
  bool operator()(const Matrix3& a, const Matrix3& b) const { return matrix_less(a, b); }
};

IntVector covector(const HyperbolicLattice& l, const IntVector& v) {
  IntVector c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i] += l.gram[i][j] * v[j];
  return c;
}

IntVector as_int(const LatticeVector& v) {
  IntVector out{};
  for (int i = 0; i < 3; ++i) {
    if (!is_integral(v[i])) throw DomainError("non-integral lattice vector " + vector_str(v));
    out[i] = to_int64(v[i].get_num());
  }
  return out;
}

int sign_changes(const std::vector<Rational>& coeffs) {
  int changes = 0, last = 0;
  for (const auto& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

ExampleData build_example(int id) {
  ExampleData ex;
  ex.id = id;
  ex.lattice.example = id;
  const std::int64_t f3norm = id == 1 ? 2 : 4;
  ex.lattice.gram = {{{0, 0, -1}, {0, f3norm, 0}, {-1, 0, 0}}};
  std::vector<IntVector> roots;
  if (id == 1) {
    roots = {{2, -1, 0}, {0, -1, 2}, {0, 1, 0}};
    ex.fundamental.rho = {Rational(1), Rational(-1, 2), Rational(1)};
    ex.form_name = "delta5";
    ex.form_unit = kUnitPiI;
    ex.normalizer = 64;
    ex.m2_modulus = 2;
    ex.lambda_weights = {1, 1, 1};
    ex.product_weights = {2, -1, 2, 0};
  } else {
    roots = {{0, -1, 0}, {4, 1, 0}, {4, 3, 4}, {0, 1, 4}};
    ex.fundamental.rho = {Rational(1), Rational(1, 2), Rational(1)};
    ex.form_name = "F2";
    ex.form_unit = kUnitOrthogonal;
    ex.normalizer = 1;
    ex.m2_modulus = 4;
    ex.lambda_weights = {1, -1, 1};
    ex.product_weights = {4, 1, 4, 0};
  }
  for (const auto& r : roots) ex.fundamental.roots.push_back(to_rational(r));
  for (const auto& a : ex.fundamental.roots) {
    std::vector<Rational> row;
    for (const auto& b : ex.fundamental.roots) row.push_back(ex.lattice.pair(a, b));
    ex.fundamental.root_gram.push_back(row);
  }

  // invariants asserted at construction
  if (ex.lattice.signature() != std::make_pair(2, 1)) {
    throw ConstructionError("lattice is not of signature (2,1)");
  }
  for (const auto& d : ex.fundamental.roots) {
    if (ex.lattice.pair(ex.fundamental.rho, d) != -ex.lattice.pair(d, d) / 2) {
      throw ConstructionError("Weyl vector condition fails at " + vector_str(d));
    }
  }
  return ex;
}

}  // namespace

LatticeVector to_rational(const IntVector& v) {
  return {Rational(static_cast<long>(v[0])), Rational(static_cast<long>(v[1])),
          Rational(static_cast<long>(v[2]))};
}

std::string vector_str(const LatticeVector& v) {
  return "(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + ")";
}

std::string vector_str(const IntVector& v) { return triple_str(v); }

Rational HyperbolicLattice::pair(const LatticeVector& u, const LatticeVector& v) const {
  Rational s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (gram[i][j] != 0) s += u[i] * v[j] * static_cast<long>(gram[i][j]);
    }
  return s;
}

std::int64_t HyperbolicLattice::pair(const IntVector& u, const IntVector& v) const {
  std::int64_t s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += u[i] * gram[i][j] * v[j];
  return s;
}

std::pair<int, int> HyperbolicLattice::signature() const {
  // det(xI - G) = x^3 - t x^2 + c x - d
  const auto& g = gram;
  const Rational t = g[0][0] + g[1][1] + g[2][2];
  const Rational c = (g[0][0] * g[1][1] - g[0][1] * g[1][0]) +
                     (g[0][0] * g[2][2] - g[0][2] * g[2][0]) +
                     (g[1][1] * g[2][2] - g[1][2] * g[2][1]);
  const Rational d = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  // Real-rooted, so Descartes' rule counts roots exactly.
  const int pos = sign_changes({1, -t, c, -d});
  const int neg = sign_changes({-1, -t, -c, -d});
  return {pos, neg};
}

LatticeVector WeylElement::apply(const LatticeVector& v) const {
  LatticeVector out{};
  for (int i = 0; i < 3; ++i) {
    out[i] = 0;
    for (int j = 0; j < 3; ++j) out[i] += matrix[i][j] * v[j];
  }
  return out;
}

Matrix3 identity_matrix() {
  Matrix3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = i == j ? 1 : 0;
  return m;
}

Matrix3 matmul(const Matrix3& a, const Matrix3& b) {
  Matrix3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      m[i][j] = 0;
      for (int k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
    }
  return m;
}

const ExampleData& example_data(int example) {
  static const ExampleData ex1 = build_example(1);
  static const ExampleData ex2 = build_example(2);
  if (example == 1) return ex1;
  if (example == 2) return ex2;
  throw DomainError("unknown example " + std::to_string(example) + " (expected 1 or 2)");
}

std::pair<HyperbolicLattice, FundamentalData> lattice_data(int example) {
  const ExampleData& ex = example_data(example);
  return {ex.lattice, ex.fundamental};
}

WeylElement reflection(const HyperbolicLattice& lattice, const LatticeVector& delta) {
  const Rational dd = lattice.pair(delta, delta);
  if (dd <= 0) throw DomainError("reflection needs a positive-norm vector, got " + vector_str(delta));
  WeylElement w;
  w.det = -1;
  for (int j = 0; j < 3; ++j) {
    LatticeVector e{Rational(0), Rational(0), Rational(0)};
    e[j] = 1;
    const Rational k = 2 * lattice.pair(e, delta) / dd;
    for (int i = 0; i < 3; ++i) w.matrix[i][j] = e[i] - k * delta[i];
  }
  return w;
}

std::vector<WeylElement> weyl_enumerate(int example, int max_len) {
  if (max_len < 0) throw DomainError("max word length must be >= 0");
  const ExampleData& ex = example_data(example);
  std::vector<WeylElement> gens;
  for (const auto& d : ex.fundamental.roots) gens.push_back(reflection(ex.lattice, d));

  WeylElement id;
  id.matrix = identity_matrix();
  std::vector<WeylElement> all{id};
  std::set<Matrix3, MatrixLess> seen{id.matrix};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = all.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        WeylElement w;
        w.matrix = matmul(all[k].matrix, gens[i].matrix);
        if (!seen.insert(w.matrix).second) continue;
        w.det = -all[k].det;
        w.word = all[k].word;
        w.word.push_back(static_cast<int>(i) + 1);
        all.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return all;
}

std::vector<IntVector> chamber_rays(int example) {
  const ExampleData& ex = example_data(example);
  std::vector<IntVector> roots, covs;
  for (const auto& d : ex.fundamental.roots) {
    roots.push_back(as_int(d));
    covs.push_back(covector(ex.lattice, roots.back()));
  }
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < covs.size(); ++i) {
    for (std::size_t j = i + 1; j < covs.size(); ++j) {
      const IntVector& a = covs[i];
      const IntVector& b = covs[j];
      IntVector r{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
      if (r == IntVector{0, 0, 0}) continue;
      for (int s : {1, -1}) {
        IntVector x{s * r[0], s * r[1], s * r[2]};
        bool inside = true;
        for (const auto& c : covs) {
          if (x[0] * c[0] + x[1] * c[1] + x[2] * c[2] > 0) inside = false;
        }
        if (!inside) continue;
        const std::int64_t g = std::gcd(std::gcd(x[0], x[1]), x[2]);
        for (auto& v : x) v /= g;
        std::int64_t t = 1;
        while (!in_m2(ex, {t * x[0], t * x[1], t * x[2]})) ++t;
        const IntVector gen{t * x[0], t * x[1], t * x[2]};
        if (std::find(rays.begin(), rays.end(), gen) == rays.end()) rays.push_back(gen);
      }
    }
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

Report cone_inclusion_check(int example) {
  const ExampleData& ex = example_data(example);
  Report r;
  r.name = "cone-inclusion";
  const IntVector v0{1, 0, 1};
  const auto rays = chamber_rays(example);
  r.note("reference vector (v0,v0) = " + std::to_string(ex.lattice.pair(v0, v0)));
  for (const auto& x : rays) {
    const std::int64_t norm = ex.lattice.pair(x, x);
    const std::int64_t with_v0 = ex.lattice.pair(x, v0);
    r.note("ray " + vector_str(x) + ": norm " + std::to_string(norm) + ", (r,v0) " +
           std::to_string(with_v0));
    if (norm > 0) r.fail("ray " + vector_str(x) + " has positive norm " + std::to_string(norm));
    if (with_v0 >= 0) r.fail("ray " + vector_str(x) + " is not on the v0 side of the light cone");
  }
  if (rays.empty()) r.fail("no extremal rays found");
  r.note(std::to_string(rays.size()) + " extremal rays");
  return r;
}

Triple ExponentMap::to_exponent(const LatticeVector& v) const {
  const Rational l = -2 * v[1];
  if (!is_integral(v[0]) || !is_integral(l) || !is_integral(v[2])) {
    throw DomainError("lattice vector " + vector_str(v) + " has no integral exponent");
  }
  return {to_int64(v[0].get_num()), to_int64(l.get_num()), to_int64(v[2].get_num())};
}

LatticeVector ExponentMap::from_exponent(const Triple& e) const {
  return {Rational(static_cast<long>(e[0])), frac(static_cast<long>(-e[1]), 2),
          Rational(static_cast<long>(e[2]))};
}

Triple ExponentMap::to_product_exponent(const IntVector& a) const {
  const std::int64_t k = example_data(example).m2_modulus;
  if (a[0] % k != 0 || a[2] % k != 0) {
    throw DomainError("vector " + vector_str(a) + " is not in M_II");
  }
  return {a[0] / k, -a[1], a[2] / k};
}

IntVector ExponentMap::from_product_exponent(const Triple& e) const {
  const std::int64_t k = example_data(example).m2_modulus;
  return {k * e[0], -e[1], k * e[2]};
}

ExponentMap exponent_map(int example) {
  example_data(example);
  return ExponentMap{example};
}

std::int64_t lambda_of(const ExampleData& ex, const IntVector& a) {
  return ex.lambda_weights[0] * a[0] + ex.lambda_weights[1] * a[1] + ex.lambda_weights[2] * a[2];
}

bool in_m2(const ExampleData& ex, const IntVector& a) {
  return a[0] % ex.m2_modulus == 0 && a[2] % ex.m2_modulus == 0;
}

bool in_closed_chamber(const ExampleData& ex, const LatticeVector& v) {
  for (const auto& d : ex.fundamental.roots) {
    if (ex.lattice.pair(v, d) > 0) return false;
  }
  return true;
}

std::vector<IntVector> cone_points(const ExampleData& ex, std::int64_t bound) {
  // On the chamber cone both examples satisfy lambda(a) >= max(c2, c-2)
  // >= 0 and |c3| <= lambda(a), so this box is exhaustive.
  std::vector<IntVector> out;
  if (bound < 0) return out;
  std::vector<IntVector> covs;
  for (const auto& d : ex.fundamental.roots) covs.push_back(covector(ex.lattice, as_int(d)));
  const std::int64_t k = ex.m2_modulus;
  for (std::int64_t c2 = 0; c2 <= bound; c2 += k) {
    for (std::int64_t cm = 0; cm <= bound; cm += k) {
      for (std::int64_t c3 = -bound; c3 <= bound; ++c3) {
        const IntVector a{c2, c3, cm};
        if (lambda_of(ex, a) > bound) continue;
        bool inside = true;
        for (const auto& c : covs) {
          if (a[0] * c[0] + a[1] * c[1] + a[2] * c[2] > 0) inside = false;
        }
        if (inside) out.push_back(a);
      }
    }
  }
  return out;
}

Integer SimpleMultiplicityTable::mult(const IntVector& a) const {
  auto it = m.find(a);
  return it == m.end() ? Integer(0) : it->second;
}

SimpleMultiplicityTable extract_simple_multiplicities(const SiegelCoefficientTable& table,
                                                      int example,
                                                      std::optional<Integer> normalizer) {
  const ExampleData& ex = example_data(example);
  if (!(table.unit == ex.form_unit)) {
    throw ConfigurationError("table unit " + table.unit.name() + " does not match example " +
                             std::to_string(example) + " unit " + ex.form_unit.name());
  }
  const Integer norm = normalizer.value_or(ex.normalizer);
  const ExponentMap map = exponent_map(example);
  auto covered = [&](const IntVector& a) {
    LatticeVector v = to_rational(a);
    for (int i = 0; i < 3; ++i) v[i] += ex.fundamental.rho[i];
    return table.covers(map.to_exponent(v));
  };

  SimpleMultiplicityTable out;
  out.example = example;
  if (table.truncation.kind == TruncationKind::kLambda) {
    out.bound = table.truncation.bound;
  } else {
    out.bound = -1;
    for (std::int64_t b = 0;; ++b) {
      const auto pts = cone_points(ex, b);
      if (!std::all_of(pts.begin(), pts.end(), covered)) break;
      out.bound = b;
    }
    if (out.bound < 0) throw ConfigurationError("table does not cover the Weyl vector");
  }

  for (const auto& a : cone_points(ex, out.bound)) {
    LatticeVector v = to_rational(a);
    for (int i = 0; i < 3; ++i) v[i] += ex.fundamental.rho[i];
    const Triple e = map.to_exponent(v);
    const Rational m = -table.at(e) / Rational(norm);
    if (!is_integral(m)) {
      throw IdentityViolation("non-integral m(" + vector_str(a) + ") = " + to_string(m));
    }
    if (m != 0) out.m.emplace(a, m.get_num());
  }
  if (out.mult({0, 0, 0}) != -1) {
    throw IdentityViolation("m(0) = " + to_string(out.mult({0, 0, 0})) + ", expected -1");
  }

  for (const auto& a0 : chamber_rays(example)) {
    IsotropicRay ray;
    ray.generator = a0;
    const std::int64_t step = lambda_of(ex, a0);
    const std::int64_t tmax = out.bound / step;
    const SeriesLayout layout = SeriesLayout::make(1, std::array<std::int64_t, 1>{1},
                                                   std::array<std::int64_t, 1>{1}, tmax);
    Accumulator acc;
    acc[Exponent{0}] = 1;
    for (std::int64_t t = 1; t <= tmax; ++t) {
      acc[Exponent{t}] -= Rational(out.mult({t * a0[0], t * a0[1], t * a0[2]}));
    }
    const auto tau = extract_product_exponents(GradedSeries::from_accumulator(layout, std::move(acc)));
    for (std::int64_t k = 1; k <= tmax; ++k) {
      auto it = tau.find(Exponent{k});
      ray.tau.push_back(it == tau.end() ? Integer(0) : it->second);
    }
    out.rays.push_back(std::move(ray));
  }
  return out;
}

SiegelCoefficientTable sum_side_reconstruct(const SimpleMultiplicityTable& mult, int example,
                                            std::int64_t bound, int* levels_used) {
  const ExampleData& ex = example_data(example);
  if (mult.example != example) throw ConfigurationError("multiplicity table is for another example");
  if (bound > mult.bound) {
    throw ConfigurationError("multiplicity table complete only to lambda " +
                             std::to_string(mult.bound) + ", requested " + std::to_string(bound));
  }
  const ExponentMap map = exponent_map(example);
  const LatticeVector& rho = ex.fundamental.rho;

  // Sum over W of det(w) * (-m(a)) e(w(rho + a)); -m(0) = 1 is the rho term.
  std::vector<std::pair<LatticeVector, Rational>> seeds;
  for (const auto& [a, m] : mult.m) {
    if (lambda_of(ex, a) > bound) continue;
    LatticeVector v = to_rational(a);
    for (int i = 0; i < 3; ++i) v[i] += rho[i];
    seeds.emplace_back(v, Rational(-m));
  }

  std::vector<WeylElement> gens;
  for (const auto& d : ex.fundamental.roots) gens.push_back(reflection(ex.lattice, d));

  std::map<Triple, Rational> acc;
  WeylElement id;
  id.matrix = identity_matrix();
  std::vector<WeylElement> level{id};
  std::set<Matrix3, MatrixLess> seen{id.matrix};
  constexpr int kMaxLevels = 200;
  int used = 0;
  for (int len = 0; len < kMaxLevels && !level.empty(); ++len) {
    std::size_t hits = 0;
    for (const auto& w : level) {
      for (const auto& [v, c] : seeds) {
        const LatticeVector wv = w.apply(v);
        const Rational lam = ex.lambda_weights[0] * (wv[0] - rho[0]) +
                             ex.lambda_weights[1] * (wv[1] - rho[1]) +
                             ex.lambda_weights[2] * (wv[2] - rho[2]);
        if (lam > bound) continue;
        ++hits;
        acc[map.to_exponent(wv)] += w.det * c;
      }
    }
    used = len + 1;
    if (hits == 0) break;
    std::vector<WeylElement> next;
    for (const auto& w : level) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        WeylElement x;
        x.matrix = matmul(w.matrix, gens[i].matrix);
        if (!seen.insert(x.matrix).second) continue;
        x.det = -w.det;
        x.word = w.word;
        x.word.push_back(static_cast<int>(i) + 1);
        next.push_back(std::move(x));
      }
    }
    level = std::move(next);
    if (len + 1 == kMaxLevels) throw ConfigurationError("Weyl orbit sum did not terminate");
  }
  if (levels_used) *levels_used = used;

  SiegelCoefficientTable out;
  out.form = ex.form_name + "-sum-side";
  out.unit = ex.form_unit;
  out.truncation = Truncation{TruncationKind::kLambda, bound};
  for (auto& [e, c] : acc) {
    if (c != 0) out.entries.emplace(e, c);
  }
  return out;
}

namespace {

using Mat4 = std::array<std::array<std::int64_t, 4>, 4>;
using Mat5 = std::array<std::array<std::int64_t, 5>, 5>;
using Vec6 = std::array<std::int64_t, 6>;

constexpr std::array<std::pair<int, int>, 6> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

Vec6 wedge(const std::array<std::int64_t, 4>& u, const std::array<std::int64_t, 4>& v) {
  Vec6 w{};
  for (std::size_t k = 0; k < kPairs.size(); ++k) {
    const auto [i, j] = kPairs[k];
    w[k] = u[i] * v[j] - u[j] * v[i];
  }
  return w;
}

std::array<std::int64_t, 4> apply4(const Mat4& g, const std::array<std::int64_t, 4>& v) {
  std::array<std::int64_t, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += g[i][j] * v[j];
  return out;
}

// Image of x = sum x_ij e_i^e_j under wedge^2 g.
Vec6 wedge_apply(const Mat4& g, const Vec6& x) {
  Vec6 out{};
  for (std::size_t k = 0; k < kPairs.size(); ++k) {
    if (x[k] == 0) continue;
    std::array<std::int64_t, 4> ei{}, ej{};
    ei[kPairs[k].first] = 1;
    ej[kPairs[k].second] = 1;
    const Vec6 w = wedge(apply4(g, ei), apply4(g, ej));
    for (int t = 0; t < 6; ++t) out[t] += x[k] * w[t];
  }
  return out;
}

// f1 = e1^e2, f2 = e2^e3, f3 = e1^e3 - e2^e4, f-2 = e4^e1, f-1 = e4^e3
const std::array<Vec6, 5> kBasisL{{{1, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 0},
                                   {0, 1, 0, 0, -1, 0},
                                   {0, 0, -1, 0, 0, 0},
                                   {0, 0, 0, 0, 0, -1}}};
const Vec6 kFixed{0, 1, 0, 0, 1, 0};  // e1^e3 + e2^e4

// Pfaffian pairing: coefficient of e1^e2^e3^e4 in x ^ y.
std::int64_t pfaffian(const Vec6& x, const Vec6& y) {
  return x[0] * y[5] - x[1] * y[4] + x[2] * y[3] + x[3] * y[2] - x[4] * y[1] + x[5] * y[0];
}

// Coordinates of x in the basis of L; nullopt if x leaves L.
std::optional<std::array<std::int64_t, 5>> coords_in_l(const Vec6& x) {
  if ((x[1] + x[4]) != 0 || (x[1] - x[4]) % 2 != 0) return std::nullopt;
  return std::array<std::int64_t, 5>{x[0], x[3], (x[1] - x[4]) / 2, -x[2], -x[5]};
}

std::string mat5_str(const Mat5& m) {
  std::string s = "[";
  for (int i = 0; i < 5; ++i) {
    s += i ? ";" : "";
    for (int j = 0; j < 5; ++j) s += (j ? "," : "") + std::to_string(m[i][j]);
  }
  return s + "]";
}

// Checks one generator; returns an empty string on success.
std::string check_generator(const Mat4& g, const Mat5& display) {
  if (wedge_apply(g, kFixed) != kFixed) return "does not fix e1^e3+e2^e4";
  Mat5 r{};
  for (int k = 0; k < 5; ++k) {
    const auto c = coords_in_l(wedge_apply(g, kBasisL[k]));
    if (!c) return "image of basis vector " + std::to_string(k) + " leaves L";
    for (int i = 0; i < 5; ++i) r[i][k] = (*c)[i];
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      std::int64_t lhs = 0;
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
          lhs += r[a][i] * pfaffian(kBasisL[a], kBasisL[b]) * r[b][j];
        }
      if (lhs != pfaffian(kBasisL[i], kBasisL[j])) return "Gram form of L not preserved";
    }
  if (r != display) return "image " + mat5_str(r) + " differs from display " + mat5_str(display);
  return {};
}

}  // namespace

Report wedge_square_check() {
  Report rep;
  rep.name = "wedge-square";

  const Mat5 gram_expected{{{0, 0, 0, 0, -1},
                            {0, 0, 0, -1, 0},
                            {0, 0, 2, 0, 0},
                            {0, -1, 0, 0, 0},
                            {-1, 0, 0, 0, 0}}};
  Mat5 gram{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) gram[i][j] = pfaffian(kBasisL[i], kBasisL[j]);
  if (gram != gram_expected) {
    rep.fail("Pfaffian Gram of L is " + mat5_str(gram) + ", not U+U+<2>");
  }
  for (int i = 0; i < 5; ++i) {
    if (pfaffian(kBasisL[i], kFixed) != 0) rep.fail("basis vector not orthogonal to e1^e3+e2^e4");
  }

  std::size_t count = 0;
  auto run = [&](const std::string& what, const Mat4& g, const Mat5& display) {
    ++count;
    const std::string err = check_generator(g, display);
    if (!err.empty()) rep.fail(what + ": " + err);
  };

  const Mat4 j4{{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}};
  run("J4", j4,
      Mat5{{{0, 0, 0, 0, -1}, {0, 0, 0, -1, 0}, {0, 0, 1, 0, 0}, {0, -1, 0, 0, 0}, {-1, 0, 0, 0, 0}}});

  // The printed translation image has a 0 at (4,4) (a singular matrix) and
  // "b^2 - b1 b2" in the corner; compared here with (4,4) = 1 and b2^2 - b1 b3.
  for (std::int64_t b1 = -2; b1 <= 2; ++b1)
    for (std::int64_t b2 = -2; b2 <= 2; ++b2)
      for (std::int64_t b3 = -2; b3 <= 2; ++b3) {
        const Mat4 g{{{1, 0, b1, b2}, {0, 1, b2, b3}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
        const Mat5 d{{{1, -b1, 2 * b2, -b3, b2 * b2 - b1 * b3},
                      {0, 1, 0, 0, b3},
                      {0, 0, 1, 0, b2},
                      {0, 0, 0, 1, b1},
                      {0, 0, 0, 0, 1}}};
        run("translation b=(" + std::to_string(b1) + "," + std::to_string(b2) + "," +
                std::to_string(b3) + ")",
            g, d);
      }

  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      for (std::int64_t c = -2; c <= 2; ++c)
        for (std::int64_t d = -2; d <= 2; ++d) {
          const std::int64_t det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          // U* = transpose(U)^-1 = det * [[d, -c], [-b, a]]
          const Mat4 g{{{det * d, -det * c, 0, 0}, {-det * b, det * a, 0, 0}, {0, 0, a, b}, {0, 0, c, d}}};
          Mat5 disp{{{1, 0, 0, 0, 0},
                     {0, a * a, -2 * a * b, b * b, 0},
                     {0, -a * c, a * d + b * c, -b * d, 0},
                     {0, c * c, -2 * c * d, d * d, 0},
                     {0, 0, 0, 0, 1}}};
          for (auto& row : disp)
            for (auto& x : row) x *= det;
          run("U=[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) +
                  "," + std::to_string(d) + "]]",
              g, disp);
        }

  rep.note(std::to_string(count) + " generator instances checked");
  return rep;
}

}  // namespace kmforms
