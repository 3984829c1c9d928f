#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmforms/coefficient_table.hpp"
#include "kmforms/rational.hpp"
#include "kmforms/report.hpp"
#include "kmforms/series.hpp"

namespace kmforms {

// Coordinates in the basis (f2, f3, f-2).
using LatticeVector = std::array<Rational, 3>;
using IntVector = std::array<std::int64_t, 3>;
using Matrix3 = std::array<std::array<Rational, 3>, 3>;

LatticeVector to_rational(const IntVector& v);
std::string vector_str(const LatticeVector& v);
std::string vector_str(const IntVector& v);

struct HyperbolicLattice {
  std::array<std::string, 3> labels{"f2", "f3", "f-2"};
  std::array<std::array<std::int64_t, 3>, 3> gram{};
  int example = 1;

  Rational pair(const LatticeVector& u, const LatticeVector& v) const;
  std::int64_t pair(const IntVector& u, const IntVector& v) const;
  // (positive, negative) eigenvalue counts from characteristic-polynomial sign changes.
  std::pair<int, int> signature() const;
};

struct FundamentalData {
  std::vector<LatticeVector> roots;  // P(M)
  LatticeVector rho;
  std::vector<std::vector<Rational>> root_gram;
};

struct WeylElement {
  Matrix3 matrix{};  // columns are images of f2, f3, f-2
  int det = 1;
  std::vector<int> word;

  LatticeVector apply(const LatticeVector& v) const;
};

Matrix3 identity_matrix();
Matrix3 matmul(const Matrix3& a, const Matrix3& b);

// Everything the two worked examples need beyond the bare lattice.
struct ExampleData {
  int id = 1;
  HyperbolicLattice lattice;
  FundamentalData fundamental;
  std::string form_name;       // "delta5" or "F2"
  Unit form_unit;              // unit of the form's coefficient table
  Integer normalizer;          // form coefficient at rho (64 for Delta_5, 1 for F2)
  std::int64_t m2_modulus;     // a in M_II iff c2, c-2 divisible by this
  IntVector lambda_weights;    // lambda(a) on lattice coordinates
  Weights product_weights;     // lambda on product exponents (2 pi i units)
};

const ExampleData& example_data(int example);

std::pair<HyperbolicLattice, FundamentalData> lattice_data(int example);

WeylElement reflection(const HyperbolicLattice& lattice, const LatticeVector& delta);

// Distinct elements of word length <= max_len, minimal words, breadth-first order.
std::vector<WeylElement> weyl_enumerate(int example, int max_len);

// Primitive M_II generators of the extremal rays of the closed chamber cone.
std::vector<IntVector> chamber_rays(int example);
Report cone_inclusion_check(int example);

// v = c2 f2 + c3 f3 + c-2 f-2 <-> form exponent (n,l,m) = (c2, -2 c3, c-2)
// in the example's form unit; a in M_II <-> product exponent
// (c2/k, -c3, c-2/k) in 2 pi i units, k = m2_modulus.
struct ExponentMap {
  int example = 1;
  Triple to_exponent(const LatticeVector& v) const;
  LatticeVector from_exponent(const Triple& e) const;
  Triple to_product_exponent(const IntVector& a) const;
  IntVector from_product_exponent(const Triple& e) const;
};

ExponentMap exponent_map(int example);

std::int64_t lambda_of(const ExampleData& ex, const IntVector& a);
bool in_m2(const ExampleData& ex, const IntVector& a);
bool in_closed_chamber(const ExampleData& ex, const LatticeVector& v);
// All a in M_II with (a, delta_i) <= 0 for every root and lambda(a) <= bound.
std::vector<IntVector> cone_points(const ExampleData& ex, std::int64_t bound);

struct IsotropicRay {
  IntVector generator;
  std::vector<Integer> tau;  // tau[k-1] = tau(k * generator)
};

struct SimpleMultiplicityTable {
  int example = 1;
  std::int64_t bound = 0;           // complete for lambda(a) <= bound
  std::map<IntVector, Integer> m;   // nonzero m(a); m(0) = -1
  std::vector<IsotropicRay> rays;

  Integer mult(const IntVector& a) const;
};

// m(a) = -coefficient(rho + a)/normalizer; normalizer defaults to the
// example's (64 or 1).
SimpleMultiplicityTable extract_simple_multiplicities(const SiegelCoefficientTable& table,
                                                      int example,
                                                      std::optional<Integer> normalizer = {});

// Weyl-orbit sum side, normalized so the coefficient at rho is +1, in the
// example's form unit truncated at lambda <= bound.
SiegelCoefficientTable sum_side_reconstruct(const SimpleMultiplicityTable& mult, int example,
                                            std::int64_t bound, int* levels_used = nullptr);

Report wedge_square_check();

}  // namespace kmforms
