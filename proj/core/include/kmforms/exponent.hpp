#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace kmforms {

// Integer exponent vector with up to kMaxDim coordinates. Scales live on
// the owning series, so two exponents only make sense together inside one.
class Exponent {
 public:
  static constexpr std::size_t kMaxDim = 4;

  Exponent() = default;
  Exponent(std::initializer_list<std::int64_t> coords);
  static Exponent zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const;
  Exponent operator+(const Exponent& o) const;
  Exponent operator-(const Exponent& o) const;
  Exponent operator-() const;
  Exponent operator*(std::int64_t k) const;

  // Exact division of every coordinate; false if some coordinate is not divisible.
  bool divisible_by(std::int64_t k) const;
  Exponent divided_by(std::int64_t k) const;

  std::string str() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

 private:
  std::array<std::int64_t, kMaxDim> c_{};
  std::uint8_t dim_ = 0;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

}  // namespace kmforms
