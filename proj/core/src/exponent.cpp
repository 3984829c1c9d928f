#include "kmforms/exponent.hpp"

#include "kmforms/errors.hpp"

namespace kmforms {

Exponent::Exponent(std::initializer_list<std::int64_t> coords) {
  if (coords.size() == 0 || coords.size() > kMaxDim) {
    throw DomainError("exponent must have 1.." + std::to_string(kMaxDim) + " coordinates");
  }
  std::size_t i = 0;
  for (auto c : coords) c_[i++] = c;
  dim_ = static_cast<std::uint8_t>(coords.size());
}

Exponent Exponent::zero(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) throw DomainError("bad exponent dimension");
  Exponent e;
  e.dim_ = static_cast<std::uint8_t>(dim);
  return e;
}

bool Exponent::is_zero() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

Exponent Exponent::operator+(const Exponent& o) const {
  Exponent r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] += o.c_[i];
  return r;
}

Exponent Exponent::operator-(const Exponent& o) const {
  Exponent r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] -= o.c_[i];
  return r;
}

Exponent Exponent::operator-() const {
  Exponent r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

Exponent Exponent::operator*(std::int64_t k) const {
  Exponent r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] *= k;
  return r;
}

bool Exponent::divisible_by(std::int64_t k) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (c_[i] % k != 0) return false;
  }
  return true;
}

Exponent Exponent::divided_by(std::int64_t k) const {
  Exponent r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] /= k;
  return r;
}

std::string Exponent::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = e.dim();
  for (std::size_t i = 0; i < e.dim(); ++i) {
    h ^= std::hash<std::int64_t>{}(e[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace kmforms
