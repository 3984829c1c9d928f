#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace kmforms {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical p/q; mpq_class(p, q) alone leaves common factors in place.
Rational frac(const Integer& p, const Integer& q);

bool is_integral(const Rational& q);

// Numerator of an integral rational; throws IdentityViolation otherwise.
Integer to_integer(const Rational& q, const std::string& context);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// Inverse of to_string; throws DomainError on malformed text.
Rational parse_rational(const std::string& text);

std::int64_t to_int64(const Integer& z);

Integer binomial(std::int64_t n, std::int64_t k);
Integer ipow(std::int64_t base, unsigned exp);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t positive_mod(std::int64_t a, std::int64_t b);
std::int64_t isqrt(std::int64_t n);

}  // namespace kmforms
