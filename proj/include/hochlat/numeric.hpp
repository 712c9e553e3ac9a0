#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hochlat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient; zero when k < 0 or k > n (n may be negative only in
/// the sense that the result is then zero).
Integer binomial(std::int64_t n, std::int64_t k);

Integer factorial(std::int64_t n);

/// 2^e as an exact rational, e may be negative.
Rational pow2(std::int64_t e);

/// Coefficients (constant term first) of the unique polynomial of degree
/// < xs.size() through the points (xs[i], ys[i]). Abscissae must be distinct.
std::vector<Rational> interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

Rational evaluate(std::span<const Rational> coeffs, const Rational& x);

bool is_integral(const Rational& r);

}  // namespace hochlat
