#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hochlat/numeric.hpp"

namespace hochlat {

/// Sparse polynomial in x and y with exact integer coefficients. Zero
/// coefficients are never stored.
class BiPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;  // (deg_x, deg_y)

  BiPoly() = default;
  BiPoly(const Integer& c);
  BiPoly(long long c) : BiPoly(Integer(c)) {}

  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }
  static BiPoly monomial(unsigned i, unsigned j, const Integer& c = 1);

  const std::map<Exponents, Integer>& terms() const { return terms_; }
  Integer coeff(unsigned i, unsigned j) const;
  bool is_zero() const { return terms_.empty(); }
  unsigned degree_x() const;
  unsigned degree_y() const;
  unsigned total_degree() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  BiPoly operator-() const { return BiPoly() - *this; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly pow(unsigned e) const;
  Rational eval(const Rational& x, const Rational& y) const;
  /// Substitutes a value for y, leaving a polynomial in x.
  BiPoly at_y(const Integer& y) const;
  /// Substitutes a value for x, leaving a polynomial in y.
  BiPoly at_x(const Integer& x) const;

  /// Terms by decreasing total degree, then decreasing x-degree, e.g.
  /// "x^3*y^3 - 5*x^2*y^3 + 2*x + 1". The zero polynomial is "0".
  std::string str() const;

 private:
  void add_term(const Exponents& e, const Integer& c);
  std::map<Exponents, Integer> terms_;
};

/// q with p = q * d. Throws InvalidArgument when d does not divide p.
BiPoly divide_exact(const BiPoly& p, const BiPoly& d);

/// Interpolates on the tensor grid xs × ys from values[i][j] = P(xs[i], ys[j]).
/// Throws InterpolationDegeneracy if a coefficient is not an integer.
BiPoly interpolate_grid(std::span<const Rational> xs, std::span<const Rational> ys,
                        const std::vector<std::vector<Rational>>& values);

}  // namespace hochlat
