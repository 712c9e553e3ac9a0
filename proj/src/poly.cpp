#include "hochlat/poly.hpp"

#include <algorithm>

#include "hochlat/error.hpp"

namespace hochlat {

namespace {

// Graded order used for output and division: larger total degree first,
// ties broken by larger x-degree.
bool graded_greater(const BiPoly::Exponents& a, const BiPoly::Exponents& b) {
  unsigned da = a.first + a.second, db = b.first + b.second;
  return da != db ? da > db : a.first > b.first;
}

BiPoly::Exponents leading(const BiPoly& p) {
  BiPoly::Exponents best = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    if (graded_greater(e, best)) best = e;
  return best;
}

Rational rpow(const Rational& b, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

Integer ipow(const Integer& b, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

BiPoly::BiPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Exponents{0, 0}, c);
}

BiPoly BiPoly::monomial(unsigned i, unsigned j, const Integer& c) {
  BiPoly p;
  p.add_term({i, j}, c);
  return p;
}

void BiPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer BiPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned BiPoly::degree_x() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

unsigned BiPoly::degree_y() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

unsigned BiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  BiPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return *this = std::move(out);
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += Rational(c) * rpow(x, e.first) * rpow(y, e.second);
  return s;
}

BiPoly BiPoly::at_y(const Integer& y) const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.add_term({e.first, 0}, c * ipow(y, e.second));
  return out;
}

BiPoly BiPoly::at_x(const Integer& x) const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.add_term({0, e.second}, c * ipow(x, e.first));
  return out;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Integer>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return graded_greater(a.first, b.first); });
  std::string out;
  for (const auto& [e, c] : sorted) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    auto power = [](const char* v, unsigned k) { return k == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(k); };
    if (e.first > 0) mono += power("x", e.first);
    if (e.second > 0) mono += (mono.empty() ? "" : "*") + power("y", e.second);
    if (mono.empty()) {
      out += mag.str();
    } else {
      out += mag == 1 ? mono : mag.str() + "*" + mono;
    }
  }
  return out;
}

BiPoly divide_exact(const BiPoly& p, const BiPoly& d) {
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const auto ld = leading(d);
  const Integer lc = d.coeff(ld.first, ld.second);
  BiPoly q, r = p;
  while (!r.is_zero()) {
    const auto lr = leading(r);
    const Integer c = r.coeff(lr.first, lr.second);
    if (lr.first < ld.first || lr.second < ld.second || c % lc != 0)
      throw Error(ErrorKind::InvalidArgument, "(" + d.str() + ") does not divide (" + p.str() + ")");
    BiPoly t = BiPoly::monomial(lr.first - ld.first, lr.second - ld.second, c / lc);
    q += t;
    r -= t * d;
  }
  return q;
}

BiPoly interpolate_grid(std::span<const Rational> xs, std::span<const Rational> ys,
                        const std::vector<std::vector<Rational>>& values) {
  // Interpolate each row in y, then each y-coefficient column in x.
  std::vector<std::vector<Rational>> row_coeffs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto c = interpolate(ys, values[i]);
    c.resize(ys.size(), Rational(0));
    row_coeffs.push_back(std::move(c));
  }
  BiPoly out;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    std::vector<Rational> column;
    for (std::size_t i = 0; i < xs.size(); ++i) column.push_back(row_coeffs[i][j]);
    auto c = interpolate(xs, column);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!is_integral(c[i]))
        throw Error(ErrorKind::InterpolationDegeneracy, "non-integral coefficient of x^" + std::to_string(i) + "*y^" + std::to_string(j));
      out += BiPoly::monomial(static_cast<unsigned>(i), static_cast<unsigned>(j), boost::multiprecision::numerator(c[i]));
    }
  }
  return out;
}

}  // namespace hochlat
