#include "hochlat/numeric.hpp"

#include "hochlat/error.hpp"

namespace hochlat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotCover: return "NotCover";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotInterval: return "NotInterval";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoUniqueMin: return "NoUniqueMin";
    case ErrorKind::NotSemidistributive: return "NotSemidistributive";
    case ErrorKind::NotJoinSemidistributive: return "NotJoinSemidistributive";
    case ErrorKind::NotExtremal: return "NotExtremal";
    case ErrorKind::ChainOrderingFailed: return "ChainOrderingFailed";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::MalformedLabelSet: return "MalformedLabelSet";
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::InterpolationDegeneracy: return "InterpolationDegeneracy";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer factorial(std::int64_t n) {
  Integer r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational pow2(std::int64_t e) {
  Integer p = 1;
  p <<= static_cast<unsigned>(e < 0 ? -e : e);
  return e < 0 ? Rational(1, p) : Rational(p);
}

bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

std::vector<Rational> interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw Error(ErrorKind::InvalidArgument, "interpolate: size mismatch");
  // Newton divided differences, then expand the Newton form into monomials.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational denom = xs[i] - xs[i - level];
      if (denom == 0) throw Error(ErrorKind::InterpolationDegeneracy, "repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / denom;
    }
  }
  std::vector<Rational> coeffs(n, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // prod_{j<i} (x - xs[j])
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += dd[i] * basis[d];
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= basis[d] * xs[i];
    }
    basis = std::move(next);
  }
  return coeffs;
}

Rational evaluate(std::span<const Rational> coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace hochlat
