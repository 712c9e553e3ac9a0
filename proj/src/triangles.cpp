#include "hochlat/triangles.hpp"

#include <bit>
#include <functional>

#include "hochlat/error.hpp"
#include "hochlat/generators.hpp"
#include "hochlat/shuffle.hpp"

namespace hochlat {

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

BiPoly xy_power(std::size_t i, std::size_t j) { return BiPoly::monomial(static_cast<unsigned>(i), static_cast<unsigned>(j)); }

// base^{n-k} * tail, with a negative exponent resolved by exact division.
BiPoly shifted_power(const BiPoly& base, std::size_t n, std::size_t k, const BiPoly& tail) {
  if (n >= k) return base.pow(static_cast<unsigned>(n - k)) * tail;
  return divide_exact(tail, base.pow(static_cast<unsigned>(k - n)));
}

void require_positive(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "closed forms are stated for n >= 1");
}

// mu(u, v) for every v, zero where u is not below v.
std::vector<std::int64_t> mobius_row(const FinitePoset& p, Elem u) {
  std::vector<std::int64_t> mu(p.size(), 0);
  mu[u] = 1;
  for (Elem v : p.linear_extension()) {
    if (v == u || !p.leq(u, v)) continue;
    Bitset between = p.down(v) & p.up(u);
    std::int64_t s = 0;
    for (auto c = between.find_first(); c != Bitset::npos; c = between.find_next(c))
      if (c != v) s += mu[c];
    mu[v] = -s;
  }
  return mu;
}

Elem require_bottom(const FinitePoset& p) {
  auto b = p.bottom();
  if (!b) throw Error(ErrorKind::NotBounded, "no least element");
  return *b;
}

Elem bottom_of(const Lattice& l) { return l.bottom(); }

bool is_atom(const Lattice& l, Elem j) { return l.poset().is_cover(bottom_of(l), j); }

BiPoly from_grid(std::size_t n, const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                 const std::function<Rational(const Rational&, const Rational&)>& value) {
  std::vector<std::vector<Rational>> values(xs.size(), std::vector<Rational>(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) values[i][j] = value(xs[i], ys[j]);
  BiPoly out = interpolate_grid(xs, ys, values);
  // Off-grid spot checks confirm the interpolant really is the substitution.
  for (long long t = 1; t <= 3; ++t) {
    Rational px = xs.back() + t, py = ys.back() + 2 * t + 1;
    if (out.eval(px, py) != value(px, py))
      throw Error(ErrorKind::InterpolationDegeneracy, "substitution is not a polynomial of degree <= " + std::to_string(n + 1));
  }
  return out;
}

Rational rpow(const Rational& b, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

BiPoly rank_poly(const FinitePoset& p) {
  BiPoly out;
  for (auto r : rank_function(p)) out += xy_power(r, 0);
  return out;
}

BiPoly char_poly(const FinitePoset& p) {
  auto rank = rank_function(p);
  auto mu = mobius_row(p, require_bottom(p));
  BiPoly out;
  for (Elem u = 0; u < p.size(); ++u) out += BiPoly::monomial(static_cast<unsigned>(rank[u]), 0, mu[u]);
  return out;
}

BiPoly m_triangle(const FinitePoset& p) {
  auto rank = rank_function(p);
  auto mu = mobius_matrix(p);
  BiPoly out;
  for (Elem u = 0; u < p.size(); ++u)
    for (Elem v = 0; v < p.size(); ++v)
      if (mu[u][v] != 0) out += BiPoly::monomial(static_cast<unsigned>(rank[u]), static_cast<unsigned>(rank[v]), mu[u][v]);
  return out;
}

BiPoly m_by_decomposition(const FinitePoset& p) {
  auto rank = rank_function(p);
  auto top = p.top();
  if (!top) throw Error(ErrorKind::NotBounded, "no greatest element");
  BiPoly out;
  for (Elem u = 0; u < p.size(); ++u) {
    auto upper = p.induced(p.interval(u, *top));
    BiPoly chi = char_poly(upper), chi_in_y;
    for (const auto& [e, c] : chi.terms()) chi_in_y += BiPoly::monomial(0, e.first, c);
    out += xy_power(rank[u], rank[u]) * chi_in_y;
  }
  return out;
}

BiPoly rank_poly_closed(std::size_t n) {
  require_positive(n);
  return shifted_power(X + 1, n, 2, X * X + BiPoly(static_cast<long long>(n + 1)) * X + 1);
}

BiPoly char_poly_closed(std::size_t n) {
  require_positive(n);
  return (BiPoly(1) - X).pow(static_cast<unsigned>(n - 1)) * (BiPoly(1) - BiPoly(static_cast<long long>(n)) * X);
}

BiPoly shuffle_char_closed(std::size_t a, std::size_t b) {
  BiPoly sum;
  for (std::size_t j = 0; j <= std::min(a, b); ++j)
    sum += BiPoly(binomial(a, j) * binomial(b, j)) * (X - 1).pow(static_cast<unsigned>(a + b - j)) * X.pow(static_cast<unsigned>(j));
  return (a + b) % 2 == 0 ? sum : -sum;
}

BiPoly m_closed(std::size_t n) {
  require_positive(n);
  const BiPoly nn(static_cast<long long>(n));
  BiPoly tail = (nn + 1) * ((X - 1) * Y - X * Y * Y) + (nn + X * X) * Y * Y + 1;
  return shifted_power(X * Y - Y + 1, n, 2, tail);
}

BiPoly f_closed(std::size_t n) {
  require_positive(n);
  const BiPoly nn(static_cast<long long>(n));
  BiPoly tail = nn * X * X + 2 * X * Y + (nn + 1) * X + (Y + 1).pow(2);
  return shifted_power(X + Y + 1, n, 2, tail);
}

BiPoly h_closed(std::size_t n) {
  require_positive(n);
  BiPoly tail = (X * Y + 1).pow(2) + BiPoly(static_cast<long long>(n) - 1) * X;
  return shifted_power(X * Y + 1, n, 2, tail);
}

BiPoly f_from_m(const BiPoly& m, std::size_t n) {
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= n + 1; ++i) xs.emplace_back(static_cast<long long>(i));
  for (std::size_t j = 0; j <= n + 1; ++j) ys.emplace_back(static_cast<long long>(n + 2 + j));
  return from_grid(n, xs, ys, [&](const Rational& x, const Rational& y) {
    if (y == x || y == 0) throw Error(ErrorKind::InterpolationDegeneracy, "grid point on a pole");
    return rpow(y, n) * m.eval((y + 1) / (y - x), (y - x) / y);
  });
}

BiPoly h_from_m(const BiPoly& m, std::size_t n) {
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= n + 1; ++i) xs.emplace_back(static_cast<long long>(i + 1));
  for (std::size_t j = 0; j <= n + 1; ++j) ys.emplace_back(static_cast<long long>(j + 2));
  return from_grid(n, xs, ys, [&](const Rational& x, const Rational& y) {
    const Rational d = x * (y - 1) + 1;
    if (y == 1 || d == 0) throw Error(ErrorKind::InterpolationDegeneracy, "grid point on a pole");
    return rpow(d, n) * m.eval(y / (y - 1), x * (y - 1) / d);
  });
}

Integer f_coefficient(std::size_t n, std::size_t k, std::size_t l) {
  require_positive(n);
  const auto N = static_cast<std::int64_t>(n), K = static_cast<std::int64_t>(k), L = static_cast<std::int64_t>(l);
  Rational v = Rational(binomial(N, K) * binomial(N - K, L)) * Rational(N * (K + 1) - K * (L + 1)) / Rational(N);
  if (!is_integral(v)) throw Error(ErrorKind::InterpolationDegeneracy, "non-integral F coefficient");
  return boost::multiprecision::numerator(v);
}

std::size_t neg_count(const Lattice& l, const JsdLabeling& lambda, Elem u) {
  std::size_t count = 0;
  for (Elem j : canonical_joinrep(l, lambda, u))
    if (is_atom(l, j)) ++count;
  return count;
}

BiPoly f_tilde(const HochLattice& h) {
  auto lambda = jsd_labeling(h.lattice);
  BiPoly out;
  for (Elem u = 0; u < h.lattice.size(); ++u) {
    std::size_t c = canonical_joinrep(h.lattice, lambda, u).size();
    std::size_t g = neg_count(h.lattice, lambda, u);
    out += xy_power(h.n - c, 0) * (X + 1).pow(static_cast<unsigned>(c - g)) * (Y + 1).pow(static_cast<unsigned>(g));
  }
  return out;
}

BiPoly h_tilde(const HochLattice& h) {
  auto lambda = jsd_labeling(h.lattice);
  BiPoly out;
  for (Elem u = 0; u < h.lattice.size(); ++u)
    out += xy_power(canonical_joinrep(h.lattice, lambda, u).size(), neg_count(h.lattice, lambda, u));
  return out;
}

std::vector<PartialCore> partial_cores(const Lattice& l) {
  if (!is_join_semidistributive(l))
    throw Error(ErrorKind::NotJoinSemidistributive, "partial core statistics need a join-semidistributive lattice");
  auto lambda = jsd_labeling(l);
  std::vector<PartialCore> out;
  for (Elem u = 0; u < l.size(); ++u) {
    const auto& covs = l.poset().lower_covers(u);
    if (covs.size() >= 32) throw Error(ErrorKind::TooLarge, "too many lower covers");
    const std::size_t neg = neg_count(l, lambda, u);
    for (std::uint32_t mask = 0; mask < (1u << covs.size()); ++mask) {
      PartialCore pc{u, {}, u, neg};
      for (std::size_t i = 0; i < covs.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        pc.subset.push_back(covs[i]);
        pc.partial_nucleus = l.meet(pc.partial_nucleus, covs[i]);
        if (is_atom(l, lambda(covs[i], u))) --pc.neg_tilde;
      }
      out.push_back(std::move(pc));
    }
  }
  return out;
}

BiPoly f_from_cores(const Lattice& l, std::size_t n) {
  BiPoly out;
  for (const auto& pc : partial_cores(l)) out += xy_power(n - pc.subset.size() - pc.neg_tilde, pc.neg_tilde);
  return out;
}

std::vector<Integer> face_vector(const Lattice& l) {
  std::vector<Integer> f;
  for (const auto& pc : partial_cores(l)) {
    if (f.size() <= pc.subset.size()) f.resize(pc.subset.size() + 1, Integer(0));
    ++f[pc.subset.size()];
  }
  return f;
}

Integer face_count_closed(std::size_t n, std::size_t i) {
  require_positive(n);
  const auto N = static_cast<std::int64_t>(n), I = static_cast<std::int64_t>(i);
  Rational v = pow2(N - I - 2) * Rational(binomial(N, I)) * Rational(N * (N + 3) - I * (I - 1)) / Rational(N);
  if (!is_integral(v)) throw Error(ErrorKind::InterpolationDegeneracy, "non-integral face count");
  return boost::multiprecision::numerator(v);
}

FinitePoset j_poset(std::size_t n) {
  auto irr = hoch_irreducibles(n);
  std::vector<std::string> labels;
  std::vector<Triword> words;
  for (const auto& j : irr) {
    labels.push_back(j.str());
    words.push_back(j.word(n));
  }
  auto extra = [&](Elem s, Elem t) {
    return irr[s].kind == HochIrreducible::Kind::B && irr[s].index == 2 && irr[t].kind == HochIrreducible::Kind::A && irr[t].index > 1;
  };
  return FinitePoset::from_order(
      irr.size(), [&](Elem s, Elem t) { return leq_comp(words[s], words[t]) || extra(s, t); }, std::move(labels));
}

BiPoly h_from_antichains(std::size_t n) {
  auto irr = hoch_irreducibles(n);
  BiPoly out;
  for (const auto& a : antichains(j_poset(n))) {
    std::size_t atoms = 0;
    for (Elem e : a)
      if (irr[e].is_atom()) ++atoms;
    out += xy_power(a.size(), atoms);
  }
  return out;
}

BiPoly g_triangle(std::size_t a, std::size_t b) {
  auto s = shuffle_lattice(a, b);
  const auto& p = s.lattice.poset();
  auto rank = rank_function(p);
  BiPoly out;
  for (Elem u = 0; u < p.size(); ++u)
    for (auto v = p.up(u).find_first(); v != Bitset::npos; v = p.up(u).find_next(v)) out += xy_power(rank[u], a + b - rank[v]);
  return out;
}

BiPoly g_conjecture_closed(std::size_t n) {
  require_positive(n);
  BiPoly tail = X * X + Y * Y + 1 + BiPoly(static_cast<long long>(n + 1)) * (X * Y + X + Y);
  return shifted_power(X + Y + 1, n, 2, tail);
}

TriangleSet boolean_triangles(std::size_t n) {
  TriangleSet t;
  t.m = m_triangle(boolean_lattice(n));
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t big = 0; big <= full; ++big) {
    t.h += xy_power(std::popcount(big), std::popcount(big));
    // Walk all submasks of big.
    for (std::uint32_t small = big;; small = (small - 1) & big) {
      t.f += xy_power(std::popcount(small), n - std::popcount(big));
      if (small == 0) break;
    }
  }
  return t;
}

TriangleSet boolean_triangles_closed(std::size_t n) {
  const auto e = static_cast<unsigned>(n);
  return {(X * Y - Y + 1).pow(e), (X + Y + 1).pow(e), (X * Y + 1).pow(e)};
}

}  // namespace hochlat
