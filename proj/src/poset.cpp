#include "hochlat/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

#include "hochlat/error.hpp"

namespace hochlat {

namespace {

std::vector<std::string> default_labels(std::size_t m, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(m);
    for (std::size_t i = 0; i < m; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != m) throw Error(ErrorKind::InvalidArgument, "label count does not match element count");
  return labels;
}

}  // namespace

FinitePoset FinitePoset::from_covers(std::size_t m, std::span<const Cover> covers,
                                     std::vector<std::string> labels) {
  std::vector<std::vector<Elem>> succ(m);
  std::vector<Cover> sorted(covers.begin(), covers.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> indeg(m, 0);
  for (const auto& [a, b] : sorted) {
    if (a >= m || b >= m) throw Error(ErrorKind::InvalidArgument, "cover references an id >= m");
    if (a == b) throw Error(ErrorKind::CycleDetected, "self-loop at " + std::to_string(a));
    succ[a].push_back(b);
    ++indeg[b];
  }

  // Kahn's algorithm; leftovers sit on a cycle.
  std::vector<Elem> order;
  order.reserve(m);
  std::queue<Elem> ready;
  for (Elem v = 0; v < m; ++v)
    if (indeg[v] == 0) ready.push(v);
  while (!ready.empty()) {
    Elem v = ready.front();
    ready.pop();
    order.push_back(v);
    for (Elem w : succ[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (order.size() != m) {
    for (Elem v = 0; v < m; ++v)
      if (indeg[v] != 0) throw Error(ErrorKind::CycleDetected, "element " + std::to_string(v) + " lies on a cycle");
  }

  FinitePoset p;
  p.up_.assign(m, Bitset(m));
  p.down_.assign(m, Bitset(m));
  p.lower_.assign(m, {});
  p.upper_.assign(m, {});
  for (const auto& [a, b] : sorted) {
    p.upper_[a].push_back(b);
    p.lower_[b].push_back(a);
  }
  for (Elem v : order) {
    p.down_[v].set(v);
    for (Elem a : p.lower_[v]) p.down_[v] |= p.down_[a];
  }
  for (Elem b = 0; b < m; ++b)
    for (auto a = p.down_[b].find_first(); a != Bitset::npos; a = p.down_[b].find_next(a)) p.up_[a].set(b);

  for (const auto& [a, b] : sorted) {
    if ((p.up_[a] & p.down_[b]).count() != 2)
      throw Error(ErrorKind::NotCover, "(" + std::to_string(a) + "," + std::to_string(b) + ") has an element strictly between");
  }
  p.covers_ = std::move(sorted);
  p.finish(std::move(labels));
  return p;
}

FinitePoset FinitePoset::from_order(std::size_t m, const std::function<bool(Elem, Elem)>& leq,
                                    std::vector<std::string> labels) {
  FinitePoset p;
  p.up_.assign(m, Bitset(m));
  p.down_.assign(m, Bitset(m));
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) {
      if (a == b || leq(a, b)) {
        p.up_[a].set(b);
        p.down_[b].set(a);
      }
    }
  }
  for (Elem a = 0; a < m; ++a) {
    for (auto b = p.up_[a].find_first(); b != Bitset::npos; b = p.up_[a].find_next(b)) {
      if (b != a && p.up_[b].test(a))
        throw Error(ErrorKind::CycleDetected, "relation is not antisymmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (!p.up_[b].is_subset_of(p.up_[a]))
        throw Error(ErrorKind::InvalidArgument, "relation is not transitive");
    }
  }
  p.lower_.assign(m, {});
  p.upper_.assign(m, {});
  for (Elem a = 0; a < m; ++a) {
    for (auto b = p.up_[a].find_first(); b != Bitset::npos; b = p.up_[a].find_next(b)) {
      if (b == a) continue;
      if ((p.up_[a] & p.down_[b]).count() == 2) {
        p.covers_.emplace_back(a, static_cast<Elem>(b));
        p.upper_[a].push_back(static_cast<Elem>(b));
        p.lower_[b].push_back(a);
      }
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  for (auto& v : p.lower_) std::sort(v.begin(), v.end());
  p.finish(std::move(labels));
  return p;
}

void FinitePoset::finish(std::vector<std::string> labels) {
  const std::size_t m = up_.size();
  labels_ = default_labels(m, std::move(labels));

  // Heights via Kahn order over the cover digraph.
  height_.assign(m, 0);
  depth_.assign(m, 0);
  std::vector<std::size_t> indeg(m);
  std::vector<Elem> order;
  order.reserve(m);
  for (Elem v = 0; v < m; ++v) {
    indeg[v] = lower_[v].size();
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    Elem v = order[i];
    for (Elem w : upper_[v]) {
      height_[w] = std::max(height_[w], height_[v] + 1);
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (Elem w : upper_[*it]) depth_[*it] = std::max(depth_[*it], depth_[w] + 1);

  topo_.resize(m);
  std::iota(topo_.begin(), topo_.end(), Elem{0});
  std::stable_sort(topo_.begin(), topo_.end(), [&](Elem a, Elem b) { return height_[a] < height_[b]; });
}

bool FinitePoset::is_cover(Elem a, Elem b) const {
  const auto& lc = lower_[b];
  return std::binary_search(lc.begin(), lc.end(), a);
}

std::size_t FinitePoset::length() const {
  std::size_t len = 0;
  for (auto h : height_) len = std::max(len, h);
  return len;
}

std::vector<Elem> FinitePoset::minimal_elements() const {
  std::vector<Elem> out;
  for (Elem v = 0; v < size(); ++v)
    if (lower_[v].empty()) out.push_back(v);
  return out;
}

std::vector<Elem> FinitePoset::maximal_elements() const {
  std::vector<Elem> out;
  for (Elem v = 0; v < size(); ++v)
    if (upper_[v].empty()) out.push_back(v);
  return out;
}

std::optional<Elem> FinitePoset::bottom() const {
  auto mins = minimal_elements();
  if (mins.size() != 1) return std::nullopt;
  return mins.front();
}

std::optional<Elem> FinitePoset::top() const {
  auto maxs = maximal_elements();
  if (maxs.size() != 1) return std::nullopt;
  return maxs.front();
}

std::vector<Elem> FinitePoset::interval(Elem lo, Elem hi) const {
  std::vector<Elem> out;
  if (!leq(lo, hi)) return out;
  Bitset between = up_[lo] & down_[hi];
  for (auto v = between.find_first(); v != Bitset::npos; v = between.find_next(v)) out.push_back(static_cast<Elem>(v));
  return out;
}

FinitePoset FinitePoset::induced(std::span<const Elem> subset) const {
  std::vector<Elem> ids(subset.begin(), subset.end());
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (Elem v : ids) labels.push_back(labels_[v]);
  return from_order(ids.size(), [&](Elem a, Elem b) { return leq(ids[a], ids[b]); }, std::move(labels));
}

FinitePoset FinitePoset::dual() const {
  std::vector<Cover> flipped;
  flipped.reserve(covers_.size());
  for (const auto& [a, b] : covers_) flipped.emplace_back(b, a);
  return from_covers(size(), flipped, labels_);
}

FinitePoset closure(std::span<const Cover> covers, std::size_t m) { return FinitePoset::from_covers(m, covers); }

std::int64_t mobius(const FinitePoset& p, Elem a, Elem b) {
  if (!p.leq(a, b)) return 0;
  // μ(c,b) for every c in [a,b], filled from the top of the interval down.
  std::vector<Elem> members = p.interval(a, b);
  std::sort(members.begin(), members.end(), [&](Elem x, Elem y) { return p.height(x) > p.height(y); });
  std::vector<std::int64_t> memo(p.size(), 0);
  for (Elem c : members) {
    if (c == b) {
      memo[c] = 1;
      continue;
    }
    std::int64_t s = 0;
    Bitset above = p.up(c) & p.down(b);
    above.reset(c);
    for (auto d = above.find_first(); d != Bitset::npos; d = above.find_next(d)) s += memo[d];
    memo[c] = -s;
  }
  return memo[a];
}

std::vector<std::vector<std::int64_t>> mobius_matrix(const FinitePoset& p) {
  const std::size_t m = p.size();
  std::vector<std::vector<std::int64_t>> mu(m, std::vector<std::int64_t>(m, 0));
  const auto& ext = p.linear_extension();
  for (Elem b = 0; b < m; ++b) {
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
      Elem c = *it;
      if (!p.leq(c, b)) continue;
      if (c == b) {
        mu[c][b] = 1;
        continue;
      }
      std::int64_t s = 0;
      Bitset above = p.up(c) & p.down(b);
      above.reset(c);
      for (auto d = above.find_first(); d != Bitset::npos; d = above.find_next(d)) s += mu[d][b];
      mu[c][b] = -s;
    }
  }
  return mu;
}

Integer zeta(const FinitePoset& p, std::uint32_t q) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "zeta requires q >= 1");
  if (q == 1) return 1;
  const std::size_t m = p.size();
  std::vector<Integer> ending(m, Integer(1));
  const auto& ext = p.linear_extension();
  for (std::uint32_t len = 2; len < q; ++len) {
    std::vector<Integer> next(m, Integer(0));
    for (Elem y : ext)
      for (auto x = p.down(y).find_first(); x != Bitset::npos; x = p.down(y).find_next(x)) next[y] += ending[x];
    ending = std::move(next);
  }
  Integer total = 0;
  for (const auto& v : ending) total += v;
  return total;
}

std::vector<Rational> zeta_polynomial(const FinitePoset& p) {
  // Degree is len(P); q >= 2 counts genuine multichains on any poset.
  std::vector<Rational> xs, ys;
  for (std::size_t q = 2; q <= p.length() + 3; ++q) {
    xs.emplace_back(static_cast<long long>(q));
    ys.emplace_back(zeta(p, static_cast<std::uint32_t>(q)));
  }
  auto coeffs = interpolate(xs, ys);
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

Integer mobius_invariant_via_zeta(const FinitePoset& p) {
  if (!p.is_bounded()) throw Error(ErrorKind::NotBounded, "zeta extrapolation needs a bounded poset");
  auto coeffs = zeta_polynomial(p);
  Rational v = evaluate(coeffs, Rational(-1));
  if (!is_integral(v)) throw Error(ErrorKind::InterpolationDegeneracy, "non-integral Z(-1)");
  return boost::multiprecision::numerator(v);
}

std::vector<std::size_t> rank_function(const FinitePoset& p) {
  std::vector<std::size_t> rank(p.size());
  std::size_t top_rank = p.length();
  for (Elem v = 0; v < p.size(); ++v) rank[v] = p.height(v);
  for (const auto& [a, b] : p.covers())
    if (rank[b] != rank[a] + 1)
      throw Error(ErrorKind::NotGraded, "cover (" + std::to_string(a) + "," + std::to_string(b) + ") skips a rank");
  for (Elem v : p.maximal_elements())
    if (rank[v] != top_rank) throw Error(ErrorKind::NotGraded, "maximal element " + std::to_string(v) + " has short rank");
  return rank;
}

std::vector<std::size_t> rank_profile(const FinitePoset& p) {
  auto rank = rank_function(p);
  std::vector<std::size_t> counts(p.size() == 0 ? 0 : p.length() + 1, 0);
  for (auto r : rank) ++counts[r];
  return counts;
}

namespace {

template <typename Visit>
void walk_antichains(const FinitePoset& p, std::vector<Elem>& current, const Bitset& allowed, Visit& visit) {
  visit(current);
  for (auto x = allowed.find_first(); x != Bitset::npos; x = allowed.find_next(x)) {
    // Later candidates only, incomparable to x.
    Bitset next = allowed;
    for (auto y = next.find_first(); y != Bitset::npos && y <= x; y = next.find_next(y)) next.reset(y);
    next -= p.up(static_cast<Elem>(x));
    next -= p.down(static_cast<Elem>(x));
    current.push_back(static_cast<Elem>(x));
    walk_antichains(p, current, next, visit);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Elem>> antichains(const FinitePoset& p) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> current;
  Bitset all(p.size());
  all.set();
  auto visit = [&](const std::vector<Elem>& a) { out.push_back(a); };
  walk_antichains(p, current, all, visit);
  return out;
}

std::uint64_t count_antichains(const FinitePoset& p) {
  std::uint64_t count = 0;
  std::vector<Elem> current;
  Bitset all(p.size());
  all.set();
  auto visit = [&](const std::vector<Elem>&) { ++count; };
  walk_antichains(p, current, all, visit);
  return count;
}

Integer count_maximal_chains(const FinitePoset& p) {
  std::vector<Integer> paths(p.size(), Integer(0));
  for (Elem v : p.linear_extension()) {
    if (p.lower_covers(v).empty()) paths[v] = 1;
    for (Elem a : p.lower_covers(v)) paths[v] += paths[a];
  }
  Integer total = 0;
  for (Elem v : p.maximal_elements()) total += paths[v];
  return total;
}

Doubling doubling(const FinitePoset& p, IntervalRef b) {
  if (b.lo >= p.size() || b.hi >= p.size() || !p.leq(b.lo, b.hi))
    throw Error(ErrorKind::NotInterval, "[" + std::to_string(b.lo) + "," + std::to_string(b.hi) + "] is not an interval");
  const Bitset& ideal = p.down(b.hi);
  const Bitset block = p.up(b.lo) & p.down(b.hi);

  Doubling out;
  std::vector<std::string> labels;
  for (Elem a = 0; a < p.size(); ++a) {
    if (ideal.test(a)) {
      out.origin.emplace_back(a, 0);
      labels.push_back(p.label(a) + "|0");
    }
  }
  for (Elem a = 0; a < p.size(); ++a) {
    if (!ideal.test(a) || block.test(a)) {
      out.origin.emplace_back(a, 1);
      labels.push_back(p.label(a) + "|1");
    }
  }
  const auto& origin = out.origin;
  out.poset = FinitePoset::from_order(
      origin.size(),
      [&](Elem x, Elem y) { return p.leq(origin[x].first, origin[y].first) && origin[x].second <= origin[y].second; },
      std::move(labels));
  return out;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

Signature signature(const FinitePoset& p, Elem v) {
  return {p.height(v), p.depth(v), p.lower_covers(v).size(), p.upper_covers(v).size(), p.down(v).count(), p.up(v).count()};
}

struct IsoSearch {
  const FinitePoset& p1;
  const FinitePoset& p2;
  std::vector<Signature> sig1, sig2;
  std::vector<Elem> order;
  std::vector<Elem> image;
  std::vector<bool> used;
  static constexpr Elem kUnset = ~Elem{0};

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    Elem x = order[depth];
    for (Elem y = 0; y < p2.size(); ++y) {
      if (used[y] || sig1[x] != sig2[y]) continue;
      bool ok = true;
      for (Elem z : p1.lower_covers(x)) {
        if (!p2.is_cover(image[z], y)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      used[y] = false;
      image[x] = kUnset;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphism(const FinitePoset& p1, const FinitePoset& p2, std::span<const Elem> mapping) {
  if (p1.size() != p2.size() || mapping.size() != p1.size()) return false;
  if (p1.covers().size() != p2.covers().size()) return false;
  std::vector<bool> hit(p2.size(), false);
  for (Elem y : mapping) {
    if (y >= p2.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (const auto& [a, b] : p1.covers())
    if (!p2.is_cover(mapping[a], mapping[b])) return false;
  return true;
}

IsoCertificate are_isomorphic(const FinitePoset& p1, const FinitePoset& p2, std::size_t bound) {
  if (p1.size() > bound || p2.size() > bound)
    throw Error(ErrorKind::TooLarge, "isomorphism search bounded at " + std::to_string(bound) + " elements");
  IsoCertificate cert;
  if (p1.size() != p2.size() || p1.covers().size() != p2.covers().size()) return cert;

  IsoSearch s{p1, p2, {}, {}, p1.linear_extension(), {}, {}};
  for (Elem v = 0; v < p1.size(); ++v) s.sig1.push_back(signature(p1, v));
  for (Elem v = 0; v < p2.size(); ++v) s.sig2.push_back(signature(p2, v));
  auto a = s.sig1, b = s.sig2;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return cert;

  s.image.assign(p1.size(), IsoSearch::kUnset);
  s.used.assign(p2.size(), false);
  if (!s.extend(0)) return cert;
  cert.mapping = s.image;
  cert.verified = is_isomorphism(p1, p2, cert.mapping);
  return cert;
}

}  // namespace hochlat
