#include "hochlat/lattice.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "hochlat/error.hpp"

namespace hochlat {

namespace {

std::string pair_text(Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Rows of up-sets (or down-sets) re-indexed by position in a linear
// extension, so that the first set bit of an intersection is a minimal
// (or, reversed, maximal) member.
std::vector<Bitset> reindexed(const FinitePoset& p, bool upward) {
  const std::size_t m = p.size();
  const auto& ext = p.linear_extension();
  std::vector<std::size_t> pos(m);
  for (std::size_t i = 0; i < m; ++i) pos[ext[i]] = upward ? i : m - 1 - i;
  std::vector<Bitset> rows(m, Bitset(m));
  for (Elem a = 0; a < m; ++a) {
    const Bitset& src = upward ? p.up(a) : p.down(a);
    for (auto b = src.find_first(); b != Bitset::npos; b = src.find_next(b)) rows[a].set(pos[b]);
  }
  return rows;
}

std::vector<Elem> inverse_positions(const FinitePoset& p, bool upward) {
  const std::size_t m = p.size();
  const auto& ext = p.linear_extension();
  std::vector<Elem> at(m);
  for (std::size_t i = 0; i < m; ++i) at[upward ? i : m - 1 - i] = ext[i];
  return at;
}

void fill_table(const FinitePoset& p, bool upward, std::vector<std::uint16_t>& table) {
  const std::size_t m = p.size();
  auto rows = reindexed(p, upward);
  auto at = inverse_positions(p, upward);
  table.assign(m * m, 0);
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = a; b < m; ++b) {
      Bitset common = rows[a] & rows[b];
      auto first = common.find_first();
      if (first == Bitset::npos || rows[at[first]] != common)
        throw Error(ErrorKind::NotALattice, pair_text(a, b) + (upward ? " has no least upper bound" : " has no greatest lower bound"));
      table[a * m + b] = table[b * m + a] = static_cast<std::uint16_t>(at[first]);
    }
  }
}

}  // namespace

Lattice Lattice::from_poset(FinitePoset p) {
  if (p.size() == 0) throw Error(ErrorKind::NotBounded, "empty poset");
  if (p.size() > std::numeric_limits<std::uint16_t>::max())
    throw Error(ErrorKind::TooLarge, "lattice tables hold at most 65535 elements");
  auto bot = p.bottom();
  auto top = p.top();
  if (!bot || !top) throw Error(ErrorKind::NotBounded, "poset lacks a unique minimum or maximum");
  Lattice l;
  fill_table(p, true, l.join_);
  fill_table(p, false, l.meet_);
  l.bottom_ = *bot;
  l.top_ = *top;
  l.poset_ = std::move(p);
  return l;
}

Elem Lattice::join_all(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem Lattice::meet_all(std::span<const Elem> xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Lattice Lattice::dual() const {
  Lattice d;
  d.poset_ = poset_.dual();
  d.join_ = meet_;
  d.meet_ = join_;
  d.bottom_ = top_;
  d.top_ = bottom_;
  return d;
}

std::vector<Elem> join_irreducibles(const Lattice& l) {
  std::vector<Elem> out;
  for (Elem a = 0; a < l.size(); ++a)
    if (l.poset().lower_covers(a).size() == 1) out.push_back(a);
  return out;
}

std::vector<Elem> meet_irreducibles(const Lattice& l) {
  std::vector<Elem> out;
  for (Elem a = 0; a < l.size(); ++a)
    if (l.poset().upper_covers(a).size() == 1) out.push_back(a);
  return out;
}

Elem lower_star(const Lattice& l, Elem j) {
  const auto& lc = l.poset().lower_covers(j);
  if (lc.size() != 1) throw Error(ErrorKind::InvalidArgument, std::to_string(j) + " is not join-irreducible");
  return lc.front();
}

Elem upper_star(const Lattice& l, Elem m) {
  const auto& uc = l.poset().upper_covers(m);
  if (uc.size() != 1) throw Error(ErrorKind::InvalidArgument, std::to_string(m) + " is not meet-irreducible");
  return uc.front();
}

std::vector<Elem> atoms(const Lattice& l) { return l.poset().upper_covers(l.bottom()); }

bool is_extremal(const Lattice& l) {
  const std::size_t len = l.poset().length();
  return join_irreducibles(l).size() == len && meet_irreducibles(l).size() == len;
}

bool is_join_semidistributive(const Lattice& l) {
  const std::size_t m = l.size();
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem c = b + 1; c < m; ++c) {
        Elem ab = l.join(a, b);
        if (ab == l.join(a, c) && l.join(a, l.meet(b, c)) != ab) return false;
      }
  return true;
}

bool is_meet_semidistributive(const Lattice& l) { return is_join_semidistributive(l.dual()); }

bool is_semidistributive(const Lattice& l) { return is_join_semidistributive(l) && is_meet_semidistributive(l); }

bool is_spherical(const Lattice& l) {
  if (!is_semidistributive(l)) throw Error(ErrorKind::NotSemidistributive, "sphericity needs a semidistributive lattice");
  auto at = atoms(l);
  bool spherical = l.join_all(at) == l.top();
  auto mu = mobius(l.poset(), l.bottom(), l.top());
  if (spherical != (mu == 1 || mu == -1))
    throw Error(ErrorKind::NotSemidistributive, "atom join and Möbius invariant disagree");
  return spherical;
}

bool is_perspective(const Lattice& l, Cover x, Cover y) {
  auto [a, b] = x;
  auto [c, d] = y;
  return (l.join(a, d) == b && l.meet(a, d) == c) || (l.join(c, b) == d && l.meet(c, b) == a);
}

Elem JsdLabeling::operator()(Elem a, Elem b) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), Cover{a, b});
  if (it == covers_.end() || *it != Cover{a, b}) throw Error(ErrorKind::NotCover, pair_text(a, b) + " is not a cover");
  return labels_[static_cast<std::size_t>(it - covers_.begin())];
}

JsdLabeling jsd_labeling(const Lattice& l) {
  const auto& covers = l.poset().covers();
  std::vector<Elem> labels;
  labels.reserve(covers.size());
  for (const auto& [a, b] : covers) {
    std::vector<Elem> witnesses;
    for (Elem c = 0; c < l.size(); ++c)
      if (l.join(a, c) == b) witnesses.push_back(c);
    std::optional<Elem> least;
    for (Elem c : witnesses) {
      bool below_all = std::all_of(witnesses.begin(), witnesses.end(), [&](Elem w) { return l.leq(c, w); });
      if (below_all) {
        least = c;
        break;
      }
    }
    if (!least) throw Error(ErrorKind::NoUniqueMin, pair_text(a, b) + " has no least element c with a v c = b");
    labels.push_back(*least);
  }
  return JsdLabeling(l, std::move(labels));
}

std::vector<Elem> canonical_joinrep(const Lattice& l, const JsdLabeling& lambda, Elem a) {
  std::vector<Elem> out;
  for (Elem b : l.poset().lower_covers(a)) out.push_back(lambda(b, a));
  std::sort(out.begin(), out.end());
  return out;
}

Elem nucleus(const Lattice& l, Elem a) { return l.meet(a, l.meet_all(l.poset().lower_covers(a))); }

CoreLabelSet core_label_set(const Lattice& l, const JsdLabeling& lambda, Elem a) {
  CoreLabelSet out{a, nucleus(l, a), {}};
  std::set<Elem> labels;
  for (const auto& [b, c] : l.poset().covers())
    if (l.leq(out.nucleus, b) && l.leq(c, a)) labels.insert(lambda(b, c));
  out.labels.assign(labels.begin(), labels.end());
  return out;
}

std::vector<CoreLabelSet> core_label_sets(const Lattice& l, const JsdLabeling& lambda) {
  std::vector<CoreLabelSet> out;
  out.reserve(l.size());
  for (Elem a = 0; a < l.size(); ++a) out.push_back(core_label_set(l, lambda, a));
  return out;
}

bool has_intersection_property(const Lattice& l) {
  if (!is_semidistributive(l)) throw Error(ErrorKind::NotSemidistributive, "intersection property needs a semidistributive lattice");
  auto lambda = jsd_labeling(l);
  std::vector<Bitset> psi;
  for (const auto& c : core_label_sets(l, lambda)) {
    Bitset s(l.size());
    for (Elem j : c.labels) s.set(j);
    psi.push_back(std::move(s));
  }
  std::set<Bitset> present(psi.begin(), psi.end());
  for (std::size_t a = 0; a < psi.size(); ++a)
    for (std::size_t b = a + 1; b < psi.size(); ++b)
      if (!present.count(psi[a] & psi[b])) return false;
  return true;
}

}  // namespace hochlat
