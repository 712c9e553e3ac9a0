#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "hochlat/numeric.hpp"

namespace hochlat {

using Elem = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Cover = std::pair<Elem, Elem>;

struct IntervalRef {
  Elem lo;
  Elem hi;
};

struct IsoCertificate {
  std::vector<Elem> mapping;  // mapping[a] is the image of a
  bool verified = false;
};

/*
  A finite poset on the dense ids 0..m-1. The order is stored as one
  up-set and one down-set bitset row per element; covers are kept both as a
  sorted pair list and as per-element adjacency.

  Instances are immutable once built. All higher structures (lattices, core
  label orders, shuffle lattices) are FinitePosets with a decoding table kept
  alongside by the caller.
*/
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Order closure of a cover set. Throws CycleDetected on a directed cycle
  /// and NotCover when some pair (a,b) has an element strictly between.
  static FinitePoset from_covers(std::size_t m, std::span<const Cover> covers,
                                 std::vector<std::string> labels = {});

  /// Builds the poset whose order is the given relation. The relation must
  /// be a partial order; covers are obtained by transitive reduction.
  static FinitePoset from_order(std::size_t m, const std::function<bool(Elem, Elem)>& leq,
                                std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }

  bool leq(Elem a, Elem b) const { return up_[a].test(b); }
  bool lt(Elem a, Elem b) const { return a != b && up_[a].test(b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }
  bool is_cover(Elem a, Elem b) const;

  const Bitset& up(Elem a) const { return up_[a]; }
  const Bitset& down(Elem a) const { return down_[a]; }
  const std::vector<Elem>& lower_covers(Elem b) const { return lower_[b]; }
  const std::vector<Elem>& upper_covers(Elem a) const { return upper_[a]; }
  const std::vector<Cover>& covers() const { return covers_; }

  /// Elements sorted by height, then id; a linear extension.
  const std::vector<Elem>& linear_extension() const { return topo_; }
  /// Length of the longest chain from a minimal element up to a.
  std::size_t height(Elem a) const { return height_[a]; }
  /// Length of the longest chain from a up to a maximal element.
  std::size_t depth(Elem a) const { return depth_[a]; }
  /// len(P): one less than the largest chain cardinality.
  std::size_t length() const;

  std::vector<Elem> minimal_elements() const;
  std::vector<Elem> maximal_elements() const;
  std::optional<Elem> bottom() const;
  std::optional<Elem> top() const;
  bool is_bounded() const { return bottom().has_value() && top().has_value(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem a) const { return labels_[a]; }

  /// Elements of [lo,hi] in increasing id order (empty if lo is not <= hi).
  std::vector<Elem> interval(Elem lo, Elem hi) const;

  /// Induced subposet on `subset` (ids renumbered in the given order).
  FinitePoset induced(std::span<const Elem> subset) const;

  /// Same ground set, reversed order.
  FinitePoset dual() const;

 private:
  void finish(std::vector<std::string> labels);

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::vector<Elem>> lower_;
  std::vector<std::vector<Elem>> upper_;
  std::vector<Cover> covers_;
  std::vector<std::size_t> height_;
  std::vector<std::size_t> depth_;
  std::vector<Elem> topo_;
  std::vector<std::string> labels_;
};

/// Alias for FinitePoset::from_covers.
FinitePoset closure(std::span<const Cover> covers, std::size_t m);

/// μ_P(a,b) by the recursion over c with a < c <= b. Incomparable or
/// reversed pairs give 0.
std::int64_t mobius(const FinitePoset& p, Elem a, Elem b);

/// Full table: result[a][b] = μ(a,b).
std::vector<std::vector<std::int64_t>> mobius_matrix(const FinitePoset& p);

/// Number of (q-1)-multichains; zeta(p,1) = 1 by convention.
Integer zeta(const FinitePoset& p, std::uint32_t q);

/// Coefficients of the zeta polynomial, interpolated from q = 2..len+3.
std::vector<Rational> zeta_polynomial(const FinitePoset& p);

/// Z(-1) from the interpolated zeta polynomial. Throws NotBounded.
Integer mobius_invariant_via_zeta(const FinitePoset& p);

/// Rank of every element; throws NotGraded when maximal chains differ in length.
std::vector<std::size_t> rank_function(const FinitePoset& p);

/// Counts per rank; throws NotGraded.
std::vector<std::size_t> rank_profile(const FinitePoset& p);

/// All antichains, including the empty one, each sorted by id.
std::vector<std::vector<Elem>> antichains(const FinitePoset& p);
std::uint64_t count_antichains(const FinitePoset& p);

/// Number of maximal chains.
Integer count_maximal_chains(const FinitePoset& p);

struct Doubling {
  FinitePoset poset;
  /// origin[x] = (element of the input poset, copy bit).
  std::vector<std::pair<Elem, int>> origin;
};

/// P[B] for the interval B = [lo,hi]. Throws NotInterval if lo is not <= hi.
Doubling doubling(const FinitePoset& p, IntervalRef b);

inline constexpr std::size_t kDefaultIsoBound = 512;

/// Backtracking search for an order isomorphism p1 -> p2. Throws TooLarge
/// above `bound` elements.
IsoCertificate are_isomorphic(const FinitePoset& p1, const FinitePoset& p2,
                              std::size_t bound = kDefaultIsoBound);

/// True iff `mapping` is a bijection that preserves and reflects covers.
bool is_isomorphism(const FinitePoset& p1, const FinitePoset& p2, std::span<const Elem> mapping);

}  // namespace hochlat
