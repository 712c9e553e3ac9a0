#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hochlat/poset.hpp"

namespace hochlat {

/*
  A finite lattice: a bounded FinitePoset with eagerly built join and meet
  tables. Construction fails with NotALattice naming a pair without a least
  upper bound (or greatest lower bound).
*/
class Lattice {
 public:
  Lattice() = default;

  static Lattice from_poset(FinitePoset p);

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  bool leq(Elem a, Elem b) const { return poset_.leq(a, b); }

  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join_all(std::span<const Elem> xs) const;
  Elem meet_all(std::span<const Elem> xs) const;

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  /// Same elements, reversed order; join and meet swap.
  Lattice dual() const;

 private:
  FinitePoset poset_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> meet_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

inline Lattice as_lattice(const FinitePoset& p) { return Lattice::from_poset(p); }

/// Elements with exactly one lower cover, by id.
std::vector<Elem> join_irreducibles(const Lattice& l);
/// Elements with exactly one upper cover, by id.
std::vector<Elem> meet_irreducibles(const Lattice& l);
/// j_* for a join-irreducible j.
Elem lower_star(const Lattice& l, Elem j);
/// m^* for a meet-irreducible m.
Elem upper_star(const Lattice& l, Elem m);
std::vector<Elem> atoms(const Lattice& l);

bool is_extremal(const Lattice& l);
bool is_join_semidistributive(const Lattice& l);
bool is_meet_semidistributive(const Lattice& l);
bool is_semidistributive(const Lattice& l);

/// Top is the join of the atoms. Throws NotSemidistributive, and also when
/// the answer disagrees with μ(0,1) being ±1.
bool is_spherical(const Lattice& l);

/// Covers (a,b), (c,d) with a ∨ d = b and a ∧ d = c, or c ∨ b = d and c ∧ b = a.
bool is_perspective(const Lattice& l, Cover x, Cover y);

/// λ(a,b) = min{c : a ∨ c = b} for every cover, aligned with poset().covers().
class JsdLabeling {
 public:
  JsdLabeling() = default;
  JsdLabeling(const Lattice& l, std::vector<Elem> labels) : covers_(l.poset().covers()), labels_(std::move(labels)) {}

  Elem operator()(Elem a, Elem b) const;
  const std::vector<Elem>& labels() const { return labels_; }
  const std::vector<Cover>& covers() const { return covers_; }

 private:
  std::vector<Cover> covers_;
  std::vector<Elem> labels_;
};

/// Throws NoUniqueMin when some cover has no unique minimal witness.
JsdLabeling jsd_labeling(const Lattice& l);

/// {λ(b,a) : b ⋖ a}, sorted by id.
std::vector<Elem> canonical_joinrep(const Lattice& l, const JsdLabeling& lambda, Elem a);

/// a ∧ (meet of the lower covers of a).
Elem nucleus(const Lattice& l, Elem a);

struct CoreLabelSet {
  Elem element;
  Elem nucleus;
  std::vector<Elem> labels;  // sorted join-irreducible ids
};

CoreLabelSet core_label_set(const Lattice& l, const JsdLabeling& lambda, Elem a);

/// Core label sets of all elements, indexed by id.
std::vector<CoreLabelSet> core_label_sets(const Lattice& l, const JsdLabeling& lambda);

/// Throws NotSemidistributive.
bool has_intersection_property(const Lattice& l);

}  // namespace hochlat
