#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hochlat/lattice.hpp"

namespace hochlat {

inline constexpr std::size_t kMaxTriwordLength = 10;

/// Word u_1..u_n over {0,1,2} with u_1 != 2 and no 0 before a 1.
class Triword {
 public:
  Triword() = default;
  explicit Triword(std::vector<std::uint8_t> entries) : e_(std::move(entries)) {}

  /// Parses "(1,2,0)". Throws MalformedWord on bad syntax or T1-T3 violations.
  static Triword parse(std::string_view text);

  std::size_t size() const { return e_.size(); }
  /// 1-based access.
  std::uint8_t at(std::size_t i) const { return e_[i - 1]; }
  std::uint8_t& at(std::size_t i) { return e_[i - 1]; }
  const std::vector<std::uint8_t>& entries() const { return e_; }

  bool valid() const;
  /// Base-3 code, first entry most significant.
  std::uint32_t code() const;
  std::string str() const;

  friend bool operator==(const Triword&, const Triword&) = default;
  friend auto operator<=>(const Triword&, const Triword&) = default;

 private:
  std::vector<std::uint8_t> e_;
};

/// All triwords of length n in lexicographic order.
std::vector<Triword> enumerate_triwords(std::size_t n);

/// 2^{n-2}(n+3) evaluated exactly.
Integer triword_count(std::size_t n);

/// Position of the last 1 (0 if none).
std::size_t l1(const Triword& u);
/// Position of the first 0 (n+1 if none).
std::size_t f0(const Triword& u);

bool leq_comp(const Triword& u, const Triword& v);
Triword hoch_join(const Triword& u, const Triword& v);
Triword hoch_meet(const Triword& u, const Triword& v);

/// a^(i): i ones then zeros; b^(i): a single 2 at position i.
struct HochIrreducible {
  enum class Kind : std::uint8_t { A, B };
  Kind kind;
  std::size_t index;

  Triword word(std::size_t n) const;
  bool is_atom() const { return kind == Kind::B || index == 1; }
  /// "a^(3)" / "b^(2)".
  std::string str() const;
  /// "(1,3)" / "(2,2)".
  std::string vertex_str() const;

  friend bool operator==(const HochIrreducible&, const HochIrreducible&) = default;
  friend auto operator<=>(const HochIrreducible&, const HochIrreducible&) = default;
};

HochIrreducible irr_a(std::size_t i);
HochIrreducible irr_b(std::size_t i);

/// a^(1..n) then b^(2..n).
std::vector<HochIrreducible> hoch_irreducibles(std::size_t n);

/// Recognizes a^(i) / b^(i); nullopt for any other word.
std::optional<HochIrreducible> as_irreducible(const Triword& u);

/// Lattice together with the id -> triword decoding.
struct HochLattice {
  std::size_t n = 0;
  Lattice lattice;
  std::vector<Triword> words;
  std::unordered_map<std::uint32_t, Elem> index;

  Elem id(const Triword& u) const;
  Elem id(const HochIrreducible& j) const { return id(j.word(n)); }
};

/// Hoch(n) with ids in lexicographic order. Throws SizeBound for n = 0 or n > 10.
HochLattice build_hoch(std::size_t n);

/// Hoch(n) assembled from the singleton by the doubling recipe; words carry
/// the decoding so the result can be compared with build_hoch label by label.
HochLattice build_hoch_by_doubling(std::size_t n);

std::vector<HochIrreducible> canrep_formula(const Triword& u);
/// Number of atoms in the canonical join representation.
std::size_t neg(const Triword& u);
/// Facets of the canonical join complex: {a^(1), b^(2..n)} and, for
/// 2 <= i <= n, {a^(i)} with every b^(j), j != i. Each facet sorted.
std::vector<std::vector<HochIrreducible>> cjc_facets_formula(std::size_t n);
Triword nucleus_formula(const Triword& u);
std::vector<HochIrreducible> core_labels_formula(const Triword& u);

/// Reconstructs u from its core label set. Throws MalformedLabelSet.
Triword psi_inverse(std::size_t n, const std::vector<HochIrreducible>& labels);

/// Label of the cover (u,v) read off the changed position.
HochIrreducible cover_label_formula(const Triword& u, const Triword& v);

}  // namespace hochlat
