#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hochlat/hochschild.hpp"
#include "hochlat/lattice.hpp"

namespace hochlat {

enum class Glyphs { Utf8, Ascii };

/*
  Word over A = {a_1..a_a} and B = {b_1..b_b}. A letter a_i is stored as +i
  and rendered as i+1, so Shuf(n-1,1) uses the letters 2..n. B letters are
  stored as -j and rendered as the double-struck one (ASCII "1*"), with a
  "_j" suffix when b > 1.
*/
struct ShuffleWord {
  using Letter = int;

  std::vector<Letter> letters;

  static bool is_a(Letter x) { return x > 0; }
  static bool is_b(Letter x) { return x < 0; }

  bool empty() const { return letters.empty(); }
  bool contains(Letter x) const;

  /// Space-separated letters, or epsilon for the empty word. `compact`
  /// drops the spaces.
  std::string str(std::size_t b, Glyphs g = Glyphs::Utf8, bool compact = false) const;

  friend bool operator==(const ShuffleWord&, const ShuffleWord&) = default;
  friend auto operator<=>(const ShuffleWord&, const ShuffleWord&) = default;
};

/// Whether w lies in Shuf(a,b): letters in range, distinct, A and B parts increasing.
bool is_shuffle_word(const ShuffleWord& w, std::size_t a, std::size_t b);

/// Parses the space-separated form (either glyph set). Throws MalformedWord.
ShuffleWord parse_shuffle_word(std::string_view text, std::size_t a, std::size_t b);

/// Greene's order: v is obtained from w by deleting A letters and inserting B letters.
bool shuffle_leq(const ShuffleWord& w, const ShuffleWord& v);

/// |Shuf(a,b)| = sum over i,j of C(a,i) C(b,j) C(i+j,j).
Integer shuffle_count(std::size_t a, std::size_t b);

inline constexpr std::size_t kMaxShuffleElements = 20000;

struct ShuffleLattice {
  std::size_t a = 0, b = 0;
  Lattice lattice;
  std::vector<ShuffleWord> words;
  std::map<ShuffleWord, Elem> index;

  Elem id(const ShuffleWord& w) const;
};

/// Covers are single A deletions and single B insertions. Throws SizeBound.
ShuffleLattice shuffle_lattice(std::size_t a, std::size_t b);

struct ShuffleStats {
  Integer maximal_chains;
  std::vector<Rational> zeta;  // coefficients, constant first
  std::int64_t mobius = 0;
};

/// Brute-force statistics of Shuf(n-1,1).
ShuffleStats shuffle_stats(std::size_t n);

/// (n+1)!/2, coefficients of q^{n-1}((n+1)q-n+1)/2, and (-1)^n n.
ShuffleStats shuffle_stats_closed(std::size_t n);

/// Positions i in 2..n with u_i != 2, as A letters.
ShuffleWord tau(const Triword& u);

/// tau(u) with the B letter placed after the letter l1(u); in front when
/// l1(u) = 1, absent when l1(u) = 0.
ShuffleWord sigma(const Triword& u);

/// Inverse of sigma on Shuf(n-1,1). Throws MalformedWord.
Triword sigma_inverse(const ShuffleWord& w, std::size_t n);

/// Header plus one "u | tau(u) | l1(u) | sigma(u)" row per triword of
/// length n, in enumeration order. Letters are concatenated for n < 10.
std::string sigma_table(std::size_t n, Glyphs g = Glyphs::Utf8);

}  // namespace hochlat
