#include "hochlat/shuffle.hpp"

#include <algorithm>
#include <sstream>

#include "hochlat/error.hpp"

namespace hochlat {

namespace {

constexpr std::string_view kOneUtf8 = "\xF0\x9D\x9F\x99";  // U+1D7D9
constexpr std::string_view kEpsUtf8 = "\xCE\xB5";          // U+03B5

std::string letter_str(ShuffleWord::Letter x, std::size_t b, Glyphs g) {
  if (ShuffleWord::is_a(x)) return std::to_string(x + 1);
  std::string out(g == Glyphs::Utf8 ? kOneUtf8 : std::string_view("1*"));
  if (b > 1) out += "_" + std::to_string(-x);
  return out;
}

// Subsequence of w made of the letters kept by `keep`.
template <class Pred>
std::vector<ShuffleWord::Letter> restrict(const ShuffleWord& w, Pred keep) {
  std::vector<ShuffleWord::Letter> out;
  for (auto x : w.letters)
    if (keep(x)) out.push_back(x);
  return out;
}

// Every interleaving of xs (A part) and ys (B part).
void interleave(const std::vector<int>& xs, const std::vector<int>& ys, std::size_t i, std::size_t j,
                std::vector<int>& cur, std::vector<ShuffleWord>& out) {
  if (i == xs.size() && j == ys.size()) {
    out.push_back({cur});
    return;
  }
  if (i < xs.size()) {
    cur.push_back(xs[i]);
    interleave(xs, ys, i + 1, j, cur, out);
    cur.pop_back();
  }
  if (j < ys.size()) {
    cur.push_back(ys[j]);
    interleave(xs, ys, i, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool ShuffleWord::contains(Letter x) const { return std::find(letters.begin(), letters.end(), x) != letters.end(); }

std::string ShuffleWord::str(std::size_t b, Glyphs g, bool compact) const {
  if (letters.empty()) return std::string(g == Glyphs::Utf8 ? kEpsUtf8 : std::string_view("eps"));
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0 && !compact) out += ' ';
    out += letter_str(letters[i], b, g);
  }
  return out;
}

bool is_shuffle_word(const ShuffleWord& w, std::size_t a, std::size_t b) {
  int last_a = 0, last_b = 0;
  for (auto x : w.letters) {
    if (ShuffleWord::is_a(x)) {
      if (static_cast<std::size_t>(x) > a || x <= last_a) return false;
      last_a = x;
    } else if (ShuffleWord::is_b(x)) {
      if (static_cast<std::size_t>(-x) > b || -x <= last_b) return false;
      last_b = -x;
    } else {
      return false;
    }
  }
  return true;
}

ShuffleWord parse_shuffle_word(std::string_view text, std::size_t a, std::size_t b) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  const std::string quoted = "\"" + std::string(text) + "\"";
  if (tokens.size() == 1 && (tokens[0] == kEpsUtf8 || tokens[0] == "eps")) return {};
  if (tokens.empty()) throw Error(ErrorKind::MalformedWord, "empty shuffle word; write eps for the empty word");
  ShuffleWord w;
  for (const auto& t : tokens) {
    std::string_view rest;
    if (t.rfind(kOneUtf8, 0) == 0) {
      rest = std::string_view(t).substr(kOneUtf8.size());
    } else if (t.rfind("1*", 0) == 0) {
      rest = std::string_view(t).substr(2);
    } else {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        throw Error(ErrorKind::MalformedWord, "bad letter '" + t + "' in " + quoted);
      }
      if (used != t.size() || v < 2) throw Error(ErrorKind::MalformedWord, "bad letter '" + t + "' in " + quoted);
      w.letters.push_back(v - 1);
      continue;
    }
    int j = 1;
    if (!rest.empty()) {
      if (rest[0] != '_' || rest.size() < 2 || !std::all_of(rest.begin() + 1, rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw Error(ErrorKind::MalformedWord, "bad letter '" + t + "' in " + quoted);
      j = std::stoi(std::string(rest.substr(1)));
    }
    w.letters.push_back(-j);
  }
  if (!is_shuffle_word(w, a, b))
    throw Error(ErrorKind::MalformedWord, quoted + " is not in Shuf(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return w;
}

bool shuffle_leq(const ShuffleWord& w, const ShuffleWord& v) {
  for (auto x : v.letters)
    if (ShuffleWord::is_a(x) && !w.contains(x)) return false;
  for (auto x : w.letters)
    if (ShuffleWord::is_b(x) && !v.contains(x)) return false;
  auto kept = [&](ShuffleWord::Letter x) { return ShuffleWord::is_a(x) ? v.contains(x) : w.contains(x); };
  return restrict(w, kept) == restrict(v, kept);
}

Integer shuffle_count(std::size_t a, std::size_t b) {
  Integer total = 0;
  for (std::size_t i = 0; i <= a; ++i)
    for (std::size_t j = 0; j <= b; ++j) total += binomial(a, i) * binomial(b, j) * binomial(i + j, j);
  return total;
}

Elem ShuffleLattice::id(const ShuffleWord& w) const {
  auto it = index.find(w);
  if (it == index.end()) throw Error(ErrorKind::MalformedWord, w.str(b, Glyphs::Ascii) + " is not an element");
  return it->second;
}

ShuffleLattice shuffle_lattice(std::size_t a, std::size_t b) {
  if (shuffle_count(a, b) > kMaxShuffleElements)
    throw Error(ErrorKind::SizeBound, "Shuf(" + std::to_string(a) + "," + std::to_string(b) + ") exceeds " +
                                          std::to_string(kMaxShuffleElements) + " elements");
  ShuffleLattice out;
  out.a = a;
  out.b = b;
  for (std::uint32_t sa = 0; sa < (1u << a); ++sa)
    for (std::uint32_t sb = 0; sb < (1u << b); ++sb) {
      std::vector<int> xs, ys, cur;
      for (std::size_t i = 0; i < a; ++i)
        if (sa >> i & 1) xs.push_back(static_cast<int>(i + 1));
      for (std::size_t j = 0; j < b; ++j)
        if (sb >> j & 1) ys.push_back(-static_cast<int>(j + 1));
      interleave(xs, ys, 0, 0, cur, out.words);
    }
  std::sort(out.words.begin(), out.words.end(), [](const ShuffleWord& x, const ShuffleWord& y) {
    return x.letters.size() != y.letters.size() ? x.letters.size() < y.letters.size() : x < y;
  });
  for (Elem i = 0; i < out.words.size(); ++i) out.index.emplace(out.words[i], i);

  std::vector<Cover> covers;
  for (Elem id = 0; id < out.words.size(); ++id) {
    const auto& w = out.words[id].letters;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (!ShuffleWord::is_a(w[p])) continue;
      ShuffleWord up{w};
      up.letters.erase(up.letters.begin() + static_cast<std::ptrdiff_t>(p));
      covers.emplace_back(id, out.index.at(up));
    }
    for (std::size_t j = 1; j <= b; ++j) {
      int x = -static_cast<int>(j);
      if (out.words[id].contains(x)) continue;
      for (std::size_t p = 0; p <= w.size(); ++p) {
        ShuffleWord up{w};
        up.letters.insert(up.letters.begin() + static_cast<std::ptrdiff_t>(p), x);
        if (is_shuffle_word(up, a, b)) covers.emplace_back(id, out.index.at(up));
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& w : out.words) labels.push_back(w.str(b));
  out.lattice = Lattice::from_poset(FinitePoset::from_covers(out.words.size(), covers, std::move(labels)));
  return out;
}

ShuffleStats shuffle_stats(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "shuffle statistics need n >= 1");
  auto s = shuffle_lattice(n - 1, 1);
  const auto& p = s.lattice.poset();
  ShuffleStats out;
  out.maximal_chains = count_maximal_chains(p);
  out.zeta = zeta_polynomial(p);
  while (!out.zeta.empty() && out.zeta.back() == 0) out.zeta.pop_back();
  out.mobius = mobius(p, s.lattice.bottom(), s.lattice.top());
  return out;
}

ShuffleStats shuffle_stats_closed(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "shuffle statistics need n >= 1");
  ShuffleStats out;
  out.maximal_chains = factorial(static_cast<std::int64_t>(n) + 1) / 2;
  out.zeta.assign(n + 1, Rational(0));
  const auto nn = static_cast<std::int64_t>(n);
  out.zeta[n] = Rational(nn + 1, 2);
  out.zeta[n - 1] += Rational(1 - nn, 2);
  while (!out.zeta.empty() && out.zeta.back() == 0) out.zeta.pop_back();
  out.mobius = (n % 2 == 0 ? 1 : -1) * nn;
  return out;
}

ShuffleWord tau(const Triword& u) {
  ShuffleWord w;
  for (std::size_t i = 2; i <= u.size(); ++i)
    if (u.at(i) != 2) w.letters.push_back(static_cast<int>(i - 1));
  return w;
}

ShuffleWord sigma(const Triword& u) {
  ShuffleWord w = tau(u);
  const std::size_t last_one = l1(u);
  if (last_one == 0) return w;
  auto at = w.letters.begin();
  if (last_one >= 2) at = std::find(w.letters.begin(), w.letters.end(), static_cast<int>(last_one - 1)) + 1;
  w.letters.insert(at, -1);
  return w;
}

Triword sigma_inverse(const ShuffleWord& w, std::size_t n) {
  if (n == 0 || n > kMaxTriwordLength) throw Error(ErrorKind::SizeBound, "triword length must lie in 1..10");
  if (!is_shuffle_word(w, n - 1, 1))
    throw Error(ErrorKind::MalformedWord, w.str(1, Glyphs::Ascii) + " is not in Shuf(" + std::to_string(n - 1) + ",1)");
  std::vector<std::uint8_t> e(n, 2);
  auto one = std::find(w.letters.begin(), w.letters.end(), -1);
  // Letter preceding the B letter, as a position in 1..n; 1 when it leads.
  std::size_t bound = 1;
  if (one != w.letters.end() && one != w.letters.begin()) bound = static_cast<std::size_t>(*(one - 1)) + 1;
  const bool has_one = one != w.letters.end();
  e[0] = has_one ? 1 : 0;
  for (auto x : w.letters) {
    if (!ShuffleWord::is_a(x)) continue;
    std::size_t i = static_cast<std::size_t>(x) + 1;
    e[i - 1] = has_one && i <= bound ? 1 : 0;
  }
  Triword u(std::move(e));
  if (!u.valid() || sigma(u) != w) throw Error(ErrorKind::MalformedWord, w.str(1, Glyphs::Ascii) + " has no preimage");
  return u;
}

std::string sigma_table(std::size_t n, Glyphs g) {
  const bool compact = n < 10;
  std::string out = g == Glyphs::Utf8 ? "\xF0\x9D\x94\xB2 | \xCF\x84(\xF0\x9D\x94\xB2) | l\xE2\x82\x81(\xF0\x9D\x94\xB2) | \xCF\x83(\xF0\x9D\x94\xB2)\n"
                                      : "u | tau(u) | l1(u) | sigma(u)\n";
  for (const auto& u : enumerate_triwords(n))
    out += u.str() + " | " + tau(u).str(1, g, compact) + " | " + std::to_string(l1(u)) + " | " + sigma(u).str(1, g, compact) + "\n";
  return out;
}

}  // namespace hochlat
