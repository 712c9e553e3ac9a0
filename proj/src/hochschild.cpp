#include "hochlat/hochschild.hpp"

#include <algorithm>
#include <cctype>

#include "hochlat/error.hpp"

namespace hochlat {

Triword Triword::parse(std::string_view text) {
  std::vector<std::uint8_t> entries;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size() || text[i] != '(') throw Error(ErrorKind::MalformedWord, "expected '(' in \"" + std::string(text) + "\"");
  ++i;
  for (;;) {
    skip();
    if (i == text.size() || text[i] < '0' || text[i] > '2')
      throw Error(ErrorKind::MalformedWord, "expected 0, 1 or 2 in \"" + std::string(text) + "\"");
    entries.push_back(static_cast<std::uint8_t>(text[i] - '0'));
    ++i;
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ')') {
      ++i;
      break;
    }
    throw Error(ErrorKind::MalformedWord, "expected ',' or ')' in \"" + std::string(text) + "\"");
  }
  skip();
  if (i != text.size()) throw Error(ErrorKind::MalformedWord, "trailing input in \"" + std::string(text) + "\"");
  Triword u(std::move(entries));
  if (!u.valid()) throw Error(ErrorKind::MalformedWord, u.str() + " violates the triword conditions");
  return u;
}

bool Triword::valid() const {
  if (e_.empty() || e_.front() == 2) return false;
  bool seen_zero = false;
  for (auto x : e_) {
    if (x > 2) return false;
    if (x == 1 && seen_zero) return false;
    if (x == 0) seen_zero = true;
  }
  return true;
}

std::uint32_t Triword::code() const {
  std::uint32_t c = 0;
  for (auto x : e_) c = 3 * c + x;
  return c;
}

std::string Triword::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + e_[i]);
  }
  return s + ")";
}

namespace {

void extend(std::vector<std::uint8_t>& prefix, std::size_t n, bool seen_zero, std::vector<Triword>& out) {
  if (prefix.size() == n) {
    out.emplace_back(prefix);
    return;
  }
  for (std::uint8_t x = 0; x <= 2; ++x) {
    if (prefix.empty() && x == 2) continue;
    if (seen_zero && x == 1) continue;
    prefix.push_back(x);
    extend(prefix, n, seen_zero || x == 0, out);
    prefix.pop_back();
  }
}

void check_length(std::size_t n) {
  if (n == 0 || n > kMaxTriwordLength)
    throw Error(ErrorKind::SizeBound, "triword length must be in 1.." + std::to_string(kMaxTriwordLength) + ", got " + std::to_string(n));
}

}  // namespace

std::vector<Triword> enumerate_triwords(std::size_t n) {
  check_length(n);
  std::vector<Triword> out;
  std::vector<std::uint8_t> prefix;
  extend(prefix, n, false, out);
  return out;
}

Integer triword_count(std::size_t n) {
  Rational r = pow2(static_cast<std::int64_t>(n) - 2) * Rational(static_cast<long long>(n) + 3);
  return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
}

std::size_t l1(const Triword& u) {
  for (std::size_t i = u.size(); i >= 1; --i)
    if (u.at(i) == 1) return i;
  return 0;
}

std::size_t f0(const Triword& u) {
  for (std::size_t i = 1; i <= u.size(); ++i)
    if (u.at(i) == 0) return i;
  return u.size() + 1;
}

bool leq_comp(const Triword& u, const Triword& v) {
  for (std::size_t i = 1; i <= u.size(); ++i)
    if (u.at(i) > v.at(i)) return false;
  return true;
}

Triword hoch_join(const Triword& u, const Triword& v) {
  std::vector<std::uint8_t> e(u.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(u.entries()[i], v.entries()[i]);
  return Triword(std::move(e));
}

Triword hoch_meet(const Triword& u, const Triword& v) {
  std::vector<std::uint8_t> e(u.size());
  bool seen_zero = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = std::min(u.entries()[i], v.entries()[i]);
    if (e[i] == 1 && seen_zero) e[i] = 0;
    if (e[i] == 0) seen_zero = true;
  }
  return Triword(std::move(e));
}

Triword HochIrreducible::word(std::size_t n) const {
  std::vector<std::uint8_t> e(n, 0);
  if (kind == Kind::A) {
    for (std::size_t i = 0; i < index; ++i) e[i] = 1;
  } else {
    e[index - 1] = 2;
  }
  return Triword(std::move(e));
}

std::string HochIrreducible::str() const {
  return std::string(kind == Kind::A ? "a" : "b") + "^(" + std::to_string(index) + ")";
}

std::string HochIrreducible::vertex_str() const {
  return "(" + std::string(kind == Kind::A ? "1" : "2") + "," + std::to_string(index) + ")";
}

HochIrreducible irr_a(std::size_t i) { return {HochIrreducible::Kind::A, i}; }
HochIrreducible irr_b(std::size_t i) { return {HochIrreducible::Kind::B, i}; }

std::vector<HochIrreducible> hoch_irreducibles(std::size_t n) {
  std::vector<HochIrreducible> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(irr_a(i));
  for (std::size_t i = 2; i <= n; ++i) out.push_back(irr_b(i));
  return out;
}

std::optional<HochIrreducible> as_irreducible(const Triword& u) {
  std::size_t ones = 0, twos = 0, two_at = 0;
  for (std::size_t i = 1; i <= u.size(); ++i) {
    if (u.at(i) == 1) ++ones;
    if (u.at(i) == 2) {
      ++twos;
      two_at = i;
    }
  }
  if (twos == 0 && ones > 0 && l1(u) == ones) return irr_a(ones);
  if (twos == 1 && ones == 0) return irr_b(two_at);
  return std::nullopt;
}

Elem HochLattice::id(const Triword& u) const {
  auto it = index.find(u.code());
  if (u.size() != n || it == index.end()) throw Error(ErrorKind::MalformedWord, u.str() + " is not an element of Hoch(" + std::to_string(n) + ")");
  return it->second;
}

HochLattice build_hoch(std::size_t n) {
  HochLattice h;
  h.n = n;
  h.words = enumerate_triwords(n);
  for (Elem i = 0; i < h.words.size(); ++i) h.index.emplace(h.words[i].code(), i);

  // Candidate covers change a single entry upward; 0 -> 2 is a cover only
  // when the intermediate 1 is forbidden.
  std::vector<Cover> covers;
  std::vector<std::string> labels;
  for (Elem id = 0; id < h.words.size(); ++id) {
    const Triword& u = h.words[id];
    labels.push_back(u.str());
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::uint8_t x = u.at(i) + 1; x <= 2; ++x) {
        Triword v = u;
        v.at(i) = x;
        if (!v.valid()) continue;
        if (u.at(i) == 0 && x == 2) {
          Triword mid = u;
          mid.at(i) = 1;
          if (mid.valid()) continue;
        }
        covers.emplace_back(id, h.index.at(v.code()));
      }
    }
  }
  auto poset = FinitePoset::from_covers(h.words.size(), covers, std::move(labels));
  for (Elem a = 0; a < h.words.size(); ++a)
    for (Elem b = 0; b < h.words.size(); ++b)
      if (poset.leq(a, b) != leq_comp(h.words[a], h.words[b]))
        throw Error(ErrorKind::NotCover, "cover closure disagrees with the componentwise order at " + h.words[a].str() + ", " + h.words[b].str());
  h.lattice = Lattice::from_poset(std::move(poset));
  return h;
}

HochLattice build_hoch_by_doubling(std::size_t n) {
  check_length(n);
  std::vector<Triword> words{Triword()};
  FinitePoset current = FinitePoset::from_covers(1, {});

  auto find = [&](const Triword& u) -> Elem {
    auto it = std::find(words.begin(), words.end(), u);
    if (it == words.end()) throw Error(ErrorKind::NotInterval, u.str() + " missing during doubling");
    return static_cast<Elem>(it - words.begin());
  };
  auto apply = [&](IntervalRef b, std::uint8_t copy_letter) {
    Doubling d = doubling(current, b);
    const Bitset& ideal = current.down(b.hi);
    std::vector<Triword> next;
    for (const auto& [x, bit] : d.origin) {
      Triword w = words[x];
      if (bit == 1 && ideal.test(x)) w.at(w.size()) = copy_letter;
      next.push_back(std::move(w));
    }
    words = std::move(next);
    current = std::move(d.poset);
  };

  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& w : words) {
      auto e = w.entries();
      e.push_back(0);
      w = Triword(std::move(e));
    }
    const Elem bottom = *current.bottom();
    const Elem top = *current.top();
    if (k == 1) {
      apply({bottom, top}, 1);
      continue;
    }
    apply({bottom, top}, 2);
    std::vector<std::uint8_t> lo(k - 1, 1), hi(k - 1, 2);
    hi.front() = 1;
    lo.push_back(0);
    hi.push_back(0);
    apply({find(Triword(lo)), find(Triword(hi))}, 1);
  }

  HochLattice h;
  h.n = n;
  h.words = words;
  for (Elem i = 0; i < words.size(); ++i) h.index.emplace(words[i].code(), i);
  std::vector<std::string> labels;
  for (const auto& w : words) labels.push_back(w.str());
  std::vector<Cover> covers(current.covers().begin(), current.covers().end());
  h.lattice = Lattice::from_poset(FinitePoset::from_covers(words.size(), covers, std::move(labels)));
  return h;
}

std::vector<HochIrreducible> canrep_formula(const Triword& u) {
  std::vector<HochIrreducible> out;
  if (std::size_t l = l1(u); l > 0) out.push_back(irr_a(l));
  for (std::size_t i = 1; i <= u.size(); ++i)
    if (u.at(i) == 2) out.push_back(irr_b(i));
  return out;
}

std::size_t neg(const Triword& u) {
  auto can = canrep_formula(u);
  return static_cast<std::size_t>(std::count_if(can.begin(), can.end(), [](const HochIrreducible& j) { return j.is_atom(); }));
}

std::vector<std::vector<HochIrreducible>> cjc_facets_formula(std::size_t n) {
  std::vector<std::vector<HochIrreducible>> out;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<HochIrreducible> f{irr_a(i)};
    for (std::size_t j = 2; j <= n; ++j)
      if (j != i) f.push_back(irr_b(j));
    std::sort(f.begin(), f.end());
    out.push_back(std::move(f));
  }
  return out;
}

Triword nucleus_formula(const Triword& u) {
  const std::size_t l = l1(u);
  Triword out = u;
  for (std::size_t i = 1; i <= u.size(); ++i) {
    if (i == l || (i < l && u.at(i) == 2)) {
      out.at(i) = u.at(i) - 1;
    } else if (i > l && u.at(i) == 2) {
      out.at(i) = 0;
    }
  }
  return out;
}

std::vector<HochIrreducible> core_labels_formula(const Triword& u) {
  std::vector<HochIrreducible> out;
  const std::size_t l = l1(u), f = f0(u);
  if (l > 0)
    for (std::size_t i = l; i < f; ++i) out.push_back(irr_a(i));
  for (std::size_t i = 1; i <= u.size(); ++i)
    if (u.at(i) == 2) out.push_back(irr_b(i));
  return out;
}

Triword psi_inverse(std::size_t n, const std::vector<HochIrreducible>& labels) {
  auto malformed = [&](const std::string& why) {
    std::string text = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) text += (i ? "," : "") + labels[i].str();
    return Error(ErrorKind::MalformedLabelSet, text + "}: " + why);
  };
  std::vector<std::uint8_t> e(n, 0);
  std::size_t min_a = 0;
  for (const auto& j : labels) {
    if (j.index < 1 || j.index > n || (j.kind == HochIrreducible::Kind::B && j.index < 2)) throw malformed("index out of range");
    if (j.kind == HochIrreducible::Kind::B) {
      e[j.index - 1] = 2;
    } else if (min_a == 0 || j.index < min_a) {
      min_a = j.index;
    }
  }
  if (min_a > 0) {
    if (e[min_a - 1] == 2) throw malformed("last 1 collides with a 2");
    for (std::size_t i = 1; i <= min_a; ++i)
      if (e[i - 1] != 2) e[i - 1] = 1;
  }
  Triword u(std::move(e));
  auto expected = core_labels_formula(u);
  auto given = labels;
  std::sort(expected.begin(), expected.end());
  std::sort(given.begin(), given.end());
  if (!u.valid() || expected != given) throw malformed("not the core label set of any triword");
  return u;
}

HochIrreducible cover_label_formula(const Triword& u, const Triword& v) {
  for (std::size_t i = 1; i <= u.size(); ++i) {
    if (u.at(i) == v.at(i)) continue;
    if (v.at(i) == 1 && u.at(i) == 0) return irr_a(i);
    if (v.at(i) == 2 && u.at(i) < 2) return irr_b(i);
    break;
  }
  throw Error(ErrorKind::NotCover, u.str() + " -> " + v.str() + " is not a triword cover");
}

}  // namespace hochlat
