#include "hochlat/checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "hochlat/clo.hpp"
#include "hochlat/complex.hpp"
#include "hochlat/error.hpp"
#include "hochlat/galois.hpp"
#include "hochlat/generators.hpp"
#include "hochlat/hochschild.hpp"
#include "hochlat/shuffle.hpp"
#include "hochlat/triangles.hpp"

namespace hochlat {

namespace {

// Records the first failed expectation.
struct Probe {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  bool ok() const { return failure.empty(); }
};

const HochLattice& hoch(std::size_t n) {
  static std::map<std::size_t, HochLattice> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_hoch(n)).first;
  return it->second;
}

std::string at(std::size_t n) { return " at n=" + std::to_string(n); }

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

BiPoly power(const BiPoly& p, std::size_t e) { return p.pow(static_cast<unsigned>(e)); }

void cardinality(Probe& p, std::size_t hi) {
  for (std::size_t n = 1; n <= hi; ++n) {
    auto start = std::chrono::steady_clock::now();
    auto words = enumerate_triwords(n);
    auto elapsed = std::chrono::steady_clock::now() - start;
    Rational expected = pow2(static_cast<std::int64_t>(n) - 2) * Rational(static_cast<long long>(n + 3));
    p.expect(Rational(static_cast<long long>(words.size())) == expected, "|Tri(n)| differs from 2^(n-2)(n+3)" + at(n));
    p.expect(Integer(words.size()) == triword_count(n), "triword_count disagrees with enumeration" + at(n));
    p.expect(std::all_of(words.begin(), words.end(), [](const Triword& u) { return u.valid(); }), "invalid triword enumerated" + at(n));
    p.expect(std::adjacent_find(words.begin(), words.end(), std::greater_equal<>()) == words.end(),
             "enumeration not strictly lexicographic" + at(n));
    if (n == 10) {
      p.expect(words.size() == 3328, "|Tri(10)| is not 3328");
      p.expect(elapsed < std::chrono::seconds(1), "enumeration of Tri(10) took 1 s or more");
    }
  }
}

void lattice_law(Probe& p, std::size_t hi) {
  for (std::size_t n = 1; n <= hi; ++n) {
    const auto& h = hoch(n);
    const auto& l = h.lattice;
    for (Elem a = 0; a < l.size(); ++a)
      for (Elem b = 0; b < l.size(); ++b) {
        p.expect(h.id(hoch_join(h.words[a], h.words[b])) == l.join(a, b), "join differs from the lub table" + at(n));
        p.expect(h.id(hoch_meet(h.words[a], h.words[b])) == l.meet(a, b), "meet differs from the glb table" + at(n));
        p.expect(leq_comp(h.words[a], h.words[b]) == l.leq(a, b), "componentwise order differs" + at(n));
      }
    for (const auto& [a, b] : l.poset().covers()) {
      const auto& u = h.words[a].entries();
      const auto& v = h.words[b].entries();
      std::size_t changed = 0;
      for (std::size_t i = 0; i < n; ++i) changed += u[i] != v[i];
      p.expect(changed == 1, "a cover changes more than one coordinate" + at(n));
    }
  }
}

void structure(Probe& p, std::size_t hi) {
  for (std::size_t n = 1; n <= hi; ++n) {
    const auto& l = hoch(n).lattice;
    p.expect(is_extremal(l), "not extremal" + at(n));
    p.expect(is_semidistributive(l), "not semidistributive" + at(n));
    p.expect(is_spherical(l), "not spherical" + at(n));
    p.expect(has_intersection_property(l), "intersection property fails" + at(n));
    if (n <= 4)
      p.expect(are_isomorphic(build_hoch_by_doubling(n).lattice.poset(), l.poset()).verified,
               "doubling construction not isomorphic" + at(n));
  }
}

void galois(Probe& p, std::size_t hi) {
  for (std::size_t n = 1; n <= hi; ++n) {
    const auto& h = hoch(n);
    auto g = galois_graph(h.lattice);
    p.expect(relabel_hoch_galois(h, g).labelled_edges() == hoch_galois_characterization(n).labelled_edges(),
             "Galois graph differs from the characterization" + at(n));
    if (n <= 5) {
      auto mo = max_ortho_pairs_lattice(g.graph);
      p.expect(are_isomorphic(mo.lattice.poset(), h.lattice.poset()).verified, "MO-pair lattice not isomorphic" + at(n));
    }
  }
  const auto& h3 = hoch(3);
  auto g3 = relabel_hoch_galois(h3, galois_graph(h3.lattice));
  auto mo = max_ortho_pairs_lattice(g3);
  const std::set<std::string> expected = {
      "({},{(1,1),(1,2),(1,3),(2,2),(2,3)})", "({(1,1)},{(1,2),(1,3),(2,2),(2,3)})",
      "({(1,1),(1,2)},{(1,3),(2,2),(2,3)})",  "({(2,2)},{(1,1),(1,3),(2,3)})",
      "({(2,3)},{(1,1),(1,2),(2,2)})",        "({(1,1),(1,2),(2,2)},{(1,3),(2,3)})",
      "({(1,1),(1,2),(1,3)},{(2,2),(2,3)})",  "({(1,1),(2,3)},{(1,2),(2,2)})",
      "({(1,1),(1,2),(1,3),(2,2)},{(2,3)})",  "({(1,1),(1,2),(1,3),(2,3)},{(2,2)})",
      "({(2,2),(2,3)},{(1,1)})",              "({(1,1),(1,2),(1,3),(2,2),(2,3)},{})"};
  const auto& labels = mo.lattice.poset().labels();
  p.expect(std::set<std::string>(labels.begin(), labels.end()) == expected && labels.size() == 12,
           "the 12 maximal orthogonal pairs of Hoch(3) differ");
  for (const auto& pair : mo.pairs) p.expect(is_maximal_orthogonal(g3, pair), "non-maximal orthogonal pair at n=3");
}

void canonical_join(Probe& p, std::size_t hi) {
  for (std::size_t n = 1; n <= hi; ++n) {
    const auto& h = hoch(n);
    auto c = cjc(h.lattice);
    p.expect(Integer(c.complex.face_count()) == triword_count(n), "face count differs from |Tri(n)|" + at(n));
    std::set<std::vector<HochIrreducible>> got, want;
    for (FaceMask f : c.complex.facets()) {
      std::vector<HochIrreducible> members;
      for (std::size_t v = 0; v < c.vertices.size(); ++v)
        if (f >> v & 1) members.push_back(*as_irreducible(h.words[c.vertices[v]]));
      std::sort(members.begin(), members.end());
      got.insert(members);
    }
    for (const auto& f : cjc_facets_formula(n)) want.insert(f);
    p.expect(got == want, "facets differ from the closed description" + at(n));
    auto r = is_vertex_decomposable(c.complex);
    p.expect(r.decomposable, "not vertex decomposable" + at(n));
    p.expect(r.decomposable && verify_shedding(c.complex, r.shedding), "shedding witness does not replay" + at(n));
  }
}

const char* const kSigmaTable3 =
    "\xF0\x9D\x94\xB2 | \xCF\x84(\xF0\x9D\x94\xB2) | l\xE2\x82\x81(\xF0\x9D\x94\xB2) | \xCF\x83(\xF0\x9D\x94\xB2)\n"
    "(0,0,0) | 23 | 0 | 23\n"
    "(0,0,2) | 2 | 0 | 2\n"
    "(0,2,0) | 3 | 0 | 3\n"
    "(0,2,2) | \xCE\xB5 | 0 | \xCE\xB5\n"
    "(1,0,0) | 23 | 1 | \xF0\x9D\x9F\x99" "23\n"
    "(1,0,2) | 2 | 1 | \xF0\x9D\x9F\x99" "2\n"
    "(1,1,0) | 23 | 2 | 2\xF0\x9D\x9F\x99" "3\n"
    "(1,1,1) | 23 | 3 | 23\xF0\x9D\x9F\x99\n"
    "(1,1,2) | 2 | 2 | 2\xF0\x9D\x9F\x99\n"
    "(1,2,0) | 3 | 1 | \xF0\x9D\x9F\x99" "3\n"
    "(1,2,1) | 3 | 3 | 3\xF0\x9D\x9F\x99\n"
    "(1,2,2) | \xCE\xB5 | 1 | \xF0\x9D\x9F\x99\n";

void core_label_order(Probe& p, std::size_t hi) {
  for (std::size_t n = 1; n <= hi; ++n) {
    const auto& h = hoch(n);
    auto c = clo(h.lattice);
    auto s = shuffle_lattice(n - 1, 1);
    std::vector<Elem> image(h.words.size());
    for (Elem u = 0; u < h.words.size(); ++u) image[u] = s.id(sigma(h.words[u]));
    p.expect(is_isomorphism(c, s.lattice.poset(), image), "sigma is not an order isomorphism" + at(n));
    auto profile = rank_profile(c);
    bool match = profile.size() == n + 1;
    for (std::size_t k = 0; match && k <= n; ++k) {
      Integer want = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
      if (k >= 1) want += Integer(n - k) * binomial(static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(k) - 1);
      match = Integer(profile[k]) == want;
    }
    p.expect(match, "rank profile differs from C(n,k)+(n-k)C(n-1,k-1)" + at(n));
  }
  p.expect(sigma_table(3) == kSigmaTable3, "sigma table at n=3 differs");
  p.expect(rank_profile(clo(hoch(3).lattice)) == std::vector<std::size_t>{1, 5, 5, 1}, "rank profile at n=3 is not [1,5,5,1]");
}

void shuffle_statistics(Probe& p, std::size_t hi) {
  for (std::size_t n = 1; n <= hi; ++n) {
    auto st = shuffle_stats(n);
    p.expect(st.maximal_chains == factorial(static_cast<std::int64_t>(n) + 1) / 2, "maximal chains differ from (n+1)!/2" + at(n));
    std::int64_t mu = (n % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(n);
    p.expect(st.mobius == mu, "Mobius invariant differs from (-1)^n n" + at(n));
    for (long long q = 0; q <= static_cast<long long>(n) + 3; ++q) {
      Rational want = 1;
      for (std::size_t i = 1; i < n; ++i) want *= q;
      want *= Rational(static_cast<long long>(n + 1) * q - static_cast<long long>(n) + 1, 2);
      p.expect(evaluate(st.zeta, Rational(q)) == want, "zeta polynomial differs" + at(n) + ", q=" + std::to_string(q));
    }
  }
  auto s3 = shuffle_stats(3);
  p.expect(s3.maximal_chains == 12 && s3.mobius == -3, "n=3 statistics are not 12 chains and mu=-3");
}

BiPoly m_example() {
  auto m = [](unsigned i, unsigned j) { return BiPoly::monomial(i, j, 1); };
  return 1 + 5 * X * Y + 5 * m(2, 2) + m(3, 3) - 5 * Y + 7 * Y * Y - 3 * m(0, 3) - 12 * m(1, 2) + 7 * m(1, 3) - 5 * m(2, 3);
}

void m_triangle_check(Probe& p, std::size_t hi) {
  for (std::size_t n = 1; n <= hi; ++n) {
    auto m = m_triangle(clo(hoch(n).lattice));
    p.expect(m == m_closed(n), "definitional M differs from the closed form" + at(n));
    p.expect(m.at_x(0) == power(1 - Y, n - 1) * (1 - BiPoly(static_cast<long long>(n)) * Y), "M(0,y) differs" + at(n));
  }
  auto m3 = m_triangle(clo(hoch(3).lattice));
  p.expect(m3 == m_example() && m3.terms().size() == 10, "M_3 is not the 10-term example");
}

void f_triangle_check(Probe& p, std::size_t hi) {
  for (std::size_t n = 1; n <= hi; ++n) {
    const auto& h = hoch(n);
    auto f = f_closed(n);
    p.expect(f_from_m(m_triangle(clo(h.lattice)), n) == f, "F from M differs" + at(n));
    p.expect(f_tilde(h) == f, "F from neg statistics differs" + at(n));
    p.expect(f_from_cores(h.lattice, n) == f, "F from partial cores differs" + at(n));
    for (unsigned k = 0; k <= n + 1; ++k)
      for (unsigned l = 0; l <= n + 1; ++l) p.expect(f.coeff(k, l) == f_coefficient(n, k, l), "F coefficient differs" + at(n));
  }
  p.expect(f_closed(3) == (X + Y + 1) * (3 * X * X + 2 * X * Y + 4 * X + (Y + 1).pow(2)), "F_3 differs from the example");
}

void h_triangle_check(Probe& p, std::size_t hi, std::size_t n_max) {
  for (std::size_t n = 1; n <= hi; ++n) {
    const auto& h = hoch(n);
    auto c = clo(h.lattice);
    auto hp = h_closed(n);
    p.expect(h_from_m(m_triangle(c), n) == hp, "H from M differs" + at(n));
    p.expect(h_tilde(h) == hp, "H from statistics differs" + at(n));
    p.expect(h_from_antichains(n) == hp, "H from antichains differs" + at(n));
    p.expect(hp.at_y(1) == rank_poly(c), "H(x,1) differs from the rank polynomial" + at(n));
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 10); ++n)
    p.expect(Integer(count_antichains(j_poset(n))) == triword_count(n), "antichain count of J_n differs" + at(n));
  p.expect(h_closed(4) == (X * Y + 1).pow(2) * ((X * Y + 1).pow(2) + 3 * X), "H_4 differs from the example");
  p.expect(h_from_antichains(4) == h_closed(4), "H_4 from antichains differs");
}

void faces_check(Probe& p, std::size_t hi) {
  for (std::size_t n = 1; n <= hi; ++n) {
    const auto& l = hoch(n).lattice;
    auto f = face_vector(l);
    bool match = f.size() == n + 1;
    Integer alt = 0;
    for (std::size_t i = 0; match && i <= n; ++i) {
      match = f[i] == face_count_closed(n, i);
      alt += i % 2 == 0 ? f[i] : Integer(-f[i]);
    }
    p.expect(match, "f-vector differs from the closed formula" + at(n));
    p.expect(!match || alt == 1, "alternating face sum is not 1" + at(n));
    p.expect(!match || (f[0] == l.size() && f[1] == l.poset().covers().size()),
             "f_0/f_1 differ from element/cover counts" + at(n));
  }
  p.expect(face_vector(hoch(3).lattice) == std::vector<Integer>{12, 18, 8, 1}, "n=3 f-vector is not [12,18,8,1]");
}

void baselines(Probe& p, std::size_t hi) {
  for (std::size_t n = 0; n <= hi; ++n) {
    auto d = boolean_triangles(n);
    p.expect(d.m == power(X * Y - Y + 1, n), "Boolean M differs" + at(n));
    p.expect(d.f == power(X + Y + 1, n), "Boolean F differs" + at(n));
    p.expect(d.h == power(X * Y + 1, n), "Boolean H differs" + at(n));
    if (n >= 1) {
      p.expect(f_from_m(d.m, n) == d.f, "Boolean F from M differs" + at(n));
      p.expect(h_from_m(d.m, n) == d.h, "Boolean H from M differs" + at(n));
    }
    auto b = boolean_lattice(n);
    p.expect(are_isomorphic(clo(as_lattice(b)), b).verified, "CLO(Bool(n)) not isomorphic to Bool(n)" + at(n));
  }
}

}  // namespace

bool g_conjecture_holds(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "the conjecture is stated for n >= 1");
  return g_triangle(n - 1, 1) == g_conjecture_closed(n);
}

namespace {

std::string conjecture(Probe& p, std::size_t hi) {
  std::string verdicts;
  for (std::size_t n = 1; n <= hi; ++n) {
    p.expect(g_triangle(n, 0) == power(X + Y + 1, n), "G(n,0) differs from (x+y+1)^n" + at(n));
    verdicts += (verdicts.empty() ? "" : ", ") + std::to_string(n) + (g_conjecture_holds(n) ? " holds" : " fails");
  }
  return verdicts.empty() ? "" : "; conjecture: " + verdicts;
}

struct Spec {
  const char* name;
  std::size_t cap;
};

const Spec kSpecs[] = {
    {"cardinality", 10},       {"lattice law", 6},     {"structure theorems", 6}, {"Galois graph", 8},
    {"canonical join complex", 6}, {"core label order", 6}, {"shuffle statistics", 6}, {"M-triangle", 5},
    {"F-triangle", 5},         {"H-triangle", 5},      {"freehedron faces", 8},   {"Boolean baselines", 5},
    {"conjecture harness", 6},
};

}  // namespace

std::size_t check_cap(int id) {
  if (id < 1 || id > 13) throw Error(ErrorKind::InvalidArgument, "criteria are numbered 1..13");
  return kSpecs[id - 1].cap;
}

CheckResult run_check(int id, std::size_t n_max) {
  const std::size_t hi = std::min(n_max, check_cap(id));
  CheckResult r{id, kSpecs[id - 1].name, false, ""};
  Probe p;
  std::string extra;
  try {
    switch (id) {
      case 1: cardinality(p, hi); break;
      case 2: lattice_law(p, hi); break;
      case 3: structure(p, hi); break;
      case 4: galois(p, hi); break;
      case 5: canonical_join(p, hi); break;
      case 6: core_label_order(p, hi); break;
      case 7: shuffle_statistics(p, hi); break;
      case 8: m_triangle_check(p, hi); break;
      case 9: f_triangle_check(p, hi); break;
      case 10: h_triangle_check(p, hi, n_max); break;
      case 11: faces_check(p, hi); break;
      case 12: baselines(p, hi); break;
      case 13: extra = conjecture(p, hi); break;
    }
  } catch (const std::exception& e) {
    p.expect(false, std::string("error: ") + e.what());
  }
  r.pass = p.ok();
  r.detail = hi == 0 ? "fixed examples only" : "n=1.." + std::to_string(hi);
  if (id == 12) r.detail = "n=0.." + std::to_string(hi);
  r.detail += extra;
  if (!r.pass) r.detail += "; " + p.failure;
  return r;
}

std::vector<CheckResult> run_checks(std::size_t n_max) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= 13; ++id) out.push_back(run_check(id, n_max));
  return out;
}

}  // namespace hochlat
