#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hochlat/error.hpp"
#include "hochlat/generators.hpp"
#include "hochlat/hochschild.hpp"
#include "hochlat/lattice.hpp"

using namespace hochlat;

namespace {

std::vector<Lattice> jsd_samples() {
  std::vector<Lattice> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(build_hoch(n).lattice);
  for (std::size_t n = 0; n <= 3; ++n) out.push_back(as_lattice(boolean_lattice(n)));
  out.push_back(as_lattice(chain(4)));
  return out;
}

bool is_antichain(const Lattice& l, const std::vector<Elem>& xs) {
  for (Elem a : xs)
    for (Elem b : xs)
      if (a != b && l.leq(a, b)) return false;
  return true;
}

// Every member of `fine` lies below some member of `coarse`.
bool refines(const Lattice& l, const std::vector<Elem>& fine, const std::vector<Elem>& coarse) {
  return std::all_of(fine.begin(), fine.end(), [&](Elem x) {
    return std::any_of(coarse.begin(), coarse.end(), [&](Elem y) { return l.leq(x, y); });
  });
}

}  // namespace

TEST_CASE("as_lattice") {
  CHECK_NOTHROW(as_lattice(boolean_lattice(2)));
  try {
    as_lattice(bowtie_nonlattice());
    FAIL("expected NotALattice");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotALattice);
  }
  try {
    as_lattice(antichain(2));
    FAIL("expected NotBounded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBounded);
  }
  auto h = build_hoch(3);
  for (Elem a = 0; a < 12; ++a)
    for (Elem b = 0; b < 12; ++b) CHECK(h.words[h.lattice.join(a, b)] == hoch_join(h.words[a], h.words[b]));
}

TEST_CASE("lattice tables satisfy the lattice laws") {
  for (const auto& l : jsd_samples()) {
    const Elem m = static_cast<Elem>(l.size());
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b) {
        CHECK(l.join(a, b) == l.join(b, a));
        CHECK(l.meet(a, l.join(a, b)) == a);
        CHECK(l.join(a, l.meet(a, b)) == a);
        for (Elem c = 0; c < m; ++c) CHECK(l.join(l.join(a, b), c) == l.join(a, l.join(b, c)));
      }
  }
}

TEST_CASE("irreducibles") {
  auto c = as_lattice(chain(4));
  CHECK(join_irreducibles(c) == std::vector<Elem>{1, 2, 3});
  for (std::size_t n = 1; n <= 5; ++n) {
    auto h = build_hoch(n);
    CHECK(join_irreducibles(h.lattice).size() == 2 * n - 1);
  }
  auto h3 = build_hoch(3);
  std::vector<Elem> expected{h3.id(irr_a(1)), h3.id(irr_b(2)), h3.id(irr_b(3))};
  std::sort(expected.begin(), expected.end());
  CHECK(atoms(h3.lattice) == expected);
  for (std::size_t i = 1; i <= 3; ++i) {
    Elem prev = i == 1 ? h3.lattice.bottom() : h3.id(irr_a(i - 1));
    CHECK(lower_star(h3.lattice, h3.id(irr_a(i))) == prev);
  }
  CHECK(lower_star(h3.lattice, h3.id(irr_b(2))) == h3.lattice.bottom());
}

TEST_CASE("extremality") {
  CHECK(is_extremal(as_lattice(boolean_lattice(2))));
  CHECK(is_extremal(build_hoch(4).lattice));
  CHECK_FALSE(is_extremal(as_lattice(diamond_m3())));
}

TEST_CASE("semidistributivity") {
  CHECK(is_semidistributive(as_lattice(chain(5))));
  CHECK_FALSE(is_join_semidistributive(as_lattice(diamond_m3())));
  CHECK(is_semidistributive(build_hoch(5).lattice));
}

TEST_CASE("sphericity") {
  CHECK(is_spherical(as_lattice(boolean_lattice(3))));
  CHECK(is_spherical(build_hoch(3).lattice));
  CHECK_FALSE(is_spherical(as_lattice(chain(3))));
  try {
    is_spherical(as_lattice(diamond_m3()));
    FAIL("expected NotSemidistributive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSemidistributive);
  }
}

TEST_CASE("jsd labeling") {
  auto b2 = as_lattice(boolean_lattice(2));
  auto lam = jsd_labeling(b2);
  for (Elem a : atoms(b2)) CHECK(lam(b2.bottom(), a) == a);

  auto h = build_hoch(3);
  auto hl = jsd_labeling(h.lattice);
  CHECK(hl(h.id(Triword::parse("(0,0,0)")), h.id(Triword::parse("(1,0,0)"))) == h.id(irr_a(1)));
  CHECK(hl(h.id(Triword::parse("(1,1,0)")), h.id(Triword::parse("(1,2,0)"))) == h.id(irr_b(2)));

  try {
    jsd_labeling(as_lattice(diamond_m3()));
    FAIL("expected NoUniqueMin");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoUniqueMin);
  }
}

TEST_CASE("canonical join representations") {
  auto h = build_hoch(3);
  auto lam = jsd_labeling(h.lattice);
  CHECK(canonical_joinrep(h.lattice, lam, h.lattice.bottom()).empty());
  std::vector<Elem> top_can{h.id(irr_a(1)), h.id(irr_b(2)), h.id(irr_b(3))};
  std::sort(top_can.begin(), top_can.end());
  CHECK(canonical_joinrep(h.lattice, lam, h.id(Triword::parse("(1,2,2)"))) == top_can);
  auto can121 = canonical_joinrep(h.lattice, lam, h.id(Triword::parse("(1,2,1)")));
  CHECK(can121.size() == 2);
  auto at = atoms(h.lattice);
  CHECK(std::count_if(can121.begin(), can121.end(), [&](Elem j) { return std::count(at.begin(), at.end(), j); }) == 1);
}

TEST_CASE("core label sets") {
  auto h = build_hoch(3);
  auto lam = jsd_labeling(h.lattice);
  auto c0 = core_label_set(h.lattice, lam, h.lattice.bottom());
  CHECK(c0.nucleus == h.lattice.bottom());
  CHECK(c0.labels.empty());
  auto c111 = core_label_set(h.lattice, lam, h.id(Triword::parse("(1,1,1)")));
  CHECK(c111.labels == std::vector<Elem>{h.id(irr_a(3))});

  auto h9 = build_hoch(9);
  auto lam9 = jsd_labeling(h9.lattice);
  auto c = core_label_set(h9.lattice, lam9, h9.id(Triword::parse("(1,2,1,1,2,2,0,2,0)")));
  CHECK(h9.words[c.nucleus] == Triword::parse("(1,1,1,0,0,0,0,0,0)"));
  std::vector<Elem> psi;
  for (auto j : {irr_a(4), irr_a(5), irr_a(6), irr_b(2), irr_b(5), irr_b(6), irr_b(8)}) psi.push_back(h9.id(j));
  std::sort(psi.begin(), psi.end());
  CHECK(c.labels == psi);
}

TEST_CASE("intersection property") {
  CHECK(has_intersection_property(as_lattice(boolean_lattice(3))));
  CHECK(has_intersection_property(build_hoch(4).lattice));
  CHECK(has_intersection_property(as_lattice(chain(3))));
}

TEST_CASE("property: canonical join representations") {
  for (const auto& l : jsd_samples()) {
    auto lam = jsd_labeling(l);
    auto ji = join_irreducibles(l);
    for (Elem a = 0; a < l.size(); ++a) {
      auto can = canonical_joinrep(l, lam, a);
      CHECK(l.join_all(can) == a);
      CHECK(is_antichain(l, can));
      for (Elem j : can) CHECK(std::binary_search(ji.begin(), ji.end(), j));
      auto core = core_label_set(l, lam, a);
      CHECK(std::includes(core.labels.begin(), core.labels.end(), can.begin(), can.end()));
      for (Elem j : core.labels) {
        CHECK(l.leq(j, a));
        CHECK_FALSE(l.leq(j, core.nucleus));
      }
    }
    for (Elem j : ji) CHECK(lam(lower_star(l, j), j) == j);
  }
}

TEST_CASE("property: canonical join representations refine every join representation") {
  for (const auto& l : jsd_samples()) {
    if (l.size() > 30) continue;
    auto lam = jsd_labeling(l);
    const std::size_t m = l.size();
    for (Elem a = 0; a < m; ++a) {
      auto can = canonical_joinrep(l, lam, a);
      std::vector<Elem> below;
      for (Elem x = 0; x < m; ++x)
        if (x != a && l.leq(x, a)) below.push_back(x);
      if (below.size() > 16) continue;
      for (std::uint32_t mask = 0; mask < (1u << below.size()); ++mask) {
        std::vector<Elem> rep;
        for (std::size_t i = 0; i < below.size(); ++i)
          if (mask >> i & 1) rep.push_back(below[i]);
        if (rep.empty() && a != l.bottom()) continue;
        if (l.join_all(rep) != a) continue;
        CHECK(refines(l, can, rep));
      }
    }
  }
}

TEST_CASE("property: λ agrees with perspectivity and Ψ is injective") {
  for (const auto& l : jsd_samples()) {
    auto lam = jsd_labeling(l);
    auto ji = join_irreducibles(l);
    for (const auto& cov : l.poset().covers())
      for (Elem j : ji) CHECK((lam(cov.first, cov.second) == j) == is_perspective(l, cov, {lower_star(l, j), j}));
    std::set<std::vector<Elem>> seen;
    for (const auto& c : core_label_sets(l, lam)) CHECK(seen.insert(c.labels).second);
  }
}

TEST_CASE("dual lattice swaps join and meet") {
  auto h = build_hoch(3).lattice;
  auto d = h.dual();
  CHECK(d.bottom() == h.top());
  for (Elem a = 0; a < h.size(); ++a)
    for (Elem b = 0; b < h.size(); ++b) CHECK(d.join(a, b) == h.meet(a, b));
  CHECK(meet_irreducibles(h) == join_irreducibles(d));
}
