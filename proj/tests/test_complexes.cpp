#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "hochlat/complex.hpp"
#include "hochlat/error.hpp"
#include "hochlat/generators.hpp"
#include "hochlat/hochschild.hpp"

using namespace hochlat;

namespace {

std::vector<std::string> names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < k; ++v) out.push_back("v" + std::to_string(v));
  return out;
}

// Textbook recursion over every vertex, no memo, no ordering.
bool brute_vd(const SimplicialComplex& d) {
  if (d.is_simplex()) return true;
  for (std::size_t v = 0; v < d.ground_size(); ++v) {
    FaceMask bit = FaceMask{1} << v;
    if (!(d.support() & bit)) continue;
    auto lk = link(d, bit);
    auto del = deletion(d, bit);
    bool shared = false;
    for (FaceMask g : lk.facets())
      for (FaceMask h : del.facets()) shared |= g == h;
    if (!shared && brute_vd(lk) && brute_vd(del)) return true;
  }
  return false;
}

// Replays a witness: each vertex must shed, ending at a simplex.
bool replay(SimplicialComplex d, const std::vector<std::size_t>& path) {
  for (std::size_t v : path) {
    FaceMask bit = FaceMask{1} << v;
    auto lk = link(d, bit);
    auto del = deletion(d, bit);
    for (FaceMask g : lk.facets())
      if (std::binary_search(del.facets().begin(), del.facets().end(), g)) return false;
    if (!is_vertex_decomposable(lk).decomposable) return false;
    d = del;
  }
  return d.is_simplex();
}

std::set<std::string> facet_names(const HochLattice& h, const CanonicalJoinComplex& c) {
  std::set<std::string> out;
  for (FaceMask f : c.complex.facets()) {
    std::vector<std::string> members;
    for (std::size_t v = 0; v < c.vertices.size(); ++v)
      if (f >> v & 1) members.push_back(as_irreducible(h.words[c.vertices[v]])->str());
    std::sort(members.begin(), members.end());
    std::string s;
    for (const auto& m : members) s += (s.empty() ? "" : " ") + m;
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("complex basics") {
  SimplicialComplex d(names(4), {0b0011, 0b0001, 0b0110});
  CHECK(d.facets() == std::vector<FaceMask>{0b0011, 0b0110});
  CHECK(d.contains(0b0010));
  CHECK_FALSE(d.contains(0b0101));
  CHECK(d.face_count() == 6);  // empty, 3 vertices, 2 edges
  CHECK(d.is_pure());
  CHECK(d.support() == 0b0111);
  CHECK(d.face_str(0b0110) == "{v1,v2}");

  CHECK(link(d, 0b0010).facets() == std::vector<FaceMask>{0b0001, 0b0100});
  CHECK(deletion(d, 0b0010).facets() == std::vector<FaceMask>{0b0001, 0b0100});
  CHECK(link(d, 0).facets() == d.facets());

  try {
    link(d, 0b1000);
    FAIL("expected NotAFace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAFace);
  }
  CHECK_THROWS_AS(deletion(d, 0b0101), Error);
  CHECK_THROWS_AS(SimplicialComplex(names(2), {0b100}), Error);

  SimplicialComplex empty(names(3), {});
  CHECK(empty.face_count() == 1);
  CHECK(is_vertex_decomposable(empty).decomposable);
}

TEST_CASE("vertex decomposability examples") {
  SimplicialComplex two_edges(names(4), {0b0011, 0b1100});
  CHECK_FALSE(is_vertex_decomposable(two_edges).decomposable);
  CHECK_FALSE(brute_vd(two_edges));

  SimplicialComplex path(names(4), {0b0011, 0b0110, 0b1100});
  auto r = is_vertex_decomposable(path);
  CHECK(r.decomposable);
  CHECK(replay(path, r.shedding));

  SimplicialComplex two_points(names(2), {0b01, 0b10});
  CHECK(is_vertex_decomposable(two_points).decomposable);

  // Boundary of a triangle is a 1-sphere.
  SimplicialComplex circle(names(3), {0b011, 0b110, 0b101});
  CHECK(is_vertex_decomposable(circle).decomposable);
}

TEST_CASE("property: VD search agrees with the brute recursion") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t k = 2 + rng() % 6;
    std::size_t m = 1 + rng() % 5;
    std::vector<FaceMask> faces;
    for (std::size_t i = 0; i < m; ++i) faces.push_back(rng() & ((FaceMask{1} << k) - 1));
    SimplicialComplex d(names(k), faces);
    auto r = is_vertex_decomposable(d);
    CHECK(r.decomposable == brute_vd(d));
    if (r.decomposable) CHECK(replay(d, r.shedding));
  }
}

TEST_CASE("canonical join complex of Hoch(3)") {
  auto h = build_hoch(3);
  auto c = cjc(h.lattice);
  CHECK(c.vertices.size() == 5);
  CHECK(c.complex.face_count() == h.lattice.size());
  CHECK(facet_names(h, c) == std::set<std::string>{"a^(1) b^(2) b^(3)", "a^(2) b^(3)", "a^(3) b^(2)"});
  CHECK_FALSE(c.complex.is_pure());
  CHECK(is_vertex_decomposable(c.complex).decomposable);
}

TEST_CASE("canonical join complexes of Hoch(n)") {
  CHECK_FALSE(cjc(build_hoch(4).lattice).complex.is_pure());
  for (std::size_t n = 1; n <= 6; ++n) {
    auto h = build_hoch(n);
    auto c = cjc(h.lattice);
    CHECK(c.vertices.size() == 2 * n - 1);
    CHECK(c.complex.face_count() == h.lattice.size());
    // Faces are exactly the canonical join representations.
    for (Elem u = 0; u < h.lattice.size(); ++u) {
      std::vector<std::string> want, got;
      for (const auto& j : canrep_formula(h.words[u])) want.push_back(h.words[h.id(j)].str());
      for (std::size_t v = 0; v < c.vertices.size(); ++v)
        if (c.faces[u] >> v & 1) got.push_back(h.words[c.vertices[v]].str());
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      CHECK(want == got);
    }
    auto r = is_vertex_decomposable(c.complex);
    CHECK(r.decomposable);
    CHECK(replay(c.complex, r.shedding));
    CHECK(verify_shedding(c.complex, r.shedding));

    std::set<std::string> want;
    for (const auto& facet : cjc_facets_formula(n)) {
      std::string s;
      for (const auto& j : facet) s += (s.empty() ? "" : " ") + j.str();
      want.insert(s);
    }
    CHECK(facet_names(h, c) == want);
  }
}

TEST_CASE("canonical join complex of Boolean lattices is a simplex") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto c = cjc(as_lattice(boolean_lattice(n)));
    CHECK(c.complex.is_simplex());
    CHECK(c.complex.face_count() == (std::size_t{1} << n));
  }
}

TEST_CASE("cjc rejects non-semidistributive lattices") {
  try {
    cjc(as_lattice(diamond_m3()));
    FAIL("expected NotJoinSemidistributive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotJoinSemidistributive);
  }
}
