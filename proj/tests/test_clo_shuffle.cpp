#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hochlat/clo.hpp"
#include "hochlat/error.hpp"
#include "hochlat/generators.hpp"
#include "hochlat/shuffle.hpp"

using namespace hochlat;

namespace {

std::set<std::pair<std::string, std::string>> ascii_covers(const ShuffleLattice& s) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [x, y] : s.lattice.poset().covers())
    out.emplace(s.words[x].str(s.b, Glyphs::Ascii, true), s.words[y].str(s.b, Glyphs::Ascii, true));
  return out;
}


}  // namespace

TEST_CASE("shuffle words") {
  auto w = parse_shuffle_word("3 4 1* 6 9 10", 9, 1);
  CHECK(w.letters == std::vector<int>{2, 3, -1, 5, 8, 9});
  CHECK(w.str(1, Glyphs::Ascii) == "3 4 1* 6 9 10");
  CHECK(w.str(1) == "3 4 \xF0\x9D\x9F\x99 6 9 10");
  CHECK(parse_shuffle_word(w.str(1), 9, 1) == w);
  CHECK(parse_shuffle_word("eps", 2, 1).empty());
  CHECK(ShuffleWord{}.str(1) == "\xCE\xB5");
  CHECK(parse_shuffle_word("1*_2 2 1*_3", 1, 3).letters == std::vector<int>{-2, 1, -3});

  for (const char* bad : {"3 2", "1* 1*", "11", "2 x", "1", "", "1*_0", "1*2"}) {
    try {
      parse_shuffle_word(bad, 9, 1);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MalformedWord);
    }
  }
}

TEST_CASE("shuffle lattices") {
  auto s0 = shuffle_lattice(0, 0);
  CHECK(s0.lattice.size() == 1);

  auto s21 = shuffle_lattice(2, 1);
  CHECK(s21.lattice.size() == 12);
  std::set<std::pair<std::string, std::string>> figure{
      {"23", "2"},    {"23", "231*"}, {"23", "1*23"}, {"23", "3"},    {"23", "21*3"}, {"2", "eps"},   {"2", "1*2"},  {"2", "21*"},
      {"231*", "21*"}, {"231*", "31*"}, {"1*23", "1*2"}, {"1*23", "1*3"}, {"3", "eps"}, {"3", "31*"},  {"3", "1*3"},  {"21*3", "21*"},
      {"21*3", "1*3"}, {"1*2", "1*"},  {"eps", "1*"},  {"21*", "1*"},  {"31*", "1*"},  {"1*3", "1*"}};
  CHECK(ascii_covers(s21) == figure);
  CHECK(s21.words[s21.lattice.bottom()].str(1, Glyphs::Ascii) == "2 3");
  CHECK(s21.words[s21.lattice.top()].str(1, Glyphs::Ascii) == "1*");

  for (std::size_t n = 0; n <= 5; ++n) CHECK(are_isomorphic(shuffle_lattice(n, 0).lattice.poset(), boolean_lattice(n)).verified);

  for (std::size_t a = 0; a <= 4; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      auto s = shuffle_lattice(a, b);
      CHECK(Integer(s.lattice.size()) == shuffle_count(a, b));
      // Order closure of the covers equals Greene's order.
      for (Elem x = 0; x < s.lattice.size(); ++x)
        for (Elem y = 0; y < s.lattice.size(); ++y) CHECK(s.lattice.leq(x, y) == shuffle_leq(s.words[x], s.words[y]));
    }
  for (std::size_t n = 1; n <= 8; ++n) CHECK(shuffle_count(n - 1, 1) == triword_count(n));
  CHECK_THROWS_AS(shuffle_lattice(12, 3), Error);
}

TEST_CASE("shuffle statistics") {
  auto s3 = shuffle_stats(3);
  CHECK(s3.maximal_chains == 12);
  CHECK(s3.mobius == -3);
  auto s1 = shuffle_stats(1);
  CHECK(s1.mobius == -1);
  CHECK(s1.maximal_chains == 1);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto got = shuffle_stats(n);
    auto want = shuffle_stats_closed(n);
    CHECK(got.maximal_chains == want.maximal_chains);
    CHECK(got.zeta == want.zeta);
    CHECK(got.mobius == want.mobius);
    CHECK(mobius_invariant_via_zeta(shuffle_lattice(n - 1, 1).lattice.poset()) == want.mobius);
  }
}

TEST_CASE("sigma") {
  CHECK(sigma(Triword::parse("(1,1,2)")).str(1) == "2 \xF0\x9D\x9F\x99");
  CHECK(sigma(Triword::parse("(0,2,2)")).empty());
  CHECK(sigma(Triword::parse("(1,2,0)")).str(1, Glyphs::Ascii) == "1* 3");
  auto u = Triword::parse("(1,2,1,1,2,0,2,2,0,0)");
  CHECK(sigma(u).str(1, Glyphs::Ascii) == "3 4 1* 6 9 10");
  CHECK(sigma_inverse(parse_shuffle_word("3 4 1* 6 9 10", 9, 1), 10) == u);

  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<ShuffleWord> image;
    for (const auto& t : enumerate_triwords(n)) {
      auto w = sigma(t);
      CHECK(is_shuffle_word(w, n - 1, 1));
      CHECK(sigma_inverse(w, n) == t);
      image.insert(w);
    }
    CHECK(Integer(image.size()) == triword_count(n));
  }
  CHECK_THROWS_AS(sigma_inverse(parse_shuffle_word("2 3", 2, 1), 2), Error);
  CHECK_THROWS_AS(sigma_inverse(ShuffleWord{{-1, -1}}, 3), Error);
}

TEST_CASE("sigma table for n = 3") {
  const std::string utf8 =
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
  CHECK(sigma_table(3) == utf8);
  const std::string ascii = sigma_table(3, Glyphs::Ascii);
  CHECK(ascii.substr(0, ascii.find('\n')) == "u | tau(u) | l1(u) | sigma(u)");
  CHECK(ascii.find("(1,1,0) | 23 | 2 | 21*3\n") != std::string::npos);
  CHECK(ascii.find("(0,2,2) | eps | 0 | eps\n") != std::string::npos);
  CHECK(sigma_table(10, Glyphs::Ascii).find("(1,2,1,1,2,0,2,2,0,0) | 3 4 6 9 10 | 4 | 3 4 1* 6 9 10\n") != std::string::npos);
}

TEST_CASE("core label order") {
  CHECK(are_isomorphic(clo(as_lattice(chain(2))), chain(2)).verified);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(are_isomorphic(clo(as_lattice(boolean_lattice(n))), boolean_lattice(n)).verified);

  auto h3 = build_hoch(3);
  auto c3 = clo(h3.lattice);
  CHECK(c3.size() == 12);
  CHECK(c3.covers().size() == 22);
  CHECK(rank_profile(c3) == std::vector<std::size_t>{1, 5, 5, 1});
  CHECK(mobius(c3, *c3.bottom(), *c3.top()) == -3);
  std::multiset<std::size_t> ideal_sizes;
  auto r3 = rank_function(c3);
  for (Elem u = 0; u < c3.size(); ++u)
    if (r3[u] == 2) ideal_sizes.insert(c3.down(u).count());
  CHECK(ideal_sizes == std::multiset<std::size_t>{4, 4, 4, 5, 5});
  CHECK(as_lattice(c3).size() == 12);

  CHECK(clo_rank_counts(1) == std::vector<Integer>{1, 1});
  CHECK(clo_rank_counts(3) == std::vector<Integer>{1, 5, 5, 1});
  CHECK(clo_rank_counts(4) == std::vector<Integer>{1, 7, 12, 7, 1});

  try {
    clo(as_lattice(diamond_m3()));
    FAIL("expected NotSemidistributive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSemidistributive);
  }
}

TEST_CASE("property: sigma is an isomorphism CLO(Hoch(n)) -> Shuf(n-1,1)") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto h = build_hoch(n);
    auto c = clo(h.lattice);
    auto s = shuffle_lattice(n - 1, 1);
    std::vector<Elem> image(h.words.size());
    for (Elem u = 0; u < h.words.size(); ++u) image[u] = s.id(sigma(h.words[u]));
    for (Elem u = 0; u < c.size(); ++u)
      for (Elem v = 0; v < c.size(); ++v) CHECK(c.leq(u, v) == s.lattice.leq(image[u], image[v]));
    CHECK(is_isomorphism(c, s.lattice.poset(), image));
    CHECK(as_lattice(c).size() == c.size());

    auto ranks = rank_function(c);
    std::vector<Integer> profile;
    for (auto r : rank_profile(c)) profile.emplace_back(r);
    CHECK(profile == clo_rank_counts(n));
    for (Elem u = 0; u < c.size(); ++u) {
      CHECK(ranks[u] == clo_rank_formula(h.words[u]));
      CHECK(ranks[u] == h.lattice.poset().lower_covers(u).size());
    }
  }
}

TEST_CASE("property: upper intervals of CLO(Hoch(n))") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto h = build_hoch(n);
    auto c = clo(h.lattice);
    auto ranks = rank_function(c);
    for (Elem u = 0; u < c.size(); ++u) {
      auto up = c.induced(c.interval(u, *c.top()));
      std::size_t k = ranks[u];
      if (l1(h.words[u]) == 0) {
        CHECK(are_isomorphic(up, clo(build_hoch(n - k).lattice)).verified);
      } else {
        CHECK(are_isomorphic(up, boolean_lattice(n - k)).verified);
      }
    }
  }
}
