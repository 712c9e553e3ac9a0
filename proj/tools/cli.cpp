#include "cli.hpp"

#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hochlat/checks.hpp"
#include "hochlat/clo.hpp"
#include "hochlat/complex.hpp"
#include "hochlat/error.hpp"
#include "hochlat/export.hpp"
#include "hochlat/galois.hpp"
#include "hochlat/generators.hpp"
#include "hochlat/hochschild.hpp"
#include "hochlat/shuffle.hpp"
#include "hochlat/triangles.hpp"

namespace hochlat::cli {

namespace {

constexpr std::size_t kMaxTriwordLength = 10;
constexpr std::size_t kMaxElements = 5000;

// Usage problems and size-guard violations; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Selector {
  std::string family = "hoch";
  std::size_t n = 3, a = 2, b = 1;
  std::string transform = "none";
  bool ascii = false;
};

struct Structure {
  std::string name;
  FinitePoset poset;
  std::optional<Lattice> lattice;
  std::optional<HochLattice> hoch;  // set for the untransformed Hochschild family
};

void guard_hoch(std::size_t n) {
  if (n < 1) throw UsageError("--n must be at least 1 for the Hochschild family");
  if (n > kMaxTriwordLength) throw UsageError("size guard: triword length n <= " + std::to_string(kMaxTriwordLength));
}

void guard_elements(const Integer& count) {
  if (count > kMaxElements) throw UsageError("size guard: at most " + std::to_string(kMaxElements) + " elements");
}

FinitePoset relabel(const FinitePoset& p, std::vector<std::string> labels) {
  return FinitePoset::from_covers(p.size(), p.covers(), std::move(labels));
}

Structure base_structure(const Selector& s) {
  Structure out;
  if (s.family == "hoch") {
    guard_hoch(s.n);
    out.name = "Hoch(" + std::to_string(s.n) + ")";
    out.hoch = build_hoch(s.n);
    out.lattice = out.hoch->lattice;
  } else if (s.family == "shuffle") {
    guard_elements(shuffle_count(s.a, s.b));
    out.name = "Shuf(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
    auto sh = shuffle_lattice(s.a, s.b);
    if (s.ascii) {
      std::vector<std::string> labels;
      for (const auto& w : sh.words) labels.push_back(w.str(s.b, Glyphs::Ascii));
      out.lattice = as_lattice(relabel(sh.lattice.poset(), std::move(labels)));
    } else {
      out.lattice = sh.lattice;
    }
  } else if (s.family == "bool") {
    if (s.n >= 63) throw UsageError("size guard: at most " + std::to_string(kMaxElements) + " elements");
    guard_elements(Integer(1) << s.n);
    out.name = "Bool(" + std::to_string(s.n) + ")";
    out.lattice = as_lattice(boolean_lattice(s.n));
  } else {
    guard_elements(Integer(s.n) + 1);
    out.name = "Chain(" + std::to_string(s.n) + ")";
    out.lattice = as_lattice(chain(s.n + 1));
  }
  out.poset = out.lattice->poset();
  return out;
}

Structure structure(const Selector& s) {
  Structure out = base_structure(s);
  if (s.transform == "clo") {
    out.name = "CLO(" + out.name + ")";
    out.poset = clo(*out.lattice);
    out.lattice = as_lattice(out.poset);
    out.hoch.reset();
  } else if (s.transform == "mo") {
    out.name = "MO(" + out.name + ")";
    out.lattice = max_ortho_pairs_lattice(galois_graph(*out.lattice).graph).lattice;
    out.poset = out.lattice->poset();
    out.hoch.reset();
  }
  return out;
}

void add_selector(CLI::App* app, Selector& s, bool with_transform = true) {
  app->add_option("--family", s.family, "hoch | shuffle | bool | chain")
      ->check(CLI::IsMember({"hoch", "shuffle", "bool", "chain"}))
      ->capture_default_str();
  app->add_option("--n", s.n, "triword length, Boolean rank or chain length")->capture_default_str();
  app->add_option("--a", s.a, "shuffle: number of A letters")->capture_default_str();
  app->add_option("--b", s.b, "shuffle: number of B letters")->capture_default_str();
  if (with_transform)
    app->add_option("--transform", s.transform, "none | clo | mo")
        ->check(CLI::IsMember({"none", "clo", "mo"}))
        ->capture_default_str();
  app->add_flag("--ascii", s.ascii, "ASCII glyphs for shuffle words");
}

void add_format(CLI::App* app, std::string& format, std::vector<std::string> allowed) {
  std::string help;
  for (const auto& f : allowed) help += (help.empty() ? "" : " | ") + f;
  app->add_option("--format", format, help)->check(CLI::IsMember(allowed))->capture_default_str();
}

void print_poset_text(std::ostream& out, const std::string& name, const FinitePoset& p) {
  out << name << ": " << p.size() << " elements, " << p.covers().size() << " covers\n";
  auto covers = p.covers();
  std::sort(covers.begin(), covers.end());
  for (const auto& [a, b] : covers) out << p.label(a) << " -> " << p.label(b) << "\n";
}

void print_structure(std::ostream& out, const Structure& st, const std::string& format) {
  if (format == "json") {
    out << (st.lattice ? to_json(*st.lattice) : to_json(st.poset)).dump() << "\n";
  } else if (format == "dot") {
    out << to_dot(st.poset, st.name);
  } else {
    print_poset_text(out, st.name, st.poset);
  }
}

std::string join_words(const std::vector<std::size_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

const Lattice& require_lattice(const Structure& st) {
  if (!st.lattice) throw Error(ErrorKind::NotALattice, st.name + " is not a lattice");
  return *st.lattice;
}

int cmd_irr(std::ostream& out, const Structure& st) {
  const auto& l = require_lattice(st);
  auto irr = join_irreducibles(l);
  auto lambda = jsd_labeling(l);
  out << "join-irreducibles: " << irr.size() << "\n";
  for (Elem j : irr) {
    out << "  " << l.poset().label(j);
    if (st.hoch) out << "  " << as_irreducible(st.hoch->words[j])->str();
    out << "\n";
  }
  out << "cover labels:\n";
  auto covers = l.poset().covers();
  std::sort(covers.begin(), covers.end());
  for (const auto& [a, b] : covers) {
    Elem j = lambda(a, b);
    out << "  " << l.poset().label(a) << " -> " << l.poset().label(b) << " : "
        << (st.hoch ? as_irreducible(st.hoch->words[j])->str() : l.poset().label(j)) << "\n";
  }
  return 0;
}

int cmd_cjc(std::ostream& out, const Structure& st, const std::string& format) {
  const auto& l = require_lattice(st);
  auto c = cjc(l);
  SimplicialComplex complex = c.complex;
  if (st.hoch) {
    // Renumber vertices as a^(1) < ... < a^(n) < b^(2) < ... < b^(n).
    std::vector<HochIrreducible> irr;
    for (Elem j : c.vertices) irr.push_back(*as_irreducible(st.hoch->words[j]));
    std::vector<std::size_t> order(irr.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return irr[x] < irr[y]; });
    std::vector<std::size_t> slot(irr.size());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order.size(); ++i) {
      slot[order[i]] = i;
      names.push_back(irr[order[i]].str());
    }
    std::vector<FaceMask> facets;
    for (FaceMask f : complex.facets()) {
      FaceMask g = 0;
      for (std::size_t v = 0; v < irr.size(); ++v)
        if (f >> v & 1) g |= FaceMask{1} << slot[v];
      facets.push_back(g);
    }
    complex = SimplicialComplex(std::move(names), std::move(facets));
  }
  auto vd = is_vertex_decomposable(complex);
  bool replayed = vd.decomposable && verify_shedding(complex, vd.shedding);
  std::vector<std::string> shedding;
  for (auto v : vd.shedding) shedding.push_back(complex.vertex_labels()[v]);
  if (format == "json") {
    auto j = to_json(complex);
    j["vertex_decomposable"] = vd.decomposable;
    j["shedding"] = shedding;
    out << j.dump() << "\n";
  } else {
    out << "CJC(" << st.name << "): " << complex.ground_size() << " vertices, " << complex.face_count() << " faces\n";
    out << "facets:\n";
    for (FaceMask f : complex.facets()) out << "  " << complex.face_str(f) << "\n";
    out << "pure: " << (complex.is_pure() ? "yes" : "no") << "\n";
    out << "vertex decomposable: " << (vd.decomposable ? "yes" : "no") << "\n";
    if (vd.decomposable) {
      out << "shedding:";
      for (const auto& s : shedding) out << " " << s;
      out << "\n";
    }
  }
  return vd.decomposable && !replayed ? 1 : 0;
}

int cmd_clo(std::ostream& out, Selector s, bool table, const std::string& format) {
  if (table) {
    if (s.family != "hoch") throw UsageError("--table needs --family hoch");
    guard_hoch(s.n);
    out << sigma_table(s.n, s.ascii ? Glyphs::Ascii : Glyphs::Utf8);
    return 0;
  }
  s.transform = "clo";
  auto st = structure(s);
  print_structure(out, st, format);
  if (format == "text") {
    std::vector<std::size_t> profile = rank_profile(st.poset);
    out << "rank profile: " << join_words(profile) << "\n";
  }
  return 0;
}

int cmd_galois(std::ostream& out, const Structure& st, bool mo, const std::string& format) {
  const auto& l = require_lattice(st);
  auto g = galois_graph(l);
  DiGraph graph = st.hoch ? relabel_hoch_galois(*st.hoch, g) : g.graph;
  if (!mo) {
    if (format == "json") {
      out << to_json(graph).dump() << "\n";
    } else if (format == "dot") {
      out << to_dot(graph, "Galois(" + st.name + ")");
    } else {
      out << "Galois(" << st.name << "): " << graph.size() << " vertices, " << graph.edges().size() << " edges\n";
      for (const auto& [a, b] : graph.edges()) out << graph.labels()[a] << " -> " << graph.labels()[b] << "\n";
    }
    return 0;
  }
  auto pairs = max_ortho_pairs_lattice(graph);
  bool iso = are_isomorphic(pairs.lattice.poset(), l.poset()).verified;
  if (format == "json") {
    auto j = to_json(pairs.lattice);
    j["isomorphic"] = iso;
    out << j.dump() << "\n";
  } else if (format == "dot") {
    out << to_dot(pairs.lattice.poset(), "MO(" + st.name + ")");
  } else {
    out << "maximal orthogonal pairs: " << pairs.pairs.size() << "\n";
    for (Elem e = 0; e < pairs.lattice.size(); ++e) out << "  " << pairs.lattice.poset().label(e) << "\n";
    out << "isomorphic to " << st.name << ": " << (iso ? "yes" : "no") << "\n";
  }
  return iso ? 0 : 1;
}

struct Triangles {
  BiPoly m, f, h;
  std::vector<std::string> mismatches;
};

Triangles compute_triangles(const Selector& s, bool check) {
  Triangles t;
  if (s.family == "bool") {
    if (s.n > 12) throw UsageError("size guard: at most " + std::to_string(kMaxElements) + " elements");
    auto d = boolean_triangles(s.n);
    t.m = d.m, t.f = d.f, t.h = d.h;
    if (check) {
      auto c = boolean_triangles_closed(s.n);
      if (d.m != c.m) t.mismatches.push_back("M definitional vs closed");
      if (d.f != c.f) t.mismatches.push_back("F definitional vs closed");
      if (d.h != c.h) t.mismatches.push_back("H definitional vs closed");
      if (s.n >= 1 && f_from_m(d.m, s.n) != c.f) t.mismatches.push_back("F from M");
      if (s.n >= 1 && h_from_m(d.m, s.n) != c.h) t.mismatches.push_back("H from M");
    }
    return t;
  }
  if (s.family != "hoch") throw UsageError("triangles supports --family hoch or bool");
  guard_hoch(s.n);
  auto h = build_hoch(s.n);
  auto c = clo(h.lattice);
  t.m = m_triangle(c);
  t.f = f_tilde(h);
  t.h = h_tilde(h);
  if (check) {
    auto expect = [&](bool ok, const char* what) {
      if (!ok) t.mismatches.push_back(what);
    };
    expect(t.m == m_closed(s.n), "M definitional vs closed");
    expect(t.m == m_by_decomposition(c), "M by upper intervals");
    expect(f_from_m(t.m, s.n) == f_closed(s.n), "F from M");
    expect(t.f == f_closed(s.n), "F statistics vs closed");
    expect(f_from_cores(h.lattice, s.n) == f_closed(s.n), "F from partial cores");
    expect(h_from_m(t.m, s.n) == h_closed(s.n), "H from M");
    expect(t.h == h_closed(s.n), "H statistics vs closed");
    expect(h_from_antichains(s.n) == h_closed(s.n), "H from antichains");
    expect(t.h.at_y(1) == rank_poly(c), "H(x,1) vs rank polynomial");
  }
  return t;
}

int cmd_triangles(std::ostream& out, const Selector& s, const std::string& which, bool check, const std::string& format) {
  auto t = compute_triangles(s, check);
  std::vector<std::pair<std::string, const BiPoly*>> shown;
  if (which == "m" || which == "all") shown.emplace_back("M", &t.m);
  if (which == "f" || which == "all") shown.emplace_back("F", &t.f);
  if (which == "h" || which == "all") shown.emplace_back("H", &t.h);
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = kSchema;
    j["kind"] = "triangles";
    j["family"] = s.family;
    j["n"] = s.n;
    for (const auto& [name, p] : shown) j[name == "M" ? "m" : name == "F" ? "f" : "h"] = to_json(*p);
    if (check) j["mismatches"] = t.mismatches;
    out << j.dump() << "\n";
  } else {
    for (const auto& [name, p] : shown) out << name << " = " << p->str() << "\n";
    if (check) {
      if (t.mismatches.empty()) out << "check: all paths agree\n";
      for (const auto& m : t.mismatches) out << "check: mismatch in " << m << "\n";
    }
  }
  return t.mismatches.empty() ? 0 : 1;
}

int cmd_faces(std::ostream& out, std::ostream& err, std::size_t n) {
  guard_hoch(n);
  auto f = face_vector(build_hoch(n).lattice);
  bool ok = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << (i ? " " : "") << f[i];
    ok = ok && f[i] == face_count_closed(n, i);
  }
  out << "\n";
  if (!ok) err << "face vector differs from the closed formula\n";
  return ok ? 0 : 1;
}

int cmd_conjecture(std::ostream& out, std::size_t n) {
  guard_hoch(n);
  for (std::size_t k = 1; k <= n; ++k) {
    auto g = g_triangle(k - 1, 1);
    out << "n=" << k << ": G = " << g.str() << "; conjecture " << (g == g_conjecture_closed(k) ? "holds" : "fails") << "\n";
  }
  return 0;
}

int cmd_check(std::ostream& out, std::size_t n) {
  if (n > kMaxTriwordLength) throw UsageError("size guard: triword length n <= " + std::to_string(kMaxTriwordLength));
  bool all = true;
  for (const auto& r : run_checks(n)) {
    out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": " << r.detail << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild lattices, their core label orders and M/F/H-triangles", "hochlat"};
  app.require_subcommand(1);

  Selector sel;
  std::string format = "text";
  std::string which = "all";
  bool table = false, mo = false, check = false;
  std::size_t n = 3;

  auto* build = app.add_subcommand("build", "emit a poset or lattice");
  add_selector(build, sel);
  add_format(build, format, {"text", "json", "dot"});

  auto* irr = app.add_subcommand("irr", "join-irreducibles and the cover labelling");
  add_selector(irr, sel);

  auto* cjc_cmd = app.add_subcommand("cjc", "canonical join complex and vertex decomposability");
  add_selector(cjc_cmd, sel);
  add_format(cjc_cmd, format, {"text", "json"});

  auto* clo_cmd = app.add_subcommand("clo", "core label order");
  add_selector(clo_cmd, sel, false);
  add_format(clo_cmd, format, {"text", "json", "dot"});
  clo_cmd->add_flag("--table", table, "print the sigma table (Hochschild family)");

  auto* galois_cmd = app.add_subcommand("galois", "Galois graph");
  add_selector(galois_cmd, sel);
  add_format(galois_cmd, format, {"text", "json", "dot"});
  galois_cmd->add_flag("--mo", mo, "rebuild the lattice from maximal orthogonal pairs");

  auto* tri = app.add_subcommand("triangles", "M-, F- and H-triangles");
  tri->add_option("--family", sel.family, "hoch | bool")->check(CLI::IsMember({"hoch", "bool"}))->capture_default_str();
  tri->add_option("--n", sel.n, "triword length or Boolean rank")->capture_default_str();
  tri->add_option("--which", which, "m | f | h | all")->check(CLI::IsMember({"m", "f", "h", "all"}))->capture_default_str();
  tri->add_flag("--check", check, "compare every computation path");
  add_format(tri, format, {"text", "json"});

  auto* faces = app.add_subcommand("faces", "face vector of the freehedron");
  faces->add_option("--n", n, "dimension")->required();

  auto* conj = app.add_subcommand("conjecture", "conjecture harness");
  conj->require_subcommand(1);
  auto* conj_g = conj->add_subcommand("g", "G-triangle of Shuf(n-1,1) against the conjectured form");
  conj_g->add_option("--n", n, "largest n")->required();

  auto* check_cmd = app.add_subcommand("check", "property suite");
  check_cmd->require_subcommand(1);
  auto* check_all = check_cmd->add_subcommand("all", "every acceptance property up to n");
  check_all->add_option("--n", n, "largest n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) return print_structure(out, structure(sel), format), 0;
    if (*irr) return cmd_irr(out, structure(sel));
    if (*cjc_cmd) return cmd_cjc(out, structure(sel), format);
    if (*clo_cmd) return cmd_clo(out, sel, table, format);
    if (*galois_cmd) return cmd_galois(out, structure(sel), mo, format);
    if (*tri) return cmd_triangles(out, sel, which, check, format);
    if (*faces) return cmd_faces(out, err, n);
    if (*conj_g) return cmd_conjecture(out, n);
    if (*check_all) return cmd_check(out, n);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SizeBound || e.kind() == ErrorKind::TooLarge ? 2 : 1;
  }
  return 2;
}

}  // namespace hochlat::cli
