#include "hochlat/galois.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "hochlat/error.hpp"

namespace hochlat {

DiGraph::DiGraph(std::vector<std::string> labels, std::vector<Edge> edges) : labels_(std::move(labels)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [s, t] : edges_) {
    if (s >= labels_.size() || t >= labels_.size()) throw Error(ErrorKind::InvalidArgument, "edge references a missing vertex");
    if (s == t) throw Error(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(s));
  }
}

bool DiGraph::has_edge(Vertex s, Vertex t) const { return std::binary_search(edges_.begin(), edges_.end(), Edge{s, t}); }

std::vector<std::pair<std::string, std::string>> DiGraph::labelled_edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [s, t] : edges_) out.emplace_back(labels_[s], labels_[t]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> longest_chain(const Lattice& l, ChainChoice choice) {
  const auto& p = l.poset();
  std::vector<Elem> out{l.bottom()};
  Elem cur = l.bottom();
  while (cur != l.top()) {
    std::optional<Elem> next;
    for (Elem c : p.upper_covers(cur)) {
      if (p.depth(c) + 1 != p.depth(cur)) continue;
      if (!next || (choice == ChainChoice::LexLeast ? c < *next : c > *next)) next = c;
    }
    cur = *next;
    out.push_back(cur);
  }
  return out;
}

GaloisGraph galois_graph(const Lattice& l, ChainChoice choice) {
  if (!is_extremal(l)) throw Error(ErrorKind::NotExtremal, "join-irreducibles, length and meet-irreducibles differ");
  GaloisGraph g;
  g.chain = longest_chain(l, choice);
  const auto ji = join_irreducibles(l);
  const auto mi = meet_irreducibles(l);
  const auto& p = l.poset();
  const std::size_t k = g.chain.size() - 1;
  for (std::size_t s = 1; s <= k; ++s) {
    Elem lo = g.chain[s - 1], hi = g.chain[s];
    std::vector<Elem> js, ms;
    for (Elem j : ji)
      if (p.leq(j, hi) && !p.leq(j, lo)) js.push_back(j);
    for (Elem m : mi)
      if (p.leq(lo, m) && !p.leq(hi, m)) ms.push_back(m);
    if (js.size() != 1 || ms.size() != 1)
      throw Error(ErrorKind::ChainOrderingFailed, "step " + std::to_string(s) + " of the chain does not isolate one irreducible");
    g.j.push_back(js.front());
    g.m.push_back(ms.front());
  }
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < k; ++s) {
    labels.push_back(p.label(g.j[s]));
    for (std::size_t t = 0; t < k; ++t)
      if (s != t && !p.leq(g.j[s], g.m[t])) edges.emplace_back(s, t);
  }
  g.graph = DiGraph(std::move(labels), std::move(edges));
  return g;
}

DiGraph galois_graph_by_lemma(const Lattice& l, const GaloisGraph& g) {
  const std::size_t k = g.j.size();
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t)
      if (s != t && l.leq(g.j[t], l.join(lower_star(l, g.j[t]), g.j[s]))) edges.emplace_back(s, t);
  return DiGraph(g.graph.labels(), std::move(edges));
}

DiGraph hoch_galois_characterization(std::size_t n) {
  auto irr = hoch_irreducibles(n);
  std::vector<std::string> labels;
  for (const auto& j : irr) labels.push_back(j.vertex_str());
  std::vector<Edge> edges;
  for (Vertex s = 0; s < irr.size(); ++s)
    for (Vertex t = 0; t < irr.size(); ++t) {
      const auto& x = irr[s];
      const auto& y = irr[t];
      bool rule1 = x.kind == HochIrreducible::Kind::B && y.kind == HochIrreducible::Kind::A && x.index == y.index;
      bool rule2 = x.kind == HochIrreducible::Kind::A && y.kind == HochIrreducible::Kind::A && x.index > y.index;
      if (rule1 || rule2) edges.emplace_back(s, t);
    }
  return DiGraph(std::move(labels), std::move(edges));
}

DiGraph relabel_hoch_galois(const HochLattice& h, const GaloisGraph& g) {
  std::vector<std::string> labels;
  for (Elem j : g.j) {
    auto irr = as_irreducible(h.words[j]);
    if (!irr) throw Error(ErrorKind::ChainOrderingFailed, h.words[j].str() + " is not an a- or b-word");
    labels.push_back(irr->vertex_str());
  }
  return DiGraph(std::move(labels), g.graph.edges());
}

namespace {

struct Neighbourhoods {
  std::vector<VertexSet> out, in;
};

Neighbourhoods neighbourhoods(const DiGraph& g) {
  Neighbourhoods nb{std::vector<VertexSet>(g.size(), 0), std::vector<VertexSet>(g.size(), 0)};
  for (const auto& [s, t] : g.edges()) {
    nb.out[s] |= VertexSet{1} << t;
    nb.in[t] |= VertexSet{1} << s;
  }
  return nb;
}

VertexSet all_vertices(std::size_t k) { return static_cast<VertexSet>((std::uint64_t{1} << k) - 1); }

// Largest B orthogonal to A, and largest A orthogonal to B.
VertexSet right_polar(const Neighbourhoods& nb, std::size_t k, VertexSet a) {
  VertexSet blocked = a;
  for (std::size_t s = 0; s < k; ++s)
    if (a >> s & 1) blocked |= nb.out[s];
  return all_vertices(k) & ~blocked;
}

VertexSet left_polar(const Neighbourhoods& nb, std::size_t k, VertexSet b) {
  VertexSet blocked = b;
  for (std::size_t t = 0; t < k; ++t)
    if (b >> t & 1) blocked |= nb.in[t];
  return all_vertices(k) & ~blocked;
}

}  // namespace

bool is_maximal_orthogonal(const DiGraph& g, const MaxOrthoPair& p) {
  const std::size_t k = g.size();
  auto orthogonal = [&](VertexSet a, VertexSet b) {
    if (a & b) return false;
    for (const auto& [s, t] : g.edges())
      if ((a >> s & 1) && (b >> t & 1)) return false;
    return true;
  };
  if (!orthogonal(p.a, p.b)) return false;
  for (std::size_t v = 0; v < k; ++v) {
    VertexSet bit = VertexSet{1} << v;
    if ((p.a | p.b) & bit) continue;
    if (orthogonal(p.a | bit, p.b) || orthogonal(p.a, p.b | bit)) return false;
  }
  return true;
}

MaxOrthoLattice max_ortho_pairs_lattice(const DiGraph& g) {
  const std::size_t k = g.size();
  if (k > kMaxOrthoVertices)
    throw Error(ErrorKind::TooLarge, "maximal orthogonal pair enumeration is bounded at " + std::to_string(kMaxOrthoVertices) + " vertices");
  const auto nb = neighbourhoods(g);
  std::map<VertexSet, VertexSet> found;  // A -> B
  for (std::uint64_t seed = 0; seed < (std::uint64_t{1} << k); ++seed) {
    VertexSet a = left_polar(nb, k, static_cast<VertexSet>(seed));
    found.emplace(a, right_polar(nb, k, a));
  }
  MaxOrthoLattice out;
  std::vector<std::string> labels;
  for (const auto& [a, b] : found) out.pairs.push_back({a, b});
  // Increasing popcount keeps the ids a linear extension.
  std::stable_sort(out.pairs.begin(), out.pairs.end(), [](const MaxOrthoPair& x, const MaxOrthoPair& y) {
    return std::popcount(x.a) < std::popcount(y.a);
  });
  for (const auto& p : out.pairs) labels.push_back("(" + vertex_set_str(g, p.a) + "," + vertex_set_str(g, p.b) + ")");
  const auto& pairs = out.pairs;
  auto poset = FinitePoset::from_order(
      pairs.size(), [&](Elem x, Elem y) { return (pairs[x].a & ~pairs[y].a) == 0; }, std::move(labels));
  out.lattice = Lattice::from_poset(std::move(poset));
  return out;
}

std::string vertex_set_str(const DiGraph& g, VertexSet s) {
  std::vector<std::string> members;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (s >> v & 1) members.push_back(g.labels()[v]);
  std::sort(members.begin(), members.end());
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + members[i];
  return out + "}";
}

}  // namespace hochlat
