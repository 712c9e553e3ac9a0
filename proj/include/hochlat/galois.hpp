#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hochlat/hochschild.hpp"
#include "hochlat/lattice.hpp"

namespace hochlat {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple digraph without self-loops; edges kept sorted.
class DiGraph {
 public:
  DiGraph() = default;
  DiGraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex s, Vertex t) const;

  /// Edge set rewritten as label pairs, sorted.
  std::vector<std::pair<std::string, std::string>> labelled_edges() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

enum class ChainChoice { LexLeast, LexGreatest };

struct GaloisGraph {
  DiGraph graph;
  std::vector<Elem> chain;  // 0 = a_0 < a_1 < ... < a_k = 1
  std::vector<Elem> j;      // j[s-1] = j_s
  std::vector<Elem> m;      // m[s-1] = m_s
};

/// Longest maximal chain, lexicographically extreme by element id.
std::vector<Elem> longest_chain(const Lattice& l, ChainChoice choice = ChainChoice::LexLeast);

/// Throws NotExtremal or ChainOrderingFailed. Vertex labels are the element
/// labels of the j_s.
GaloisGraph galois_graph(const Lattice& l, ChainChoice choice = ChainChoice::LexLeast);

/// Same vertices, edges from j_t <= (j_t)_* v j_s.
DiGraph galois_graph_by_lemma(const Lattice& l, const GaloisGraph& g);

/// Vertices (1,1..n) then (2,2..n), edges by the two Hochschild rules.
DiGraph hoch_galois_characterization(std::size_t n);

/// Relabels the vertices of Galois(Hoch(n)) by (1,i) / (2,i).
DiGraph relabel_hoch_galois(const HochLattice& h, const GaloisGraph& g);

using VertexSet = std::uint32_t;
inline constexpr std::size_t kMaxOrthoVertices = 24;

struct MaxOrthoPair {
  VertexSet a;
  VertexSet b;
};

struct MaxOrthoLattice {
  Lattice lattice;
  std::vector<MaxOrthoPair> pairs;  // indexed by lattice element id
};

/// All maximal orthogonal pairs (A,B), no edge from A into B, ordered by
/// inclusion of first components. Throws TooLarge above 24 vertices.
MaxOrthoLattice max_ortho_pairs_lattice(const DiGraph& g);

/// No vertex outside the pair can be added to either side.
bool is_maximal_orthogonal(const DiGraph& g, const MaxOrthoPair& p);

/// "{x,y}" with member labels sorted.
std::string vertex_set_str(const DiGraph& g, VertexSet s);

}  // namespace hochlat
