#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hochlat/lattice.hpp"

namespace hochlat {

using FaceMask = std::uint64_t;

/*
  Abstract simplicial complex on at most 64 vertices, stored by its facets
  (inclusion-maximal faces) as bitmasks. The vertex list is the ground set;
  a vertex need not be a face (deletions shrink the support, not the
  ground set).
*/
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// The complex generated by `faces`; non-maximal entries are dropped.
  SimplicialComplex(std::vector<std::string> vertex_labels, std::vector<FaceMask> faces);

  std::size_t ground_size() const { return labels_.size(); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  /// Facets sorted by mask.
  const std::vector<FaceMask>& facets() const { return facets_; }

  bool contains(FaceMask f) const;
  bool is_simplex() const { return facets_.size() <= 1; }
  bool is_pure() const;
  /// Union of all facets.
  FaceMask support() const;

  /// Every face, sorted by mask. Exponential in the facet size.
  std::vector<FaceMask> faces() const;
  std::size_t face_count() const { return faces().size(); }

  std::string face_str(FaceMask f) const;

 private:
  std::vector<std::string> labels_;
  std::vector<FaceMask> facets_;
};

/// Faces G with F ∩ G = ∅ and F ∪ G a face. Throws NotAFace.
SimplicialComplex link(const SimplicialComplex& d, FaceMask f);
/// Faces not containing F. Throws NotAFace.
SimplicialComplex deletion(const SimplicialComplex& d, FaceMask f);

struct VdResult {
  bool decomposable = false;
  /// Shedding vertices along the deletion path, ending at a simplex.
  std::vector<std::size_t> shedding;
};

/// Memoized search; shedding candidates tried by decreasing degree, then id.
VdResult is_vertex_decomposable(const SimplicialComplex& d);

/// Replays a shedding sequence: every vertex must shed (link vertex
/// decomposable, no facet shared with the deletion) and the final deletion
/// must be a simplex.
bool verify_shedding(const SimplicialComplex& d, const std::vector<std::size_t>& shedding);

struct CanonicalJoinComplex {
  SimplicialComplex complex;
  std::vector<Elem> vertices;  // vertex index -> join-irreducible id
  std::vector<FaceMask> faces;  // faces[a] = Can(a) as a mask
};

/// Complex of canonical join representations. Throws NotJoinSemidistributive.
CanonicalJoinComplex cjc(const Lattice& l);

}  // namespace hochlat
