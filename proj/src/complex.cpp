#include "hochlat/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "hochlat/error.hpp"

namespace hochlat {

namespace {

bool subset(FaceMask a, FaceMask b) { return (a & ~b) == 0; }

std::vector<FaceMask> maximal_only(std::vector<FaceMask> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<FaceMask> out;
  for (FaceMask f : faces) {
    bool dominated = std::any_of(faces.begin(), faces.end(), [&](FaceMask g) { return g != f && subset(f, g); });
    if (!dominated) out.push_back(f);
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_labels, std::vector<FaceMask> faces)
    : labels_(std::move(vertex_labels)) {
  if (labels_.size() > 64) throw Error(ErrorKind::TooLarge, "complexes hold at most 64 vertices");
  const FaceMask ground = labels_.size() == 64 ? ~FaceMask{0} : (FaceMask{1} << labels_.size()) - 1;
  for (FaceMask f : faces)
    if (!subset(f, ground)) throw Error(ErrorKind::InvalidArgument, "face uses a vertex outside the ground set");
  if (faces.empty()) faces.push_back(0);
  facets_ = maximal_only(std::move(faces));
}

bool SimplicialComplex::contains(FaceMask f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](FaceMask g) { return subset(f, g); });
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](FaceMask g) { return std::popcount(g) == std::popcount(facets_.front()); });
}

FaceMask SimplicialComplex::support() const {
  FaceMask s = 0;
  for (FaceMask g : facets_) s |= g;
  return s;
}

std::vector<FaceMask> SimplicialComplex::faces() const {
  std::set<FaceMask> all;
  for (FaceMask g : facets_) {
    // Walk all submasks of g.
    for (FaceMask s = g;; s = (s - 1) & g) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  return {all.begin(), all.end()};
}

std::string SimplicialComplex::face_str(FaceMask f) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (!(f >> v & 1)) continue;
    out += (first ? "" : ",") + labels_[v];
    first = false;
  }
  return out + "}";
}

SimplicialComplex link(const SimplicialComplex& d, FaceMask f) {
  if (!d.contains(f)) throw Error(ErrorKind::NotAFace, d.face_str(f) + " is not a face");
  std::vector<FaceMask> faces;
  for (FaceMask g : d.facets())
    if (subset(f, g)) faces.push_back(g & ~f);
  return SimplicialComplex(d.vertex_labels(), std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& d, FaceMask f) {
  if (!d.contains(f)) throw Error(ErrorKind::NotAFace, d.face_str(f) + " is not a face");
  std::vector<FaceMask> faces;
  for (FaceMask g : d.facets()) {
    if (!subset(f, g)) {
      faces.push_back(g);
      continue;
    }
    // Largest faces of g missing at least one vertex of f.
    for (std::size_t v = 0; v < d.ground_size(); ++v)
      if (f >> v & 1) faces.push_back(g & ~(FaceMask{1} << v));
  }
  return SimplicialComplex(d.vertex_labels(), std::move(faces));
}

namespace {

struct VdSearch {
  std::map<std::vector<FaceMask>, VdResult> memo;

  VdResult run(const SimplicialComplex& d) {
    if (d.is_simplex()) return {true, {}};
    auto it = memo.find(d.facets());
    if (it != memo.end()) return it->second;

    const std::size_t k = d.ground_size();
    std::vector<std::pair<int, std::size_t>> order;  // (-degree, vertex)
    for (std::size_t v = 0; v < k; ++v) {
      FaceMask bit = FaceMask{1} << v;
      FaceMask nbrs = 0;
      for (FaceMask g : d.facets())
        if (g & bit) nbrs |= g;
      if (nbrs == 0) continue;
      order.emplace_back(-std::popcount(nbrs & ~bit), v);
    }
    std::sort(order.begin(), order.end());

    VdResult result;
    for (const auto& [neg_degree, v] : order) {
      FaceMask bit = FaceMask{1} << v;
      auto lk = link(d, bit);
      auto del = deletion(d, bit);
      bool shared = std::any_of(lk.facets().begin(), lk.facets().end(), [&](FaceMask g) {
        return std::binary_search(del.facets().begin(), del.facets().end(), g);
      });
      if (shared) continue;
      if (!run(lk).decomposable) continue;
      VdResult rest = run(del);
      if (!rest.decomposable) continue;
      result.decomposable = true;
      result.shedding.push_back(v);
      result.shedding.insert(result.shedding.end(), rest.shedding.begin(), rest.shedding.end());
      break;
    }
    memo.emplace(d.facets(), result);
    return result;
  }
};

}  // namespace

VdResult is_vertex_decomposable(const SimplicialComplex& d) {
  VdSearch search;
  return search.run(d);
}

bool verify_shedding(const SimplicialComplex& d, const std::vector<std::size_t>& shedding) {
  SimplicialComplex cur = d;
  for (std::size_t v : shedding) {
    FaceMask bit = FaceMask{1} << v;
    if (v >= cur.ground_size() || !(cur.support() & bit)) return false;
    auto lk = link(cur, bit);
    auto del = deletion(cur, bit);
    for (FaceMask g : lk.facets())
      if (std::binary_search(del.facets().begin(), del.facets().end(), g)) return false;
    if (!is_vertex_decomposable(lk).decomposable) return false;
    cur = std::move(del);
  }
  return cur.is_simplex();
}

CanonicalJoinComplex cjc(const Lattice& l) {
  if (!is_join_semidistributive(l))
    throw Error(ErrorKind::NotJoinSemidistributive, "canonical join representations need a join-semidistributive lattice");
  auto lambda = jsd_labeling(l);
  CanonicalJoinComplex out;
  out.vertices = join_irreducibles(l);
  if (out.vertices.size() > 64) throw Error(ErrorKind::TooLarge, "more than 64 join-irreducibles");
  std::vector<std::size_t> slot(l.size(), 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    slot[out.vertices[i]] = i;
    labels.push_back(l.poset().label(out.vertices[i]));
  }
  for (Elem a = 0; a < l.size(); ++a) {
    FaceMask f = 0;
    for (Elem j : canonical_joinrep(l, lambda, a)) f |= FaceMask{1} << slot[j];
    out.faces.push_back(f);
  }
  out.complex = SimplicialComplex(std::move(labels), out.faces);
  auto all = out.complex.faces();
  std::vector<FaceMask> sorted = out.faces;
  std::sort(sorted.begin(), sorted.end());
  if (all != sorted) throw Error(ErrorKind::NotJoinSemidistributive, "canonical join representations are not closed under subsets");
  return out;
}

}  // namespace hochlat
