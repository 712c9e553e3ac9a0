#include "hochlat/clo.hpp"

#include <algorithm>

#include "hochlat/error.hpp"

namespace hochlat {

FinitePoset clo(const Lattice& l) {
  if (!is_semidistributive(l)) throw Error(ErrorKind::NotSemidistributive, "the core label order needs a semidistributive lattice");
  auto lambda = jsd_labeling(l);
  std::vector<Bitset> psi;
  psi.reserve(l.size());
  for (const auto& c : core_label_sets(l, lambda)) {
    Bitset s(l.size());
    for (Elem j : c.labels) s.set(j);
    psi.push_back(std::move(s));
  }
  return FinitePoset::from_order(
      l.size(), [&](Elem a, Elem b) { return psi[a].is_subset_of(psi[b]); }, l.poset().labels());
}

std::vector<Integer> clo_rank_counts(std::size_t n) {
  std::vector<Integer> out;
  for (std::size_t k = 0; k <= n; ++k) {
    Integer c = binomial(n, k);
    if (k > 0) c += Integer(n - k) * binomial(n - 1, k - 1);
    out.push_back(c);
  }
  return out;
}

std::size_t clo_rank_formula(const Triword& u) {
  const auto& e = u.entries();
  return static_cast<std::size_t>(std::count(e.begin(), e.end(), 2)) + (l1(u) > 0 ? 1 : 0);
}

}  // namespace hochlat
