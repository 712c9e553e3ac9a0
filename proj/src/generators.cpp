#include "hochlat/generators.hpp"

#include <string>

namespace hochlat {

FinitePoset chain(std::size_t m) {
  std::vector<Cover> covers;
  for (Elem i = 1; i < m; ++i) covers.emplace_back(i - 1, i);
  return FinitePoset::from_covers(m, covers);
}

FinitePoset antichain(std::size_t m) { return FinitePoset::from_covers(m, {}); }

FinitePoset boolean_lattice(std::size_t n) {
  const std::size_t m = std::size_t{1} << n;
  std::vector<Cover> covers;
  std::vector<std::string> labels;
  for (Elem s = 0; s < m; ++s) {
    std::string text = "{";
    for (std::size_t i = 0; i < n; ++i) {
      if (s & (1u << i)) {
        if (text.size() > 1) text += ",";
        text += std::to_string(i + 1);
      } else {
        covers.emplace_back(s, s | (1u << i));
      }
    }
    labels.push_back(text + "}");
  }
  return FinitePoset::from_covers(m, covers, std::move(labels));
}

FinitePoset diamond_m3() {
  const std::vector<Cover> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return FinitePoset::from_covers(5, covers);
}

FinitePoset bowtie_nonlattice() {
  const std::vector<Cover> covers{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  return FinitePoset::from_covers(6, covers);
}

}  // namespace hochlat
