#pragma once

#include <vector>

#include "hochlat/hochschild.hpp"
#include "hochlat/lattice.hpp"

namespace hochlat {

/// Core label order: a below b iff Psi(a) is contained in Psi(b). Element
/// ids and labels are those of `l`. Throws NotSemidistributive.
FinitePoset clo(const Lattice& l);

/// C(n,k) + (n-k) C(n-1,k-1) for k = 0..n.
std::vector<Integer> clo_rank_counts(std::size_t n);

/// Number of 2s in u, plus one if u contains a 1.
std::size_t clo_rank_formula(const Triword& u);

}  // namespace hochlat
