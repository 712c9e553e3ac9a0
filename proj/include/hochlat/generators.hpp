#pragma once

#include "hochlat/poset.hpp"

namespace hochlat {

/// m elements 0 < 1 < ... < m-1.
FinitePoset chain(std::size_t m);

/// m pairwise incomparable elements.
FinitePoset antichain(std::size_t m);

/// Subsets of [n] under inclusion; element id is the subset bitmask.
FinitePoset boolean_lattice(std::size_t n);

/// Bottom, three pairwise incomparable atoms, top.
FinitePoset diamond_m3();

/// Bottom, two atoms both below two incomparable coatoms, top: bounded but
/// the atoms have no least upper bound.
FinitePoset bowtie_nonlattice();

}  // namespace hochlat
