#pragma once

#include <vector>

#include "hochlat/hochschild.hpp"
#include "hochlat/lattice.hpp"
#include "hochlat/poly.hpp"

namespace hochlat {

// Definitional sums over a graded bounded poset. All throw NotGraded.

/// Sum of x^rk(u).
BiPoly rank_poly(const FinitePoset& p);
/// Sum of mu(0,u) x^rk(u).
BiPoly char_poly(const FinitePoset& p);
/// Sum over u <= v of mu(u,v) x^rk(u) y^rk(v).
BiPoly m_triangle(const FinitePoset& p);
/// Sum over u of (xy)^rk(u) times the characteristic polynomial of [u,1] in y.
BiPoly m_by_decomposition(const FinitePoset& p);

// Closed forms for CLO(Hoch(n)), n >= 1. For n = 1 the (..)^{n-2} factor is
// removed by exact division.

BiPoly rank_poly_closed(std::size_t n);
BiPoly char_poly_closed(std::size_t n);
/// (-1)^{a+b} sum_j C(a,j) C(b,j) (x-1)^{a+b-j} x^j.
BiPoly shuffle_char_closed(std::size_t a, std::size_t b);
BiPoly m_closed(std::size_t n);
BiPoly f_closed(std::size_t n);
BiPoly h_closed(std::size_t n);

/// y^n M((y+1)/(y-x), (y-x)/y), evaluated exactly on an integer grid and
/// interpolated. `n` is the rank of the poset M was taken from.
BiPoly f_from_m(const BiPoly& m, std::size_t n);
/// (x(y-1)+1)^n M(y/(y-1), x(y-1)/(x(y-1)+1)), computed the same way.
BiPoly h_from_m(const BiPoly& m, std::size_t n);

/// C(n,k) C(n-k,l) (n(k+1)-k(l+1))/n. Throws InterpolationDegeneracy if
/// the quotient is not integral.
Integer f_coefficient(std::size_t n, std::size_t k, std::size_t l);

/// Number of atoms in Can(u), computed in the lattice.
std::size_t neg_count(const Lattice& l, const JsdLabeling& lambda, Elem u);

/// Sum over u of x^{n-|Can u|} (x+1)^{|Can u|-neg u} (y+1)^{neg u}.
BiPoly f_tilde(const HochLattice& h);
/// Sum over u of x^{|Can u|} y^{neg u}.
BiPoly h_tilde(const HochLattice& h);

struct PartialCore {
  Elem element;
  std::vector<Elem> subset;  // lower covers of element, sorted
  Elem partial_nucleus;
  std::size_t neg_tilde;     // neg(u) minus the covers in A whose label is an atom
};

/// All pairs (u, A) with A a set of lower covers of u. Throws
/// NotJoinSemidistributive.
std::vector<PartialCore> partial_cores(const Lattice& l);

/// Sum over partial cores of x^{n-|A|-neg~} y^{neg~}.
BiPoly f_from_cores(const Lattice& l, std::size_t n);

/// f_i = number of partial cores with |A| = i, for i = 0..length.
std::vector<Integer> face_vector(const Lattice& l);
/// 2^{n-i-2} C(n,i) (n(n+3)-i(i-1))/n.
Integer face_count_closed(std::size_t n, std::size_t i);

/// Join-irreducibles of Hoch(n) under the componentwise order with b^(2)
/// added below every a^(i), i > 1. Labels "a^(i)" / "b^(i)".
FinitePoset j_poset(std::size_t n);
/// Sum over antichains A of J_n of x^|A| y^{|A ∩ atoms|}.
BiPoly h_from_antichains(std::size_t n);

/// Sum over comparable pairs u <= v in Shuf(a,b) of x^rk(u) y^{a+b-rk(v)}.
BiPoly g_triangle(std::size_t a, std::size_t b);
/// (x+y+1)^{n-2} (x^2+y^2+1+(n+1)(xy+x+y)).
BiPoly g_conjecture_closed(std::size_t n);

struct TriangleSet {
  BiPoly m, f, h;
};

/// Definitional M via Mobius, F via pairs A ⊆ B ⊆ [n], H via subsets.
TriangleSet boolean_triangles(std::size_t n);
/// (xy-y+1)^n, (x+y+1)^n, (xy+1)^n.
TriangleSet boolean_triangles_closed(std::size_t n);

}  // namespace hochlat
