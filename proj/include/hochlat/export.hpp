#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hochlat/complex.hpp"
#include "hochlat/galois.hpp"
#include "hochlat/lattice.hpp"
#include "hochlat/poly.hpp"

namespace hochlat {

inline constexpr std::string_view kSchema = "hochlat/1";

/// Hasse diagram, one edge per cover pointing upward, sorted by id.
std::string to_dot(const FinitePoset& p, std::string_view name = "P");
std::string to_dot(const DiGraph& g, std::string_view name = "G");

/// {"schema","kind":"poset","size","labels","covers":[[a,b],...]}.
nlohmann::json to_json(const FinitePoset& p);
/// Poset fields plus "bottom", "top" and, for join-semidistributive
/// lattices, "jsd_labels":[[a,b,label],...] in cover order.
nlohmann::json to_json(const Lattice& l);
/// {"terms":[{"x":i,"y":j,"c":c},...]} in the text order. Coefficients
/// outside the 64-bit range are written as decimal strings.
nlohmann::json to_json(const BiPoly& p);
nlohmann::json to_json(const SimplicialComplex& d);
nlohmann::json to_json(const DiGraph& g);

}  // namespace hochlat
