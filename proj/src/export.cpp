#include "hochlat/export.hpp"

#include <algorithm>
#include <limits>

namespace hochlat {

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class Edges>
std::string dot(std::string_view name, const std::vector<std::string>& labels, const Edges& edges) {
  std::string out = "digraph " + dot_quote(name) + " {\n  rankdir=BT;\n";
  for (std::size_t v = 0; v < labels.size(); ++v) out += "  " + std::to_string(v) + " [label=" + dot_quote(labels[v]) + "];\n";
  for (const auto& [a, b] : edges) out += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
  return out + "}\n";
}

nlohmann::json base(std::string_view kind) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

}  // namespace

std::string to_dot(const FinitePoset& p, std::string_view name) {
  auto covers = p.covers();
  std::sort(covers.begin(), covers.end());
  return dot(name, p.labels(), covers);
}

std::string to_dot(const DiGraph& g, std::string_view name) { return dot(name, g.labels(), g.edges()); }

nlohmann::json to_json(const FinitePoset& p) {
  auto j = base("poset");
  j["size"] = p.size();
  j["labels"] = p.labels();
  auto covers = p.covers();
  std::sort(covers.begin(), covers.end());
  j["covers"] = nlohmann::json::array();
  for (const auto& [a, b] : covers) j["covers"].push_back({a, b});
  return j;
}

nlohmann::json to_json(const Lattice& l) {
  auto j = to_json(l.poset());
  j["kind"] = "lattice";
  j["bottom"] = l.bottom();
  j["top"] = l.top();
  if (is_join_semidistributive(l)) {
    auto lambda = jsd_labeling(l);
    j["jsd_labels"] = nlohmann::json::array();
    auto covers = l.poset().covers();
    std::sort(covers.begin(), covers.end());
    for (const auto& [a, b] : covers) j["jsd_labels"].push_back({a, b, lambda(a, b)});
  }
  return j;
}

nlohmann::json to_json(const BiPoly& p) {
  std::vector<std::pair<BiPoly::Exponents, Integer>> sorted(p.terms().begin(), p.terms().end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    unsigned da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    return da != db ? da > db : a.first.first > b.first.first;
  });
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : sorted) {
    nlohmann::json t{{"x", e.first}, {"y", e.second}};
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      t["c"] = c.convert_to<std::int64_t>();
    } else {
      t["c"] = c.str();
    }
    terms.push_back(std::move(t));
  }
  return {{"terms", terms}};
}

nlohmann::json to_json(const SimplicialComplex& d) {
  auto j = base("complex");
  j["vertices"] = d.vertex_labels();
  j["facets"] = nlohmann::json::array();
  for (FaceMask f : d.facets()) {
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t v = 0; v < d.ground_size(); ++v)
      if (f >> v & 1) members.push_back(v);
    j["facets"].push_back(members);
  }
  j["pure"] = d.is_pure();
  j["face_count"] = d.face_count();
  return j;
}

nlohmann::json to_json(const DiGraph& g) {
  auto j = base("digraph");
  j["labels"] = g.labels();
  j["edges"] = nlohmann::json::array();
  for (const auto& [s, t] : g.edges()) j["edges"].push_back({s, t});
  return j;
}

}  // namespace hochlat
