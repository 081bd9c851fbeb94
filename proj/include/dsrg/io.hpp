#pragma once

// JSON, TSV and DOT renderings of the library's value types.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsrg/catalog.hpp"
#include "dsrg/dihedrant.hpp"
#include "dsrg/dsrg_verify.hpp"
#include "dsrg/residue_multiset.hpp"

namespace dsrg::io {

using json = nlohmann::ordered_json;

inline json to_json(const ResidueMultiset& m) { return json{{"n", m.modulus()}, {"counts", m.counts()}}; }

inline json to_json(const DsrgParams& p) {
  return json{{"N", p.vertices}, {"k", p.k}, {"mu", p.mu}, {"lambda", p.lambda}, {"t", p.t}};
}

inline json to_json(const EigenData& e) {
  return json{{"d", e.d}, {"rho", e.rho}, {"sigma", e.sigma}, {"m_rho", e.m_rho}, {"m_sigma", e.m_sigma}};
}

inline json to_json(const ClassificationEntry& e) {
  return json{{"case", to_string(e.case_tag)}, {"n", e.n},          {"v", e.v},
              {"T", e.t},                      {"X", e.x},          {"params", to_json(e.params)}};
}

inline const char* tsv_entry_header() { return "case\tn\tv\tT\tX\tN\tk\tmu\tlambda\tt"; }

inline std::string tsv_params(const DsrgParams& p) {
  std::ostringstream s;
  s << p.vertices << '\t' << p.k << '\t' << p.mu << '\t' << p.lambda << '\t' << p.t;
  return s.str();
}

inline std::string to_tsv(const ClassificationEntry& e) {
  std::ostringstream s;
  s << to_string(e.case_tag) << '\t' << e.n << '\t' << e.v << '\t' << format_set(e.t) << '\t' << format_set(e.x)
    << '\t' << tsv_params(e.params);
  return s.str();
}

/// Label of vertex `index` in the fixed indexing x^i -> i, x^i.t -> n + i.
inline std::string vertex_label(int n, int index) {
  return index < n ? "x^" + std::to_string(index) : "x^" + std::to_string(index - n) + ".t";
}

inline std::string to_dot(const DihedrantSpec& s) {
  const auto a = adjacency_matrix(s);
  std::ostringstream o;
  o << "digraph \"" << to_string(s) << "\" {\n";
  for (int v = 0; v < a.size; ++v) o << "  " << v << " [label=\"" << vertex_label(s.n, v) << "\"];\n";
  for (int g = 0; g < a.size; ++g)
    for (int h : a.out_neighbours(g)) o << "  " << g << " -> " << h << ";\n";
  o << "}\n";
  return o.str();
}

inline json adjacency_json(const DihedrantSpec& s) {
  const auto a = adjacency_matrix(s);
  json labels = json::array(), adj = json::array();
  for (int v = 0; v < a.size; ++v) {
    labels.push_back(vertex_label(s.n, v));
    adj.push_back(a.out_neighbours(v));
  }
  return json{{"n", s.n}, {"X", s.x}, {"Y", s.y}, {"vertices", a.size}, {"labels", labels}, {"adjacency", adj}};
}

/// Inverse of adjacency_json's "adjacency" field.
inline AdjacencyMatrix adjacency_from_json(const json& j) {
  const int size = j.at("vertices").get<int>();
  AdjacencyMatrix a(size);
  const auto& rows = j.at("adjacency");
  if (static_cast<int>(rows.size()) != size) throw std::invalid_argument("adjacency list has wrong row count");
  for (int g = 0; g < size; ++g)
    for (int h : rows[g].get<std::vector<int>>()) {
      if (h < 0 || h >= size) throw std::invalid_argument("adjacency list names vertex out of range");
      a(g, h) = 1;
    }
  return a;
}

}  // namespace dsrg::io
