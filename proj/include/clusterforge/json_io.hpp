#pragma once

#include "json.hpp"

#include "clusterforge/laurent.hpp"
#include "clusterforge/poset.hpp"
#include "clusterforge/rank_analysis.hpp"
#include "clusterforge/sl3.hpp"
#include "clusterforge/snakegraph.hpp"
#include "clusterforge/triangulation.hpp"
#include "clusterforge/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace clusterforge {

// Serialization of every artifact type to JSON (and posets additionally to
// DOT).  All emitters are deterministic: terms arrive sorted from the Laurent
// map, edges and covers are sorted explicitly, and object keys keep their
// insertion order, so repeated runs produce identical bytes.
using Json = nlohmann::ordered_json;

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

// Fallback display names x1..xk when a caller has weights but no naming
// convention of its own.
inline std::vector<std::string> default_variable_names(int nvars) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(nvars));
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

// {vars:[names], terms:[{coef, exps}]}; terms are already sorted
// lexicographically by exponent vector inside Laurent.  Coefficients are
// serialized as decimal strings since they routinely exceed 64 bits.
inline Json laurent_json(const Laurent& p, const std::vector<std::string>& names) {
  Json terms = Json::array();
  for (const auto& [exps, coef] : p.terms()) {
    Json t;
    t["coef"] = coef.str();
    t["exps"] = exps;
    terms.push_back(std::move(t));
  }
  Json out;
  out["vars"] = names;
  out["terms"] = std::move(terms);
  return out;
}

// {elements:[{id,payload,weight,rank}], covers:[[lo,hi]]}; weight appears
// when the poset carries weights, rank when it is graded.
inline Json poset_json(const FinitePoset& p, std::vector<std::string> names = {}) {
  if (p.has_weights() && names.empty() && p.size() > 0)
    names = default_variable_names(p.weight(0).nvars());
  std::vector<int> ranks;
  const bool graded = p.size() > 0 && p.is_graded();
  if (graded) ranks = p.ranks();
  Json elements = Json::array();
  for (int i = 0; i < p.size(); ++i) {
    Json e;
    e["id"] = i;
    e["payload"] = p.payload(i);
    if (p.has_weights()) e["weight"] = laurent_json(p.weight(i), names);
    if (graded) e["rank"] = ranks[static_cast<std::size_t>(i)];
    elements.push_back(std::move(e));
  }
  Json covers = Json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back(Json::array({lo, hi}));
  Json out;
  out["elements"] = std::move(elements);
  out["covers"] = std::move(covers);
  return out;
}

inline Json grid_point_json(const GridPoint& p) {
  Json j;
  j["x"] = p.x;
  j["y"] = p.y;
  return j;
}

// {shape, tiles:[{x,y}], edges:[{from,to,label,boundary}]}; label is present
// only on labeled graphs.
inline Json snake_json(const SnakeGraph& g) {
  Json tiles = Json::array();
  for (const GridPoint& t : g.tiles()) tiles.push_back(grid_point_json(t));
  std::vector<GridEdge> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  Json es = Json::array();
  for (const GridEdge& e : edges) {
    Json je;
    je["from"] = grid_point_json(e.u);
    je["to"] = grid_point_json(e.v);
    if (g.has_label(e)) je["label"] = g.label(e);
    je["boundary"] = g.is_boundary(e);
    es.push_back(std::move(je));
  }
  Json out;
  out["shape"] = g.shape().str();
  out["tiles"] = std::move(tiles);
  out["edges"] = std::move(es);
  return out;
}

// {size, triangles:[{verts, edge_labels}], diagonals:[{label, ends}]}.
inline Json triangulation_json(const WordTriangulation& t) {
  Json tris = Json::array();
  for (const Triangle& tr : t.triangles()) {
    Json jt;
    jt["verts"] = std::vector<int>(tr.verts.begin(), tr.verts.end());
    jt["edge_labels"] =
        std::vector<int>(tr.opposite_labels.begin(), tr.opposite_labels.end());
    tris.push_back(std::move(jt));
  }
  Json diags = Json::array();
  for (int i = 1; i <= t.diagonal_count(); ++i) {
    Json d;
    d["label"] = i;
    d["ends"] = Json::array({t.left(i), t.right(i)});
    diags.push_back(std::move(d));
  }
  Json out;
  out["size"] = t.vertex_count();
  out["triangles"] = std::move(tris);
  out["diagonals"] = std::move(diags);
  return out;
}

// {shape, polynomial:[coeffs], flags, plateaus}.
inline Json rank_json(const Word& shape, const RankProfile& profile) {
  Json coeffs = Json::array();
  for (const BigInt& c : profile.coefficients) {
    if (c >= std::numeric_limits<long long>::min() &&
        c <= std::numeric_limits<long long>::max())
      coeffs.push_back(c.convert_to<long long>());
    else
      coeffs.push_back(c.str());
  }
  Json flags;
  flags["symmetric"] = profile.symmetric;
  flags["unimodal"] = profile.unimodal;
  flags["trapezoidal"] = profile.trapezoidal;
  flags["weakly_trapezoidal"] = profile.weakly_trapezoidal;
  flags["almost_weakly_trapezoidal"] = profile.almost_weakly_trapezoidal;
  flags["unimodal_growth"] = profile.unimodal_growth;
  Json plateaus = Json::array();
  for (const auto& [start, length] : profile.plateaus)
    plateaus.push_back(Json::array({start, length}));
  Json out;
  out["shape"] = shape.str();
  out["polynomial"] = std::move(coeffs);
  out["flags"] = std::move(flags);
  out["plateaus"] = std::move(plateaus);
  return out;
}

// {edges:[{from,to,color,mult}], faces:[{tri,color,mult}], weight}.
inline Json sl3_diagram_json(const FanSL3Seed& seed, const SL3Diagram& d) {
  Json edges = Json::array();
  Json faces = Json::array();
  for (const auto& [e, m] : d.elements()) {
    const char* color = m > 0 ? "blue" : "red";
    const int mult = std::abs(m);
    if (e.is_edge()) {
      Json je;
      je["from"] = e.a;
      je["to"] = e.b;
      je["color"] = color;
      je["mult"] = mult;
      edges.push_back(std::move(je));
    } else {
      Json jf;
      jf["tri"] = Json::array({e.a, e.b, e.c});
      jf["color"] = color;
      jf["mult"] = mult;
      faces.push_back(std::move(jf));
    }
  }
  Json out;
  out["edges"] = std::move(edges);
  out["faces"] = std::move(faces);
  out["weight"] = laurent_json(seed.diagram_weight(d), seed.variable_names());
  return out;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

// Hasse diagram: one box per element labeled with its payload (and weight
// when present), one upward arrow per cover relation.
inline std::string poset_dot(const FinitePoset& p, std::vector<std::string> names = {}) {
  if (p.has_weights() && names.empty() && p.size() > 0)
    names = default_variable_names(p.weight(0).nvars());
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int i = 0; i < p.size(); ++i) {
    if (p.has_weights()) {
      const std::string w = p.weight(i).to_string(names);
      os << "  n" << i << " [label=\"" << dot_escape(p.payload(i)) << "\\n"
         << dot_escape(w) << "\", tooltip=\"" << dot_escape(w) << "\"];\n";
    } else {
      os << "  n" << i << " [label=\"" << dot_escape(p.payload(i)) << "\"];\n";
    }
  }
  for (const auto& [lo, hi] : p.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace clusterforge
