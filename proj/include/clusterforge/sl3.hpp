#pragma once

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterforge/laurent.hpp"
#include "clusterforge/poset.hpp"

namespace clusterforge {

// Rank-3 analogue of the chord expansions: seeds attach two directed-edge
// variables per polygon edge plus one variable per triangle, flips are
// composites of four quiver mutations, and cluster variables expand as
// posets of colored diagrams enumerated by a pair of recursion lemmas.

struct SL3Error : std::runtime_error {
  explicit SL3Error(const std::string& what) : std::runtime_error(what) {}
};

// Attempt to flip a boundary edge (its variables are frozen).
struct FrozenEdgeError : SL3Error {
  explicit FrozenEdgeError(const std::string& what) : SL3Error(what) {}
};

// Enumeration requested on a seed whose triangulation is no longer the
// initial fan.
struct NotFanError : SL3Error {
  explicit NotFanError(const std::string& what) : SL3Error(what) {}
};

// One element of a colored diagram: a directed edge between polygon
// vertices, or a triangular face (vertices stored sorted).
struct SL3Element {
  enum class Kind { edge, face };
  Kind kind = Kind::edge;
  int a = 0;
  int b = 0;
  int c = -1;  // unused for edges

  static SL3Element edge(int from, int to);
  static SL3Element face(int p, int q, int r);
  bool is_edge() const { return kind == Kind::edge; }
  bool is_face() const { return kind == Kind::face; }
  bool contains_vertex(int v) const;
  std::string to_string() const;
  auto operator<=>(const SL3Element&) const = default;
};

// Multiset of colored elements.  Multiplicity > 0 means blue (numerator),
// < 0 red (denominator); adding opposite colors of one element cancels
// eagerly, so the stored map is always the net diagram.
class SL3Diagram {
 public:
  void add(const SL3Element& e, int multiplicity);
  void add_all(const SL3Diagram& other);
  int multiplicity(const SL3Element& e) const;
  const std::map<SL3Element, int>& elements() const { return elements_; }
  int element_count() const;  // sum of absolute multiplicities
  std::string to_string() const;
  auto operator<=>(const SL3Diagram&) const = default;

 private:
  std::map<SL3Element, int> elements_;
};

// Seed for a triangulated convex polygon: one quiver node per directed
// edge (anchored at the vertex the arrow leaves) and one per triangle,
// wired so every triangle carries three 3-cycles through its face node.
// Values are Laurent polynomials in the initial fan's variables.
class FanSL3Seed {
 public:
  int polygon_size() const { return size_; }
  int fan_vertex() const { return fan_vertex_; }
  int node_count() const { return static_cast<int>(labels_.size()); }

  const std::vector<std::array<int, 2>>& diagonals() const { return diagonals_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  bool has_chord(int u, int v) const;  // boundary or diagonal of the current triangulation
  bool has_face(int p, int q, int r) const;
  bool is_initial_fan() const;

  const SL3Element& node_label(int node) const;
  int node_of(const SL3Element& e) const;  // throws SL3Error if absent
  bool is_frozen(int node) const;
  const Laurent& value(int node) const;
  int arrow_count(int from, int to) const;  // signed; negative means reversed

  // Names of the initial variables, indexed like the Laurent values.
  const std::vector<std::string>& variable_names() const { return names_; }

  // Monomial weight of a diagram over the initial variables.
  Laurent diagram_weight(const SL3Diagram& d) const;

  // Covering move at a mutable node: the multiset form of its y-hat
  // monomial (in-arrows positive, out-arrows negative).  Initial fan only.
  SL3Diagram yhat_move(int node) const;

  friend FanSL3Seed build_fan_sl3_seed(int polygon_size);
  friend FanSL3Seed flip(const FanSL3Seed& seed, int u, int v);

 private:
  void add_triangle_cycles(const std::array<int, 3>& tri, int sign);
  void mutate(int node);
  void rebuild_lookup();

  int size_ = 0;
  int fan_vertex_ = 0;
  std::vector<SL3Element> labels_;
  std::vector<Laurent> values_;
  std::vector<bool> frozen_;
  std::vector<std::vector<int>> arrows_;  // signed arrow counts, skew-symmetric
  std::vector<std::string> names_;        // frozen at construction
  std::vector<std::array<int, 2>> diagonals_;
  std::vector<std::array<int, 3>> triangles_;
  std::map<SL3Element, int> node_of_;
};

// Fan triangulation of a convex polygon with CCW vertices 0..size-1 and
// fan vertex size-1; requires size >= 4.
FanSL3Seed build_fan_sl3_seed(int polygon_size);

// Flip the internal diagonal {u, v}: mutate at its two edge nodes, then at
// the two flanking face nodes, and relabel the four slots.  Throws
// FrozenEdgeError for boundary edges, SL3Error for absent chords.
FanSL3Seed flip(const FanSL3Seed& seed, int u, int v);

// Laurent expansion of a target directed edge / face in the initial fan
// variables, computed purely by flips (breadth-first over triangulations
// until the target is part of the current seed).
Laurent flip_oracle_edge(const FanSL3Seed& seed, int from, int to);
Laurent flip_oracle_face(const FanSL3Seed& seed, int p, int q, int r);

// Diagram enumeration by the two recursion lemmas, bottoming out at
// triangulation edges/faces.  Every produced diagram is validated against
// the T-path/face-path conditions and the fork-join reconstruction; a
// violation throws SL3Error.  Requires the initial fan (NotFanError).
std::vector<SL3Diagram> edge_tpath_diagrams(const FanSL3Seed& seed, int from, int to);
std::vector<SL3Diagram> face_tpath_diagrams(const FanSL3Seed& seed, int p, int q, int r);

// Expansion posets over those diagrams: weights are diagram monomials and
// covering relations are multiplication by the y-hat of a mutable node.
FinitePoset enumerate_edge_tpaths(const FanSL3Seed& seed, int from, int to);
FinitePoset enumerate_face_tpaths(const FanSL3Seed& seed, int p, int q, int r);

// Reconstruct an alternating fork-join network (or branch triple for face
// targets) immersing onto the diagram; false (with an optional trace) when
// no reconstruction satisfies the pairing, coloring, and no-reuse rules.
bool verify_fork_join(const FanSL3Seed& seed, const SL3Diagram& d, int from,
                      int to, std::string* trace = nullptr);
bool verify_fork_join(const FanSL3Seed& seed, const SL3Diagram& d,
                      std::array<int, 3> face_targets,
                      std::string* trace = nullptr);

// Reference shape for the longest-edge poset: lattice points weakly below
// the staircase with step word (abb)^n, cover = one unit step.  Column x
// holds points (x, 0..2x), so the poset has (n+1)^2 elements.
FinitePoset staircase_grid_poset(int n);

}  // namespace clusterforge
