#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterforge/laurent.hpp"
#include "clusterforge/word.hpp"

namespace clusterforge {

// One triangle of the fence triangulation, listed base-to-apex. Vertices are
// polygon vertex ids; sides[k] is the edge label opposite verts[k].
struct Triangle {
    std::array<int, 3> verts;
    std::array<int, 3> opposite_labels;
};

// The triangulated (n+3)-gon of a word: a strip of n+1 triangles between the
// source vertex and the sink vertex, with edges labeled 1..2n+3 (diagonals
// first). Vertex 0 is the source "a"; the two ends of diagonal i are kept as
// left(i)/right(i).
class WordTriangulation {
  public:
    static WordTriangulation from_word(const Word& w);

    const Word& word() const { return word_; }
    int diagonal_count() const { return n_; }           // n
    int label_count() const { return 2 * n_ + 3; }      // edges 1..2n+3
    int vertex_count() const { return n_ + 3; }

    int source() const { return source_; }  // vertex a
    int sink() const { return sink_; }      // vertex b
    int left(int i) const { return left_.at(i - 1); }
    int right(int i) const { return right_.at(i - 1); }

    const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
    const std::vector<int>& boundary_cycle() const { return boundary_cycle_; }

    bool has_edge(int u, int v) const;
    int label_of(int u, int v) const;
    std::pair<int, int> endpoints(int label) const;
    bool is_diagonal_label(int label) const { return label >= 1 && label <= n_; }

    // Triangles in strip order; triangle i has sides {diagonal i, diagonal
    // i+1, ...} for interior i, and two boundary sides at the ends.
    const std::vector<Triangle>& triangles() const { return triangles_; }

    // Edge labels incident to a vertex within one triangle (the two sides of
    // that triangle meeting at the vertex).
    std::array<int, 2> sides_at(int triangle_index, int vertex) const;
    // The side of a triangle opposite one of its vertices.
    int opposite_label(int triangle_index, int vertex) const;

    bool is_fan() const;
    bool is_zigzag() const { return word_.is_zigzag(); }

    WordTriangulation dual() const { return from_word(word_.dual()); }

    // Edge labels incident to a vertex across the whole triangulation.
    std::vector<int> labels_at_vertex(int v) const;

  private:
    Word word_{""};
    int n_ = 0;
    int source_ = 0;
    int sink_ = 0;
    std::vector<int> left_, right_;
    std::vector<std::string> vertex_names_;
    std::vector<int> boundary_cycle_;
    std::map<std::pair<int, int>, int> edge_labels_;
    std::vector<std::pair<int, int>> label_endpoints_;
    std::vector<Triangle> triangles_;
};

// A curve between two polygon vertices, carrying the ordered list of
// diagonals it still crosses.
struct CurvePiece {
    int from;
    std::vector<int> crossings;
    int to;

    auto operator<=>(const CurvePiece&) const = default;
};

// State of a partially resolved multicurve.
using CurveSystem = std::vector<CurvePiece>;

// Smooth the unique piece crossing diagonal i. With pick_left the piece
// (u, ..i.., v) becomes (u, .., left(i)) and (right(i), .., v); otherwise the
// two new endpoints are swapped.
CurveSystem resolve_crossing(const CurveSystem& system, const WordTriangulation& tri,
                             int diagonal, bool pick_left);

// Weight of a fully resolved system: product over arcs of the variable of
// the edge the arc is isotopic to, or zero when any arc is a loop.
Laurent resolved_weight(const CurveSystem& system, const WordTriangulation& tri);

// All 2^n smoothings of the source-to-sink curve through every diagonal.
// Returned in choice-vector order (bit i set = pick_left at diagonal i+1).
std::vector<CurveSystem> enumerate_resolutions(const WordTriangulation& tri);

// Sum of resolved weights over all smoothings.
Laurent resolution_sum(const WordTriangulation& tri);

// Dual smoothings: each choice vector visits a, v_1, .., v_n, b with v_i an
// endpoint of diagonal i; weight is the product of consecutive connecting
// edges, or zero when consecutive visits coincide.
std::vector<Laurent> dual_resolution_weights(const WordTriangulation& tri);
Laurent dual_resolution_sum(const WordTriangulation& tri);

}  // namespace clusterforge
