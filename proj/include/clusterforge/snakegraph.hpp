#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "clusterforge/cf.hpp"
#include "clusterforge/poset.hpp"
#include "clusterforge/qpoly.hpp"
#include "clusterforge/triangulation.hpp"
#include "clusterforge/word.hpp"

namespace clusterforge {

struct GridPoint {
    int x = 0;
    int y = 0;
    auto operator<=>(const GridPoint&) const = default;
};

// An unordered unit edge of the square lattice, stored with the smaller
// endpoint first.
struct GridEdge {
    GridPoint u, v;

    GridEdge() = default;
    GridEdge(GridPoint a, GridPoint b);

    bool horizontal() const { return u.y == v.y; }
    auto operator<=>(const GridEdge&) const = default;
};

enum class Side { S, E, N, W };

// A chain of unit tiles glued right (shape letter a) or above (letter b),
// optionally carrying edge labels inherited from a triangulation.
class SnakeGraph {
  public:
    static SnakeGraph from_shape(const Word& shape);

    const Word& shape() const { return shape_; }
    int tile_count() const { return static_cast<int>(tiles_.size()); }
    const std::vector<GridPoint>& tiles() const { return tiles_; }

    GridEdge side(int tile_index, Side s) const;  // tile_index 0-based
    const std::vector<GridEdge>& edges() const { return edges_; }
    bool is_boundary(const GridEdge& e) const;

    bool has_labels() const { return !labels_.empty(); }
    bool has_label(const GridEdge& e) const { return labels_.contains(e); }
    int label(const GridEdge& e) const;
    void set_label(const GridEdge& e, int label);

    GridPoint sw_corner() const { return {0, 0}; }
    GridPoint ne_corner() const;

    // Vertices adjacent to a lattice point along snake edges.
    std::vector<GridPoint> neighbors(const GridPoint& p) const;

  private:
    Word shape_{""};
    std::vector<GridPoint> tiles_;
    std::vector<GridEdge> edges_;
    std::map<GridEdge, int> incidence_;  // edge -> number of tiles containing it
    std::map<GridEdge, int> labels_;
};

// The labeled snake graph of a word: gluing word dual(w), labels unfolded
// from the word's triangulation.
SnakeGraph snake_graph(const Word& w);

// Reflect the labeled snake through the antidiagonal of every tile in order.
// Returns the dual snake together with where each original edge landed.
struct DualizedSnake {
    SnakeGraph graph;
    std::map<GridEdge, GridEdge> edge_image;
};
DualizedSnake dual_snake_graph(const SnakeGraph& g);

// Signs of the distinguished edges e_0..e_n read off the diagonal-line
// parity, with the fixed conventions for the first, gluing, and final edges.
std::vector<int> sign_sequence(const SnakeGraph& g);

ContinuedFraction cf_from_snake(const SnakeGraph& g);
ContinuedFraction continued_fraction(const Word& w);

// Inverse direction: the unique word whose snake graph produces these signs.
std::optional<Word> word_from_signs(const std::vector<int>& signs);
std::optional<Word> word_from_cf(const ContinuedFraction& cf);

// Lengths of the maximal straight segments: tile counts at the two ends,
// tile counts minus one in the middle. A straight graph reports [n].
std::vector<int> straight_segments(const SnakeGraph& g);

// All monotone SW-to-NE paths, each as its ordered list of unit steps.
std::vector<std::vector<GridEdge>> all_lattice_paths(const SnakeGraph& g);

// All perfect matchings of the snake graph's vertex set.
std::vector<std::vector<GridEdge>> all_perfect_matchings(const SnakeGraph& g);

// Count of perfect matchings after deleting the first `drop` tiles (the
// truncated graph keeps only vertices of the remaining tiles). Dropping
// everything leaves the empty graph with one matching.
BigInt matching_count_after_deleting(const SnakeGraph& g, int drop);

// Orbit of shapes with a fixed letter multiset under the swap ab -> ba,
// ordered by swaps applied left to right; j is the count of b letters.
FinitePoset orbit_poset(int tiles, int j);
std::vector<Word> groupoid_neighbors(const Word& shape);

// The image of the lattice-path poset inside the two-sizes-up orbit poset:
// each path reads a shape word (E step = a, N step = b).
struct YoungEmbedding {
    Word low;   // image of the minimal path
    Word high;  // image of the maximal path
    std::vector<Word> member_shapes;
};
YoungEmbedding embed_lattice_paths(const SnakeGraph& g);

}  // namespace clusterforge
