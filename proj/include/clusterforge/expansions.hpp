#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "clusterforge/laurent.hpp"
#include "clusterforge/poset.hpp"
#include "clusterforge/snakegraph.hpp"
#include "clusterforge/triangulation.hpp"
#include "clusterforge/word.hpp"

namespace clusterforge {

struct ExpansionError : std::runtime_error {
    explicit ExpansionError(const std::string& what) : std::runtime_error(what) {}
};

// The six combinatorial models that expand a word's cluster variable. The
// first three live on the word's own snake graph / triangulation; the last
// three are their duals and live on the dual triangulation.
enum class ExpansionKind {
    matchings,        // P: perfect matchings of the snake graph
    angle_matchings,  // A: one angle per triangle, all at distinct vertices
    t_paths,          // T: odd alternating edge paths from source to sink
    lattice_paths,    // L: monotone paths across the dual snake graph
    angle_paths,      // B: one angle per triangle, vertex parity constraint
    edge_walks,       // S: source-to-sink walks meeting every triangle
};

ExpansionKind expansion_kind_from_letter(char c);  // 'P','A','T','L','B','S'
char expansion_letter(ExpansionKind k);
std::string expansion_kind_name(ExpansionKind k);

// Poset builders on an explicit carrier. Elements carry canonical payload
// strings and monomial weights (plain edge products; t-paths divide by their
// red steps). Each poset is built by saturating the up-move relation and has
// a unique minimal element.
FinitePoset matching_poset(const SnakeGraph& g);
FinitePoset lattice_path_poset(const SnakeGraph& g);
FinitePoset t_path_poset(const WordTriangulation& tri);
FinitePoset angle_matching_poset(const WordTriangulation& tri);
FinitePoset angle_path_poset(const WordTriangulation& tri);
FinitePoset edge_walk_poset(const WordTriangulation& tri);

// The poset of the given kind expanding x_w.
FinitePoset expansion_poset(ExpansionKind kind, const Word& w);

// The expansion read off a poset built for word w: the weight sum, divided by
// the product of the diagonal variables for every kind whose element weights
// are plain products (everything except t-paths, whose weights already carry
// their denominators).
Laurent expansion_value(ExpansionKind kind, const FinitePoset& poset, const Word& w);
// Convenience: build the poset and read off the expansion.
Laurent expand_word(ExpansionKind kind, const Word& w);

// Number of Laurent variables used for everything attached to w.
int variable_count(const Word& w);
// Product x_1 ... x_n of the diagonal variables of w's triangulation.
Laurent diagonal_product(const Word& w);
// Display names x1..x{2n+3}.
std::vector<std::string> variable_names(const Word& w);

}  // namespace clusterforge
