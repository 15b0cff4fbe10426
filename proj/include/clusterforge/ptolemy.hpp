#pragma once

#include <map>
#include <vector>

#include "clusterforge/laurent.hpp"
#include "clusterforge/triangulation.hpp"

namespace clusterforge {

// Exact cluster variables of polygon chords from iterated Ptolemy exchanges.
class ChordOracle {
  public:
    explicit ChordOracle(const WordTriangulation& tri);

    // Laurent polynomial of the chord between two polygon vertices, in the
    // variables x_1..x_{2n+3} (index = label - 1). Adjacent or equal vertices
    // give the corresponding edge variable resp. one.
    const Laurent& chord(int u, int v);

    // The full Laurent expansion of the word's cluster variable: the chord
    // from source to sink.
    const Laurent& word_variable();

  private:
    const WordTriangulation& tri_;
    int size_;
    std::vector<int> position_;  // vertex id -> cyclic position
    std::vector<int> at_position_;
    std::map<std::pair<int, int>, Laurent> memo_;

    bool separates(int u, int v, int p, int q) const;
};

}  // namespace clusterforge
