#pragma once

#include <stdexcept>
#include <vector>

#include "clusterforge/laurent.hpp"
#include "clusterforge/word.hpp"

namespace clusterforge {

struct FrozenVertexMutation : std::runtime_error {
    explicit FrozenVertexMutation(int k)
        : std::runtime_error("mutation at frozen vertex " + std::to_string(k)) {}
};

// Quiver on nodes 0..m-1 where the first n nodes are mutable and the rest are
// frozen. Arrows are stored as a skew-symmetric integer matrix: b[i][j] > 0
// means b[i][j] arrows from i to j. Loops and 2-cycles are excluded by the
// skew-symmetry of the representation.
class Quiver {
  public:
    Quiver(int mutable_count, int total_count);

    int mutable_count() const { return mutable_count_; }
    int total_count() const { return total_count_; }

    int arrows(int from, int to) const { return b_[from][to]; }
    void add_arrow(int from, int to, int multiplicity = 1);

    bool is_mutable(int k) const { return k >= 0 && k < mutable_count_; }

    // Standard matrix mutation at a mutable vertex k.
    Quiver mutated(int k) const;

    // Exponent vector of the hat-y monomial at mutable vertex k: column k of
    // the exchange matrix, i.e. +1 per arrow into k and -1 per arrow out.
    std::vector<int> hat_y_exponents(int k) const;

    bool operator==(const Quiver& other) const = default;

  private:
    int mutable_count_;
    int total_count_;
    std::vector<std::vector<int>> b_;
};

// Quiver of a word: n mutable nodes (one per internal diagonal, index
// label-1) plus n+3 frozen boundary nodes, with one oriented 3-cycle per
// triangle of the word's triangulation.
Quiver word_quiver(const Word& w);

// A seed: a quiver together with one Laurent polynomial attached to each
// node. Mutation exchanges the attachment at a mutable node.
class Seed {
  public:
    explicit Seed(Quiver quiver);
    Seed(Quiver quiver, std::vector<Laurent> attachments);

    const Quiver& quiver() const { return quiver_; }
    const Laurent& attachment(int k) const { return attachments_.at(k); }

    Seed mutated(int k) const;

    bool operator==(const Seed& other) const = default;

  private:
    Quiver quiver_;
    std::vector<Laurent> attachments_;
};

// Orbit of a monomial under multiplication by hat-y monomials of the seed's
// quiver. A monomial is kept when no frozen variable divides its denominator
// and no frozen variable appears squared in its numerator.
std::vector<Exponents> support_orbit(const Exponents& start, const Quiver& quiver);

}  // namespace clusterforge
