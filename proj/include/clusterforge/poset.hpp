#pragma once

#include "clusterforge/laurent.hpp"
#include "clusterforge/qpoly.hpp"
#include "clusterforge/word.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace clusterforge {

struct PosetError : std::runtime_error {
  explicit PosetError(const std::string& what) : std::runtime_error(what) {}
};
struct NotGraded : PosetError {
  explicit NotGraded(const std::string& what) : PosetError(what) {}
};

// Finite poset with string payloads (canonical element descriptions) and
// optional Laurent weights.  Construction takes an arbitrary acyclic relation
// and stores its transitive reduction; queries work off a precomputed
// reachability closure.
class FinitePoset {
public:
  FinitePoset() = default;
  FinitePoset(std::vector<std::string> payloads,
              std::vector<std::pair<int, int>> relations);

  int size() const { return static_cast<int>(payload_.size()); }
  const std::string& payload(int i) const { return payload_.at(static_cast<std::size_t>(i)); }
  // -1 when no element carries this payload
  int index_of(const std::string& payload) const;

  void set_weights(std::vector<Laurent> w);
  bool has_weights() const { return !weights_.empty(); }
  const Laurent& weight(int i) const { return weights_.at(static_cast<std::size_t>(i)); }
  Laurent weight_sum() const;

  // cover pairs (lo, hi), sorted
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::vector<int> upper_covers(int i) const;
  std::vector<int> lower_covers(int i) const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  bool leq(int i, int j) const;  // reflexive

  // Graded: every saturated chain from a minimal element to x has one
  // length, uniformly over x.  ranks() throws NotGraded otherwise.
  bool is_graded() const;
  std::vector<int> ranks() const;
  QPolynomial rank_generating_function() const;

  FinitePoset order_dual() const;
  FinitePoset subposet(const std::vector<int>& elements) const;

  bool is_lattice() const;
  // elements with exactly one lower cover
  std::vector<int> join_irreducible_elements() const;
  FinitePoset join_irreducibles() const;
  bool is_distributive() const;

  // Lattice of order ideals (down-closed subsets) of *this, ordered by
  // inclusion; payload is the ascending index set, e.g. "{0,2,3}".
  // Limited to posets with at most 64 elements.
  FinitePoset order_ideals() const;

private:
  void build(std::vector<std::pair<int, int>> relations);

  std::vector<std::string> payload_;
  std::vector<Laurent> weights_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;     // cover adjacency
  std::vector<std::vector<bool>> leq_;          // reachability, reflexive
};

FinitePoset chain_poset(int m);
FinitePoset antichain_poset(int m);
// Fence on l(w)+1 nodes: letter i = 'a' orients node i+1 below node i,
// letter i = 'b' the other way (1-based letters, 0-based nodes).
FinitePoset fence_poset(const Word& w);
FinitePoset boolean_lattice(int u);
// Ideals of the alternating fence on n nodes; sizes follow the Fibonacci
// numbers.
FinitePoset fibonacci_cube(int n);
FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q);
// Ideals of chain(m) x chain(n); rank generating function is the Gaussian
// binomial [m+n choose m]_q.
FinitePoset grid_lattice(int m, int n);

// Isomorphism of posets (as DAGs of covers); when match_weights is set the
// map must also carry weights to equal weights.
std::optional<std::vector<int>> find_poset_isomorphism(const FinitePoset& p,
                                                       const FinitePoset& q,
                                                       bool match_weights = false);
bool poset_isomorphic(const FinitePoset& p, const FinitePoset& q,
                      bool match_weights = false);

}  // namespace clusterforge
