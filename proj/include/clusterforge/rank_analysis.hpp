#pragma once

#include <utility>
#include <vector>

#include "clusterforge/qpoly.hpp"
#include "clusterforge/word.hpp"

namespace clusterforge {

// Rank generating function of the lattice-path order on the snake graph of
// the given gluing shape, computed three independent ways.

// Area-statistic recursion over the region's lattice points.
QPolynomial rank_recursive(const Word& shape);

// Closed hook formula over the straight segments k_1..k_d: a signed-free sum
// of products of [k_i] and 1 + q[k_i][k_{i+1}] factors with shifted monomial
// corrections, one summand per subset of the interior pair slots.
QPolynomial rank_hook(const Word& shape);

// The hook sum expanded into individual monomial-product terms; the number of
// terms is the Fibonacci number F(d+1).
std::vector<QPolynomial> fibonacci_rank_terms(const Word& shape);
QPolynomial rank_fibonacci(const Word& shape);

// q-deformation of the word's continued fraction: rank polynomials of the
// matching order on its snake graph and on the graph with the first
// continued-fraction-entry many tiles removed. At q=1 the quotient is the
// continued fraction's value.
std::pair<QPolynomial, QPolynomial> q_deformed_rational(const Word& w);

// Coefficient-profile classification of a rank polynomial.
struct RankProfile {
    std::vector<BigInt> coefficients;
    bool symmetric = false;             // palindromic
    bool unimodal = false;              // weakly rises then weakly falls
    bool trapezoidal = false;           // symmetric and strictly rises, flat top,
                                        // strictly falls
    bool weakly_trapezoidal = false;    // strictly rises, flat top, strictly
                                        // falls, maximum in the middle
    bool almost_weakly_trapezoidal = false;  // weakly trapezoidal after allowing
                                             // one slack step at each end
    bool unimodal_growth = false;       // |successive differences| weakly fall
                                        // then weakly rise
    // maximal runs of >= 2 equal consecutive coefficients, as (start, length)
    std::vector<std::pair<int, int>> plateaus;
};

RankProfile analyze_rank_polynomial(const QPolynomial& p);

// Predicted symmetry of the two rank polynomials attached to a word, read off
// the word alone.
bool predicted_path_rank_symmetric(const Word& shape);   // shape palindrome
bool predicted_matching_rank_symmetric(const Word& w);   // word palindrome

}  // namespace clusterforge
