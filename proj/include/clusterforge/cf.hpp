#pragma once

#include "clusterforge/rational.hpp"

#include <string>
#include <vector>

namespace clusterforge {

// Positive continued fraction [a1, a2, ..., ak] with all entries >= 1,
// i.e. a1 + 1/(a2 + 1/(... + 1/ak)).  Entries may end in 1 (un-normalized);
// normalized() folds trailing 1s away.  The dual swaps the roles of "+" and
// "," in the expansion a1 = 1+...+1 etc., implemented through the sign
// sequence; it is an involution on un-normalized continued fractions.
struct ContinuedFraction {
  std::vector<int> entries;

  ContinuedFraction() = default;
  explicit ContinuedFraction(std::vector<int> e);

  bool operator==(const ContinuedFraction&) const = default;

  Rational value() const;

  // Run-length decode: entries are the run lengths of the returned +-1
  // sequence, first run negative.
  std::vector<int> sign_sequence() const;
  static ContinuedFraction from_sign_sequence(const std::vector<int>& signs);

  // Swap commas and plus signs: flip every second sign (0-based odd
  // positions) and re-encode.  [1,1,1,1] <-> [4], [2,2] <-> [1,2,1].
  ContinuedFraction dual() const;

  // Fold trailing 1s: [..., a, 1] -> [..., a+1], repeatedly.
  ContinuedFraction normalized() const;

  std::string to_string() const;  // "[1,1,1,1]"
};

}  // namespace clusterforge
