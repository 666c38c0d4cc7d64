// Intersection numbers (Delta.L, Delta.D, Delta.B) of a smooth rational curve
// Delta with Delta.B <= 0, where B = 3L - mD.  The admissible triples are cut
// out by a handful of numeric constraints plus exclusion rules that encode the
// effectivity arguments (decompositions of R = L - 2D, ampleness of L, the
// discriminant criterion).  Each rule is named so a trace can say which one
// removed a candidate.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cy3/arith.hpp"

namespace cy3::dioph {

struct Triple {
  Int dL = 0;
  Int dD = 0;
  Int dB = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

std::string to_string(const Triple& t);

struct Help2Rule {
  std::string name;
  std::string anchor;  // short statement of the argument behind the rule
};

/// The rules in the order they are applied.
const std::vector<Help2Rule>& help2_rules();

struct Help2Decision {
  Triple triple;
  bool accepted = false;
  std::string rule;  // the rule that decided the candidate
};

struct Help2Trace {
  std::vector<Triple> triples;           // accepted, sorted
  std::vector<Help2Decision> decisions;  // every candidate, in scan order
};

/// Candidates scanned: 1 <= Delta.L <= 3m, 0 <= Delta.D <= 3m, Delta.B <= 0.
Help2Trace enumerate_help2_traced(Int m);

std::vector<Triple> enumerate_help2(Int m);

/// 18 + 2 Delta.D Delta.B, the discriminant of (L, D, Delta) for Delta^2 = -2.
Int help2_disc(const Triple& t);

}  // namespace cy3::dioph
