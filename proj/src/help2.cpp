#include "cy3/help2.hpp"

#include <algorithm>
#include <optional>

namespace cy3::dioph {

namespace {

// Intersection numbers of R = L - 2D with L, D, B (L^2 = 2m, L.D = 3, D^2 = 0).
Triple r_triple(Int m) { return {2 * m - 6, 3, 3 * m - 18}; }

// Ampleness of L bounds Delta.L strictly below R.L when Delta < R.
Int r_dot_l(Int m) { return 2 * m - 6; }

// Returns the deciding rule, or nullopt if the candidate survives every rule.
std::optional<std::string> reject_reason(Int m, const Triple& t) {
  const Int dR = t.dL - 2 * t.dD;
  const bool is_R = (t == r_triple(m));

  if (dR > 0) return "R-nonpositive";
  if (is_R && m != 5) return "delta-equals-R";  // R^2 = -2 only for m = 5
  if (!is_R) {
    if (dR == 0) {
      if (m != 6) return "R-nonpositive";
      if (t.dL > r_dot_l(m) - 1) return "R-zero-decomposition";
    } else if (m == 5 || m == 6) {
      if (dR != -1) return "R-decomposition";
      if (t.dL > r_dot_l(m) - 1) return "L-ample-below-R";
    } else if (dR <= -2) {  // m == 4
      if (t.dL < 3 || t.dL > 11) return "m4-L-range";
      const Int hodge = (12 - t.dL) * (12 - t.dL) / 16 + 1;
      if (-t.dB > hodge) return "m4-hodge";
    }
  }
  if (help2_disc(t) == 0 && !(m == 5 && is_R)) return "disc-zero";
  return std::nullopt;
}

}  // namespace

std::string to_string(const Triple& t) {
  return "(" + std::to_string(t.dL) + "," + std::to_string(t.dD) + "," + std::to_string(t.dB) + ")";
}

const std::vector<Help2Rule>& help2_rules() {
  static const std::vector<Help2Rule> rules{
      {"R-nonpositive", "3 Delta.R <= Delta.B <= 0, with Delta.R = 0 only if m = 6"},
      {"delta-equals-R", "Delta = R forces R^2 = -2, i.e. m = 5, triple (4,3,-3)"},
      {"R-zero-decomposition", "m = 6, Delta.R = 0: R = Delta + Delta0 with L ample gives Delta.L <= R.L - 1 = 5"},
      {"R-decomposition", "m = 5, 6: Delta < R and Delta.R <= -2 contradicts the decomposition of R, so Delta.R = -1"},
      {"L-ample-below-R", "m = 5, 6: Delta < R and L ample give Delta.L <= R.L - 1"},
      {"m4-L-range", "m = 4, Delta.R <= -2: L - 2D < Delta < 3L - 4D gives 3 <= Delta.L <= 11"},
      {"m4-hodge", "m = 4, Delta.R <= -2: Hodge index on B - Delta gives -Delta.B <= floor((12 - Delta.L)^2/16 + 1)"},
      {"disc-zero", "|disc(L,D,Delta)| = z^2 delta vanishes only for Delta = R at m = 5"},
  };
  return rules;
}

Int help2_disc(const Triple& t) {
  return add(mul(mul(2, t.dD), t.dB), 18);
}

Help2Trace enumerate_help2_traced(Int m) {
  if (m < 4 || m > 6) throw DomainError("enumerate_help2: m must be 4, 5 or 6");
  Help2Trace trace;
  for (Int dL = 1; dL <= 3 * m; ++dL)
    for (Int dD = 0; dD <= 3 * m; ++dD) {
      const Triple t{dL, dD, 3 * dL - m * dD};
      if (t.dB > 0) continue;
      const auto reason = reject_reason(m, t);
      trace.decisions.push_back({t, !reason, reason.value_or("accepted")});
      if (!reason) trace.triples.push_back(t);
    }
  std::sort(trace.triples.begin(), trace.triples.end());
  return trace;
}

std::vector<Triple> enumerate_help2(Int m) { return enumerate_help2_traced(m).triples; }

}  // namespace cy3::dioph
