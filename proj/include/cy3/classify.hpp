// Closed-form admissibility of (n, d, a), i.e. of a K3 surface of degree 2n
// containing an elliptic cubic D and a rational curve Gamma of degree d with
// D.Gamma = a.  Every check reports which exceptional case fired.
#pragma once

#include <string>
#include <vector>

#include "cy3/arith.hpp"

namespace cy3::classify {

struct CaseRecord {
  std::string lemma;   // "lemma1" .. "lemma4", "summa", "iso"
  std::string label;   // e.g. "lemma2(b)"
  std::string anchor;  // the condition that fired, in words

  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

struct CheckResult {
  bool ok = true;
  std::string label;  // empty when ok

  explicit operator bool() const { return ok; }
};

/// 3ad > na^2 - 9 and the Gram matrix has signature (1,2,0).
bool check_lattice_exists(Int n, Int d, Int a);

/// L = H - bD fails to be ample exactly in the four exceptional families.
/// Requires d0 >= 1; the verdicts below report d0 <= 0 as "lemma2(d0)".
CheckResult check_L_ample(Int m, Int d0, Int a);

/// The same families written in (n, d, a); labels (i)..(iv).
CheckResult check_H_very_ample(Int n, Int d, Int a);

/// Gamma is a smooth rational curve unless one of three families occurs.
CheckResult check_gamma_irreducible(Int m, Int d0, Int a);

/// Anchor text for a case label produced by the checks above.
std::string anchor_for(const std::string& label);

struct Verdict {
  Int n = 0;
  Int d = 0;
  Int a = 0;
  bool lattice_exists = false;
  bool L_ample = false;
  bool H_very_ample = false;
  bool gamma_irreducible = false;
  bool components_admissible = false;  // conjunction of the four checks
  bool admissible = false;             // literal case analysis
  std::string literal_case;            // e.g. "summa(ii): general"
  std::vector<CaseRecord> triggered;   // failing component checks

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Literal case analysis in n, plus the component checks.
Verdict admissible_summa(Int n, Int d, Int a);

/// Same statement indexed by g = n + 1, evaluated from its own case list.
Verdict admissible_iso(Int g, Int d, Int a);

}  // namespace cy3::classify
