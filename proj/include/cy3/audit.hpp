// Regularity bookkeeping for the union of a rational curve and N-5 linear
// 3-spaces, incidence dimension counts, and the Calabi-Yau complete
// intersections in Grassmannians.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cy3/arith.hpp"
#include "cy3/scroll.hpp"

namespace cy3::audit {

// --- regularity -----------------------------------------------------------

/// Sum of the regularities of the pieces.
Int regularity_union(const std::vector<Int>& parts);

/// d + 2 - r for a curve of degree d spanning a P^r.
Int curve_regularity(Int d, Int r);

/// s for s linear spaces meeting pairwise in finitely many points.
Int linear_spaces_regularity(Int s);

/// (d + 2 - r) + (N - 5) <= 5 on the 4-fold scroll t.
bool finiteness_check(const scroll::ScrollType& t, Int d, Int r);

/// Largest curve regularity over smooth rational curves of degree d: such a
/// curve spans at least a P^min(d,3).
Int worst_case_curve_regularity(Int d);

/// Largest d such that every smooth rational curve of degree <= d passes
/// finiteness_check on a scroll in P^N (0 if none).
Int max_finite_degree(Int N);

// --- incidence dimensions -------------------------------------------------

/// h^1 + 105 - (4d + 1 + (5 - N) a).
Int fiber_dimension(Int d, Int a, Int N, Int h1);

/// h^0(O_X(4H)) = 35(N - 5) + 4d + 1 - (N - 5) a.
Int h0_union_4H(Int d, Int a, Int N);

// --- Grassmannians --------------------------------------------------------

/// (n+1) d + (k+1)(n-k) - 3.
Int grass_dim_M(Int d, Int k, Int n);

/// Binomial(n+1, k+1) - 1, the Pluecker ambient.
Int plucker_N(Int k, Int n);

struct GrassFamily {
  Int k = 0;
  Int n = 0;
  std::vector<Int> degrees;  // non-decreasing
  Int N = 0;
  Int s = 0;
  std::optional<Int> dimG;          // parameter-space dimension if known
  std::optional<Int> dimG_derived;  // all-linear case: dim of codim-s linear spaces
  std::optional<Int> dimG_constant; // tabulated value

  friend bool operator==(const GrassFamily&, const GrassFamily&) = default;
};

std::string to_string(const GrassFamily& f);

/// Canonical (k, n) with 1 <= k <= (n-1)/2, n <= n_max, k <= k_max; degree
/// multisets with s = (k+1)(n-k)-3 positive parts summing to n+1.  G(1,3) is
/// skipped: it is a quadric in P^5, so its complete intersections are
/// complete intersections in projective space.  Ordered by k, then n.
std::vector<GrassFamily> enumerate_cicy_grass(Int n_max = 8, Int k_max = 3);

struct IncidenceBound {
  std::string name;
  std::string grassmannian;  // "G(1,6)" or "G(2,5)"
  Int slope = 0;             // bound = slope * d + intercept when slope > 0
  Int intercept = 0;
  Int dimG = 0;
  std::optional<Int> value;  // at the requested d; empty for threshold-only rows
  Int first_equal = 0;       // first d with bound >= dimG
  Int first_exceed = 0;      // first d with bound > dimG
};

/// The incidence lower bounds at degree d, with their threshold degrees.
std::vector<IncidenceBound> grass_incidence_bounds(Int d);

struct ProjectiveCI {
  std::vector<Int> degrees;
  Int N = 0;
  Int max_degree = 0;  // finiteness known for rational curves of degree <= this
};

/// Reference table for the five complete intersection Calabi-Yau threefolds in P^N.
const std::vector<ProjectiveCI>& projective_ci_table();

}  // namespace cy3::audit
