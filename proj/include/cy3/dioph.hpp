// Integer solutions of "v^2 = q, v.c1 = b1, v.c2 = b2" on the Picard lattice,
// plus an exhaustive box scan used to cross-check them.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cy3/lattice.hpp"

namespace cy3::dioph {

using lattice::DivisorClass;
using lattice::GramMatrix;

struct LinearConstraint {
  DivisorClass with;
  Int value = 0;
};

struct ConstraintSystem {
  GramMatrix G;
  Int self_int_target = 0;
  std::vector<LinearConstraint> linear;  // at most two
};

enum class SolveMode {
  Analytic,      // two independent constraints, complete answer
  BoundedSearch  // dependent or missing constraints; only the box was searched
};

struct SolveResult {
  std::vector<DivisorClass> classes;  // sorted lexicographically
  SolveMode mode = SolveMode::Analytic;
  bool exhaustive = true;
  // Analytic mode found a whole line of solutions (the quadratic vanished
  // identically); `classes` then lists only the part inside the box.
  bool infinite_family = false;
  Int box = 0;  // box used when not exhaustive

  /// Largest |coordinate| among the solutions (0 when there are none).
  Int max_abs_coordinate() const;
};

/// Exact solver.  With two independent linear constraints the solution set is
/// v0 + t k on a lattice line; substituting into the quadratic leaves one
/// integer quadratic in t, so `box` is only used for the degenerate fallback.
SolveResult solve(const ConstraintSystem& sys, Int box = 30);

enum class Cmp { Eq, Le, Ge };

/// A pure integer test on a class: either v^2 (cmp) value, or v.with (cmp) value.
struct Predicate {
  std::optional<DivisorClass> with;
  Cmp cmp = Cmp::Eq;
  Int value = 0;

  static Predicate self_intersection(Int value, Cmp cmp = Cmp::Eq) { return {std::nullopt, cmp, value}; }
  static Predicate pairing(const DivisorClass& with, Int value, Cmp cmp = Cmp::Eq) { return {with, cmp, value}; }

  bool holds(const DivisorClass& v, const GramMatrix& G) const;
};

/// Every class with all coordinates in [-box, box] satisfying all predicates,
/// in lexicographic order.
std::vector<DivisorClass> brute_force_oracle(const GramMatrix& G, std::span<const Predicate> predicates, Int box);

/// Predicates equivalent to a constraint system.
std::vector<Predicate> predicates_for(const ConstraintSystem& sys);

/// CY3_ORACLE_BOX if set, otherwise `fallback`.
Int oracle_box_from_env(Int fallback = 30);

}  // namespace cy3::dioph
