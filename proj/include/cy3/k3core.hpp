// Numeric invariants of the K3 surface attached to (n, d, a), Riemann-Roch
// bookkeeping, the effectivity predicate and the Clifford-index search.
#pragma once

#include <optional>
#include <string>

#include "cy3/lattice.hpp"

namespace cy3::k3 {

using lattice::DivisorClass;
using lattice::GramMatrix;

struct SurfaceSpec {
  Int n = 0;
  Int d = 0;
  Int a = 0;
  Int g = 0;      // sectional genus of H: n + 1
  Int b = 0;      // floor((n-4)/3)
  Int m = 0;      // n - 3b, one of 4, 5, 6
  Int d0 = 0;     // Gamma.L = d - b a
  Int delta = 0;  // |disc(L, D, Gamma)|
  Int Lsq = 0;    // 2m

  GramMatrix gram(lattice::BasisTag basis = lattice::BasisTag::LDG) const;

  /// d0 > m a / 3 - 3 / a, by cross-multiplication.
  bool lattice_inequality() const;

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

SurfaceSpec derive_invariants(Int n, Int d, Int a);

/// |2a(3 d0 - m a) + 18|.
Int delta_from_invariants(Int m, Int d0, Int a);

/// 3 a d0 > m a^2 - 9, i.e. d0 > m a/3 - 3/a for a > 0.
bool exceeds_lattice_bound(Int m, Int d0, Int a);

/// v^2/2 + 2; throws ParityError on an odd self-intersection.
Int rr_chi(const DivisorClass& v, const GramMatrix& G);

enum class Effectivity { Effective, AntiEffective, AmbiguousSign, NotDecidedByRR };

std::string to_string(Effectivity e);

/// Riemann-Roch sign test against a nef reference class.  The zero class is
/// reported Effective (it is the trivial bundle).
Effectivity rr_effectivity(const DivisorClass& v, const DivisorClass& ref, const GramMatrix& G);

/// The numeric conditions of clifford_index for one candidate D and one k.
bool is_clifford_witness(const GramMatrix& G, const DivisorClass& L, const DivisorClass& D, Int k);

struct CliffordResult {
  Int c = 0;
  std::optional<DivisorClass> witness;
  Int bound = 0;         // coordinate box searched
  bool general = false;  // no witness below floor((g-1)/2) inside the box
};

/// Smallest k < floor((g-1)/2) with a class D in the box satisfying
///   2 D^2 <= L.D = D^2 + k + 2 <= 2k + 4,
/// equality in either inequality only when L = 2D and L^2 = 4k + 8,
/// D^2 >= 0 (D moves in a pencil) and the Hodge bound D^2 L^2 <= (L.D)^2.
/// Candidates are visited in shells of growing max-norm, so the reported
/// witness is a smallest one.  Absence of a witness is only a statement about
/// the box.
CliffordResult clifford_index(const GramMatrix& G, const DivisorClass& L, Int g, Int bound = 50);

}  // namespace cy3::k3
