#include "cy3/k3core.hpp"

namespace cy3::k3 {

using lattice::BasisTag;

GramMatrix SurfaceSpec::gram(BasisTag basis) const { return lattice::build_gram(n, d, a).in_basis(basis); }

bool SurfaceSpec::lattice_inequality() const { return exceeds_lattice_bound(m, d0, a); }

bool exceeds_lattice_bound(Int m, Int d0, Int a) {
  if (a < 1) throw DomainError("a must be positive");
  return mul(mul(3, a), d0) > sub(mul(m, mul(a, a)), 9);
}

Int delta_from_invariants(Int m, Int d0, Int a) {
  return abs_checked(add(mul(mul(2, a), sub(mul(3, d0), mul(m, a))), 18));
}

SurfaceSpec derive_invariants(Int n, Int d, Int a) {
  if (n < 4 || d < 1 || a < 1) throw DomainError("derive_invariants requires n >= 4, d >= 1, a >= 1");
  SurfaceSpec s;
  s.n = n;
  s.d = d;
  s.a = a;
  s.g = add(n, 1);
  s.b = (n - 4) / 3;
  s.m = sub(n, mul(3, s.b));
  s.d0 = sub(d, mul(s.b, a));
  s.delta = delta_from_invariants(s.m, s.d0, a);
  s.Lsq = mul(2, s.m);
  return s;
}

Int rr_chi(const DivisorClass& v, const GramMatrix& G) {
  Int sq = lattice::pair(v, v, G);
  if (sq % 2 != 0) throw ParityError("odd self-intersection " + std::to_string(sq) + " in an even lattice");
  return add(sq / 2, 2);
}

std::string to_string(Effectivity e) {
  switch (e) {
    case Effectivity::Effective: return "effective";
    case Effectivity::AntiEffective: return "anti-effective";
    case Effectivity::AmbiguousSign: return "ambiguous-sign";
    case Effectivity::NotDecidedByRR: return "not-decided";
  }
  return "?";
}

Effectivity rr_effectivity(const DivisorClass& v, const DivisorClass& ref, const GramMatrix& G) {
  Int sq = lattice::pair(v, v, G);
  if (sq % 2 != 0) throw ParityError("odd self-intersection in an even lattice");
  if (sq < -2) return Effectivity::NotDecidedByRR;
  if (v.is_zero()) return Effectivity::Effective;
  Int deg = lattice::pair(v, ref, G);
  if (deg > 0) return Effectivity::Effective;
  if (deg < 0) return Effectivity::AntiEffective;
  return Effectivity::AmbiguousSign;
}

bool is_clifford_witness(const GramMatrix& G, const DivisorClass& L, const DivisorClass& D, Int k) {
  const Int Lsq = lattice::pair(L, L, G);
  const Int LD = lattice::pair(L, D, G);
  const Int D2 = lattice::pair(D, D, G);
  if (D2 < 0 || LD != add(D2, k + 2) || mul(2, D2) > LD || LD > add(mul(2, k), 4)) return false;
  const bool equality = (mul(2, D2) == LD) || (LD == add(mul(2, k), 4));
  if (equality && !(L == 2 * D && Lsq == add(mul(4, k), 8))) return false;
  return mul(D2, Lsq) <= mul(LD, LD);
}

CliffordResult clifford_index(const GramMatrix& G, const DivisorClass& L, Int g, Int bound) {
  const Int Lsq = lattice::pair(L, L, G);
  if (Lsq != 2 * g - 2 || Lsq <= 0) throw DomainError("clifford_index: L^2 must equal 2g-2 > 0");
  if (bound < 0) throw DomainError("clifford_index: negative search bound");

  const Int general = (g - 1) / 2;
  const lattice::Vec3 lf = lattice::linear_form(L, G);
  CliffordResult out;
  out.bound = bound;

  for (Int k = 0; k < general; ++k) {
    // The conditions force 0 <= D^2 <= k + 2, hence k + 2 <= L.D <= 2k + 4;
    // L.D is checked first since it is linear.
    auto visit = [&](Int x, Int y, Int z) {
      const Int LD = add(add(mul(lf[0], x), mul(lf[1], y)), mul(lf[2], z));
      if (LD < k + 2 || LD > 2 * k + 4) return false;
      return is_clifford_witness(G, L, DivisorClass{x, y, z, L.basis}, k);
    };
    for (Int r = 0; r <= bound; ++r)
      for (Int x = -r; x <= r; ++x)
        for (Int y = -r; y <= r; ++y) {
          const bool face = (x == -r || x == r || y == -r || y == r);
          for (Int z = -r; z <= r; z += (face || r == 0) ? 1 : 2 * r) {
            if (visit(x, y, z)) {
              out.c = k;
              out.witness = DivisorClass{x, y, z, L.basis};
              return out;
            }
          }
        }
  }
  out.c = general;
  out.general = true;
  return out;
}

}  // namespace cy3::k3
