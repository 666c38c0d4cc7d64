// Rank-3 integer bilinear forms: the Picard lattice pairing in the bases
// (H,D,Gamma) and (L,D,Gamma), where L = H - floor((n-4)/3) D.
#pragma once

#include <array>
#include <compare>
#include <string>

#include "cy3/arith.hpp"

namespace cy3::lattice {

using Mat3 = std::array<std::array<Int, 3>, 3>;
using Vec3 = std::array<Int, 3>;

enum class BasisTag { HDG, LDG };

std::string to_string(BasisTag tag);

/// Number of D's subtracted from H to reach L.
Int basis_shift(Int n);

struct DivisorClass {
  Vec3 coords{};
  BasisTag basis = BasisTag::LDG;

  DivisorClass() = default;
  DivisorClass(Int x, Int y, Int z, BasisTag tag = BasisTag::LDG) : coords{x, y, z}, basis(tag) {}

  Int x() const { return coords[0]; }
  Int y() const { return coords[1]; }
  Int z() const { return coords[2]; }

  bool is_zero() const { return coords[0] == 0 && coords[1] == 0 && coords[2] == 0; }

  DivisorClass operator-() const;
  friend DivisorClass operator+(const DivisorClass& u, const DivisorClass& v);
  friend DivisorClass operator-(const DivisorClass& u, const DivisorClass& v);
  friend DivisorClass operator*(Int k, const DivisorClass& v);

  // Lexicographic on (x,y,z); only meaningful within one basis.
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend std::strong_ordering operator<=>(const DivisorClass& u, const DivisorClass& v) {
    if (auto c = u.basis <=> v.basis; c != 0) return c;
    return u.coords <=> v.coords;
  }
};

std::string to_string(const DivisorClass& v);

/// Symmetric 3x3 integer matrix of intersection numbers, tagged with the basis
/// it is written in.  `n` is the degree parameter that fixes the H <-> L change
/// of basis; it is 0 for forms that are not attached to a surface.
class GramMatrix {
 public:
  GramMatrix(const Mat3& entries, BasisTag basis, Int n = 0);

  const Mat3& entries() const { return entries_; }
  Int operator()(int i, int j) const { return entries_[i][j]; }
  BasisTag basis() const { return basis_; }
  Int n() const { return n_; }

  /// The same form written in the other (or the same) basis.
  GramMatrix in_basis(BasisTag target) const;

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  Mat3 entries_;
  BasisTag basis_;
  Int n_;
};

/// [[2n,3,d],[3,0,a],[d,a,-2]] in basis HDG.
GramMatrix build_gram(Int n, Int d, Int a);

/// The form for invariants (m, d0, a) written directly in basis LDG.
GramMatrix build_gram_ldg(Int m, Int d0, Int a);

/// u^T G v; all three must share a basis.
Int pair(const DivisorClass& u, const DivisorClass& v, const GramMatrix& G);

/// Row vector G*u, i.e. the linear form v -> pair(u, v).
Vec3 linear_form(const DivisorClass& u, const GramMatrix& G);

struct Signature {
  int pos = 0;
  int neg = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact inertia by symmetric elimination over the rationals.
Signature signature(const Mat3& m);
Signature signature(const GramMatrix& G);

Int det3(const Mat3& m);

/// Determinant of the matrix of pairwise pairings of v1, v2, v3.
Int disc(const DivisorClass& v1, const DivisorClass& v2, const DivisorClass& v3,
         const GramMatrix& G);

/// Coordinates of v in the other basis; n fixes the shift floor((n-4)/3).
DivisorClass change_basis(const DivisorClass& v, Int n);

/// Coordinates of v in `target` (identity when already there).
DivisorClass to_basis(const DivisorClass& v, BasisTag target, Int n);

// Named basis vectors.
inline DivisorClass L_class() { return {1, 0, 0, BasisTag::LDG}; }
inline DivisorClass H_class() { return {1, 0, 0, BasisTag::HDG}; }
inline DivisorClass D_class(BasisTag t = BasisTag::LDG) { return {0, 1, 0, t}; }
inline DivisorClass Gamma_class(BasisTag t = BasisTag::LDG) { return {0, 0, 1, t}; }

}  // namespace cy3::lattice
