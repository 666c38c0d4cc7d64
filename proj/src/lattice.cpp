#include "cy3/lattice.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace cy3::lattice {

namespace {

// Minimal exact rational used by the elimination; denominator kept positive
// and the fraction reduced after every operation.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n) : num(n) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = neg(num);
      den = neg(den);
    }
    Int g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  bool is_zero() const { return num == 0; }
  int sign() const { return (num > 0) - (num < 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Int g = std::gcd(a.den, b.den);
    Int l = mul(a.den / g, b.den);
    return {add(mul(a.num, l / a.den), mul(b.num, l / b.den)), l};
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(neg(b.num), b.den); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = std::gcd(a.num, b.den);
    Int g2 = std::gcd(b.num, a.den);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return {mul(a.num / g1, b.num / g2), mul(a.den / g2, b.den / g1)};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw DomainError("rational division by zero");
    return a * Rational(b.den, b.num);
  }
};

using RMat = std::array<std::array<Rational, 3>, 3>;

void swap_index(RMat& a, int i, int j) {
  std::swap(a[i], a[j]);
  for (auto& row : a) std::swap(row[i], row[j]);
}

// Congruence e_k <- e_k + e_j.
void add_index(RMat& a, int k, int j) {
  for (int c = 0; c < 3; ++c) a[k][c] = a[k][c] + a[j][c];
  for (int r = 0; r < 3; ++r) a[r][k] = a[r][k] + a[r][j];
}

void check_symmetric(const Mat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (m[i][j] != m[j][i]) throw DomainError("Gram matrix is not symmetric");
}

}  // namespace

std::string to_string(BasisTag tag) { return tag == BasisTag::HDG ? "HDG" : "LDG"; }

Int basis_shift(Int n) {
  if (n < 4) throw DomainError("basis change needs n >= 4");
  return (n - 4) / 3;
}

DivisorClass DivisorClass::operator-() const { return {neg(x()), neg(y()), neg(z()), basis}; }

DivisorClass operator+(const DivisorClass& u, const DivisorClass& v) {
  if (u.basis != v.basis) throw BasisMismatch("adding classes in different bases");
  return {add(u.x(), v.x()), add(u.y(), v.y()), add(u.z(), v.z()), u.basis};
}

DivisorClass operator-(const DivisorClass& u, const DivisorClass& v) { return u + (-v); }

DivisorClass operator*(Int k, const DivisorClass& v) {
  return {mul(k, v.x()), mul(k, v.y()), mul(k, v.z()), v.basis};
}

std::string to_string(const DivisorClass& v) {
  std::ostringstream os;
  os << "(" << v.x() << "," << v.y() << "," << v.z() << ")";
  return os.str();
}

GramMatrix::GramMatrix(const Mat3& entries, BasisTag basis, Int n)
    : entries_(entries), basis_(basis), n_(n) {
  check_symmetric(entries_);
}

GramMatrix GramMatrix::in_basis(BasisTag target) const {
  if (target == basis_) return *this;
  // Columns of P are the new basis vectors written in the old basis.
  Int b = basis_shift(n_);
  Int s = basis_ == BasisTag::HDG ? neg(b) : b;  // L = H - bD,  H = L + bD
  Mat3 p{{{1, 0, 0}, {s, 1, 0}, {0, 0, 1}}};
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int acc = 0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) acc = add(acc, mul(mul(p[k][i], entries_[k][l]), p[l][j]));
      out[i][j] = acc;
    }
  return {out, target, n_};
}

GramMatrix build_gram(Int n, Int d, Int a) {
  if (n < 4 || d < 1 || a < 1) throw DomainError("build_gram requires n >= 4, d >= 1, a >= 1");
  return {Mat3{{{mul(2, n), 3, d}, {3, 0, a}, {d, a, -2}}}, BasisTag::HDG, n};
}

GramMatrix build_gram_ldg(Int m, Int d0, Int a) {
  if (m < 4 || m > 6) throw DomainError("m must be 4, 5 or 6");
  if (a < 1) throw DomainError("a must be positive");
  // With n = m the shift is zero, so H and L coincide.
  return {Mat3{{{mul(2, m), 3, d0}, {3, 0, a}, {d0, a, -2}}}, BasisTag::LDG, m};
}

Vec3 linear_form(const DivisorClass& u, const GramMatrix& G) {
  if (u.basis != G.basis()) throw BasisMismatch("class and Gram matrix are in different bases");
  Vec3 r{};
  for (int j = 0; j < 3; ++j) {
    Int acc = 0;
    for (int i = 0; i < 3; ++i) acc = add(acc, mul(u.coords[i], G(i, j)));
    r[j] = acc;
  }
  return r;
}

Int pair(const DivisorClass& u, const DivisorClass& v, const GramMatrix& G) {
  if (u.basis != v.basis) throw BasisMismatch("pairing classes in different bases");
  Vec3 r = linear_form(u, G);
  Int acc = 0;
  for (int j = 0; j < 3; ++j) acc = add(acc, mul(r[j], v.coords[j]));
  return acc;
}

Signature signature(const Mat3& m) {
  check_symmetric(m);
  RMat a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = Rational(m[i][j]);

  Signature sig;
  for (int k = 0; k < 3; ++k) {
    if (a[k][k].is_zero()) {
      int j = k + 1;
      while (j < 3 && a[j][j].is_zero()) ++j;
      if (j < 3) {
        swap_index(a, k, j);
      } else {
        j = k + 1;
        while (j < 3 && a[k][j].is_zero()) ++j;
        if (j == 3) {
          ++sig.zero;  // the whole remaining row vanishes
          continue;
        }
        add_index(a, k, j);  // diagonal becomes 2*a[k][j] != 0
      }
    }
    const Rational p = a[k][k];
    (p.sign() > 0 ? sig.pos : sig.neg)++;
    for (int i = k + 1; i < 3; ++i) {
      const Rational f = a[i][k] / p;
      for (int j = k; j < 3; ++j) a[i][j] = a[i][j] - f * a[k][j];
    }
    for (int i = k + 1; i < 3; ++i) a[k][i] = a[i][k] = Rational(0);
  }
  return sig;
}

Signature signature(const GramMatrix& G) { return signature(G.entries()); }

Int det3(const Mat3& m) {
  Int t0 = mul(m[0][0], sub(mul(m[1][1], m[2][2]), mul(m[1][2], m[2][1])));
  Int t1 = mul(m[0][1], sub(mul(m[1][0], m[2][2]), mul(m[1][2], m[2][0])));
  Int t2 = mul(m[0][2], sub(mul(m[1][0], m[2][1]), mul(m[1][1], m[2][0])));
  return add(sub(t0, t1), t2);
}

Int disc(const DivisorClass& v1, const DivisorClass& v2, const DivisorClass& v3,
         const GramMatrix& G) {
  const std::array<const DivisorClass*, 3> vs{&v1, &v2, &v3};
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = pair(*vs[i], *vs[j], G);
  return det3(m);
}

DivisorClass change_basis(const DivisorClass& v, Int n) {
  Int b = basis_shift(n);
  // x L + y D = x H + (y - b x) D.
  if (v.basis == BasisTag::LDG) return {v.x(), sub(v.y(), mul(b, v.x())), v.z(), BasisTag::HDG};
  return {v.x(), add(v.y(), mul(b, v.x())), v.z(), BasisTag::LDG};
}

DivisorClass to_basis(const DivisorClass& v, BasisTag target, Int n) {
  return v.basis == target ? v : change_basis(v, n);
}

}  // namespace cy3::lattice
