// Reference implementations for the tests.  None of these call into the
// library's solver or closed forms; they work from the raw intersection numbers.
#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using I = std::int64_t;
__extension__ typedef __int128 I128;
using M3 = std::array<std::array<I, 3>, 3>;
using V3 = std::array<I, 3>;

// [[2n,3,d],[3,0,a],[d,a,-2]]; with n in {4,5,6} this is also the form in the
// basis (L, D, Gamma) for invariants (m, d0, a).
inline M3 gram(I n, I d, I a) { return {{{2 * n, 3, d}, {3, 0, a}, {d, a, -2}}}; }

inline I form(const M3& G, const V3& u, const V3& v) {
  I s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += u[i] * G[i][j] * v[j];
  return s;
}

inline I128 det(const M3& m) {
  auto e = [&](int i, int j) { return static_cast<I128>(m[i][j]); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

struct Inertia {
  int pos = 0, neg = 0, zero = 0;
};

// Characteristic polynomial x^3 - c1 x^2 + c2 x - c3 of a symmetric matrix has
// only real roots, so Descartes' rule of signs counts them exactly.
inline Inertia inertia(const M3& m) {
  const I128 c1 = static_cast<I128>(m[0][0]) + m[1][1] + m[2][2];
  I128 c2 = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) c2 += static_cast<I128>(m[i][i]) * m[j][j] - static_cast<I128>(m[i][j]) * m[j][i];
  const I128 c3 = det(m);
  auto changes = [](std::vector<I128> coeffs) {
    int n = 0, last = 0;
    for (I128 c : coeffs) {
      const int s = c > 0 ? 1 : c < 0 ? -1 : 0;
      if (s == 0) continue;
      if (last != 0 && s != last) ++n;
      last = s;
    }
    return n;
  };
  Inertia r;
  r.zero = c3 != 0 ? 0 : c2 != 0 ? 1 : c1 != 0 ? 2 : 3;
  // Drop the factor x^zero before counting.
  std::vector<I128> p{1, -c1, c2, -c3}, q{-1, -c1, -c2, -c3};  // p(x), p(-x) up to sign
  p.resize(4 - r.zero);
  q.resize(4 - r.zero);
  r.pos = changes(p);
  r.neg = changes(q);
  return r;
}

// All v in [-box, box]^3 with v^2 = self, v.L = el, v.D = ed, where L = e1 and
// D = e2 in the form G.  The x coordinate is read off v.L by division.
inline std::set<V3> solutions(const M3& G, I self, I el, I ed, I box) {
  std::set<V3> out;
  for (I y = -box; y <= box; ++y)
    for (I z = -box; z <= box; ++z) {
      const I rest = el - G[0][1] * y - G[0][2] * z;
      if (rest % G[0][0] != 0) continue;
      const V3 v{rest / G[0][0], y, z};
      if (v[0] < -box || v[0] > box) continue;
      if (form(G, v, {0, 1, 0}) != ed || form(G, v, v) != self) continue;
      out.insert(v);
    }
  return out;
}

// Some class with E^2 = -2, E.L = 0, |E.D| <= 1, or E^2 = 0, E.L in {1,2},
// E.D in {0,1}, inside the box.
inline bool nakai_obstructed(I m, I d0, I a, I box = 20) {
  const M3 G = gram(m, d0, a);
  for (I ed = -1; ed <= 1; ++ed)
    if (!solutions(G, -2, 0, ed, box).empty()) return true;
  for (I el = 1; el <= 2; ++el)
    for (I ed = 0; ed <= 1; ++ed)
      if (!solutions(G, 0, el, ed, box).empty()) return true;
  return false;
}

// h^0(O(aH + bF)) on the scroll of type e by listing the monomials
// x^i s^p t^q with |i| = a and p + q = e.i + b.
inline I monomial_count(const std::vector<I>& e, I a, I b) {
  I count = 0;
  std::vector<I> idx(e.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, I left) -> void {
    if (pos + 1 == e.size()) {
      idx[pos] = left;
      I deg = b;
      for (std::size_t k = 0; k < e.size(); ++k) deg += e[k] * idx[k];
      for (I p = 0; p <= deg; ++p) ++count;  // q = deg - p
      return;
    }
    for (I i = 0; i <= left; ++i) {
      idx[pos] = i;
      self(self, pos + 1, left - i);
    }
  };
  rec(rec, 0, a);
  return count;
}

// Riemann-Roch on a K3: v^2 >= -2 and v.L > 0 for an ample L forces h^0(v) > 0.
inline bool rr_effective(const M3& G, const V3& v) {
  return form(G, v, v) >= -2 && form(G, v, {1, 0, 0}) > 0;
}

}  // namespace oracle
