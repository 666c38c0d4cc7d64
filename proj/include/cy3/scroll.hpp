// Rational normal scrolls: types, section counts, the numerical Chow ring of a
// 4-fold scroll, and the dimension counts used for the incidence argument.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "cy3/arith.hpp"

namespace cy3::scroll {

struct ScrollType {
  std::vector<Int> e;  // non-increasing, entries >= 0

  ScrollType() = default;
  explicit ScrollType(std::vector<Int> e);  // validates

  Int dim() const { return static_cast<Int>(e.size()); }
  Int f() const;  // degree, sum of e_i
  Int N() const { return f() + dim() - 1; }

  friend bool operator==(const ScrollType&, const ScrollType&) = default;
};

std::string to_string(const ScrollType& t);

/// Divisor class aH + bF.
struct ScrollClass {
  Int aH = 0;
  Int bF = 0;

  friend bool operator==(const ScrollClass&, const ScrollClass&) = default;
};

inline ScrollClass hyperplane() { return {1, 0}; }
inline ScrollClass fiber() { return {0, 1}; }

/// Scroll swept by the pencil of a g^1_{c+2} on a curve of genus g.
ScrollType scroll_type_from_pencil(Int g, Int c);

bool is_maximally_balanced(const ScrollType& t);

/// h^0(O(aH + bF)) = sum over |i| = a of max(0, e.i + b + 1).
Int h0_scroll(const ScrollType& t, const ScrollClass& cls);

/// Degree in (t,u) of the coefficient p_i in the rolling-factors form, c = 5, 6, 7.
Int rolling_degree(Int c, const std::array<Int, 3>& i);

/// Intersection number of four classes with H^4 = f, H^3 F = 1, F^2 = 0.
Int chow_intersect(const ScrollType& t, const std::array<ScrollClass, 4>& classes);

/// The five 4-fold types of the smoothness statement, in the order
/// (s,s,s,s), (s+1,s,s,s), (s+1,s+1,s,s), (s+1,s+1,s+1,s), (s+2,s+1,s+1,s).
std::vector<ScrollType> theorem_scroll_families(Int s);

/// g = e1 + e2 + e3 + 2 for a 4-fold type: span of the 3-dimensional subscroll.
Int subscroll_genus(const ScrollType& t);

/// 4d + a(5 - N) + 1.
Int dim_M(Int d, Int a, Int N);

/// The Step III count (3H - (g-4)F)^2 (H - e4 F)^2 on a 4-fold type, and the
/// closed form 7g - 19 - 2e4 it is compared against.
Int step3_intersection(const ScrollType& t);
Int step3_claimed(const ScrollType& t);

}  // namespace cy3::scroll
