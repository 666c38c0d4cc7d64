#include "cy3/scroll.hpp"

#include <algorithm>
#include <functional>

namespace cy3::scroll {

ScrollType::ScrollType(std::vector<Int> entries) : e(std::move(entries)) {
  if (e.empty()) throw DomainError("scroll type needs at least one entry");
  if (!std::is_sorted(e.begin(), e.end(), std::greater<>())) throw DomainError("scroll type must be non-increasing");
  if (e.back() < 0) throw DomainError("scroll type entries must be non-negative");
  if (f() < 2) throw DomainError("scroll degree must be at least 2");
}

Int ScrollType::f() const {
  Int s = 0;
  for (Int x : e) s = add(s, x);
  return s;
}

std::string to_string(const ScrollType& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t.e[i]);
  }
  return out + ")";
}

ScrollType scroll_type_from_pencil(Int g, Int c) {
  if (g < 5 || c < 1) throw DomainError("scroll_type_from_pencil needs g >= 5, c >= 1");
  const Int k = c + 2;  // degree of the pencil
  const Int r = g / k;
  std::vector<Int> ds(static_cast<std::size_t>(r), k);
  const Int last = g + 1 - k * r;
  if (last < 1 || last > k) throw DomainError("inconsistent pencil data");
  ds.push_back(last);

  std::vector<Int> e;
  for (Int i = 1; i <= k; ++i) {
    const auto cnt = std::count_if(ds.begin(), ds.end(), [i](Int dj) { return dj >= i; });
    e.push_back(static_cast<Int>(cnt) - 1);
  }
  return ScrollType(std::move(e));
}

bool is_maximally_balanced(const ScrollType& t) { return t.e.front() - t.e.back() <= 1; }

Int h0_scroll(const ScrollType& t, const ScrollClass& cls) {
  if (cls.aH < 0) throw DomainError("h0_scroll needs a non-negative H coefficient");
  const std::size_t n = t.e.size();
  Int total = 0;
  // Walk all multi-indices i with |i| = aH; `weight` accumulates e.i.
  std::function<void(std::size_t, Int, Int)> walk = [&](std::size_t pos, Int left, Int weight) {
    if (pos + 1 == n) {
      const Int w = add(weight, mul(t.e[pos], left));
      total = add(total, std::max<Int>(0, add(w, cls.bF + 1)));
      return;
    }
    for (Int k = 0; k <= left; ++k) walk(pos + 1, left - k, add(weight, mul(t.e[pos], k)));
  };
  walk(0, cls.aH, 0);
  return total;
}

Int rolling_degree(Int c, const std::array<Int, 3>& i) {
  if (i[0] < 0 || i[1] < 0 || i[2] < 0 || i[0] + i[1] + i[2] != 3)
    throw DomainError("rolling_degree needs a multi-index of weight 3");
  switch (c) {
    case 5: return 2;
    case 6: return 2 * i[0] + i[1] + i[2] - 2;
    case 7: return 2 * i[0] + 2 * i[1] + i[2] - 3;
    default: throw DomainError("rolling_degree needs c in {5,6,7}");
  }
}

Int chow_intersect(const ScrollType& t, const std::array<ScrollClass, 4>& classes) {
  if (t.dim() != 4) throw DomainError("chow_intersect needs a 4-dimensional scroll");
  // Only monomials with at most one F survive.
  Int all_h = 1;
  for (const auto& c : classes) all_h = mul(all_h, c.aH);
  Int one_f = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    Int term = classes[k].bF;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != k) term = mul(term, classes[j].aH);
    one_f = add(one_f, term);
  }
  return add(mul(t.f(), all_h), one_f);
}

std::vector<ScrollType> theorem_scroll_families(Int s) {
  if (s < 1) throw DomainError("theorem_scroll_families needs s >= 1");
  return {
      ScrollType({s, s, s, s}),
      ScrollType({s + 1, s, s, s}),
      ScrollType({s + 1, s + 1, s, s}),
      ScrollType({s + 1, s + 1, s + 1, s}),
      ScrollType({s + 2, s + 1, s + 1, s}),
  };
}

Int subscroll_genus(const ScrollType& t) {
  if (t.dim() != 4) throw DomainError("subscroll_genus needs a 4-dimensional scroll");
  return t.e[0] + t.e[1] + t.e[2] + 2;
}

Int dim_M(Int d, Int a, Int N) {
  if (d < 1 || a < 1 || N < 7) throw DomainError("dim_M needs d, a >= 1 and N >= 7");
  return add(add(mul(4, d), mul(a, 5 - N)), 1);
}

Int step3_intersection(const ScrollType& t) {
  const Int g = subscroll_genus(t);
  const ScrollClass s3{3, -(g - 4)};
  const ScrollClass h4{1, -t.e[3]};
  return chow_intersect(t, {s3, s3, h4, h4});
}

Int step3_claimed(const ScrollType& t) { return 7 * subscroll_genus(t) - 19 - 2 * t.e[3]; }

}  // namespace cy3::scroll
