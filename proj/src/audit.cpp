#include "cy3/audit.hpp"

#include <algorithm>
#include <map>

namespace cy3::audit {

Int regularity_union(const std::vector<Int>& parts) {
  Int total = 0;
  for (Int m : parts) {
    if (m < 1) throw DomainError("regularities must be positive");
    total = add(total, m);
  }
  return total;
}

Int curve_regularity(Int d, Int r) {
  if (d < 1 || r < 1 || r > d) throw DomainError("curve_regularity needs 1 <= r <= d");
  return d + 2 - r;
}

Int linear_spaces_regularity(Int s) {
  if (s < 1) throw DomainError("linear_spaces_regularity needs s >= 1");
  return s;
}

bool finiteness_check(const scroll::ScrollType& t, Int d, Int r) {
  if (t.dim() != 4) throw DomainError("finiteness_check needs a 4-dimensional scroll");
  const Int N = t.N();
  if (N < 6) throw DomainError("finiteness_check needs N >= 6");
  return regularity_union({curve_regularity(d, r), linear_spaces_regularity(N - 5)}) <= 5;
}

Int worst_case_curve_regularity(Int d) { return curve_regularity(d, std::min<Int>(d, 3)); }

Int max_finite_degree(Int N) {
  if (N < 6) throw DomainError("max_finite_degree needs N >= 6");
  // The worst case grows with d once d >= 3, so the first failure ends the range.
  Int d = 0;
  while (worst_case_curve_regularity(d + 1) + (N - 5) <= 5) ++d;
  return d;
}

Int fiber_dimension(Int d, Int a, Int N, Int h1) {
  if (d < 0 || a < 0 || N < 0 || h1 < 0) throw DomainError("fiber_dimension needs non-negative inputs");
  return sub(add(h1, 105), add(add(mul(4, d), 1), mul(5 - N, a)));
}

Int h0_union_4H(Int d, Int a, Int N) {
  return sub(add(add(mul(35, N - 5), mul(4, d)), 1), mul(N - 5, a));
}

Int grass_dim_M(Int d, Int k, Int n) {
  if (k < 0 || k >= n || d < 1) throw DomainError("grass_dim_M needs 0 <= k < n, d >= 1");
  return add(mul(n + 1, d), mul(k + 1, n - k)) - 3;
}

Int plucker_N(Int k, Int n) {
  if (k < 0 || k >= n) throw DomainError("plucker_N needs 0 <= k < n");
  Int c = 1;  // binomial(n+1, k+1), built incrementally so each step is exact
  for (Int i = 1; i <= k + 1; ++i) c = mul(c, n + 1 - (k + 1) + i) / i;
  return c - 1;
}

std::string to_string(const GrassFamily& f) {
  std::string out = "G(" + std::to_string(f.k) + "," + std::to_string(f.n) + ") (";
  for (std::size_t i = 0; i < f.degrees.size(); ++i) out += (i ? "," : "") + std::to_string(f.degrees[i]);
  return out + ")";
}

namespace {

// Parameter-space dimensions of the families with some a_i >= 2.
const std::map<std::pair<std::pair<Int, Int>, std::vector<Int>>, Int>& dimG_constants() {
  static const std::map<std::pair<std::pair<Int, Int>, std::vector<Int>>, Int> table{
      {{{1, 4}, {1, 1, 3}}, 135},
      {{{1, 4}, {1, 2, 2}}, 95},
      {{{1, 5}, {1, 1, 1, 1, 2}}, 109},
      {{{1, 6}, {1, 1, 1, 1, 1, 1, 1}}, 98},
      {{{2, 5}, {1, 1, 1, 1, 1, 1}}, 84},
  };
  return table;
}

void partitions(Int parts, Int total, Int min_part, std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (Int p = min_part; p * parts <= total; ++p) {
    cur.push_back(p);
    partitions(parts - 1, total - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<GrassFamily> enumerate_cicy_grass(Int n_max, Int k_max) {
  std::vector<GrassFamily> out;
  for (Int k = 1; k <= k_max; ++k)
    for (Int n = 2 * k + 1; n <= n_max; ++n) {
      const Int dim_grass = (k + 1) * (n - k);
      const Int N = plucker_N(k, n);
      if (N - dim_grass == 1) continue;  // the Grassmannian is itself a hypersurface
      const Int s = dim_grass - 3;
      if (s < 1 || s > n + 1) continue;
      std::vector<std::vector<Int>> parts;
      std::vector<Int> cur;
      partitions(s, n + 1, 1, cur, parts);
      for (auto& degs : parts) {
        GrassFamily f;
        f.k = k;
        f.n = n;
        f.degrees = degs;
        f.N = N;
        f.s = s;
        if (std::all_of(degs.begin(), degs.end(), [](Int x) { return x == 1; })) {
          // Codimension-s linear subspaces of P^N form a Grassmannian of dimension (N-s+1)s.
          f.dimG_derived = mul(N - s + 1, s);
        }
        auto it = dimG_constants().find({{k, n}, degs});
        if (it != dimG_constants().end()) f.dimG_constant = it->second;
        f.dimG = f.dimG_derived ? f.dimG_derived : f.dimG_constant;
        out.push_back(std::move(f));
      }
    }
  return out;
}

std::vector<IncidenceBound> grass_incidence_bounds(Int d) {
  if (d < 1) throw DomainError("grass_incidence_bounds needs d >= 1");
  auto linear = [d](std::string name, std::string grass, Int slope, Int intercept, Int dimG) {
    IncidenceBound b{std::move(name), std::move(grass), slope, intercept, dimG, add(mul(slope, d), intercept), 0, 0};
    // First d >= 1 with slope*d + intercept >= dimG, resp. > dimG.
    auto first_at_least = [&](Int target) {
      const Int need = target - intercept;
      return std::max<Int>(1, need <= 0 ? 1 : (need + slope - 1) / slope);
    };
    b.first_equal = first_at_least(dimG);
    b.first_exceed = first_at_least(dimG + 1);
    return b;
  };
  std::vector<IncidenceBound> out{
      linear("P3-span curves in a P5 of lines through a point", "G(1,6)", 4, 84, 98),
      linear("ruled surface spanning a P3", "G(1,6)", 4, 69, 98),
      linear("ruled surface spanning a P4", "G(1,6)", 5, 41, 98),
  };
  // Surfaces spanning P5: only the statement "at least 99 for d >= 15" is available.
  IncidenceBound p5{"ruled surface spanning a P5", "G(1,6)", 0, 99, 98, std::nullopt, 15, 15};
  if (d >= 15) p5.value = 99;
  out.push_back(p5);
  out.push_back(linear("ruled threefold spanning a P3", "G(2,5)", 4, 68, 84));
  return out;
}

const std::vector<ProjectiveCI>& projective_ci_table() {
  static const std::vector<ProjectiveCI> table{
      {{5}, 4, 9},
      {{2, 4}, 5, 7},
      {{3, 3}, 5, 7},
      {{2, 2, 3}, 6, 6},
      {{2, 2, 2, 2}, 7, 5},
  };
  return table;
}

}  // namespace cy3::audit
