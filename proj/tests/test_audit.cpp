#include <doctest.h>

#include "cy3/audit.hpp"

using namespace cy3;
using namespace cy3::audit;
using scroll::ScrollType;

TEST_SUITE("audit") {
  TEST_CASE("regularity of the union") {
    CHECK(regularity_union({3, 2}) == 5);
    CHECK_THROWS_AS(regularity_union({3, 0}), DomainError);
    CHECK(curve_regularity(4, 4) == 2);
    CHECK(curve_regularity(8, 7) == 3);
    for (Int d = 1; d <= 20; ++d) CHECK(curve_regularity(d, d) == 2);
    CHECK_THROWS_AS(curve_regularity(3, 4), DomainError);
    CHECK(linear_spaces_regularity(2) == 2);
    CHECK(linear_spaces_regularity(1) == 1);
    for (Int d = 1; d <= 10; ++d)
      for (Int r = 1; r <= d; ++r)
        for (Int N = 6; N <= 12; ++N)
          CHECK(regularity_union({curve_regularity(d, r), linear_spaces_regularity(N - 5)}) == d - r + N - 3);
  }

  TEST_CASE("finiteness on the first two families") {
    const ScrollType p7({1, 1, 1, 1}), p8({2, 1, 1, 1});
    for (Int d = 1; d <= 4; ++d) CHECK(finiteness_check(p7, d, std::min<Int>(d, 3)));
    for (Int d = 1; d <= 3; ++d) CHECK(finiteness_check(p8, d, std::min<Int>(d, 3)));
    CHECK(finiteness_check(p7, 5, 4));  // d - r + N - 3 = 5
    CHECK_FALSE(finiteness_check(p7, 5, 3));
    CHECK_FALSE(finiteness_check(p8, 4, 3));
    CHECK(max_finite_degree(7) == 4);
    CHECK(max_finite_degree(8) == 3);
    CHECK(max_finite_degree(9) == 0);
    CHECK(max_finite_degree(10) == 0);
    CHECK_THROWS_AS(finiteness_check(ScrollType({2, 2, 1}), 3, 3), DomainError);
  }

  TEST_CASE("worst-case regularity is monotone") {
    for (Int d = 1; d < 30; ++d) CHECK(worst_case_curve_regularity(d) <= worst_case_curve_regularity(d + 1));
    // Rational normal curves alone (r = d) pass at every degree: the worst case
    // is the curve spanning only a P^3.
    for (Int d = 1; d <= 30; ++d) CHECK(finiteness_check(ScrollType({1, 1, 1, 1}), d, d));
  }

  TEST_CASE("incidence dimensions") {
    CHECK(fiber_dimension(4, 1, 7, 0) == 90);
    for (Int d = 1; d <= 25; ++d)
      for (Int a = 1; a <= 20; ++a)
        for (Int N = 7; N <= 26; ++N) {
          CHECK(fiber_dimension(d, a, N, 0) + scroll::dim_M(d, a, N) == 105);
          CHECK(fiber_dimension(d, a, N, 3) == fiber_dimension(d, a, N, 0) + 3);
        }
    CHECK(h0_union_4H(4, 1, 7) == 70 + 17 - 2);
    CHECK_THROWS_AS(fiber_dimension(-1, 1, 7, 0), DomainError);
  }

  TEST_CASE("Grassmannian bookkeeping") {
    CHECK(grass_dim_M(1, 1, 6) == 14);
    CHECK(grass_dim_M(3, 2, 5) == 24);
    for (Int d = 1; d <= 10; ++d) CHECK(grass_dim_M(d, 0, 4) == 5 * d + 1);
    CHECK(plucker_N(1, 3) == 5);
    CHECK(plucker_N(1, 6) == 20);
    CHECK(plucker_N(2, 5) == 19);
    CHECK_THROWS_AS(grass_dim_M(1, 4, 4), DomainError);
  }

  TEST_CASE("five Calabi-Yau families") {
    const auto fams = enumerate_cicy_grass();
    REQUIRE(fams.size() == 5);
    std::vector<Int> dims;
    for (const auto& f : fams) {
      Int sum = 0;
      for (Int x : f.degrees) sum += x;
      CHECK(sum == f.n + 1);
      CHECK(f.s == (f.k + 1) * (f.n - f.k) - 3);
      CHECK(static_cast<Int>(f.degrees.size()) == f.s);
      dims.push_back(f.dimG.value());
    }
    CHECK(dims == std::vector<Int>{135, 95, 109, 98, 84});
    CHECK(to_string(fams[3]) == "G(1,6) (1,1,1,1,1,1,1)");
    CHECK(fams[3].dimG_derived == 98);
    CHECK(fams[3].dimG_derived == 7 * 14);
    CHECK(fams[4].dimG_derived == 84);
    CHECK(fams[4].dimG_derived == 6 * 14);
    CHECK(fams[4].dimG_constant == 84);
    CHECK_FALSE(fams[0].dimG_derived.has_value());
    for (Int n = 8; n <= 12; ++n)
      for (Int k = 3; k <= 6; ++k) CHECK(enumerate_cicy_grass(n, k) == fams);
  }

  TEST_CASE("incidence thresholds") {
    const auto b = grass_incidence_bounds(1);
    REQUIRE(b.size() == 5);
    CHECK(b[0].first_exceed == 4);
    CHECK(b[1].first_exceed == 8);
    CHECK(b[2].first_exceed == 12);
    CHECK(b[3].first_exceed == 15);
    CHECK_FALSE(b[3].value.has_value());
    CHECK(b[4].first_equal == 4);
    CHECK(b[4].first_exceed == 5);
    // Recomputed, not stored: each threshold is the first d past dim G.
    for (const auto& x : b) {
      if (x.slope == 0) continue;
      CHECK(x.slope * x.first_exceed + x.intercept > x.dimG);
      if (x.first_exceed > 1) CHECK(x.slope * (x.first_exceed - 1) + x.intercept <= x.dimG);
    }
    CHECK(grass_incidence_bounds(15)[3].value == 99);
    CHECK(grass_incidence_bounds(4)[4].value == 84);
    CHECK_THROWS_AS(grass_incidence_bounds(0), DomainError);
  }

  TEST_CASE("complete intersections in projective space") {
    const auto& t = projective_ci_table();
    REQUIRE(t.size() == 5);
    for (const auto& ci : t) {
      Int sum = 0;
      for (Int x : ci.degrees) sum += x;
      // Calabi-Yau: degrees sum to N + 1, codimension N - 3.
      CHECK(sum == ci.N + 1);
      CHECK(static_cast<Int>(ci.degrees.size()) == ci.N - 3);
    }
    CHECK(t[0].max_degree == 9);
    CHECK(t[4].max_degree == 5);
  }
}
