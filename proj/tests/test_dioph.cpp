#include <doctest.h>

#include <cstdlib>
#include <set>

#include "cy3/dioph.hpp"
#include "cy3/help2.hpp"
#include "cy3/k3core.hpp"
#include "oracles.hpp"

using namespace cy3;
using namespace cy3::dioph;
using lattice::BasisTag;

namespace {

const DivisorClass L = lattice::L_class();
const DivisorClass D = lattice::D_class();

SolveResult solve_LD(Int m, Int d0, Int a, Int self, Int el, Int ed) {
  return solve({lattice::build_gram_ldg(m, d0, a), self, {{L, el}, {D, ed}}});
}

std::set<oracle::V3> coords(const std::vector<DivisorClass>& cs) {
  std::set<oracle::V3> out;
  for (const auto& c : cs) out.insert(c.coords);
  return out;
}

}  // namespace

TEST_SUITE("dioph") {
  TEST_CASE("paper systems") {
    CHECK(solve_LD(4, 2, 2, -2, 0, 1).classes == std::vector<DivisorClass>{{1, -2, -1}});
    CHECK(solve_LD(6, 3, 2, -2, 0, 1).classes == std::vector<DivisorClass>{{1, -3, -1}});
    CHECK(solve_LD(5, 6, 4, 0, 2, 1).classes == std::vector<DivisorClass>{{-1, 2, 1}});
    CHECK(solve_LD(4, 9, 7, 0, 2, 1).classes == std::vector<DivisorClass>{{-2, 3, 1}});
    const auto r = solve_LD(4, 2, 2, -2, 0, 1);
    CHECK(r.mode == SolveMode::Analytic);
    CHECK(r.exhaustive);
    CHECK_FALSE(r.infinite_family);
    CHECK(r.max_abs_coordinate() == 2);
  }

  TEST_CASE("gamma in the (9,7) analysis") {
    const auto G = k3::derive_invariants(7, 16, 7).gram();
    const DivisorClass B = 3 * L - 4 * D;
    const std::vector<Predicate> preds{Predicate::self_intersection(-2), Predicate::pairing(L, 1),
                                       Predicate::pairing(D, 1), Predicate::pairing(B, -1)};
    const auto found = brute_force_oracle(G, preds, 10);
    CHECK(std::find(found.begin(), found.end(), DivisorClass{5, -7, -2}) != found.end());
  }

  TEST_CASE("oracle counting and ordering") {
    const auto G = lattice::build_gram_ldg(4, 1, 1);
    const auto all = brute_force_oracle(G, {}, 1);
    CHECK(all.size() == 27);
    CHECK(std::is_sorted(all.begin(), all.end()));
    const std::vector<Predicate> le{Predicate::pairing(L, 0, Cmp::Le), Predicate::pairing(L, 0, Cmp::Ge)};
    for (const auto& v : brute_force_oracle(G, le, 3)) CHECK(lattice::pair(v, L, G) == 0);
  }

  TEST_CASE("solver equals the box scan and the independent oracle on the grid") {
    // Every system behind the ampleness argument, on a slice of the regression grid.
    for (Int m = 4; m <= 6; ++m)
      for (Int d0 = 1; d0 <= 30; ++d0)
        for (Int a = 1; a <= 20; ++a) {
          if (!k3::exceeds_lattice_bound(m, d0, a)) continue;
          const auto G = lattice::build_gram_ldg(m, d0, a);
          const auto raw = oracle::gram(m, d0, a);
          const std::array<std::array<Int, 3>, 8> systems{{{-2, 0, -1}, {-2, 0, 0}, {-2, 0, 1}, {0, 1, 0},
                                                           {0, 1, 1}, {0, 2, 0}, {0, 2, 1}, {-2, 1, 1}}};
          for (const auto& [self, el, ed] : systems) {
            const ConstraintSystem sys{G, self, {{L, el}, {D, ed}}};
            const auto r = solve(sys);
            REQUIRE(r.mode == SolveMode::Analytic);
            for (const auto& v : r.classes) {
              REQUIRE(lattice::pair(v, v, G) == self);
              REQUIRE(lattice::pair(v, L, G) == el);
              REQUIRE(lattice::pair(v, D, G) == ed);
            }
            if (r.infinite_family) continue;
            const Int box = std::max<Int>(12, r.max_abs_coordinate());
            REQUIRE(coords(r.classes) == oracle::solutions(raw, self, el, ed, box));
            if (d0 <= 10 && a <= 6) {
              const auto preds = predicates_for(sys);
              REQUIRE(brute_force_oracle(G, preds, box) == r.classes);
            }
          }
        }
  }

  TEST_CASE("dependent constraints fall back to a flagged box search") {
    const auto G = lattice::build_gram_ldg(5, 3, 2);
    const ConstraintSystem sys{G, -2, {{L, 0}, {2 * L, 0}}};
    const auto r = solve(sys, 6);
    CHECK(r.mode == SolveMode::BoundedSearch);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.box == 6);
    CHECK(r.classes == brute_force_oracle(G, predicates_for(sys), 6));
    const auto none = solve({G, 0, {}}, 2);
    CHECK(none.mode == SolveMode::BoundedSearch);
    CHECK(none.classes == brute_force_oracle(G, predicates_for({G, 0, {}}), 2));
  }

  TEST_CASE("oracle box from the environment") {
    ::unsetenv("CY3_ORACLE_BOX");
    CHECK(oracle_box_from_env() == 30);
    ::setenv("CY3_ORACLE_BOX", "12", 1);
    CHECK(oracle_box_from_env() == 12);
    ::setenv("CY3_ORACLE_BOX", "junk", 1);
    CHECK_THROWS_AS(oracle_box_from_env(), DomainError);
    ::unsetenv("CY3_ORACLE_BOX");
  }
}

TEST_SUITE("help2") {
  TEST_CASE("tables") {
    CHECK(enumerate_help2(5) == std::vector<Triple>{{1, 1, -2}, {3, 2, -1}, {4, 3, -3}});
    CHECK(enumerate_help2(6) == std::vector<Triple>{{1, 1, -3}, {2, 1, 0}, {3, 2, -3}, {4, 2, 0}});
    CHECK(enumerate_help2(4) ==
          std::vector<Triple>{{1, 1, -1}, {4, 3, 0}, {4, 4, -4}, {5, 4, -1}, {6, 5, -2}, {8, 6, 0}, {9, 7, -1}});
    CHECK(enumerate_help2(4) == enumerate_help2(4));
  }

  TEST_CASE("discriminant is the determinant of the pairing matrix of (L, D, Delta)") {
    for (Int m = 4; m <= 6; ++m)
      for (Int dL = 1; dL <= 3 * m; ++dL)
        for (Int dD = 0; dD <= 3 * m; ++dD) {
          const Triple t{dL, dD, 3 * dL - m * dD};
          const oracle::M3 P{{{2 * m, 3, dL}, {3, 0, dD}, {dL, dD, -2}}};
          CHECK(help2_disc(t) == static_cast<Int>(oracle::det(P)));
        }
  }

  TEST_CASE("sign of the discriminant on the accepted triples") {
    // det(L, D, Delta) = z^2 det(L, D, Gamma) >= 0 in a rank-3 lattice of
    // signature (1,2).  Two m=4 entries have a negative determinant, so they are
    // listed but cannot occur.
    std::set<std::pair<Int, Triple>> negative;
    for (Int m = 4; m <= 6; ++m)
      for (const auto& t : enumerate_help2(m)) {
        CHECK(t.dB == 3 * t.dL - m * t.dD);
        CHECK(t.dB <= 0);
        const oracle::M3 P{{{2 * m, 3, t.dL}, {3, 0, t.dD}, {t.dL, t.dD, -2}}};
        const auto in = oracle::inertia(P);
        if (in.zero != 0) CHECK((m == 5 && t == Triple{4, 3, -3}));
        if (help2_disc(t) < 0) {
          CHECK(in.pos == 2);
          negative.insert({m, t});
        } else {
          CHECK(in.pos == 1);
        }
      }
    CHECK(negative == std::set<std::pair<Int, Triple>>{{4, {4, 4, -4}}, {4, {6, 5, -2}}});
  }

  TEST_CASE("trace names a rule for every rejected candidate") {
    std::set<std::string> names;
    for (const auto& r : help2_rules()) names.insert(r.name);
    for (Int m = 4; m <= 6; ++m) {
      const auto tr = enumerate_help2_traced(m);
      CHECK(tr.triples == enumerate_help2(m));
      std::size_t accepted = 0;
      for (const auto& dcs : tr.decisions) {
        if (dcs.accepted) {
          ++accepted;
        } else {
          CHECK(names.count(dcs.rule) == 1);
        }
      }
      CHECK(accepted == tr.triples.size());
    }
    // (3,3,-3) at m=4 and (5,3,-3) at m=6 are removed by the discriminant.
    for (auto [m, t] : {std::pair<Int, Triple>{4, {3, 3, -3}}, {6, {5, 3, -3}}}) {
      const auto tr = enumerate_help2_traced(m);
      const auto it = std::find_if(tr.decisions.begin(), tr.decisions.end(),
                                   [&](const Help2Decision& d) { return d.triple == t; });
      REQUIRE(it != tr.decisions.end());
      CHECK_FALSE(it->accepted);
      CHECK(it->rule == "disc-zero");
      CHECK(help2_disc(t) == 0);
    }
  }

  TEST_CASE("invalid m") { CHECK_THROWS_AS(enumerate_help2(7), DomainError); }
}
