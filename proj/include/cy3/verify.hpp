// Golden tables and the checks run by `cy3 verify-paper`.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cy3/dioph.hpp"
#include "cy3/help2.hpp"

namespace cy3::verify {

enum class Status { Pass, Warn, Fail };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Check {
  std::string group;   // e.g. "Lemma help2"
  std::string name;
  Status status = Status::Pass;
  std::string anchor;  // which statement is being checked
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

using Quint = std::array<Int, 5>;  // (x, y, z, a, d0)

/// Every tabulated value the checks compare against.
struct GoldenTables {
  std::map<Int, std::vector<dioph::Triple>> help2;                 // m -> table
  std::map<Int, std::set<std::pair<Int, Int>>> lemma2_pairs;       // m -> (d0, a) of cases (b)-(d)
  std::map<Int, std::set<Quint>> nakai_ed1;                        // E^2=-2, E.L=0, E.D=1 solutions
  // Obstructed points the lists above omit.  A check that finds exactly these
  // extras reports WARN; any other difference is a FAIL.
  std::set<std::array<Int, 3>> lemma2_unlisted;                    // (m, d0, a)
  std::map<Int, std::set<Quint>> nakai_ed1_unlisted;
  std::map<std::array<Int, 3>, std::array<Int, 3>> elliptic_el2;   // (m,d0,a) -> E^2=0, E.L=2, E.D=1 class
  std::set<std::array<Int, 3>> elliptic_el2_none;                  // (m,d0,a) claimed to have no such class
  std::vector<std::pair<std::array<Int, 3>, Int>> delta_values;    // (m,d0,a) -> delta
  std::vector<std::pair<dioph::Triple, Int>> help1_disc;           // triple -> |disc|
  std::array<Int, 3> gamma_97{};                                   // gamma in the (9,7) analysis
  std::map<Int, std::set<std::pair<Int, Int>>> gamma_above_R;      // m -> (d0,a) with Gamma > R possible
  std::vector<Int> grass_dims;                                     // in enumeration order
  std::vector<std::pair<std::string, Int>> incidence_thresholds;   // bound name -> first d
  Int g25_equal_degree = 0;
  std::map<Int, Int> finite_degree;                                // N -> max degree
  Int dimG = 0;
};

GoldenTables paper_tables();

/// Classes with E^2 = -2, E.L = 0 (E.D in {-1,0,1}) or E^2 = 0, E.L in {1,2}
/// (E.D in {0,1}), found with the exact solver.  Any such class prevents L from
/// being ample.
std::optional<dioph::DivisorClass> nakai_obstruction(Int m, Int d0, Int a);

std::vector<Check> run_paper_checks(const GoldenTables& golden = paper_tables());

bool any_failed(const std::vector<Check>& checks);

}  // namespace cy3::verify
