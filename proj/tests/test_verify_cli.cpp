#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cy3/cli.hpp"
#include "cy3/records.hpp"
#include "cy3/verify.hpp"

using namespace cy3;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

template <class T>
void round_trip(const T& x) {
  const json j = x;
  const T back = json::parse(j.dump()).get<T>();
  CHECK(back == x);
  CHECK(json(back).dump() == j.dump());
}

// The pairs listed explicitly in the statement, before any inequality.
bool special_pair(Int n, Int d, Int a) {
  std::vector<std::pair<Int, Int>> num;  // (3d, a)
  switch (n % 3) {
    case 0: num = {{n, 1}, {2 * n, 2}}; break;
    case 1: num = {{3 * n, 3}, {6 * n, 6}}; break;
    default: num = {{n - 2, 1}, {2 * n - 1, 2}}; break;
  }
  return std::any_of(num.begin(), num.end(), [&](const auto& p) { return 3 * d == p.first && a == p.second; });
}

bool has(const std::vector<verify::Check>& cs, const std::string& group, verify::Status st) {
  return std::any_of(cs.begin(), cs.end(), [&](const verify::Check& c) { return c.group == group && c.status == st; });
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("paper checks have no failure") {
    const auto cs = verify::run_paper_checks();
    CHECK_FALSE(verify::any_failed(cs));
    CHECK(has(cs, "Step III", verify::Status::Warn));
    CHECK(has(cs, "Lemma lemma2", verify::Status::Warn));
    for (const auto& c : cs) CHECK_FALSE(c.anchor.empty());
  }

  TEST_CASE("a mutated help2 table fails in its own group") {
    auto golden = verify::paper_tables();
    golden.help2[5][1] = {3, 2, -2};
    const auto cs = verify::run_paper_checks(golden);
    CHECK(verify::any_failed(cs));
    CHECK(has(cs, "Lemma help2", verify::Status::Fail));
    for (const auto& c : cs)
      if (c.status == verify::Status::Fail) CHECK(c.group == "Lemma help2");
  }

  TEST_CASE("other mutations are caught") {
    auto g1 = verify::paper_tables();
    g1.grass_dims[0] = 136;
    CHECK(has(verify::run_paper_checks(g1), "Grassmannians", verify::Status::Fail));
    auto g2 = verify::paper_tables();
    g2.lemma2_unlisted.clear();  // the extra point is no longer known: FAIL, not WARN
    CHECK(has(verify::run_paper_checks(g2), "Lemma lemma2", verify::Status::Fail));
    auto g3 = verify::paper_tables();
    g3.nakai_ed1[4].insert({0, 0, 0, 1, 1});
    CHECK(has(verify::run_paper_checks(g3), "Lemma lemma2 solutions", verify::Status::Fail));
  }

  TEST_CASE("Nakai obstruction search") {
    CHECK(verify::nakai_obstruction(5, 8, 5).has_value());
    CHECK(verify::nakai_obstruction(4, 9, 7).has_value());
    CHECK_FALSE(verify::nakai_obstruction(6, 2, 1).has_value());
  }
}

TEST_SUITE("records") {
  TEST_CASE("JSON round trips") {
    for (Int g = 5; g <= 12; ++g)
      for (Int d = 1; d <= 12; ++d)
        for (Int a = 1; a <= 4; ++a) {
          round_trip(records::make_classify_record(true, g, d, a));
          round_trip(records::make_classify_record(false, g - 1, d, a));
        }
    round_trip(lattice::DivisorClass{1, -2, -1});
    round_trip(lattice::DivisorClass{5, 0, 3, lattice::BasisTag::HDG});
    round_trip(dioph::Triple{4, 3, -3});
    round_trip(scroll::ScrollType({3, 2, 2}));
    round_trip(records::ScrollRecord{9, 1, scroll::ScrollType({3, 2, 2})});
    for (const auto& c : verify::run_paper_checks()) round_trip(c);
  }

  TEST_CASE("classify schema") {
    const json j = records::make_classify_record(false, 7, 16, 7);
    CHECK(j.at("input").at("n") == 7);
    CHECK(j.at("derived").at("d0") == 9);
    CHECK(j.at("derived").at("delta") == 4);
    CHECK(j.at("verdict").at("admissible") == false);
    const auto& cases = j.at("verdict").at("cases");
    REQUIRE(cases.size() == 2);
    CHECK(cases[0].at("lemma") == "lemma2");
    CHECK(cases[0].at("case") == "lemma2(b)");
    CHECK(cases[1].at("case") == "lemma3(iii)");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("classify") {
    auto r = run({"classify", "--g", "7", "--d", "2", "--a", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("admissible") != std::string::npos);
    r = run({"classify", "--n", "7", "--d", "16", "--a", "7", "--json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("verdict").at("admissible") == false);
    CHECK(run({"classify", "--g", "4", "--d", "1", "--a", "1"}).code == 2);
    CHECK(run({"classify", "--g", "7", "--n", "6", "--d", "1", "--a", "1"}).code == 2);
    CHECK(run({"classify", "--g", "7", "--d", "x", "--a", "1"}).code == 2);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"verify-paper"}).code == 0);
    CHECK(run({"oracle", "solve", "--m", "4", "--d0", "2", "--a", "2", "--self", "-2", "--EL", "0", "--ED", "1"}).code ==
          0);
    // The closed form calls (8,5) ample while a (-2)-class exists.
    CHECK(run({"oracle", "nakai", "--m", "5", "--d0", "8", "--a", "5"}).code == 1);
    CHECK(run({"oracle", "nakai", "--m", "5", "--d0", "2", "--a", "2"}).code == 0);
    CHECK(run({"oracle", "nakai", "--m", "7", "--d0", "2", "--a", "2"}).code == 2);
  }

  TEST_CASE("query wrappers") {
    auto r = run({"scroll", "--g", "7", "--json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("type") == json::array({2, 2, 1}));
    r = run({"sections", "--type", "1,1,1,1", "--a", "4", "--b", "-2"});
    CHECK(r.code == 0);
    CHECK(r.out == "105\n");
    r = run({"oracle", "help2", "--m", "5", "--json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("triples").size() == 3);
    CHECK(run({"sections", "--type", "1,2", "--a", "1", "--b", "0"}).code == 2);
    CHECK(run({"dims", "--grass"}).code == 0);
  }

  TEST_CASE("atlas") {
    const auto r = run({"atlas", "--gmin", "5", "--gmax", "8", "--dmax", "10", "--amax", "3", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "g,n,d,a,m,d0,delta,admissible,components_admissible,cases");
    int rows = 0;
    while (std::getline(is, line)) {
      ++rows;
      // Every admissible row satisfies the lattice bound or is a special pair.
      std::vector<Int> f;
      std::stringstream ls(line);
      std::string cell;
      for (int i = 0; i < 8 && std::getline(ls, cell, ','); ++i) f.push_back(i < 7 ? std::stoll(cell) : cell == "1");
      const Int n = f[1], d = f[2], a = f[3];
      if (f[7] == 1) CHECK((3 * a * d > n * a * a - 9 || special_pair(n, d, a)));
    }
    CHECK(rows == 4 * 10 * 3);
    const auto empty = run({"atlas", "--gmin", "9", "--gmax", "8"});
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());
    const auto jl = run({"atlas", "--gmin", "5", "--gmax", "5", "--dmax", "2", "--amax", "1", "--format", "jsonl"});
    std::istringstream js(jl.out);
    while (std::getline(js, line)) CHECK(json::parse(line).contains("verdict"));
  }

  TEST_CASE("deterministic output") {
    const std::vector<std::string> atlas{"atlas", "--gmin", "5", "--gmax", "20", "--dmax", "30", "--amax", "6"};
    CHECK(run(atlas).out == run(atlas).out);
    CHECK(run({"verify-paper"}).out == run({"verify-paper"}).out);
    CHECK(run({"verify-paper", "--json"}).out == run({"verify-paper", "--json"}).out);
  }
}
