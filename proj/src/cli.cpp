#include "cy3/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cy3/audit.hpp"
#include "cy3/dioph.hpp"
#include "cy3/help2.hpp"
#include "cy3/k3core.hpp"
#include "cy3/records.hpp"
#include "cy3/scroll.hpp"
#include "cy3/verify.hpp"

namespace cy3::cli {

namespace {

using nlohmann::json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_cases(const std::vector<classify::CaseRecord>& cases, const char* sep) {
  std::string out;
  for (const auto& c : cases) out += (out.empty() ? "" : sep) + c.label;
  return out;
}

// --- classify ---------------------------------------------------------------

struct ClassifyOpts {
  std::optional<Int> g, n;
  Int d = 0, a = 0;
  bool as_json = false;
};

int cmd_classify(const ClassifyOpts& o, std::ostream& out) {
  const bool by_genus = o.g.has_value();
  const Int index = by_genus ? *o.g : *o.n;
  if (by_genus && index < 5) throw DomainError("--g must be at least 5");
  if (!by_genus && index < 4) throw DomainError("--n must be at least 4");
  if (o.d < 1 || o.a < 1) throw DomainError("--d and --a must be positive");
  const auto r = records::make_classify_record(by_genus, index, o.d, o.a);
  if (o.as_json) {
    out << json(r).dump(2) << "\n";
    return 0;
  }
  const auto& v = r.verdict;
  out << "input     " << (by_genus ? "g=" : "n=") << index << " d=" << r.d << " a=" << r.a
      << (by_genus ? " (n=" + std::to_string(v.n) + ")" : " (g=" + std::to_string(v.n + 1) + ")") << "\n";
  out << "derived   m=" << r.m << " d0=" << r.d0 << " delta=" << r.delta << " L^2=" << r.Lsq << "\n";
  out << "verdict   " << (v.admissible ? "admissible" : "not admissible") << "\n";
  out << "literal   " << v.literal_case << "\n";
  out << "checks    lattice=" << yes_no(v.lattice_exists) << " L_ample=" << yes_no(v.L_ample)
      << " H_very_ample=" << yes_no(v.H_very_ample) << " gamma_irreducible=" << yes_no(v.gamma_irreducible) << "\n";
  if (v.triggered.empty()) {
    out << "cases     none\n";
  } else {
    for (std::size_t i = 0; i < v.triggered.size(); ++i)
      out << (i == 0 ? "cases     " : "          ") << std::left << std::setw(12) << v.triggered[i].label
          << v.triggered[i].anchor << "\n";
  }
  return 0;
}

// --- atlas ------------------------------------------------------------------

struct AtlasOpts {
  Int gmin = 5, gmax = 8, dmax = 10, amax = 3;
  std::string format = "table";
};

constexpr const char* kCsvHeader = "g,n,d,a,m,d0,delta,admissible,components_admissible,cases";

int cmd_atlas(const AtlasOpts& o, std::ostream& out) {
  if (o.gmin > o.gmax || o.dmax < 1 || o.amax < 1) return 0;  // empty range
  if (o.gmin < 5) throw DomainError("--gmin must be at least 5");
  bool header = false;
  for (Int g = o.gmin; g <= o.gmax; ++g)
    for (Int d = 1; d <= o.dmax; ++d)
      for (Int a = 1; a <= o.amax; ++a) {
        const auto r = records::make_classify_record(true, g, d, a);
        const auto& v = r.verdict;
        if (o.format == "jsonl") {
          out << json(r).dump() << "\n";
        } else if (o.format == "csv") {
          if (!header) out << kCsvHeader << "\n";
          out << g << "," << v.n << "," << d << "," << a << "," << r.m << "," << r.d0 << "," << r.delta << ","
              << (v.admissible ? 1 : 0) << "," << (v.components_admissible ? 1 : 0) << ","
              << join_cases(v.triggered, ";") << "\n";
        } else {
          if (!header)
            out << std::left << std::setw(5) << "g" << std::setw(5) << "d" << std::setw(5) << "a" << std::setw(4)
                << "m" << std::setw(6) << "d0" << std::setw(7) << "delta" << std::setw(12) << "admissible"
                << "cases\n";
          out << std::left << std::setw(5) << g << std::setw(5) << d << std::setw(5) << a << std::setw(4) << r.m
              << std::setw(6) << r.d0 << std::setw(7) << r.delta << std::setw(12) << yes_no(v.admissible)
              << (v.triggered.empty() ? "-" : join_cases(v.triggered, ",")) << "\n";
        }
        header = true;
      }
  return 0;
}

// --- verify-paper -----------------------------------------------------------

int cmd_verify(bool as_json, std::ostream& out) {
  const auto checks = verify::run_paper_checks();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& c : checks) ++counts[static_cast<int>(c.status)];
  if (as_json) {
    json j{{"checks", checks}, {"summary", {{"pass", counts[0]}, {"warn", counts[1]}, {"fail", counts[2]}}}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : checks)
      out << verify::to_string(c.status) << "  [" << c.group << "] " << c.name
          << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    for (auto st : {verify::Status::Warn, verify::Status::Fail}) {
      if (counts[static_cast<int>(st)] == 0) continue;
      out << "\n" << (st == verify::Status::Warn ? "warnings" : "failures") << ":\n";
      for (const auto& c : checks)
        if (c.status == st) out << "  [" << c.group << "] " << c.name << " (" << c.anchor << ")\n";
    }
    out << "\nsummary: " << checks.size() << " checks, " << counts[0] << " pass, " << counts[1] << " warn, "
        << counts[2] << " fail\n";
  }
  return verify::any_failed(checks) ? 1 : 0;
}

// --- scroll / sections / dims -------------------------------------------------

struct ScrollOpts {
  std::optional<Int> g;
  Int c = 1;
  std::optional<Int> family;
  bool as_json = false;
};

int cmd_scroll(const ScrollOpts& o, std::ostream& out) {
  if (o.family) {
    json arr = json::array();
    for (const auto& t : scroll::theorem_scroll_families(*o.family)) {
      const Int h0 = scroll::h0_scroll(t, {4, -(t.N() - 5)});
      const scroll::ScrollType sub({t.e[0], t.e[1], t.e[2]});
      if (o.as_json) {
        arr.push_back({{"type", t}, {"N", t.N()}, {"g", scroll::subscroll_genus(t)},
                       {"subscroll_balanced", scroll::is_maximally_balanced(sub)},
                       {"h0_anticanonical", h0},
                       {"step3_computed", scroll::step3_intersection(t)},
                       {"step3_closed_form", scroll::step3_claimed(t)}});
      } else {
        out << std::left << std::setw(14) << scroll::to_string(t) << "N=" << std::setw(4) << t.N()
            << "g=" << std::setw(4) << scroll::subscroll_genus(t)
            << "subscroll balanced=" << std::setw(4) << yes_no(scroll::is_maximally_balanced(sub))
            << "h0(4H-(N-5)F)=" << std::setw(5) << h0 << "step III: " << scroll::step3_intersection(t)
            << " (closed form " << scroll::step3_claimed(t) << ")\n";
      }
    }
    if (o.as_json) out << arr.dump(2) << "\n";
    return 0;
  }
  if (!o.g) throw DomainError("scroll needs --g or --family");
  const records::ScrollRecord r{*o.g, o.c, scroll::scroll_type_from_pencil(*o.g, o.c)};
  if (o.as_json) {
    out << json(r).dump(2) << "\n";
  } else {
    out << "type " << scroll::to_string(r.type) << " dim " << r.type.dim() << " deg " << r.type.f() << " N "
        << r.type.N() << " balanced " << yes_no(scroll::is_maximally_balanced(r.type)) << "\n";
  }
  return 0;
}

struct SectionsOpts {
  std::vector<Int> type;
  Int a = 0, b = 0;
  bool as_json = false;
};

int cmd_sections(const SectionsOpts& o, std::ostream& out) {
  const scroll::ScrollType t(o.type);
  const Int h0 = scroll::h0_scroll(t, {o.a, o.b});
  if (o.as_json) {
    out << json{{"type", t}, {"a", o.a}, {"b", o.b}, {"N", t.N()}, {"h0", h0}}.dump(2) << "\n";
  } else {
    out << h0 << "\n";
  }
  return 0;
}

struct DimsOpts {
  std::optional<Int> d, a, N;
  Int h1 = 0;
  bool grass = false;
  bool ci = false;
  std::optional<Int> incidence;
  std::optional<Int> finiteness;
  std::vector<Int> grass_M;
  bool as_json = false;
};

int cmd_dims(const DimsOpts& o, std::ostream& out) {
  json j = json::object();
  std::ostringstream text;
  bool any = false;
  if (o.d || o.a || o.N) {
    if (!(o.d && o.a && o.N)) throw DomainError("--d, --a and --N go together");
    const Int dm = scroll::dim_M(*o.d, *o.a, *o.N);
    const Int fib = audit::fiber_dimension(*o.d, *o.a, *o.N, o.h1);
    const Int h0x = audit::h0_union_4H(*o.d, *o.a, *o.N);
    j["incidence"] = {{"d", *o.d}, {"a", *o.a}, {"N", *o.N}, {"h1", o.h1},
                      {"dim_M", dm}, {"fiber_dim", fib}, {"h0_union_4H", h0x}};
    text << "dim M = " << dm << "\nfiber dim = " << fib << "\nh0(O_X(4H)) = " << h0x << "\n";
    any = true;
  }
  if (o.grass) {
    json arr = json::array();
    for (const auto& f : audit::enumerate_cicy_grass()) {
      arr.push_back({{"k", f.k}, {"n", f.n}, {"degrees", f.degrees}, {"N", f.N}, {"s", f.s},
                     {"dimG", f.dimG ? json(*f.dimG) : json(nullptr)}});
      text << std::left << std::setw(24) << audit::to_string(f) << "P^" << std::setw(4) << f.N
           << "dim G = " << (f.dimG ? std::to_string(*f.dimG) : "?") << "\n";
    }
    j["grassmannian_families"] = arr;
    any = true;
  }
  if (o.grass_M.size() == 3) {
    const Int v = audit::grass_dim_M(o.grass_M[0], o.grass_M[1], o.grass_M[2]);
    j["grass_dim_M"] = v;
    text << "dim M_{d,k,n} = " << v << "\n";
    any = true;
  } else if (!o.grass_M.empty()) {
    throw DomainError("--grass-M takes d,k,n");
  }
  if (o.incidence) {
    json arr = json::array();
    for (const auto& b : audit::grass_incidence_bounds(*o.incidence)) {
      arr.push_back({{"name", b.name}, {"grassmannian", b.grassmannian}, {"slope", b.slope},
                     {"intercept", b.intercept}, {"dimG", b.dimG},
                     {"value", b.value ? json(*b.value) : json(nullptr)},
                     {"first_equal", b.first_equal}, {"first_exceed", b.first_exceed}});
      text << std::left << std::setw(50) << b.name << b.grassmannian << "  bound "
           << (b.value ? std::to_string(*b.value) : "-") << " vs dim G " << b.dimG << ", exceeds from d = "
           << b.first_exceed << "\n";
    }
    j["incidence_bounds"] = arr;
    any = true;
  }
  if (o.finiteness) {
    const Int dmax = audit::max_finite_degree(*o.finiteness);
    j["max_finite_degree"] = dmax;
    text << "finitely many smooth rational curves of degree <= " << dmax << " in P^" << *o.finiteness << "\n";
    any = true;
  }
  if (o.ci) {
    json arr = json::array();
    for (const auto& c : audit::projective_ci_table()) {
      arr.push_back({{"degrees", c.degrees}, {"N", c.N}, {"max_degree", c.max_degree}});
      std::string degs;
      for (Int x : c.degrees) degs += (degs.empty() ? "" : ",") + std::to_string(x);
      text << "(" << degs << ") in P^" << c.N << ": d <= " << c.max_degree << "\n";
    }
    j["projective_ci"] = arr;
    any = true;
  }
  if (!any) throw DomainError("dims needs at least one query");
  out << (o.as_json ? j.dump(2) + "\n" : text.str());
  return 0;
}

// --- oracle ---------------------------------------------------------------------

struct OracleOpts {
  Int m = 0;
  Int d0 = 0, a = 0;
  Int self = -2, EL = 0, ED = 1;
  std::optional<Int> box;
  bool trace = false;
  bool as_json = false;
};

int cmd_oracle_help2(const OracleOpts& o, std::ostream& out) {
  const auto tr = dioph::enumerate_help2_traced(o.m);
  if (o.as_json) {
    json j{{"m", o.m}, {"triples", tr.triples}};
    if (o.trace) {
      json dec = json::array();
      for (const auto& d : tr.decisions) dec.push_back({{"triple", d.triple}, {"accepted", d.accepted}, {"rule", d.rule}});
      j["decisions"] = dec;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "Delta.L  Delta.D  Delta.B\n";
  for (const auto& t : tr.triples)
    out << std::right << std::setw(7) << t.dL << std::setw(9) << t.dD << std::setw(9) << t.dB << "\n";
  if (o.trace) {
    out << "\ndecisions:\n";
    for (const auto& d : tr.decisions) out << "  " << dioph::to_string(d.triple) << "  " << d.rule << "\n";
  }
  return 0;
}

int cmd_oracle_solve(const OracleOpts& o, std::ostream& out) {
  const auto G = lattice::build_gram_ldg(o.m, o.d0, o.a);
  const Int box = o.box ? *o.box : dioph::oracle_box_from_env();
  const dioph::ConstraintSystem sys{G, o.self, {{lattice::L_class(), o.EL}, {lattice::D_class(), o.ED}}};
  const auto solved = dioph::solve(sys, box);
  const auto preds = dioph::predicates_for(sys);
  const auto scanned = dioph::brute_force_oracle(G, preds, box);
  const bool agree = solved.max_abs_coordinate() > box || solved.classes == scanned;
  if (o.as_json) {
    out << json{{"system", {{"m", o.m}, {"d0", o.d0}, {"a", o.a}, {"self", o.self}, {"EL", o.EL}, {"ED", o.ED}}},
                {"solver", solved.classes},
                {"exhaustive", solved.exhaustive},
                {"oracle", scanned},
                {"box", box},
                {"agree", agree}}
               .dump(2)
        << "\n";
  } else {
    auto list = [](const std::vector<dioph::DivisorClass>& cs) {
      std::string s = "{";
      for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + lattice::to_string(cs[i]);
      return s + "}";
    };
    out << "solver  " << list(solved.classes) << (solved.exhaustive ? "" : " (bounded search)") << "\n";
    out << "oracle  " << list(scanned) << " (box " << box << ")\n";
    out << "agree   " << yes_no(agree) << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_oracle_nakai(const OracleOpts& o, std::ostream& out) {
  const auto w = verify::nakai_obstruction(o.m, o.d0, o.a);
  const auto closed = classify::check_L_ample(o.m, o.d0, o.a);
  const bool agree = closed.ok != w.has_value();
  if (o.as_json) {
    out << json{{"m", o.m},
                {"d0", o.d0},
                {"a", o.a},
                {"witness", w ? json(*w) : json(nullptr)},
                {"closed_form_ample", closed.ok},
                {"case", closed.label},
                {"agree", agree}}
               .dump(2)
        << "\n";
  } else {
    out << "witness      " << (w ? lattice::to_string(*w) : "none") << "\n";
    out << "closed form  " << (closed.ok ? "ample" : "not ample, " + closed.label) << "\n";
    out << "agree        " << (agree ? "yes" : "no") << "\n";
  }
  return agree ? 0 : 1;
}

void build_parser(CLI::App& app, ClassifyOpts& co, AtlasOpts& ao, bool& verify_json, ScrollOpts& so,
                  SectionsOpts& se, DimsOpts& dio, OracleOpts& oo) {
  app.require_subcommand(1);

  auto* cl = app.add_subcommand("classify", "Classify one (g,d,a) or (n,d,a)");
  auto* og = cl->add_option("--g", co.g, "sectional genus g = n + 1 (g >= 5)");
  auto* on = cl->add_option("--n", co.n, "half the K3 degree (n >= 4)");
  og->excludes(on);
  cl->add_option("--d", co.d, "degree of the rational curve")->required();
  cl->add_option("--a", co.a, "intersection with the elliptic curve")->required();
  cl->add_flag("--json", co.as_json, "print JSON");
  cl->callback([og, on]() {
    if (og->count() + on->count() != 1) throw CLI::ValidationError("classify", "exactly one of --g / --n is required");
  });

  auto* at = app.add_subcommand("atlas", "Classify every (g,d,a) in a box");
  at->add_option("--gmin", ao.gmin, "smallest g")->capture_default_str();
  at->add_option("--gmax", ao.gmax, "largest g")->capture_default_str();
  at->add_option("--dmax", ao.dmax, "largest d")->capture_default_str();
  at->add_option("--amax", ao.amax, "largest a")->capture_default_str();
  at->add_option("--format", ao.format, "table, jsonl or csv")
      ->check(CLI::IsMember({"table", "jsonl", "csv"}))
      ->capture_default_str();
  at->footer(std::string("CSV columns: ") + kCsvHeader +
             "\n  admissible and components_admissible are 0/1; cases are ';'-separated labels");

  auto* vp = app.add_subcommand("verify-paper", "Recompute every golden table and report PASS/WARN/FAIL");
  vp->add_flag("--json", verify_json, "print JSON");

  auto* sc = app.add_subcommand("scroll", "Scroll type of a pencil, or the five 4-fold families");
  sc->add_option("--g", so.g, "genus (g >= 5)");
  sc->add_option("--c", so.c, "Clifford index")->capture_default_str();
  sc->add_option("--family", so.family, "list the five families for this s");
  sc->add_flag("--json", so.as_json, "print JSON");

  auto* se_cmd = app.add_subcommand("sections", "h0 of aH + bF on a scroll");
  se_cmd->add_option("--type", se.type, "scroll type, e.g. 1,1,1,1")->delimiter(',')->required();
  se_cmd->add_option("--a", se.a, "H coefficient")->required();
  se_cmd->add_option("--b", se.b, "F coefficient")->required();
  se_cmd->add_flag("--json", se.as_json, "print JSON");

  auto* di = app.add_subcommand("dims", "Dimension counts");
  di->add_option("--d", dio.d, "curve degree");
  di->add_option("--a", dio.a, "curve degree on the fibres");
  di->add_option("--N", dio.N, "ambient P^N of the 4-fold scroll");
  di->add_option("--h1", dio.h1, "h1 of the twisted ideal sheaf")->capture_default_str();
  di->add_flag("--grass", dio.grass, "Calabi-Yau complete intersections in Grassmannians");
  di->add_option("--grass-M", dio.grass_M, "dim M_{d,k,n} for d,k,n")->delimiter(',');
  di->add_option("--incidence", dio.incidence, "incidence lower bounds at degree d");
  di->add_option("--finiteness", dio.finiteness, "largest degree with finiteness in P^N");
  di->add_flag("--ci", dio.ci, "complete intersections in projective space");
  di->add_flag("--json", dio.as_json, "print JSON");

  auto* orc = app.add_subcommand("oracle", "Run the Diophantine solver and the brute-force oracle");
  orc->require_subcommand(1);
  auto* h2 = orc->add_subcommand("help2", "Table of (Delta.L, Delta.D, Delta.B)");
  h2->add_option("--m", oo.m, "4, 5 or 6")->required()->check(CLI::IsMember({4, 5, 6}));
  h2->add_flag("--trace", oo.trace, "show the rule deciding each candidate");
  h2->add_flag("--json", oo.as_json, "print JSON");
  auto* sv = orc->add_subcommand("solve", "Classes with given E^2, E.L, E.D");
  auto* nk = orc->add_subcommand("nakai", "Search for a class obstructing ampleness of L");
  for (auto* sub : {sv, nk}) {
    sub->add_option("--m", oo.m, "4, 5 or 6")->required()->check(CLI::IsMember({4, 5, 6}));
    sub->add_option("--d0", oo.d0, "Gamma.L")->required();
    sub->add_option("--a", oo.a, "Gamma.D")->required();
    sub->add_flag("--json", oo.as_json, "print JSON");
  }
  sv->add_option("--self", oo.self, "E^2")->capture_default_str();
  sv->add_option("--EL", oo.EL, "E.L")->capture_default_str();
  sv->add_option("--ED", oo.ED, "E.D")->capture_default_str();
  sv->add_option("--box", oo.box, "oracle box (default: CY3_ORACLE_BOX or 30)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice, scroll and dimension computations for rational curves on Calabi-Yau threefolds", "cy3"};
  ClassifyOpts co;
  AtlasOpts ao;
  bool verify_json = false;
  ScrollOpts so;
  SectionsOpts se;
  DimsOpts dio;
  OracleOpts oo;
  build_parser(app, co, ao, verify_json, so, se, dio, oo);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand("classify")) return cmd_classify(co, out);
    if (app.got_subcommand("atlas")) return cmd_atlas(ao, out);
    if (app.got_subcommand("verify-paper")) return cmd_verify(verify_json, out);
    if (app.got_subcommand("scroll")) return cmd_scroll(so, out);
    if (app.got_subcommand("sections")) return cmd_sections(se, out);
    if (app.got_subcommand("dims")) return cmd_dims(dio, out);
    auto* orc = app.get_subcommand("oracle");
    if (orc->got_subcommand("help2")) return cmd_oracle_help2(oo, out);
    if (orc->got_subcommand("solve")) return cmd_oracle_solve(oo, out);
    if (orc->got_subcommand("nakai")) return cmd_oracle_nakai(oo, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cy3::cli
