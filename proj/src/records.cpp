#include "cy3/records.hpp"

#include "cy3/k3core.hpp"

namespace cy3 {

using nlohmann::json;

namespace classify {

void to_json(json& j, const CaseRecord& c) { j = json{{"lemma", c.lemma}, {"case", c.label}, {"anchor", c.anchor}}; }

void from_json(const json& j, CaseRecord& c) {
  j.at("lemma").get_to(c.lemma);
  j.at("case").get_to(c.label);
  j.at("anchor").get_to(c.anchor);
}

// n, d, a live in the enclosing record's "input" object.
void to_json(json& j, const Verdict& v) {
  j = json{{"admissible", v.admissible},
           {"components_admissible", v.components_admissible},
           {"literal_case", v.literal_case},
           {"lattice_exists", v.lattice_exists},
           {"L_ample", v.L_ample},
           {"H_very_ample", v.H_very_ample},
           {"gamma_irreducible", v.gamma_irreducible},
           {"cases", v.triggered}};
}

void from_json(const json& j, Verdict& v) {
  j.at("admissible").get_to(v.admissible);
  j.at("components_admissible").get_to(v.components_admissible);
  j.at("literal_case").get_to(v.literal_case);
  j.at("lattice_exists").get_to(v.lattice_exists);
  j.at("L_ample").get_to(v.L_ample);
  j.at("H_very_ample").get_to(v.H_very_ample);
  j.at("gamma_irreducible").get_to(v.gamma_irreducible);
  j.at("cases").get_to(v.triggered);
}

}  // namespace classify

namespace lattice {

void to_json(json& j, const DivisorClass& v) {
  j = json{{"basis", to_string(v.basis)}, {"x", v.x()}, {"y", v.y()}, {"z", v.z()}};
}

void from_json(const json& j, DivisorClass& v) {
  const auto tag = j.at("basis").get<std::string>();
  if (tag != "HDG" && tag != "LDG") throw DomainError("unknown basis " + tag);
  v = DivisorClass{j.at("x").get<Int>(), j.at("y").get<Int>(), j.at("z").get<Int>(),
                   tag == "HDG" ? BasisTag::HDG : BasisTag::LDG};
}

}  // namespace lattice

namespace dioph {

void to_json(json& j, const Triple& t) { j = json{{"L", t.dL}, {"D", t.dD}, {"B", t.dB}}; }

void from_json(const json& j, Triple& t) {
  j.at("L").get_to(t.dL);
  j.at("D").get_to(t.dD);
  j.at("B").get_to(t.dB);
}

}  // namespace dioph

namespace scroll {

void to_json(json& j, const ScrollType& t) { j = t.e; }

void from_json(const json& j, ScrollType& t) { t = ScrollType(j.get<std::vector<Int>>()); }

}  // namespace scroll

namespace verify {

void to_json(json& j, const Check& c) {
  j = json{{"group", c.group}, {"name", c.name}, {"status", to_string(c.status)}, {"anchor", c.anchor},
           {"detail", c.detail}};
}

void from_json(const json& j, Check& c) {
  j.at("group").get_to(c.group);
  j.at("name").get_to(c.name);
  c.status = status_from_string(j.at("status").get<std::string>());
  j.at("anchor").get_to(c.anchor);
  j.at("detail").get_to(c.detail);
}

}  // namespace verify

namespace records {

ClassifyRecord make_classify_record(bool by_genus, Int index, Int d, Int a) {
  ClassifyRecord r;
  r.by_genus = by_genus;
  r.index = index;
  r.d = d;
  r.a = a;
  r.verdict = by_genus ? classify::admissible_iso(index, d, a) : classify::admissible_summa(index, d, a);
  const auto s = k3::derive_invariants(r.verdict.n, d, a);
  r.m = s.m;
  r.d0 = s.d0;
  r.delta = s.delta;
  r.Lsq = s.Lsq;
  return r;
}

void to_json(json& j, const ClassifyRecord& r) {
  j = json{{"input", {{r.by_genus ? "g" : "n", r.index}, {"d", r.d}, {"a", r.a}}},
           {"derived", {{"m", r.m}, {"d0", r.d0}, {"delta", r.delta}, {"Lsq", r.Lsq}}},
           {"verdict", r.verdict}};
}

void from_json(const json& j, ClassifyRecord& r) {
  const auto& in = j.at("input");
  r.by_genus = in.contains("g");
  r.index = in.at(r.by_genus ? "g" : "n").get<Int>();
  in.at("d").get_to(r.d);
  in.at("a").get_to(r.a);
  const auto& der = j.at("derived");
  der.at("m").get_to(r.m);
  der.at("d0").get_to(r.d0);
  der.at("delta").get_to(r.delta);
  der.at("Lsq").get_to(r.Lsq);
  j.at("verdict").get_to(r.verdict);
  r.verdict.n = r.by_genus ? r.index - 1 : r.index;
  r.verdict.d = r.d;
  r.verdict.a = r.a;
}

void to_json(json& j, const ScrollRecord& r) {
  j = json{{"g", r.g},
           {"c", r.c},
           {"type", r.type},
           {"dim", r.type.dim()},
           {"f", r.type.f()},
           {"N", r.type.N()},
           {"balanced", scroll::is_maximally_balanced(r.type)}};
}

void from_json(const json& j, ScrollRecord& r) {
  j.at("g").get_to(r.g);
  j.at("c").get_to(r.c);
  j.at("type").get_to(r.type);
}

}  // namespace records
}  // namespace cy3
