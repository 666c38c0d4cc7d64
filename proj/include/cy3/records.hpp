// JSON forms of the records printed by the command line tool.  Keys are
// emitted sorted (nlohmann::json orders object keys), and every record
// round-trips through to_json / from_json.
#pragma once

#include <json.hpp>

#include "cy3/classify.hpp"
#include "cy3/help2.hpp"
#include "cy3/lattice.hpp"
#include "cy3/scroll.hpp"
#include "cy3/verify.hpp"

namespace cy3 {

namespace classify {
void to_json(nlohmann::json& j, const CaseRecord& c);
void from_json(const nlohmann::json& j, CaseRecord& c);
void to_json(nlohmann::json& j, const Verdict& v);
void from_json(const nlohmann::json& j, Verdict& v);
}  // namespace classify

namespace lattice {
void to_json(nlohmann::json& j, const DivisorClass& v);
void from_json(const nlohmann::json& j, DivisorClass& v);
}  // namespace lattice

namespace dioph {
void to_json(nlohmann::json& j, const Triple& t);
void from_json(const nlohmann::json& j, Triple& t);
}  // namespace dioph

namespace scroll {
void to_json(nlohmann::json& j, const ScrollType& t);
void from_json(const nlohmann::json& j, ScrollType& t);
}  // namespace scroll

namespace verify {
void to_json(nlohmann::json& j, const Check& c);
void from_json(const nlohmann::json& j, Check& c);
}  // namespace verify

namespace records {

/// One classification query: input echo, derived invariants, verdict.
struct ClassifyRecord {
  bool by_genus = true;  // input given as g (true) or n (false)
  Int index = 0;         // the value of g or n
  Int d = 0;
  Int a = 0;
  Int m = 0;
  Int d0 = 0;
  Int delta = 0;
  Int Lsq = 0;
  classify::Verdict verdict;

  Int g() const { return by_genus ? index : index + 1; }

  friend bool operator==(const ClassifyRecord&, const ClassifyRecord&) = default;
};

ClassifyRecord make_classify_record(bool by_genus, Int index, Int d, Int a);

void to_json(nlohmann::json& j, const ClassifyRecord& r);
void from_json(const nlohmann::json& j, ClassifyRecord& r);

struct ScrollRecord {
  Int g = 0;
  Int c = 0;
  scroll::ScrollType type;

  friend bool operator==(const ScrollRecord&, const ScrollRecord&) = default;
};

void to_json(nlohmann::json& j, const ScrollRecord& r);
void from_json(const nlohmann::json& j, ScrollRecord& r);

}  // namespace records
}  // namespace cy3
