#include "sepr/serialize.hpp"

namespace sepr {

json to_json(const SeprSequence& s) {
  json a = json::array();
  for (Symbol y : s) a.push_back(std::string(to_string(y)));
  return a;
}

json to_json(const SignPattern& p) {
  json a = json::array();
  for (const auto& r : p.row_strings()) a.push_back(r);
  return a;
}

json to_json(const RationalMatrix& m) { return json(m.row_literals()); }

json to_json(IndexSet s) {
  json a = json::array();
  for (int i : s.indices()) a.push_back(i + 1);
  return a;
}

json to_json(const DetSummary& d) {
  return json{{"value", std::string(to_string(d.value))},
              {"has_positive_term", d.has_positive_term},
              {"has_negative_term", d.has_negative_term},
              {"term_count_bound", d.term_count_bound}};
}

json to_json(const TermVerdict& t) {
  json j{{"k", t.k}, {"status", std::string(to_string(t.status))}};
  j["symbol"] = t.fixed() ? json(std::string(to_string(t.symbol))) : json(nullptr);
  json signs = json::array();
  for (Sign s : {Sign::Plus, Sign::Minus, Sign::Zero})
    if (t.signed_values.has(s)) signs.push_back(std::string(1, sign_char(s)));
  j["signed_values"] = signs;
  json w = json::object();
  const char* keys[3] = {"+", "-", "0"};
  for (std::size_t i = 0; i < 3; ++i)
    if (t.witnesses[i]) w[keys[i]] = to_json(*t.witnesses[i]);
  j["witnesses"] = w;
  json amb = json::array();
  for (IndexSet a : t.ambiguous) amb.push_back(to_json(a));
  j["ambiguous"] = amb;
  return j;
}

json to_json(const Witness& w) {
  return json{{"source", w.source}, {"sequence", to_json(w.sequence)}, {"matrix", to_json(w.matrix)}};
}

json to_json(const UniqueVerdict& v) {
  json j{{"status", std::string(to_string(v.status))}};
  j["sequence"] = v.sequence ? to_json(*v.sequence) : json(nullptr);
  json terms = json::array();
  for (const auto& t : v.terms) terms.push_back(to_json(t));
  j["terms"] = terms;
  json ws = json::array();
  for (const auto& w : v.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = ws;
  j["warning"] = v.warning;
  j["candidates_tried"] = v.candidates_tried;
  return j;
}

json to_json(const SeprSetEstimate& e) {
  json lower = json::array();
  for (const auto& [s, w] : e.lower) lower.push_back(to_json(w));
  json upper = json::array();
  for (const auto& pos : e.upper_per_position) {
    json a = json::array();
    for (Symbol y : pos) a.push_back(std::string(to_string(y)));
    upper.push_back(a);
  }
  return json{{"lower", lower},
              {"upper_per_position", upper},
              {"tight", e.tight},
              {"grid_exhaustive", e.grid_exhaustive},
              {"visited", e.visited},
              {"notes", e.notes}};
}

json to_json(const Prediction& p) { return json{{"rule", p.rule}, {"sequence", to_json(p.sequence)}}; }

json to_json(const LawReport& r) { return json{{"ok", r.ok()}, {"violations", r.violations}}; }

json to_json(const StabilityVerdict& v) {
  return json{{"holds", v.holds}, {"condition", v.condition}, {"reason", v.reason}};
}

json to_json(const SymposClassification& c) {
  return json{{"pair", c.pair}, {"case", c.case_number}, {"digraph", c.digraph}, {"sequence", to_json(c.sequence)}};
}

json to_json(const VerificationReport& r) {
  json counts = json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  return json{{"id", r.id},
              {"title", r.title},
              {"status", std::string(to_string(r.status))},
              {"detail", r.detail},
              {"witness", r.witness},
              {"runtime_ms", r.runtime_ms},
              {"counts", counts},
              {"notes", r.notes}};
}

}  // namespace sepr
