#include "sepr/sepr.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "sepr/enumerate.hpp"
#include "sepr/error.hpp"
#include "sepr/serialize.hpp"

struct sepr_pattern {
  sepr::SignPattern p;
};
struct sepr_matrix {
  sepr::RationalMatrix m;
};
struct sepr_sequence {
  sepr::SeprSequence s;
};

namespace {

thread_local std::string g_last_error;

sepr_status fail(sepr_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Maps library exceptions onto status codes.
template <typename Fn>
sepr_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const sepr::ParseError& e) {
    return fail(SEPR_ERR_PARSE, std::string(e.what()) + " (line " + std::to_string(e.line() + 1) + ", column " +
                                    std::to_string(e.column() + 1) + ")");
  } catch (const sepr::PreconditionError& e) {
    return fail(SEPR_ERR_PRECONDITION, e.what());
  } catch (const sepr::InternalError& e) {
    return fail(SEPR_ERR_INTERNAL, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SEPR_ERR_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SEPR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SEPR_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sepr_status emit(const sepr::json& j, char** out) {
  *out = dup(j.dump(2));
  return SEPR_OK;
}

sepr::SearchOptions search_options(const sepr_options* opt) {
  sepr::SearchOptions so;
  if (!opt) return so;
  if (opt->grid_csv && *opt->grid_csv) so.grid = sepr::MagnitudeGrid::parse(opt->grid_csv);
  so.budget = opt->budget;
  so.seed = opt->seed;
  so.threads = opt->threads;
  return so;
}

#define SEPR_REQUIRE(cond, what) \
  if (!(cond)) return fail(SEPR_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* sepr_version(void) { return "1.0.0"; }

const char* sepr_last_error(void) { return g_last_error.c_str(); }

const char* sepr_status_name(sepr_status s) {
  switch (s) {
    case SEPR_OK: return "ok";
    case SEPR_ERR_PARSE: return "parse error";
    case SEPR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SEPR_ERR_RANGE: return "out of range";
    case SEPR_ERR_PRECONDITION: return "precondition violated";
    case SEPR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sepr_options_init(sepr_options* opt) {
  if (!opt) return;
  opt->grid_csv = nullptr;
  opt->budget = 1'000'000;
  opt->seed = 0;
  opt->threads = 0;
  opt->full_sweep = 0;
}

void sepr_string_free(char* s) { std::free(s); }

sepr_status sepr_pattern_parse(const char* text, sepr_pattern** out) {
  SEPR_REQUIRE(text && out, "null argument");
  return guarded([&] {
    auto p = sepr::SignPattern::parse(text);
    if (!p.is_square() || p.rows() == 0) throw sepr::ParseError("pattern must be square and nonempty", 0, 0);
    *out = new sepr_pattern{std::move(p)};
    return SEPR_OK;
  });
}

void sepr_pattern_free(sepr_pattern* p) { delete p; }

int sepr_pattern_order(const sepr_pattern* p) { return p ? p->p.rows() : 0; }

sepr_status sepr_pattern_to_string(const sepr_pattern* p, char** out) {
  SEPR_REQUIRE(p && out, "null argument");
  return guarded([&] {
    *out = dup(p->p.str());
    return SEPR_OK;
  });
}

sepr_status sepr_matrix_parse(const char* text, sepr_matrix** out) {
  SEPR_REQUIRE(text && out, "null argument");
  return guarded([&] {
    auto m = sepr::RationalMatrix::parse(text);
    if (m.order() == 0) throw sepr::ParseError("empty matrix", 0, 0);
    *out = new sepr_matrix{std::move(m)};
    return SEPR_OK;
  });
}

void sepr_matrix_free(sepr_matrix* m) { delete m; }

int sepr_matrix_order(const sepr_matrix* m) { return m ? m->m.order() : 0; }

sepr_status sepr_sequence_parse(const char* text, sepr_sequence** out) {
  SEPR_REQUIRE(text && out, "null argument");
  return guarded([&] {
    *out = new sepr_sequence{sepr::SeprSequence::parse(text)};
    return SEPR_OK;
  });
}

void sepr_sequence_free(sepr_sequence* s) { delete s; }

size_t sepr_sequence_length(const sepr_sequence* s) { return s ? s->s.size() : 0; }

sepr_status sepr_sequence_to_string(const sepr_sequence* s, char** out) {
  SEPR_REQUIRE(s && out, "null argument");
  return guarded([&] {
    *out = dup(s->s.str());
    return SEPR_OK;
  });
}

sepr_status sepr_matrix_sepr(const sepr_matrix* m, sepr_sequence** out) {
  SEPR_REQUIRE(m && out, "null argument");
  return guarded([&] {
    *out = new sepr_sequence{sepr::sepr_of_matrix(m->m)};
    return SEPR_OK;
  });
}

sepr_status sepr_combine(const sepr_sequence* a, const sepr_sequence* b, sepr_sequence** out) {
  SEPR_REQUIRE(a && b && out, "null argument");
  return guarded([&] {
    *out = new sepr_sequence{sepr::combine(a->s, b->s)};
    return SEPR_OK;
  });
}

sepr_status sepr_simplify(const sepr_pattern* p, sepr_pattern** out) {
  SEPR_REQUIRE(p && out, "null argument");
  return guarded([&] {
    *out = new sepr_pattern{sepr::simplify(p->p)};
    return SEPR_OK;
  });
}

sepr_status sepr_family(const char* family, int k, const char* rule, int loops, sepr_pattern** out) {
  SEPR_REQUIRE(family && rule && out, "null argument");
  const auto f = sepr::family_from_string(family);
  if (!f) return fail(SEPR_ERR_INVALID_ARGUMENT, std::string("unknown family '") + family + "'");
  const auto r = sepr::sign_rule_from_string(rule);
  if (!r) return fail(SEPR_ERR_INVALID_ARGUMENT, std::string("unknown sign rule '") + rule + "'");
  return guarded([&] {
    *out = new sepr_pattern{sepr::make_family(*f, k, *r, loops)};
    return SEPR_OK;
  });
}

sepr_status sepr_matrix_report_json(const sepr_matrix* m, char** json) {
  SEPR_REQUIRE(m && json, "null argument");
  return guarded([&] {
    const auto s = sepr::sepr_of_matrix(m->m);
    return emit(sepr::json{{"sequence", sepr::to_json(s)},
                           {"text", s.str()},
                           {"sign_pattern", sepr::to_json(m->m.sign_pattern())}},
                json);
  });
}

sepr_status sepr_det_json(const sepr_pattern* p, char** json) {
  SEPR_REQUIRE(p && json, "null argument");
  return guarded([&] {
    const auto d = sepr::signed_det(p->p);
    auto j = sepr::to_json(d);
    j["perfect_matching"] = sepr::has_perfect_matching(sepr::bigraph(p->p));
    return emit(j, json);
  });
}

sepr_status sepr_seprset_json(const sepr_pattern* p, const sepr_options* opt, char** json) {
  SEPR_REQUIRE(p && json, "null argument");
  return guarded([&] { return emit(sepr::to_json(sepr::sepr_set_estimate(p->p, search_options(opt))), json); });
}

sepr_status sepr_check_unique_json(const sepr_pattern* p, const sepr_options* opt, char** json) {
  SEPR_REQUIRE(p && json, "null argument");
  return guarded([&] { return emit(sepr::to_json(sepr::unique_verdict(p->p, search_options(opt))), json); });
}

sepr_status sepr_semistable_json(const sepr_pattern* p, char** json) {
  SEPR_REQUIRE(p && json, "null argument");
  return guarded([&] {
    const auto v = sepr::sign_semi_stability(p->p);
    auto j = sepr::to_json(v);
    if (v.holds) {
      if (const auto s = sepr::condition2_sequence(p->p)) {
        j["sequence"] = sepr::to_json(*s);
        j["laws"] = sepr::to_json(sepr::check_sss_structure(*s));
        j["semirecog"] = sepr::semirecog(p->p);
      }
    }
    return emit(j, json);
  });
}

sepr_status sepr_stable_json(const sepr_pattern* p, char** json) {
  SEPR_REQUIRE(p && json, "null argument");
  return guarded([&] { return emit(sepr::to_json(sepr::sign_stability_irreducible(p->p)), json); });
}

sepr_status sepr_predict_json(const sepr_pattern* p, char** json) {
  SEPR_REQUIRE(p && json, "null argument");
  return guarded([&] {
    const auto pr = sepr::predicted_sepr(p->p);
    sepr::json j = pr ? sepr::to_json(*pr) : sepr::json{{"rule", nullptr}, {"sequence", nullptr}};
    if (p->p.is_symmetric() && p->p.is_nonnegative() && p->p.order() >= 2) {
      const auto c = sepr::classify_symposunique(p->p);
      j["symmetric_nonnegative"] = c ? sepr::to_json(*c) : sepr::json(nullptr);
    }
    return emit(j, json);
  });
}

sepr_status sepr_sequence_laws_json(const sepr_sequence* s, char** json) {
  SEPR_REQUIRE(s && json, "null argument");
  return guarded([&] {
    return emit(sepr::json{{"sequence", sepr::to_json(s->s)},
                           {"semi_stable_laws", sepr::to_json(sepr::check_sss_structure(s->s))},
                           {"symmetric_nonnegative_laws", sepr::to_json(sepr::nonneg_start_check(s->s))},
                           {"inverse", sepr::to_json(sepr::inverse_sequence(s->s))}},
                json);
  });
}

sepr_status sepr_enumerate(int n, const char* constraints, sepr_pattern_visitor visit, void* user) {
  SEPR_REQUIRE(visit, "null visitor");
  return guarded([&] {
    const unsigned c = constraints ? sepr::parse_constraints(constraints) : 0;
    sepr_pattern holder;
    sepr::enumerate_patterns(sepr::PatternFamily{n, c}, [&](const sepr::SignPattern& p) {
      holder.p = p;
      return visit(&holder, user) == 0;
    });
    return SEPR_OK;
  });
}

sepr_status sepr_enumerate_count(int n, const char* constraints, uint64_t* count) {
  SEPR_REQUIRE(count, "null argument");
  return guarded([&] {
    const unsigned c = constraints ? sepr::parse_constraints(constraints) : 0;
    *count = sepr::count_patterns(sepr::PatternFamily{n, c});
    return SEPR_OK;
  });
}

sepr_status sepr_verify_json(const char* check_id, const sepr_options* opt, char** json, int* all_passed) {
  SEPR_REQUIRE(json, "null argument");
  return guarded([&] {
    sepr::VerifyOptions vo;
    vo.search = search_options(opt);
    vo.full_sweep = opt && opt->full_sweep;
    std::vector<sepr::VerificationReport> reports;
    const std::string id = check_id ? check_id : "";
    if (id.empty()) {
      reports = sepr::verify_paper(vo);
    } else if (id == "symbol-tables") {
      reports.push_back(sepr::verify_symbol_tables());
    } else if (id == "matrix-anchors") {
      reports.push_back(sepr::verify_matrix_anchors());
    } else if (id == "seprset-anchors") {
      reports.push_back(sepr::verify_seprset_anchors(vo));
    } else if (id.rfind("conjecture-n", 0) == 0 && id.size() == 13 && id[12] >= '1' && id[12] <= '4') {
      reports.push_back(sepr::verify_conjecture(id[12] - '0', vo));
    } else if (id == "table-order3-nonneg") {
      reports.push_back(sepr::verify_table_order3_nonneg(vo));
    } else if (id == "semistable-suite") {
      reports.push_back(sepr::verify_semistable_suite(5, vo));
    } else if (id == "properties") {
      reports.push_back(sepr::verify_properties(vo));
    } else if (id == "symposunique") {
      reports.push_back(sepr::verify_symposunique(4, vo));
    } else {
      return fail(SEPR_ERR_INVALID_ARGUMENT, "unknown check '" + id + "'");
    }
    sepr::json arr = sepr::json::array();
    bool ok = true;
    for (const auto& r : reports) {
      arr.push_back(sepr::to_json(r));
      if (r.status == sepr::CheckStatus::Fail) ok = false;
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
    return emit(arr, json);
  });
}

}  // extern "C"
