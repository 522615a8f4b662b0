// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "sepr/sepr.h"

namespace {

using json = nlohmann::json;

std::string take(char* s) {
  std::string out(s);
  sepr_string_free(s);
  return out;
}

sepr_pattern* parse(const char* text) {
  sepr_pattern* p = nullptr;
  REQUIRE(sepr_pattern_parse(text, &p) == SEPR_OK);
  return p;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(sepr_version()).size() > 0);
  CHECK(std::string(sepr_status_name(SEPR_ERR_PARSE)) == "parse error");
}

TEST_CASE("parse errors set the last error") {
  sepr_pattern* p = nullptr;
  CHECK(sepr_pattern_parse("++\n+x", &p) == SEPR_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::string(sepr_last_error()).find("line 2") != std::string::npos);
  CHECK(sepr_pattern_parse("++\n++\n++", &p) == SEPR_ERR_PARSE);
  sepr_matrix* m = nullptr;
  CHECK(sepr_matrix_parse("1 2\n3 1/0", &m) == SEPR_ERR_PARSE);
  sepr_sequence* s = nullptr;
  CHECK(sepr_sequence_parse("NQ", &s) == SEPR_ERR_PARSE);
  CHECK(sepr_pattern_parse(nullptr, &p) == SEPR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("matrix sequence and combine") {
  sepr_matrix* m = nullptr;
  REQUIRE(sepr_matrix_parse("0 1 0\n1 0 1\n1 0 0", &m) == SEPR_OK);
  CHECK(sepr_matrix_order(m) == 3);
  sepr_sequence* s = nullptr;
  REQUIRE(sepr_matrix_sepr(m, &s) == SEPR_OK);
  char* text = nullptr;
  REQUIRE(sepr_sequence_to_string(s, &text) == SEPR_OK);
  CHECK(take(text) == "NS-A+");
  sepr_sequence_free(s);
  sepr_matrix_free(m);

  sepr_sequence *a = nullptr, *b = nullptr, *c = nullptr;
  REQUIRE(sepr_sequence_parse("S+N", &a) == SEPR_OK);
  REQUIRE(sepr_sequence_parse("A+S+A-", &b) == SEPR_OK);
  REQUIRE(sepr_combine(a, b, &c) == SEPR_OK);
  CHECK(sepr_sequence_length(c) == 5);
  REQUIRE(sepr_sequence_to_string(c, &text) == SEPR_OK);
  CHECK(take(text) == "S+S+S*S-N");
  sepr_sequence_free(a);
  sepr_sequence_free(b);
  sepr_sequence_free(c);
}

TEST_CASE("uniqueness through JSON") {
  sepr_pattern* p = parse("++00\n0-+0\n+0++\n00-0");
  sepr_options opt;
  sepr_options_init(&opt);
  char* out = nullptr;
  REQUIRE(sepr_check_unique_json(p, &opt, &out) == SEPR_OK);
  const auto j = json::parse(take(out));
  CHECK(j["status"] == "UniqueByCondition2");
  CHECK(j["sequence"] == json::array({"S*", "S*", "S*", "A-"}));
  sepr_pattern_free(p);

  sepr_pattern* q = parse("++0\n--+\n0+0");
  REQUIRE(sepr_check_unique_json(q, &opt, &out) == SEPR_OK);
  const auto k = json::parse(take(out));
  CHECK(k["status"] == "NotUnique");
  CHECK(k["witnesses"].size() == 2);
  REQUIRE(sepr_seprset_json(q, &opt, &out) == SEPR_OK);
  CHECK(json::parse(take(out))["lower"].size() == 2);
  sepr_pattern_free(q);
}

TEST_CASE("bad grid is reported") {
  sepr_pattern* p = parse("++\n--");
  sepr_options opt;
  sepr_options_init(&opt);
  opt.grid_csv = "1,zero";
  char* out = nullptr;
  CHECK(sepr_seprset_json(p, &opt, &out) == SEPR_ERR_PARSE);
  sepr_pattern_free(p);
}

TEST_CASE("stability, simplify, family") {
  sepr_pattern* p = parse("-+000\n-0+00\n0-0+0\n00-0+\n000-0");
  char* out = nullptr;
  REQUIRE(sepr_stable_json(p, &out) == SEPR_OK);
  CHECK(json::parse(take(out))["holds"] == true);
  REQUIRE(sepr_semistable_json(p, &out) == SEPR_OK);
  CHECK(json::parse(take(out))["sequence"] == json::array({"S-", "S+", "S-", "S+", "A-"}));
  sepr_pattern_free(p);

  sepr_pattern* r = parse("-0\n+-");
  CHECK(sepr_stable_json(r, &out) == SEPR_ERR_PRECONDITION);
  sepr_pattern* s = nullptr;
  REQUIRE(sepr_simplify(r, &s) == SEPR_OK);
  REQUIRE(sepr_pattern_to_string(s, &out) == SEPR_OK);
  CHECK(take(out) == "-0\n0-");
  sepr_pattern_free(r);
  sepr_pattern_free(s);

  sepr_pattern* f = nullptr;
  REQUIRE(sepr_family("path", 3, "skew", 0, &f) == SEPR_OK);
  REQUIRE(sepr_pattern_to_string(f, &out) == SEPR_OK);
  CHECK(take(out) == "0+0\n-0+\n0-0");
  sepr_pattern_free(f);
  CHECK(sepr_family("nonsense", 3, "skew", 0, &f) == SEPR_ERR_INVALID_ARGUMENT);
  CHECK(sepr_family("leaf-loop-star", 2, "positive", 0, &f) == SEPR_ERR_PRECONDITION);
}

TEST_CASE("enumeration callback") {
  uint64_t count = 0;
  REQUIRE(sepr_enumerate_count(3, "symmetric,nonnegative", &count) == SEPR_OK);
  CHECK(count == 64);
  int visits = 0;
  auto visit = [](const sepr_pattern* p, void* user) -> int {
    CHECK(sepr_pattern_order(p) == 2);
    return ++*static_cast<int*>(user) == 10;
  };
  REQUIRE(sepr_enumerate(2, "", visit, &visits) == SEPR_OK);
  CHECK(visits == 10);
  CHECK(sepr_enumerate_count(3, "wat", &count) == SEPR_ERR_PARSE);
}

TEST_CASE("verification entry point") {
  char* out = nullptr;
  int ok = 0;
  REQUIRE(sepr_verify_json("symbol-tables", nullptr, &out, &ok) == SEPR_OK);
  CHECK(ok == 1);
  const auto j = json::parse(take(out));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["status"] == "pass");
  CHECK(sepr_verify_json("nope", nullptr, &out, &ok) == SEPR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sequence laws") {
  sepr_sequence* s = nullptr;
  REQUIRE(sepr_sequence_parse("S-S+S-S+A-", &s) == SEPR_OK);
  char* out = nullptr;
  REQUIRE(sepr_sequence_laws_json(s, &out) == SEPR_OK);
  const auto j = json::parse(take(out));
  CHECK(j["semi_stable_laws"]["ok"] == true);
  sepr_sequence_free(s);
}
