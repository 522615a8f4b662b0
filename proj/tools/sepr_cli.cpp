// Command-line front end. Talks to the library only through sepr.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "sepr/sepr.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string pattern_file;
  std::string matrix_file;
  std::string grid;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  int threads = 0;
  bool as_json = false;
  bool full_sweep = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check(sepr_status s, const std::string& what) {
  if (s == SEPR_OK) return;
  const std::string msg = what + ": " + sepr_status_name(s) + ": " + sepr_last_error();
  if (s == SEPR_ERR_PARSE || s == SEPR_ERR_INVALID_ARGUMENT) throw UsageError(msg);
  throw std::runtime_error(msg);
}

struct PatternFree {
  void operator()(sepr_pattern* p) const { sepr_pattern_free(p); }
};
struct MatrixFree {
  void operator()(sepr_matrix* m) const { sepr_matrix_free(m); }
};
struct SequenceFree {
  void operator()(sepr_sequence* s) const { sepr_sequence_free(s); }
};
using Pattern = std::unique_ptr<sepr_pattern, PatternFree>;
using Matrix = std::unique_ptr<sepr_matrix, MatrixFree>;
using Sequence = std::unique_ptr<sepr_sequence, SequenceFree>;

Pattern load_pattern(const Common& c) {
  if (c.pattern_file.empty()) throw UsageError("--pattern is required");
  sepr_pattern* p = nullptr;
  check(sepr_pattern_parse(slurp(c.pattern_file).c_str(), &p), "pattern");
  return Pattern(p);
}

Matrix load_matrix(const Common& c) {
  if (c.matrix_file.empty()) throw UsageError("--matrix is required");
  sepr_matrix* m = nullptr;
  check(sepr_matrix_parse(slurp(c.matrix_file).c_str(), &m), "matrix");
  return Matrix(m);
}

Sequence parse_sequence(const std::string& text) {
  sepr_sequence* s = nullptr;
  check(sepr_sequence_parse(text.c_str(), &s), "sequence '" + text + "'");
  return Sequence(s);
}

std::string take(char* s) {
  std::string out(s ? s : "");
  sepr_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

std::string pattern_text(const sepr_pattern* p) {
  char* s = nullptr;
  check(sepr_pattern_to_string(p, &s), "pattern");
  return take(s);
}

std::string sequence_text(const sepr_sequence* q) {
  char* s = nullptr;
  check(sepr_sequence_to_string(q, &s), "sequence");
  return take(s);
}

sepr_options options(const Common& c) {
  sepr_options o;
  sepr_options_init(&o);
  o.grid_csv = c.grid.empty() ? nullptr : c.grid.c_str();
  o.budget = c.budget;
  o.seed = c.seed;
  o.threads = c.threads;
  o.full_sweep = c.full_sweep ? 1 : 0;
  return o;
}

std::string seq_of(const json& j) {
  if (j.is_null()) return "?";
  std::string s;
  for (const auto& t : j) s += t.get<std::string>();
  return s;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// Text renderings. Each one reads only the JSON document so the two
// formats cannot disagree.

void render_unique(const json& j) {
  const auto status = j["status"].get<std::string>();
  if (status == "UniqueByCondition2") {
    std::cout << "unique: " << seq_of(j["sequence"]) << "\n";
    return;
  }
  if (status == "NotUnique") {
    std::cout << "not unique\n";
    for (const auto& w : j["witnesses"]) {
      std::cout << "  " << seq_of(w["sequence"]) << "  [" << w["source"].get<std::string>() << "]\n";
      for (const auto& row : w["matrix"]) {
        std::cout << "    ";
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i].get<std::string>();
        std::cout << "\n";
      }
    }
    return;
  }
  std::cout << (status == "NotUniquePending" ? "not unique (no witness found)" : "unknown") << "\n";
  if (!j["warning"].get<std::string>().empty()) std::cout << "  " << j["warning"].get<std::string>() << "\n";
}

void render_seprset(const json& j) {
  for (const auto& w : j["lower"]) std::cout << seq_of(w["sequence"]) << "\n";
  std::cout << (j["tight"].get<bool>() ? "complete" : "lower bound") << " (" << j["visited"].get<std::uint64_t>()
            << " realizations" << (j["grid_exhaustive"].get<bool>() ? ", grid exhausted" : "") << ")\n";
  for (const auto& note : j["notes"]) std::cout << note.get<std::string>() << "\n";
  if (!j["tight"].get<bool>()) {
    std::cout << "possible per position:";
    for (const auto& pos : j["upper_per_position"]) {
      std::cout << " {";
      for (std::size_t i = 0; i < pos.size(); ++i) std::cout << (i ? "," : "") << pos[i].get<std::string>();
      std::cout << "}";
    }
    std::cout << "\n";
  }
}

void render_stability(const json& j, const char* name) {
  if (j["holds"].get<bool>()) {
    std::cout << name << "\n";
    if (j.contains("sequence")) std::cout << "sequence: " << seq_of(j["sequence"]) << "\n";
  } else {
    std::cout << "not " << name << " (" << j["condition"].get<std::string>() << "): " << j["reason"].get<std::string>()
              << "\n";
  }
}

void render_verify(const json& arr) {
  for (const auto& r : arr) {
    std::cout << r["status"].get<std::string>() << "  " << r["id"].get<std::string>() << "  "
              << r["title"].get<std::string>() << "  (" << r["runtime_ms"].get<double>() << " ms)\n";
    if (!r["detail"].get<std::string>().empty()) std::cout << "    " << r["detail"].get<std::string>() << "\n";
    if (!r["witness"].get<std::string>().empty()) std::cout << "    witness: " << r["witness"].get<std::string>() << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Sign patterns and their sepr-sequences"};
  app.require_subcommand(1);
  Common c;

  auto add_input = [&](CLI::App* sub, bool pattern, bool matrix) {
    if (pattern) sub->add_option("--pattern", c.pattern_file, "Sign pattern file, - for stdin");
    if (matrix) sub->add_option("--matrix", c.matrix_file, "Rational matrix file, - for stdin");
    sub->add_flag("--json", c.as_json, "JSON output");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--grid", c.grid, "Magnitude grid, comma-separated rationals");
    sub->add_option("--budget", c.budget, "Realization budget");
    sub->add_option("--seed", c.seed, "Seed for sampled stages");
    sub->add_option("--threads", c.threads, "Worker threads, 0 = auto");
  };

  auto* s_sepr = app.add_subcommand("sepr", "Sepr-sequence of a rational matrix");
  add_input(s_sepr, false, true);
  auto* s_det = app.add_subcommand("det", "Signed determinant of a pattern");
  add_input(s_det, true, false);
  std::string left, right;
  auto* s_combine = app.add_subcommand("combine", "Sequence of a block-triangular matrix");
  s_combine->add_option("left", left)->required();
  s_combine->add_option("right", right)->required();
  s_combine->add_flag("--json", c.as_json, "JSON output");
  auto* s_set = app.add_subcommand("seprset", "Grid estimate of the sepr-set of a pattern");
  add_input(s_set, true, false);
  add_search(s_set);
  auto* s_unique = app.add_subcommand("check-unique", "Decide whether a pattern has a unique sepr-sequence");
  add_input(s_unique, true, false);
  add_search(s_unique);
  auto* s_semi = app.add_subcommand("semistable", "Sign semi-stability test");
  add_input(s_semi, true, false);
  auto* s_stable = app.add_subcommand("stable", "Sign stability test (irreducible patterns)");
  add_input(s_stable, true, false);
  auto* s_simplify = app.add_subcommand("simplify", "Zero the entries off every cycle");
  add_input(s_simplify, true, false);
  auto* s_predict = app.add_subcommand("predict", "Closed-form sequence for a recognised structure");
  add_input(s_predict, true, false);

  std::string fam_name, fam_rule = "skew";
  int fam_k = 0, fam_loops = 0;
  auto* s_family = app.add_subcommand("family", "Print a named digraph family");
  s_family->add_option("name", fam_name)->required();
  s_family->add_option("k", fam_k)->required();
  s_family->add_option("--rule", fam_rule, "skew, positive or negative-diagonal");
  s_family->add_option("--loops", fam_loops, "Loop count for cycle-with-loops");
  s_family->add_flag("--json", c.as_json, "JSON output");

  int en_n = 0;
  std::string en_constraints;
  bool en_count = false;
  auto* s_enum = app.add_subcommand("enumerate", "List the patterns of one order");
  s_enum->add_option("n", en_n)->required();
  s_enum->add_option("--constraints", en_constraints, "Comma-separated constraint names");
  s_enum->add_flag("--count", en_count, "Only print the count");
  s_enum->add_flag("--json", c.as_json, "JSON output");

  std::string check_id;
  auto* s_verify = app.add_subcommand("verify-paper", "Run the verification checks");
  s_verify->add_option("--check", check_id, "Run one check by id");
  s_verify->add_flag("--full-sweep", c.full_sweep, "Exhaustive order-4 conjecture sweep");
  s_verify->add_flag("--json", c.as_json, "JSON output");
  add_search(s_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const sepr_options opt = options(c);
  char* out = nullptr;

  if (*s_sepr) {
    const auto m = load_matrix(c);
    check(sepr_matrix_report_json(m.get(), &out), "sepr");
    const json j = take_json(out);
    if (c.as_json) print_json(j);
    else std::cout << j["text"].get<std::string>() << "\n";
    return kExitOk;
  }
  if (*s_det) {
    const auto p = load_pattern(c);
    check(sepr_det_json(p.get(), &out), "det");
    const json j = take_json(out);
    if (c.as_json) print_json(j);
    else std::cout << j["value"].get<std::string>() << "\n";
    return kExitOk;
  }
  if (*s_combine) {
    const auto a = parse_sequence(left);
    const auto b = parse_sequence(right);
    sepr_sequence* r = nullptr;
    check(sepr_combine(a.get(), b.get(), &r), "combine");
    const Sequence res(r);
    if (c.as_json) print_json(json{{"left", left}, {"right", right}, {"result", sequence_text(res.get())}});
    else std::cout << sequence_text(res.get()) << "\n";
    return kExitOk;
  }
  if (*s_set) {
    const auto p = load_pattern(c);
    check(sepr_seprset_json(p.get(), &opt, &out), "seprset");
    const json j = take_json(out);
    if (c.as_json) print_json(j);
    else render_seprset(j);
    return kExitOk;
  }
  if (*s_unique) {
    const auto p = load_pattern(c);
    check(sepr_check_unique_json(p.get(), &opt, &out), "check-unique");
    const json j = take_json(out);
    if (c.as_json) print_json(j);
    else render_unique(j);
    return j["status"] == "UniqueByCondition2" ? kExitOk : kExitCheckFailed;
  }
  if (*s_semi || *s_stable) {
    const auto p = load_pattern(c);
    if (*s_semi) check(sepr_semistable_json(p.get(), &out), "semistable");
    else check(sepr_stable_json(p.get(), &out), "stable");
    const json j = take_json(out);
    if (c.as_json) print_json(j);
    else render_stability(j, *s_semi ? "sign semi-stable" : "sign stable");
    return j["holds"].get<bool>() ? kExitOk : kExitCheckFailed;
  }
  if (*s_simplify) {
    const auto p = load_pattern(c);
    sepr_pattern* r = nullptr;
    check(sepr_simplify(p.get(), &r), "simplify");
    const Pattern res(r);
    const std::string text = pattern_text(res.get());
    if (c.as_json) {
      json rows = json::array();
      std::istringstream ss(text);
      for (std::string line; std::getline(ss, line);)
        if (!line.empty()) rows.push_back(line);
      print_json(json{{"pattern", rows}});
    } else {
      std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
    }
    return kExitOk;
  }
  if (*s_predict) {
    const auto p = load_pattern(c);
    check(sepr_predict_json(p.get(), &out), "predict");
    const json j = take_json(out);
    if (c.as_json) {
      print_json(j);
    } else {
      if (j["rule"].is_null()) std::cout << "no closed form\n";
      else std::cout << seq_of(j["sequence"]) << "  (" << j["rule"].get<std::string>() << ")\n";
      if (j.contains("symmetric_nonnegative") && !j["symmetric_nonnegative"].is_null()) {
        const auto& s = j["symmetric_nonnegative"];
        std::cout << "initial pair " << s["pair"].get<std::string>() << ", case " << s["case"].get<int>() << ": "
                  << s["digraph"].get<std::string>() << "\n";
      }
    }
    return j["rule"].is_null() ? kExitCheckFailed : kExitOk;
  }
  if (*s_family) {
    sepr_pattern* r = nullptr;
    check(sepr_family(fam_name.c_str(), fam_k, fam_rule.c_str(), fam_loops, &r), "family");
    const Pattern res(r);
    const std::string text = pattern_text(res.get());
    if (c.as_json) print_json(json{{"family", fam_name}, {"k", fam_k}, {"rule", fam_rule}, {"pattern", text}});
    else std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
    return kExitOk;
  }
  if (*s_enum) {
    if (en_count) {
      std::uint64_t n = 0;
      check(sepr_enumerate_count(en_n, en_constraints.c_str(), &n), "enumerate");
      if (c.as_json) print_json(json{{"n", en_n}, {"constraints", en_constraints}, {"count", n}});
      else std::cout << n << "\n";
      return kExitOk;
    }
    struct Ctx {
      bool as_json;
      json rows = json::array();
    } ctx{c.as_json};
    auto visit = [](const sepr_pattern* p, void* user) -> int {
      auto* x = static_cast<Ctx*>(user);
      char* s = nullptr;
      if (sepr_pattern_to_string(p, &s) != SEPR_OK) return 1;
      std::string text = take(s);
      while (!text.empty() && text.back() == '\n') text.pop_back();
      if (x->as_json) {
        x->rows.push_back(text);
      } else {
        std::cout << text << "\n\n";
      }
      return 0;
    };
    check(sepr_enumerate(en_n, en_constraints.c_str(), visit, &ctx), "enumerate");
    if (c.as_json) print_json(json{{"n", en_n}, {"constraints", en_constraints}, {"patterns", ctx.rows}});
    return kExitOk;
  }
  if (*s_verify) {
    int all_passed = 0;
    check(sepr_verify_json(check_id.empty() ? nullptr : check_id.c_str(), &opt, &out, &all_passed), "verify-paper");
    const json j = take_json(out);
    if (c.as_json) print_json(j);
    else render_verify(j);
    return all_passed ? kExitOk : kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "sepr-cli: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "sepr-cli: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
