// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sepr/verify.hpp"

using namespace sepr;

namespace {

// A criterion may bundle several checks with their own time limits.
struct Part {
  double limit_s;
  std::function<std::vector<VerificationReport>()> run;
};

struct Criterion {
  int number;
  const char* name;
  std::vector<Part> parts;
};

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions opt;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--full-sweep") opt.full_sweep = true;

  VerifyOptions single = opt;
  single.search.threads = 1;

  const std::vector<Criterion> criteria = {
      {1, "symbol tables", {{1, [] { return std::vector{verify_symbol_tables()}; }}}},
      {2, "matrix sepr anchors", {{1, [] { return std::vector{verify_matrix_anchors()}; }}}},
      {3, "sepr-set anchors", {{30, [&] { return std::vector{verify_seprset_anchors(opt)}; }}}},
      {4,
       "conjecture verification",
       {{300,
         [&] {
           return std::vector{verify_conjecture(1, single), verify_conjecture(2, single),
                              verify_conjecture(3, single)};
         }},
        {opt.full_sweep ? 1e9 : 600, [&] { return std::vector{verify_conjecture(4, opt)}; }}}},
      {5, "order-3 symmetric nonnegative table", {{120, [&] { return std::vector{verify_table_order3_nonneg(opt)}; }}}},
      {6, "semi-stable suite", {{300, [&] { return std::vector{verify_semistable_suite(5, opt)}; }}}},
      {7, "property suites", {{300, [&] { return std::vector{verify_properties(opt)}; }}}},
      {8,
       "symmetric nonnegative unique sequences n<=4",
       {{120, [&] { return std::vector{verify_symposunique(4, opt)}; }}}},
  };

  bool all = true;
  for (const auto& c : criteria) {
    bool ok = true;
    std::string detail;
    std::string times;
    for (const auto& part : c.parts) {
      const auto t0 = std::chrono::steady_clock::now();
      std::vector<VerificationReport> reports;
      try {
        reports = part.run();
      } catch (const std::exception& e) {
        ok = false;
        if (detail.empty()) detail = std::string("exception: ") + e.what();
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      for (const auto& r : reports) {
        if (r.passed()) continue;
        ok = false;
        if (detail.empty()) detail = r.id + ": " + r.detail + (r.witness.empty() ? "" : " [" + r.witness + "]");
      }
      if (secs > part.limit_s) {
        ok = false;
        if (detail.empty()) detail = "runtime " + std::to_string(secs) + " s over the limit";
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f s", secs);
      times += (times.empty() ? "" : ", ") + std::string(buf);
    }
    all = all && ok;
    std::printf("criterion %d %s: %s (%s)%s%s\n", c.number, c.name, ok ? "PASS" : "FAIL", times.c_str(),
                detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
