#include "sepr/verify.hpp"

#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "sepr/error.hpp"
#include "sepr/enumerate.hpp"
#include "sepr/parallel.hpp"

namespace sepr {

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class Check {
 public:
  Check(std::string id, std::string title) : start_(Clock::now()) {
    r_.id = std::move(id);
    r_.title = std::move(title);
  }

  // Keeps the first failure only.
  void fail(const std::string& detail, const std::string& witness = {}) {
    if (r_.status == CheckStatus::Fail) {
      ++r_.counts["failures"];
      return;
    }
    r_.status = CheckStatus::Fail;
    r_.detail = detail;
    r_.witness = witness;
    r_.counts["failures"] = 1;
  }

  void expect(bool ok, const std::string& detail, const std::string& witness = {}) {
    if (!ok) fail(detail, witness);
  }

  void note(std::string s) { r_.notes.push_back(std::move(s)); }
  std::uint64_t& count(const std::string& key) { return r_.counts[key]; }
  bool failed() const { return r_.status == CheckStatus::Fail; }

  VerificationReport done() {
    r_.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return std::move(r_);
  }

 private:
  VerificationReport r_;
  Clock::time_point start_;
};

// Per-worker tallies merged in worker order so the reported failure is the
// one a sequential walk would meet first.
struct Tally {
  std::map<std::string, std::uint64_t> counts;
  bool failed = false;
  std::string detail;
  std::string witness;

  void fail(std::string d, std::string w) {
    ++counts["failures"];
    if (failed) return;
    failed = true;
    detail = std::move(d);
    witness = std::move(w);
  }
};

void merge(Check& c, const std::vector<Tally>& tallies) {
  for (const auto& t : tallies) {
    for (const auto& [k, v] : t.counts)
      if (k != "failures") c.count(k) += v;
  }
  for (const auto& t : tallies) {
    if (!t.failed) continue;
    c.fail(t.detail, t.witness);
    for (std::uint64_t i = 1; i < t.counts.at("failures"); ++i) c.fail(t.detail);
  }
}

SignPattern pat(std::initializer_list<const char*> rows) {
  std::vector<std::string> r;
  for (const char* s : rows) r.emplace_back(s);
  return SignPattern::from_rows(r);
}

std::string seq_set_str(const std::set<SeprSequence>& s) {
  std::string out = "{";
  for (const auto& x : s) {
    if (out.size() > 1) out += ", ";
    out += x.str();
  }
  return out + "}";
}

// The tables as printed, one row per left operand, columns in the order
// N A+ A- A* S+ S- S*.
constexpr const char* kPrintedAdd[7] = {
    "N S+ S- S* S+ S- S*",  "S+ A+ A* A* S+ S* S*", "S- A* A- A* S* S- S*", "S* A* A* A* S* S* S*",
    "S+ S+ S* S* S+ S* S*", "S- S* S- S* S* S- S*", "S* S* S* S* S* S* S*",
};
constexpr const char* kPrintedMul[7] = {
    "N N N N N N N",        "N A+ A- A* S+ S- S*",  "N A- A+ A* S- S+ S*", "N A* A* A* S* S* S*",
    "N S+ S- S* S+ S- S*",  "N S- S+ S* S- S+ S*",  "N S* S* S* S* S* S*",
};

std::vector<Symbol> row_symbols(const char* row) {
  std::istringstream in(row);
  std::vector<Symbol> out;
  std::string tok;
  while (in >> tok) out.push_back(SeprSequence::parse(tok)[0]);
  return out;
}

// Sign-set reading of a symbol combination: a sum observes the union of
// the signs, a product the pairwise products.
Symbol oracle_add(Symbol a, Symbol b) {
  SignSet s = signs_of(a);
  s.bits |= signs_of(b).bits;
  return symbol_from_signs(s);
}

Symbol oracle_mul(Symbol a, Symbol b) {
  SignSet out;
  for (Sign x : {Sign::Plus, Sign::Minus, Sign::Zero})
    for (Sign y : {Sign::Plus, Sign::Minus, Sign::Zero})
      if (signs_of(a).has(x) && signs_of(b).has(y)) out.add(x * y);
  return symbol_from_signs(out);
}

}  // namespace

// ---------------------------------------------------------------------------

VerificationReport verify_symbol_tables() {
  Check c("symbol-tables", "symbol addition and multiplication tables; combine worked example");
  const auto& add = addition_table();
  const auto& mul = multiplication_table();
  for (std::size_t i = 0; i < 7; ++i) {
    const auto ra = row_symbols(kPrintedAdd[i]);
    const auto rm = row_symbols(kPrintedMul[i]);
    for (std::size_t j = 0; j < 7; ++j) {
      const Symbol a = kAllSymbols[i];
      const Symbol b = kAllSymbols[j];
      const std::string cell = std::string(to_string(a)) + " , " + std::string(to_string(b));
      c.expect(add[i][j] == ra[j] && symbol_add(a, b) == ra[j], "addition entry differs at " + cell);
      c.expect(mul[i][j] == rm[j] && symbol_mul(a, b) == rm[j], "multiplication entry differs at " + cell);
      c.expect(oracle_add(a, b) == ra[j], "addition entry disagrees with the sign-set reading at " + cell);
      c.expect(oracle_mul(a, b) == rm[j], "multiplication entry disagrees with the sign-set reading at " + cell);
      c.count("entries") += 2;
    }
  }
  const SeprSequence got = combine(SeprSequence::parse("S+N"), SeprSequence::parse("A+S+A-"));
  c.expect(got.str() == "S+S+S*S-N", "S+N * A+S+A- gave " + got.str());
  c.note("S+N * A+S+A- = " + got.str());
  return c.done();
}

VerificationReport verify_matrix_anchors() {
  Check c("matrix-anchors", "sequences of the printed example matrices");
  struct Anchor {
    const char* name;
    const char* rows;
    const char* expected;
  };
  const Anchor anchors[] = {
      {"example 3x3", "0 1 0\n1 0 1\n1 0 0", "NS-A+"},
      {"I3", "1 0 0\n0 1 0\n0 0 1", "A+A+A+"},
      {"J3", "1 1 1\n1 1 1\n1 1 1", "A+NN"},
      {"J3 - I3", "0 1 1\n1 0 1\n1 1 0", "NA-A+"},
      {"O3", "0 0 0\n0 0 0\n0 0 0", "NNN"},
      {"J1 + J2", "1 0 0\n0 1 1\n0 1 1", "A+S+N"},
      {"J1 + O2", "1 0 0\n0 0 0\n0 0 0", "S+NN"},
      {"N_A+A*A-", "1 2 0\n2 1 2\n0 2 1", "A+A*A-"},
      {"N_A+A+A-", "1 9/10 0\n9/10 1 9/10\n0 9/10 1", "A+A+A-"},
      {"N_A+A+N", "1 3/5 0\n3/5 1 4/5\n0 4/5 1", "A+A+N"},
      {"N_A+A-A-", "1 8 2\n8 1 2\n2 2 1", "A+A-A-"},
      {"N_A+S*A-", "1 1 0\n1 1 2\n0 2 1", "A+S*A-"},
      {"N_S+S*A-", "0 1 0\n1 1 0\n0 0 1", "S+S*A-"},
  };
  for (const auto& a : anchors) {
    const RationalMatrix m = RationalMatrix::parse(a.rows);
    const SeprSequence s = sepr_of_matrix(m);
    c.expect(s.str() == a.expected, std::string(a.name) + " gave " + s.str() + ", expected " + a.expected, m.str());
    ++c.count("matrices");
  }
  return c.done();
}

VerificationReport verify_seprset_anchors(const VerifyOptions& opt) {
  Check c("seprset-anchors", "sepr-set estimates and verdicts of the worked example patterns");
  const SignPattern p = pat({"++0", "--+", "0+0"});
  const SignPattern q = pat({"-+-", "-++", "--0"});
  const SignPattern four = pat({"++00", "0-+0", "+0++", "00-0"});
  SignPattern four_mod = four;
  four_mod.set(2, 3, Sign::Zero);

  auto lower_set = [&](const SignPattern& x) {
    const auto est = sepr_set_estimate(x, opt.search);
    std::set<SeprSequence> out;
    for (const auto& [s, w] : est.lower) out.insert(s);
    c.count("realizations") += est.visited;
    return out;
  };
  auto want = [](std::initializer_list<const char*> xs) {
    std::set<SeprSequence> out;
    for (const char* x : xs) out.insert(SeprSequence::parse(x));
    return out;
  };

  const auto lp = lower_set(p);
  c.expect(lp == want({"S*S-A-", "S*S*A-"}), "P gave " + seq_set_str(lp), p.str());
  c.note("P: " + seq_set_str(lp));
  const auto lq = lower_set(q);
  c.expect(lq == want({"S*A*A-", "S*S*A-"}), "Q gave " + seq_set_str(lq), q.str());
  c.note("Q: " + seq_set_str(lq));
  const auto lm = lower_set(four_mod);
  for (const auto& s : want({"S*S*NN", "S*S*S+N", "S*S*S-N"}))
    c.expect(lm.count(s) == 1, "modified 4x4 misses " + s.str() + ", got " + seq_set_str(lm), four_mod.str());
  c.note("modified 4x4: " + seq_set_str(lm));

  const auto v4 = unique_verdict(four, opt.search);
  c.expect(v4.status == UniqueStatus::UniqueByCondition2 && v4.sequence &&
               v4.sequence->str() == "S*S*S*A-",
           "4x4 example verdict " + std::string(to_string(v4.status)), four.str());
  const auto vpq = unique_verdict(direct_sum(p, q), opt.search);
  c.expect(vpq.status == UniqueStatus::UniqueByCondition2 && vpq.sequence &&
               vpq.sequence->str() == "S*S*S*S*S*A+",
           "P+Q verdict " + std::string(to_string(vpq.status)), direct_sum(p, q).str());
  const auto vp = unique_verdict(p, opt.search);
  c.expect(vp.status == UniqueStatus::NotUnique, "P verdict " + std::string(to_string(vp.status)), p.str());
  return c.done();
}

// ---------------------------------------------------------------------------
// Conjecture

namespace {

// One pattern: the fixed-term condition must agree with the search outcome.
void conjecture_case(const SignPattern& p, const SearchOptions& so, Tally& t, bool expect_not_unique) {
  const UniqueVerdict v = unique_verdict(p, so);
  ++t.counts["patterns"];
  switch (v.status) {
    case UniqueStatus::UniqueByCondition2: {
      ++t.counts["condition2"];
      if (expect_not_unique) t.fail("pattern in this family satisfies the fixed-term condition", p.str());
      for (const auto& w : targeted_realizations(p)) {
        if (w.sequence != *v.sequence) {
          t.fail("realization " + w.source + " gave " + w.sequence.str() + " but the fixed-term condition gives " +
                     v.sequence->str(),
                 w.matrix.str());
          break;
        }
      }
      break;
    }
    case UniqueStatus::NotUnique: {
      ++t.counts["not_unique"];
      const auto& a = v.witnesses.at(0);
      const auto& b = v.witnesses.at(1);
      if (a.matrix.sign_pattern() != p || b.matrix.sign_pattern() != p || sepr_of_matrix(a.matrix) == sepr_of_matrix(b.matrix))
        t.fail("non-uniqueness witnesses do not check out", p.str());
      if (a.source.rfind("grid", 0) == 0 || b.source.rfind("grid", 0) == 0) ++t.counts["needed_grid_search"];
      break;
    }
    default:
      ++t.counts["pending"];
      t.fail("the fixed-term condition fails but no second sequence was found: " + v.warning, p.str());
  }
}

void conjecture_family(Check& c, const std::string& label, const PatternFamily& f, const VerifyOptions& opt,
                       bool expect_not_unique) {
  SearchOptions so = opt.search;
  so.budget = opt.search_budget;
  so.threads = 1;
  const int workers = chunk_workers(raw_space_size(f), opt.search.threads);
  std::vector<Tally> tallies(static_cast<std::size_t>(workers));
  enumerate_patterns_parallel(
      f, opt.search.threads,
      [&](const SignPattern& p, int w) {
        conjecture_case(p, so, tallies[static_cast<std::size_t>(w)], expect_not_unique);
      },
      std::uint64_t{50'000'000});
  std::uint64_t total = 0;
  for (const auto& t : tallies)
    if (t.counts.count("patterns")) total += t.counts.at("patterns");
  c.count(label) = total;
  merge(c, tallies);
}

}  // namespace

VerificationReport verify_conjecture(int n, const VerifyOptions& opt) {
  Check c("conjecture-n" + std::to_string(n), "the fixed-term condition holds exactly for the patterns with a unique sequence");
  if (n < 1 || n > 4) {
    c.fail("verify_conjecture supports 1 <= n <= 4");
    return c.done();
  }
  if (n <= 3 || opt.full_sweep) {
    conjecture_family(c, "all", PatternFamily{n, 0}, opt, false);
    return c.done();
  }
  conjecture_family(c, "zero-diagonal,full-off-diagonal", PatternFamily{4, kZeroDiagonal | kFullOffDiagonal}, opt,
                    true);
  conjecture_family(c, "symmetric", PatternFamily{4, kSymmetric}, opt, false);
  conjecture_family(c, "semi-stable", PatternFamily{4, kSemiStable}, opt, false);

  SearchOptions so = opt.search;
  so.budget = opt.search_budget;
  so.threads = 1;
  const std::uint64_t sample = opt.order4_sample;
  const int workers = chunk_workers(sample, opt.search.threads);
  std::vector<Tally> tallies(static_cast<std::size_t>(workers));
  parallel_chunks(sample, opt.search.threads, [&](std::uint64_t b, std::uint64_t e, int w) {
    for (std::uint64_t i = b; i < e; ++i) {
      std::uint64_t bits = mix64(opt.search.seed ^ mix64(i + 0x5eed));
      SignPattern p(4);
      for (int cell = 0; cell < 16; ++cell) {
        p.set(cell / 4, cell % 4, static_cast<Sign>(static_cast<int>(bits % 3) - 1));
        bits /= 3;
      }
      conjecture_case(p, so, tallies[static_cast<std::size_t>(w)], false);
    }
  });
  c.count("random-sample") = sample;
  merge(c, tallies);
  return c.done();
}

// ---------------------------------------------------------------------------
// Order-3 symmetric nonnegative table

const std::vector<std::string>& order3_nonneg_sequences() {
  static const std::vector<std::string> k = {
      "A+A*A-", "A+A+A+", "A+A+A-", "A+A+N",  "A+A-A+", "A+A-A-", "A+A-N", "A+NN",  "A+S*A-",
      "A+S+A-", "A+S+N",  "A+S-A-", "A+S-N",  "NA-A+",  "NNN",    "NS-N",  "S+A*A-", "S+A-A+",
      "S+A-A-", "S+A-N",  "S+NN",   "S+S*A-", "S+S+N",  "S+S-A-", "S+S-N",
  };
  return k;
}

VerificationReport verify_table_order3_nonneg(const VerifyOptions& opt) {
  Check c("table-order3-nonneg", "sequences of 3x3 symmetric nonnegative matrices");
  struct Embedded {
    const char* sequence;
    const char* name;
    const char* rows;
  };
  const Embedded embedded[] = {
      {"A+A*A-", "N_A+A*A-", "1 2 0\n2 1 2\n0 2 1"},
      {"A+A+A+", "I3", "1 0 0\n0 1 0\n0 0 1"},
      {"A+A+A-", "N_A+A+A-", "1 9/10 0\n9/10 1 9/10\n0 9/10 1"},
      {"A+A+N", "N_A+A+N", "1 3/5 0\n3/5 1 4/5\n0 4/5 1"},
      {"A+A-A-", "N_A+A-A-", "1 8 2\n8 1 2\n2 2 1"},
      {"A+NN", "J3", "1 1 1\n1 1 1\n1 1 1"},
      {"A+S*A-", "N_A+S*A-", "1 1 0\n1 1 2\n0 2 1"},
      {"A+S+N", "J1 + J2", "1 0 0\n0 1 1\n0 1 1"},
      {"NA-A+", "J3 - I3", "0 1 1\n1 0 1\n1 1 0"},
      {"NNN", "O3", "0 0 0\n0 0 0\n0 0 0"},
      {"S+NN", "J1 + O2", "1 0 0\n0 0 0\n0 0 0"},
      {"S+S*A-", "N_S+S*A-", "0 1 0\n1 1 0\n0 0 1"},
  };
  const auto& table = order3_nonneg_sequences();
  const std::set<std::string> listed(table.begin(), table.end());
  std::set<std::string> witnessed;
  for (const auto& e : embedded) {
    const RationalMatrix m = RationalMatrix::parse(e.rows);
    const std::string s = sepr_of_matrix(m).str();
    c.expect(s == e.sequence, std::string(e.name) + " gave " + s, m.str());
    c.expect(listed.count(s) == 1, s + " is not a listed sequence", m.str());
    witnessed.insert(s);
    ++c.count("embedded");
  }

  // Symmetric assignments with entries from {0} and the grid.
  std::vector<std::int64_t> vals{0};
  for (auto v : opt.search.grid.scaled()) vals.push_back(v);
  std::vector<mpq_class> qvals{mpq_class(0)};
  for (const auto& v : opt.search.grid.values()) qvals.push_back(v);
  const std::size_t base = vals.size();
  std::uint64_t total = 1;
  for (int i = 0; i < 6; ++i) total *= base;
  constexpr int kCells[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  auto decode = [&](std::uint64_t index, auto&& set) {
    for (int cell = 5; cell >= 0; --cell) {
      set(kCells[cell][0], kCells[cell][1], index % base);
      index /= base;
    }
  };
  const int workers = chunk_workers(total, opt.search.threads);
  std::vector<std::map<SeprSequence, std::uint64_t>> found(static_cast<std::size_t>(workers));
  parallel_chunks(total, opt.search.threads, [&](std::uint64_t b, std::uint64_t e, int w) {
    std::vector<std::int64_t> m(9);
    auto& mine = found[static_cast<std::size_t>(w)];
    for (std::uint64_t i = b; i < e; ++i) {
      decode(i, [&](int r, int col, std::size_t d) {
        m[static_cast<std::size_t>(r * 3 + col)] = vals[d];
        m[static_cast<std::size_t>(col * 3 + r)] = vals[d];
      });
      mine.emplace(sepr_of_int_matrix(m, 3), i);
    }
  });
  std::map<SeprSequence, std::uint64_t> first;
  for (const auto& f : found)
    for (const auto& [s, i] : f) {
      auto it = first.find(s);
      if (it == first.end() || i < it->second) first[s] = i;
    }
  c.count("grid-matrices") = total;
  c.count("grid-sequences") = first.size();
  auto matrix_at = [&](std::uint64_t index) {
    RationalMatrix m(3);
    decode(index, [&](int r, int col, std::size_t d) {
      m(r, col) = qvals[d];
      m(col, r) = qvals[d];
    });
    return m;
  };
  for (const auto& [s, index] : first) {
    const std::string str = s.str();
    c.expect(listed.count(str) == 1, "grid sweep produced unlisted " + str, matrix_at(index).str());
    for (const char* bad : {"A+NA-", "NA-A-", "NA-N"})
      c.expect(str != bad, "grid sweep produced excluded " + str, matrix_at(index).str());
  }
  for (const auto& s : table) {
    if (witnessed.count(s)) continue;
    auto it = first.find(SeprSequence::parse(s));
    if (it == first.end()) {
      c.fail("no witness found for " + s + " on the grid");
      continue;
    }
    // Rows cited by name only: witness from fresh search.
    const RationalMatrix m = matrix_at(it->second);
    c.expect(sepr_of_matrix(m).str() == s, "fresh witness for " + s + " does not reproduce", m.str());
    std::string flat;
    for (const auto& row : m.row_literals()) {
      if (!flat.empty()) flat += "; ";
      for (std::size_t j = 0; j < row.size(); ++j) flat += (j ? " " : "") + row[j];
    }
    c.note(s + ": fresh search witness [" + flat + "]");
    witnessed.insert(s);
    ++c.count("searched");
  }
  c.count("witnessed") = witnessed.size();
  c.expect(witnessed.size() == 25, "only " + std::to_string(witnessed.size()) + " of 25 sequences witnessed");
  return c.done();
}

// ---------------------------------------------------------------------------
// Semi-stable suite

namespace {

void semistable_case(const SignPattern& p, Tally& t) {
  ++t.counts["patterns"];
  const auto s = condition2_sequence(p);
  if (!s) {
    t.fail("sign semi-stable pattern without fixed terms", p.str());
    return;
  }
  const LawReport laws = check_sss_structure(*s);
  if (!laws.ok()) t.fail(s->str() + " violates " + laws.violations.front(), p.str());
  if (auto pred = predicted_sepr(p)) {
    ++t.counts["predicted"];
    if (pred->sequence != *s)
      t.fail("rule '" + pred->rule + "' predicts " + pred->sequence.str() + " but the sequence is " + s->str(),
             p.str());
  }
  const SignPattern q = simplify(p);
  if (condition2_sequence(q) != s) t.fail("simplified pattern has a different sequence", p.str());
  if (!semirecog(p)) {
    ++t.counts["not_semirecog"];
    try {
      const SignPattern r = addcycle_witness(q);
      ++t.counts["addcycle"];
      if (is_sign_semi_stable(r) || condition2_sequence(r) != s)
        t.fail("addcycle witness is semi-stable or changes the sequence", q.str());
    } catch (const PreconditionError&) {
      ++t.counts["star_unions"];
    }
  }
}

// One entry per family case: patterns built from skew-signed families.
struct FamilyCase {
  std::string name;
  SignPattern p;
  std::string expected;
};

std::vector<FamilyCase> family_cases() {
  auto fam = [](Family f, int k) { return make_family(f, k, SignRule::Skew); };
  const SignPattern p1l = fam(Family::PathLoopEnd, 1);
  const SignPattern p2 = fam(Family::Path, 2);
  const SignPattern p2l = fam(Family::PathLoopEnd, 2);
  const SignPattern p2ll = fam(Family::PathLoopBoth, 2);
  std::vector<FamilyCase> out;
  for (int k = 2; k <= 6; ++k) {
    std::string tail(static_cast<std::size_t>(k - 3 > 0 ? k - 3 : 0), 'N');
    out.push_back({"S_" + std::to_string(k), fam(Family::Star, k), k == 2 ? "NA+" : "NS+N" + tail});
    out.push_back({"S_" + std::to_string(k) + " looped centre", fam(Family::StarLoopCentre, k),
                   k == 2 ? "S-A+" : "S-S+N" + tail});
  }
  out.push_back({"P2 + P2", direct_sum(p2, p2), "NS+NA+"});
  out.push_back({"P4", fam(Family::Path, 4), "NS+NA+"});
  out.push_back({"P2o + P2o", direct_sum(p2l, p2l), "S-S+S-A+"});
  out.push_back({"P2o + P2", direct_sum(p2l, p2), "S-S+S-A+"});
  out.push_back({"P2oo + P2o", direct_sum(p2ll, p2l), "S-S+S-A+"});
  out.push_back({"P2oo + P2", direct_sum(p2ll, p2), "S-S+S-A+"});
  out.push_back({"P4o", fam(Family::PathLoopEnd, 4), "S-S+S-A+"});
  out.push_back({"P2oo + P2oo", direct_sum(p2ll, p2ll), "A-A+A-A+"});
  out.push_back({"P4 all loops", fam(Family::PathLoopAll, 4), "A-A+A-A+"});
  out.push_back({"P2o + P1o", direct_sum(p2l, p1l), "S-S+A-"});
  out.push_back({"P2 + P1o", direct_sum(p2, p1l), "S-S+A-"});
  out.push_back({"P3o", fam(Family::PathLoopEnd, 3), "S-S+A-"});
  out.push_back({"P2oo + P1o", direct_sum(p2ll, p1l), "A-A+A-"});
  out.push_back({"P3 all loops", fam(Family::PathLoopAll, 3), "A-A+A-"});
  return out;
}

SignPattern random_semistable(int n, std::uint64_t key) {
  // Off-diagonal pairs (p_ij, p_ji) with product in {-, 0}.
  static constexpr Sign kPairs[7][2] = {{Sign::Zero, Sign::Zero},  {Sign::Zero, Sign::Plus}, {Sign::Zero, Sign::Minus},
                                        {Sign::Plus, Sign::Zero},  {Sign::Minus, Sign::Zero}, {Sign::Plus, Sign::Minus},
                                        {Sign::Minus, Sign::Plus}};
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::uint64_t bits = mix64(key * 0x9E3779B97F4A7C15ULL + attempt);
    SignPattern p(n);
    for (int i = 0; i < n; ++i) {
      if (bits & 1U) p.set(i, i, Sign::Minus);
      bits >>= 1;
    }
    std::uint64_t more = mix64(bits ^ attempt ^ key);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const auto& pr = kPairs[more % 7];
        more /= 7;
        if (more == 0) more = mix64(key + static_cast<std::uint64_t>(i * n + j) + attempt);
        p.set(i, j, pr[0]);
        p.set(j, i, pr[1]);
      }
    if (is_sign_semi_stable(p)) return p;
  }
}

}  // namespace

VerificationReport verify_semistable_suite(int n_max, const VerifyOptions& opt) {
  Check c("semistable-suite", "sequences of sign semi-stable patterns");
  if (n_max < 1 || n_max > 5) {
    c.fail("verify_semistable_suite supports 1 <= n_max <= 5");
    return c.done();
  }
  for (int n = 1; n <= std::min(n_max, 4); ++n) {
    const PatternFamily f{n, kSemiStable};
    const int workers = chunk_workers(raw_space_size(f), opt.search.threads);
    std::vector<Tally> tallies(static_cast<std::size_t>(workers));
    enumerate_patterns_parallel(f, opt.search.threads, [&](const SignPattern& p, int w) {
      semistable_case(p, tallies[static_cast<std::size_t>(w)]);
    });
    std::uint64_t total = 0;
    for (const auto& t : tallies)
      if (t.counts.count("patterns")) total += t.counts.at("patterns");
    c.count("semi-stable n=" + std::to_string(n)) = total;
    merge(c, tallies);
  }
  if (n_max == 5) {
    std::vector<SignPattern> forests;
    enumerate_simplified_semistable(5, [&](const SignPattern& p) {
      forests.push_back(p);
      return true;
    });
    const int workers = chunk_workers(forests.size(), opt.search.threads);
    std::vector<Tally> tallies(static_cast<std::size_t>(workers));
    parallel_chunks(forests.size(), opt.search.threads, [&](std::uint64_t b, std::uint64_t e, int w) {
      for (std::uint64_t i = b; i < e; ++i) semistable_case(forests[i], tallies[static_cast<std::size_t>(w)]);
    });
    c.count("simplified n=5") = forests.size();
    merge(c, tallies);

    std::vector<Tally> sampled(static_cast<std::size_t>(chunk_workers(opt.order5_sample, opt.search.threads)));
    parallel_chunks(opt.order5_sample, opt.search.threads, [&](std::uint64_t b, std::uint64_t e, int w) {
      for (std::uint64_t i = b; i < e; ++i)
        semistable_case(random_semistable(5, opt.search.seed + i), sampled[static_cast<std::size_t>(w)]);
    });
    c.count("sampled n=5") = opt.order5_sample;
    merge(c, sampled);
  }

  for (const auto& lc : family_cases()) {
    c.expect(is_sign_semi_stable(lc.p), lc.name + " is not sign semi-stable", lc.p.str());
    const auto s = condition2_sequence(lc.p);
    c.expect(s && s->str() == lc.expected,
             lc.name + " gave " + (s ? s->str() : std::string("no fixed sequence")) + ", expected " + lc.expected,
             lc.p.str());
    ++c.count("family cases");
  }

  // Zero-diagonal sequences N (S+ N)... from loopless strong ditrees: a
  // path on 2m vertices with the remaining vertices hung on its first
  // vertex has matching number m.
  for (int n = 2; n <= 6; ++n) {
    for (int m = 1; 2 * m <= n; ++m) {
      SignPattern p(n);
      auto edge = [&](int i, int j) {
        p.set(i, j, Sign::Plus);
        p.set(j, i, Sign::Minus);
      };
      for (int i = 0; i + 1 < 2 * m; ++i) edge(i, i + 1);
      for (int v = 2 * m; v < n; ++v) edge(0, v);
      std::string want = "N";
      for (int k = 2; k <= n; ++k) want += (k % 2 == 1 || k > 2 * m) ? "N" : (k == n ? "A+" : "S+");
      const auto s = condition2_sequence(p);
      c.expect(is_strong_ditree(SignedDigraph(p)) && matching_number(SignedDigraph(p)) == m,
               "ditree construction broken", p.str());
      c.expect(s && s->str() == want, "ditree with matching number " + std::to_string(m) + " gave " +
                                          (s ? s->str() : std::string("?")) + ", expected " + want,
               p.str());
      ++c.count("matching-number ditrees");
    }
  }

  // Sequences excluded for semi-stable patterns are realized by an n-cycle
  // with loops, which is not semi-stable.
  for (int n = 3; n <= 6; ++n) {
    const SignPattern p = make_family(Family::CycleWithLoops, n, SignRule::NegativeDiagonal, 1);
    const auto s = condition2_sequence(p);
    const auto laws = s ? check_sss_structure(*s) : LawReport{{"none"}};
    const bool flagged = std::find(laws.violations.begin(), laws.violations.end(), "sss-no") != laws.violations.end();
    c.expect(s && flagged && !is_sign_semi_stable(p), "cycle with one loop should realize an excluded sequence",
             p.str());
    ++c.count("excluded sequences realized");
  }

  // The 5x5 stable / semi-stable pair.
  const SignPattern st = pat({"-+000", "-0+00", "0-0+0", "00-0+", "000-0"});
  const SignPattern ss = pat({"0+000", "-0+00", "0--+0", "00-0+", "000-0"});
  const auto s1 = condition2_sequence(st);
  const auto s2 = condition2_sequence(ss);
  c.expect(s1 && s1->str() == "S-S+S-S+A-", "stable 5x5 sequence", st.str());
  c.expect(s2 && s2->str() == "S-S+S-S+A-", "semi-stable 5x5 sequence", ss.str());
  c.expect(is_sign_stable_irreducible(st), "5x5 P should be sign stable", st.str());
  const auto v = sign_stability_irreducible(ss);
  c.expect(!v.holds && v.condition == "epsilon", "5x5 Q should fail condition epsilon", ss.str());

  // The added cycle keeps the sampled sepr-set.
  SearchOptions so = opt.search;
  so.budget = std::min<std::uint64_t>(so.budget, 50'000);
  for (const SignPattern& base : {make_family(Family::Path, 4, SignRule::Skew),
                                  make_family(Family::PathLoopEnd, 3, SignRule::Skew)}) {
    const SignPattern r = addcycle_witness(base);
    const auto a = sepr_set_estimate(base, so);
    const auto b = sepr_set_estimate(r, so);
    std::set<SeprSequence> la, lb;
    for (const auto& [s, w] : a.lower) la.insert(s);
    for (const auto& [s, w] : b.lower) lb.insert(s);
    c.expect(!is_sign_semi_stable(r), "addcycle witness is still semi-stable", r.str());
    c.expect(la == lb && la.size() == 1, "addcycle changed the sampled sepr-set: " + seq_set_str(la) + " vs " +
                                             seq_set_str(lb),
             r.str());
    c.note("addcycle " + seq_set_str(la) + " on\n" + base.str() + "\n->\n" + r.str());
  }
  return c.done();
}

// ---------------------------------------------------------------------------
// Property suites

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, int n, int zero_percent) {
  std::uniform_int_distribution<int> pct(0, 99);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (pct(rng) < zero_percent) continue;
      int a = num(rng);
      if (a == 0) a = 1;
      m(i, j) = mpq_class(a, den(rng));
      m(i, j).canonicalize();
    }
  return m;
}

SignPattern random_pattern(std::mt19937_64& rng, int n, int zero_percent) {
  std::uniform_int_distribution<int> pct(0, 99);
  SignPattern p(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (pct(rng) < zero_percent) continue;
      p.set(i, j, pct(rng) < 50 ? Sign::Plus : Sign::Minus);
    }
  return p;
}

}  // namespace

VerificationReport verify_properties(const VerifyOptions& opt) {
  Check c("properties", "randomized property suites");
  std::mt19937_64 rng(opt.search.seed ^ 0xC0FFEEULL);
  std::uniform_int_distribution<int> order(1, 4);

  for (int t = 0; t < 500; ++t) {
    const RationalMatrix a = random_matrix(rng, order(rng), 30);
    const RationalMatrix b = random_matrix(rng, order(rng), 30);
    const RationalMatrix coupling = random_matrix(rng, std::max(a.order(), b.order()), 40);
    std::vector<mpq_class> cc;
    for (int i = 0; i < a.order(); ++i)
      for (int j = 0; j < b.order(); ++j) cc.push_back(coupling(i, j));
    const RationalMatrix m = block_upper(a, b, cc);
    const SeprSequence got = sepr_of_matrix(m);
    const SeprSequence want = combine(sepr_of_matrix(a), sepr_of_matrix(b));
    c.expect(got == want, "block triangular gave " + got.str() + ", combine gives " + want.str(), m.str());
    ++c.count("block-triangular");
  }

  std::uniform_int_distribution<int> order5(1, 5);
  for (int t = 0; t < 200;) {
    const RationalMatrix b = random_matrix(rng, order5(rng), 20);
    if (determinant_sign(b) == Sign::Zero) continue;
    const InverseCheck ic = verify_inverse_theorem(b);
    c.expect(ic.pass, "inverse has " + ic.inverse.str() + ", expected " + ic.expected.str(), b.str());
    ++c.count("inverse");
    ++t;
  }

  for (int t = 0; t < 10'000; ++t) {
    const SignPattern p = random_pattern(rng, order5(rng), 45);
    const DetSummary d = signed_det(p);
    RationalMatrix b(p.order());
    std::uniform_int_distribution<int> mag(1, 9);
    for (int i = 0; i < p.order(); ++i)
      for (int j = 0; j < p.order(); ++j) b(i, j) = static_cast<int>(p(i, j)) * mag(rng);
    const Sign s = determinant_sign(b);
    if (d.value == AmbSign::Ambiguous) {
      ++c.count("signed-det ambiguous");
    } else {
      c.expect(to_amb(s) == d.value, "signed determinant " + std::string(to_string(d.value)) +
                                         " but a realization has sign " + sign_char(s),
               b.str());
      ++c.count("signed-det signed");
    }
    c.expect(has_perfect_matching(bigraph(p)) == d.has_nonzero_term(), "matching and determinant terms disagree",
             p.str());
    ++c.count("matching");
  }

  std::uniform_int_distribution<int> order6(2, 6);
  for (int t = 0; t < 100;) {
    const SignPattern p = random_pattern(rng, order6(rng), 35);
    const auto pairs = ambiguous_pairs(p);
    if (pairs.empty()) continue;
    const RationalMatrix b = allnonzero_realization(p);
    c.expect(b.sign_pattern() == p, "allnonzero realization has the wrong sign pattern", p.str());
    for (const auto& [al, be] : pairs)
      c.expect(determinant_sign(b.sub(al, be)) != Sign::Zero,
               "minor " + al.str() + "," + be.str() + " vanishes in the allnonzero realization", p.str());
    c.count("allnonzero pairs") += pairs.size();
    ++c.count("allnonzero");
    ++t;
  }
  return c.done();
}

// ---------------------------------------------------------------------------
// Symmetric nonnegative unique patterns

VerificationReport verify_symposunique(int n_max, const VerifyOptions& opt) {
  Check c("symposunique", "initial pairs of unique symmetric nonnegative patterns");
  if (n_max < 2 || n_max > 5) {
    c.fail("verify_symposunique supports 2 <= n_max <= 5");
    return c.done();
  }
  SearchOptions so = opt.search;
  so.budget = opt.search_budget;
  std::map<std::string, std::pair<SignPattern, SeprSequence>> open_first;
  for (int n = 2; n <= n_max; ++n) {
    enumerate_patterns(PatternFamily{n, kSymmetric | kNonnegative}, [&](const SignPattern& p) {
      ++c.count("patterns n=" + std::to_string(n));
      try {
        const auto cls = classify_symposunique(p);
        if (!cls) {
          const auto v = unique_verdict(p, so);
          c.expect(v.status == UniqueStatus::NotUnique, "no non-uniqueness witness found", p.str());
          ++c.count("not unique");
          return true;
        }
        ++c.count("pair " + cls->pair);
        if (cls->case_number == 0) {
          const std::string key = cls->sequence.str();
          if (!open_first.count(key)) open_first.emplace(key, std::make_pair(p, cls->sequence));
        }
      } catch (const InternalError& e) {
        c.fail(e.what(), p.str());
      }
      return true;
    });
  }
  std::string observed;
  for (const auto& [s, pv] : open_first) observed += (observed.empty() ? "" : " ") + s;
  c.note("open-pair sequences observed: " + observed);

  if (n_max >= 4) {
    for (const char* anchor : {"NS-NA+", "NS-S+A+", "S+S*S-A+", "S+S*S-A-", "S+S-S-A+", "S+S-NN"}) {
      auto it = open_first.find(anchor);
      c.expect(it != open_first.end(), std::string("anchor ") + anchor + " not realized by a unique pattern");
      if (it != open_first.end()) c.note(std::string(anchor) + " realized by\n" + it->second.first.str());
    }
    struct Named {
      const char* name;
      SignPattern p;
      const char* expected;
    };
    const Named named[] = {
        {"P4", make_family(Family::Path, 4, SignRule::Positive), "NS-NA+"},
        {"P4 loop at an end", make_family(Family::PathLoopEnd, 4, SignRule::Positive), "S+S-S-A+"},
        {"S4 looped centre", make_family(Family::StarLoopCentre, 4, SignRule::Positive), "S+S-NN"},
        {"leaf-loop-star 4", make_family(Family::LeafLoopStar, 4, SignRule::Positive), "S+A*A*A-"},
    };
    for (const auto& nm : named) {
      const auto s = condition2_sequence(nm.p);
      c.expect(s && s->str() == nm.expected,
               std::string(nm.name) + " gave " + (s ? s->str() : std::string("no fixed sequence")), nm.p.str());
    }
  }
  return c.done();
}

std::vector<VerificationReport> verify_paper(const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  out.push_back(verify_symbol_tables());
  out.push_back(verify_matrix_anchors());
  out.push_back(verify_seprset_anchors(opt));
  for (int n = 1; n <= 4; ++n) out.push_back(verify_conjecture(n, opt));
  out.push_back(verify_table_order3_nonneg(opt));
  out.push_back(verify_semistable_suite(5, opt));
  out.push_back(verify_properties(opt));
  out.push_back(verify_symposunique(4, opt));
  return out;
}

}  // namespace sepr
