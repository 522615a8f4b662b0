#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sepr/analysis.hpp"

namespace sepr {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s) noexcept;

struct VerificationReport {
  std::string id;
  std::string title;
  CheckStatus status = CheckStatus::Pass;
  /// Failure explanation or skip reason.
  std::string detail;
  /// Pattern or matrix text reproducing a failure.
  std::string witness;
  double runtime_ms = 0;
  std::map<std::string, std::uint64_t> counts;
  /// Free-form findings (witnesses found by search, observed sequences).
  std::vector<std::string> notes;

  bool passed() const noexcept { return status == CheckStatus::Pass; }
};

struct VerifyOptions {
  SearchOptions search;
  /// Enables the exhaustive 3^16 sweep in the order-4 conjecture check.
  bool full_sweep = false;
  /// Random order-4 patterns checked when the full sweep is off.
  std::uint64_t order4_sample = 20'000;
  /// Random semi-stable order-5 patterns checked beside the diforests.
  std::uint64_t order5_sample = 20'000;
  /// Budget for the random stage of each non-uniqueness search inside the
  /// exhaustive checks.
  std::uint64_t search_budget = 20'000;
};

VerificationReport verify_symbol_tables();
VerificationReport verify_matrix_anchors();
VerificationReport verify_seprset_anchors(const VerifyOptions& opt = {});
/// n in {1, 2, 3}: every pattern; n = 4: structured subfamilies plus a
/// seeded sample, or every pattern when full_sweep is set.
VerificationReport verify_conjecture(int n, const VerifyOptions& opt = {});
VerificationReport verify_table_order3_nonneg(const VerifyOptions& opt = {});
/// n_max <= 5.
VerificationReport verify_semistable_suite(int n_max, const VerifyOptions& opt = {});
VerificationReport verify_properties(const VerifyOptions& opt = {});
/// n_max <= 5.
VerificationReport verify_symposunique(int n_max, const VerifyOptions& opt = {});

/// Every check above at its default size, in acceptance order.
std::vector<VerificationReport> verify_paper(const VerifyOptions& opt = {});

/// The 25 sequences of order-3 symmetric nonnegative matrices.
const std::vector<std::string>& order3_nonneg_sequences();

}  // namespace sepr
