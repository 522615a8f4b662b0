#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepr/digraph.hpp"
#include "sepr/realize.hpp"

namespace sepr {

/// Knobs shared by every search over realizations.
struct SearchOptions {
  MagnitudeGrid grid = MagnitudeGrid::standard();
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  int threads = 0;
};

enum class TermStatus { FixedBySignedDets, FixedSstarByWitnesses, Unknown };

std::string_view to_string(TermStatus s) noexcept;

struct TermVerdict {
  int k = 0;
  TermStatus status = TermStatus::Unknown;
  /// Meaningful when the status is one of the Fixed ones.
  Symbol symbol = Symbol::N;
  /// Signs of the k x k principal subpatterns that have signed determinants.
  SignSet signed_values;
  /// First alpha (in mask order) with signed determinant +, -, 0.
  std::array<std::optional<IndexSet>, 3> witnesses;
  std::vector<IndexSet> ambiguous;

  bool fixed() const noexcept { return status != TermStatus::Unknown; }
};

/// Throws PreconditionError unless 1 <= k <= n.
TermVerdict fixed_term(const SignPattern& p, int k);
std::vector<TermVerdict> fixed_terms(const SignPattern& p);

/// The sequence forced by the signed subpattern determinants when every
/// position is fixed; nullopt otherwise.
std::optional<SeprSequence> condition2_sequence(const SignPattern& p);

enum class UniqueStatus {
  UniqueByCondition2,
  NotUnique,
  /// Order <= 4, the fixed-term condition fails, but the search found no second
  /// sequence: the grid or budget was too small.
  NotUniquePending,
  UnknownBeyondConjecture,
};

std::string_view to_string(UniqueStatus s) noexcept;

struct Witness {
  RationalMatrix matrix;
  SeprSequence sequence;
  std::string source;
};

struct UniqueVerdict {
  UniqueStatus status = UniqueStatus::UnknownBeyondConjecture;
  std::vector<TermVerdict> terms;
  std::optional<SeprSequence> sequence;
  /// Two realizations with different sequences for NotUnique.
  std::vector<Witness> witnesses;
  std::string warning;
  std::uint64_t candidates_tried = 0;
};

UniqueVerdict unique_verdict(const SignPattern& p, const SearchOptions& opt = {});

/// Deterministic list of targeted realizations used by the non-uniqueness
/// search before random sampling: generic, all-ones, term-dominant,
/// determinant-zeroing and 2 x 2 controlled matrices. Exposed for tests.
std::vector<Witness> targeted_realizations(const SignPattern& p);

struct SeprSetEstimate {
  /// Each realized sequence with one witness.
  std::map<SeprSequence, Witness> lower;
  /// Symbols position k may take when subpattern outcomes are independent.
  std::vector<std::vector<Symbol>> upper_per_position;
  bool tight = false;
  bool grid_exhaustive = false;
  std::uint64_t visited = 0;
  /// Positions where a zero minor exists in the class but no realization
  /// seen had one.
  std::vector<std::string> notes;
};

SeprSetEstimate sepr_set_estimate(const SignPattern& p, const SearchOptions& opt = {});

/// Symbols reachable at position k when every ambiguous k x k principal
/// subpattern independently takes any of +, -, 0.
std::vector<Symbol> upper_symbols(const TermVerdict& t);

struct Prediction {
  SeprSequence sequence;
  std::string rule;
};

std::optional<Prediction> predicted_sepr(const SignPattern& p);

struct LawReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Structural laws of sequences of sign semi-stable patterns.
LawReport check_sss_structure(const SeprSequence& s);

/// Pre: sign semi-stable (PreconditionError otherwise).
bool semirecog(const SignPattern& p);

/// Pre: simplified, sign semi-stable, digraph contains P_4 or a loop-ended
/// P_3. Returns the pattern with one extra arc closing a 4-cycle with
/// positive signed product or a 3-cycle with negative signed product.
SignPattern addcycle_witness(const SignPattern& p);

/// Necessary conditions for sequences of symmetric nonnegative matrices.
LawReport nonneg_start_check(const SeprSequence& s);

struct SymposClassification {
  std::string pair;
  /// 1..7 for the determined cases, 0 for the open pairs.
  int case_number = 0;
  std::string digraph;
  SeprSequence sequence;
};

/// Pre: symmetric, nonnegative, order >= 2. nullopt unless the pattern has
/// a unique sequence by the fixed-term condition. Throws InternalError when a
/// determined case does not match its digraph or sequence.
std::optional<SymposClassification> classify_symposunique(const SignPattern& p);

}  // namespace sepr
