#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepr/pattern.hpp"

namespace sepr {

/// Gamma(P): arc (i, j) with sign p_ij for every nonzero entry. Loops are
/// the diagonal arcs.
class SignedDigraph {
 public:
  explicit SignedDigraph(SignPattern p);

  int order() const noexcept { return n_; }
  const SignPattern& pattern() const noexcept { return p_; }
  bool has_arc(int i, int j) const { return p_(i, j) != Sign::Zero; }
  Sign arc_sign(int i, int j) const { return p_(i, j); }
  bool has_loop(int i) const { return has_arc(i, i); }
  /// Heads of the non-loop arcs leaving i.
  std::uint64_t out_mask(int i) const { return out_[static_cast<std::size_t>(i)]; }
  /// Neighbours of i in the underlying loopless simple graph.
  std::uint64_t neighbours(int i) const { return und_[static_cast<std::size_t>(i)]; }
  int loop_count() const noexcept;
  /// Number of edges of the underlying loopless simple graph.
  int edge_count() const noexcept;
  /// Every non-loop arc has its reverse.
  bool is_doubly_directed() const noexcept;

  /// Graphviz rendering with arc labels "+" / "-".
  std::string to_dot(std::string_view name = "G") const;

 private:
  SignPattern p_;
  int n_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> und_;
};

/// Strong components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> strong_components(const SignedDigraph& g);

bool is_irreducible(const SignPattern& p);

/// Zeroes every entry whose arc joins two different strong components.
SignPattern simplify(const SignPattern& p);

struct SimpleCycle {
  std::vector<int> vertices;  // starts at the smallest vertex
  Sign product = Sign::Plus;
  /// (-)^(len+1) * product.
  Sign signed_product = Sign::Plus;
};

inline constexpr std::uint64_t kMaxSimpleCycles = 1'000'000;

/// Visits every simple cycle (loops included) of length <= max_length
/// once, until fn returns false. Throws PreconditionError after
/// kMaxSimpleCycles cycles.
void for_each_simple_cycle(const SignedDigraph& g, int max_length,
                           const std::function<bool(const SimpleCycle&)>& fn);

int max_simple_cycle_length(const SignedDigraph& g);

/// First simple cycle of length >= 3, if any.
std::optional<SimpleCycle> find_long_cycle(const SignedDigraph& g);

struct CycleReport {
  int max_simple_cycle_length = 0;
  std::vector<int> composite_cycle_orders;
  /// Order -> signs of the signed products of composite cycles of that order.
  std::map<int, SignSet> signed_product_signs_by_order;
};

CycleReport cycle_report(const SignedDigraph& g, int max_order);

struct StabilityVerdict {
  bool holds = false;
  /// Empty when holds; otherwise one of alpha, beta, gamma, delta, epsilon.
  std::string condition;
  std::string reason;
};

StabilityVerdict sign_semi_stability(const SignPattern& p);
inline bool is_sign_semi_stable(const SignPattern& p) { return sign_semi_stability(p).holds; }

inline constexpr int kStabilityMaxOrder = 20;

/// Irreducible input only (PreconditionError otherwise), n <= 20.
StabilityVerdict sign_stability_irreducible(const SignPattern& p);
inline bool is_sign_stable_irreducible(const SignPattern& p) { return sign_stability_irreducible(p).holds; }

inline constexpr int kMatchingMaxOrder = 20;

/// Matching number of the underlying loopless graph; n <= 20.
int matching_number(const SignedDigraph& g);

enum class CycleSignStructure {
  AllSignedCycleProductsPositive,
  AllCycleProductsNegative,
  /// Every signed product of a k-cycle is (-)^k. On simple cycles this is
  /// the same condition as AllCycleProductsNegative, which is reported
  /// instead.
  SignedProductsMatchParity,
  Mixed,
};

std::string_view to_string(CycleSignStructure s) noexcept;

/// Checked in the order Positive, Negative, Mixed; an acyclic digraph is
/// reported as AllSignedCycleProductsPositive.
CycleSignStructure classify_cycle_sign_structure(const SignPattern& p);

/// Underlying graph (ignoring loops) is connected and acyclic, every arc is
/// doubly directed. Order 1 counts.
bool is_strong_ditree(const SignedDigraph& g);
/// Every strong component is a strong ditree.
bool is_strong_diforest(const SignedDigraph& g);

enum class Family {
  Path,               // P_k
  PathLoopEnd,        // loop at vertex 1
  PathLoopBoth,       // loops at both ends
  PathLoopAll,        // loop everywhere
  Star,               // S_k, centre is vertex 1
  StarLoopCentre,     // loop on the centre
  LeafLoopStar,       // loop on every leaf, n >= 3
  Complete,           // K_n
  CompleteLoop,       // K_n plus a loop at vertex 1
  Cycle,              // directed n-cycle 1 -> 2 -> ... -> n -> 1
  CycleWithLoops,     // directed n-cycle, loops on vertices 1..loops
  DoublyDirectedCycle // underlying n-cycle, n >= 3
};

enum class SignRule {
  /// p_ij = + for i < j, - for i > j; loops -.
  Skew,
  /// Every arc +.
  Positive,
  /// Loops -, every other arc +.
  NegativeDiagonal,
};

std::string_view to_string(Family f) noexcept;
std::string_view to_string(SignRule r) noexcept;
std::optional<Family> family_from_string(std::string_view name);
std::optional<SignRule> sign_rule_from_string(std::string_view name);

/// `loops` is only read for CycleWithLoops. Throws PreconditionError on
/// invalid parameters.
SignPattern make_family(Family f, int k, SignRule rule, int loops = 0);

}  // namespace sepr
