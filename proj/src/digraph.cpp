#include "sepr/digraph.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "sepr/error.hpp"

namespace sepr {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::string one_based(int i) { return std::to_string(i + 1); }

}  // namespace

SignedDigraph::SignedDigraph(SignPattern p) : p_(std::move(p)), n_(p_.order()) {
  if (n_ > 64) throw PreconditionError("digraphs support at most 64 vertices");
  out_.assign(static_cast<std::size_t>(n_), 0);
  und_.assign(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i == j || p_(i, j) == Sign::Zero) continue;
      out_[static_cast<std::size_t>(i)] |= bit(j);
      und_[static_cast<std::size_t>(i)] |= bit(j);
      und_[static_cast<std::size_t>(j)] |= bit(i);
    }
  }
}

int SignedDigraph::loop_count() const noexcept {
  int c = 0;
  for (int i = 0; i < n_; ++i) c += has_loop(i) ? 1 : 0;
  return c;
}

int SignedDigraph::edge_count() const noexcept {
  int twice = 0;
  for (auto m : und_) twice += std::popcount(m);
  return twice / 2;
}

bool SignedDigraph::is_doubly_directed() const noexcept {
  for (int i = 0; i < n_; ++i)
    if (out_[static_cast<std::size_t>(i)] != und_[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::string SignedDigraph::to_dot(std::string_view name) const {
  std::string s = "digraph " + std::string(name) + " {\n";
  for (int i = 0; i < n_; ++i) s += "  " + one_based(i) + ";\n";
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (has_arc(i, j))
        s += "  " + one_based(i) + " -> " + one_based(j) + " [label=\"" + sign_char(arc_sign(i, j)) + "\"];\n";
  return s + "}\n";
}

// ---------------------------------------------------------------------------
// Strong components (Tarjan).

namespace {

struct Tarjan {
  const SignedDigraph& g;
  std::vector<int> index, low;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  explicit Tarjan(const SignedDigraph& graph)
      : g(graph),
        index(static_cast<std::size_t>(graph.order()), -1),
        low(static_cast<std::size_t>(graph.order()), 0),
        on_stack(static_cast<std::size_t>(graph.order()), false) {}

  void visit(int v) {
    const auto uv = static_cast<std::size_t>(v);
    index[uv] = low[uv] = counter++;
    stack.push_back(v);
    on_stack[uv] = true;
    for (std::uint64_t m = g.out_mask(v); m; m &= m - 1) {
      const int w = std::countr_zero(m);
      const auto uw = static_cast<std::size_t>(w);
      if (index[uw] < 0) {
        visit(w);
        low[uv] = std::min(low[uv], low[uw]);
      } else if (on_stack[uw]) {
        low[uv] = std::min(low[uv], index[uw]);
      }
    }
    if (low[uv] == index[uv]) {
      std::vector<int> comp;
      int w = -1;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  }
};

}  // namespace

std::vector<std::vector<int>> strong_components(const SignedDigraph& g) {
  Tarjan t(g);
  for (int v = 0; v < g.order(); ++v)
    if (t.index[static_cast<std::size_t>(v)] < 0) t.visit(v);
  std::sort(t.comps.begin(), t.comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return std::move(t.comps);
}

bool is_irreducible(const SignPattern& p) {
  if (p.order() == 0) return false;
  return strong_components(SignedDigraph(p)).size() == 1;
}

SignPattern simplify(const SignPattern& p) {
  const SignedDigraph g(p);
  std::vector<int> comp_of(static_cast<std::size_t>(p.order()), -1);
  const auto comps = strong_components(g);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  SignPattern out = p;
  for (int i = 0; i < p.order(); ++i)
    for (int j = 0; j < p.order(); ++j)
      if (comp_of[static_cast<std::size_t>(i)] != comp_of[static_cast<std::size_t>(j)]) out.set(i, j, Sign::Zero);
  return out;
}

// ---------------------------------------------------------------------------
// Simple cycles.

namespace {

struct CycleWalker {
  const SignedDigraph& g;
  int max_length;
  const std::function<bool(const SimpleCycle&)>& fn;
  std::uint64_t found = 0;
  std::vector<int> path;
  int start = 0;

  bool emit(Sign product) {
    if (++found > kMaxSimpleCycles) throw PreconditionError("simple cycle enumeration exceeded 10^6 cycles");
    SimpleCycle c;
    c.vertices = path;
    c.product = product;
    c.signed_product = (path.size() % 2 == 0) ? -product : product;
    return fn(c);
  }

  // Extends a path start -> ... -> v using only vertices greater than start.
  bool extend(int v, std::uint64_t used, Sign product) {
    const std::uint64_t out = g.out_mask(v);
    if (path.size() >= 2 && ((out >> start) & 1U)) {
      if (!emit(product * g.arc_sign(v, start))) return false;
    }
    if (static_cast<int>(path.size()) >= max_length) return true;
    const std::uint64_t above = ~((bit(start) << 1) - 1);
    for (std::uint64_t m = out & above & ~used; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      path.push_back(w);
      const bool go_on = extend(w, used | bit(w), product * g.arc_sign(v, w));
      path.pop_back();
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_simple_cycle(const SignedDigraph& g, int max_length,
                           const std::function<bool(const SimpleCycle&)>& fn) {
  CycleWalker w{g, max_length, fn, 0, {}, 0};
  for (int s = 0; s < g.order(); ++s) {
    w.start = s;
    w.path = {s};
    if (max_length >= 1 && g.has_loop(s)) {
      if (!w.emit(g.arc_sign(s, s))) return;
    }
    if (max_length >= 2 && !w.extend(s, bit(s), Sign::Plus)) return;
  }
}

int max_simple_cycle_length(const SignedDigraph& g) {
  int best = 0;
  for_each_simple_cycle(g, g.order(), [&](const SimpleCycle& c) {
    best = std::max(best, static_cast<int>(c.vertices.size()));
    return best < g.order();
  });
  return best;
}

std::optional<SimpleCycle> find_long_cycle(const SignedDigraph& g) {
  std::optional<SimpleCycle> hit;
  for_each_simple_cycle(g, g.order(), [&](const SimpleCycle& c) {
    if (c.vertices.size() >= 3) {
      hit = c;
      return false;
    }
    return true;
  });
  return hit;
}

CycleReport cycle_report(const SignedDigraph& g, int max_order) {
  if (max_order < 0 || max_order > g.order()) throw PreconditionError("cycle_report: max_order out of range");
  CycleReport r;
  r.max_simple_cycle_length = max_simple_cycle_length(g);
  const SignPattern& p = g.pattern();
  for (int k = 1; k <= max_order; ++k) {
    SignSet signs;
    for_each_subset(g.order(), k, [&](IndexSet alpha) {
      const DetSummary d = signed_det(p.principal(alpha));
      if (d.has_positive_term) signs.add(Sign::Plus);
      if (d.has_negative_term) signs.add(Sign::Minus);
    });
    if (!signs.empty()) {
      r.composite_cycle_orders.push_back(k);
      r.signed_product_signs_by_order[k] = signs;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Stability.

StabilityVerdict sign_semi_stability(const SignPattern& p) {
  const int n = p.order();
  StabilityVerdict v;
  for (int i = 0; i < n; ++i) {
    if (p(i, i) == Sign::Plus) {
      v.condition = "alpha";
      v.reason = "p_" + one_based(i) + one_based(i) + " = +";
      return v;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p(i, j) * p(j, i) == Sign::Plus) {
        v.condition = "beta";
        v.reason = "p_" + one_based(i) + "," + one_based(j) + " * p_" + one_based(j) + "," + one_based(i) + " = +";
        return v;
      }
    }
  }
  if (auto c = find_long_cycle(SignedDigraph(p))) {
    v.condition = "gamma";
    v.reason = "cycle";
    for (int u : c->vertices) v.reason += " " + one_based(u);
    v.reason += " " + one_based(c->vertices.front());
    return v;
  }
  v.holds = true;
  return v;
}

StabilityVerdict sign_stability_irreducible(const SignPattern& p) {
  const int n = p.order();
  if (n > kStabilityMaxOrder) throw PreconditionError("sign stability test supports order <= 20");
  if (!is_irreducible(p)) throw PreconditionError("sign stability test requires an irreducible pattern");
  StabilityVerdict v = sign_semi_stability(p);
  if (!v.holds) return v;
  if (!signed_det(p).has_nonzero_term()) {
    v.holds = false;
    v.condition = "delta";
    v.reason = "combinatorially singular";
    return v;
  }
  const SignedDigraph g(p);
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n), 0);
  std::uint64_t loops = 0;
  for (int i = 0; i < n; ++i) {
    row[static_cast<std::size_t>(i)] = g.out_mask(i);
    if (g.has_loop(i)) loops |= bit(i);
  }
  const std::uint64_t all = IndexSet::full(n).mask();
  for (std::uint64_t beta = 1; beta <= all; ++beta) {
    if (beta & loops) continue;
    bool ok = true;
    for (std::uint64_t m = beta; m && ok; m &= m - 1)
      ok = (row[static_cast<std::size_t>(std::countr_zero(m))] & beta) != 0;
    for (std::uint64_t m = all & ~beta; m && ok; m &= m - 1)
      ok = std::popcount(row[static_cast<std::size_t>(std::countr_zero(m))] & beta) != 1;
    if (ok) {
      v.holds = false;
      v.condition = "epsilon";
      v.reason = "beta = " + IndexSet(beta).str();
      return v;
    }
  }
  return v;
}

int matching_number(const SignedDigraph& g) {
  const int n = g.order();
  if (n > kMatchingMaxOrder) throw PreconditionError("matching_number supports order <= 20");
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
  memo[0] = 0;
  // f(S) = max(f(S - v), 1 + f(S - v - u)) for the lowest v in S.
  std::function<int(std::uint64_t)> f = [&](std::uint64_t s) -> int {
    auto& slot = memo[static_cast<std::size_t>(s)];
    if (slot >= 0) return slot;
    const int v = std::countr_zero(s);
    const std::uint64_t rest = s & ~bit(v);
    int best = f(rest);
    for (std::uint64_t m = g.neighbours(v) & rest; m; m &= m - 1)
      best = std::max(best, 1 + f(rest & ~bit(std::countr_zero(m))));
    slot = static_cast<std::int8_t>(best);
    return best;
  };
  return f(IndexSet::full(n).mask());
}

std::string_view to_string(CycleSignStructure s) noexcept {
  switch (s) {
    case CycleSignStructure::AllSignedCycleProductsPositive: return "all-signed-cycle-products-positive";
    case CycleSignStructure::AllCycleProductsNegative: return "all-cycle-products-negative";
    case CycleSignStructure::SignedProductsMatchParity: return "signed-products-match-parity";
    default: return "mixed";
  }
}

CycleSignStructure classify_cycle_sign_structure(const SignPattern& p) {
  bool all_signed_positive = true;
  bool all_negative = true;
  for_each_simple_cycle(SignedDigraph(p), p.order(), [&](const SimpleCycle& c) {
    if (c.signed_product != Sign::Plus) all_signed_positive = false;
    if (c.product != Sign::Minus) all_negative = false;
    return all_signed_positive || all_negative;
  });
  if (all_signed_positive) return CycleSignStructure::AllSignedCycleProductsPositive;
  if (all_negative) return CycleSignStructure::AllCycleProductsNegative;
  return CycleSignStructure::Mixed;
}

namespace {

int underlying_component_count(const SignedDigraph& g) {
  const int n = g.order();
  std::uint64_t seen = 0;
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if ((seen >> s) & 1U) continue;
    ++comps;
    std::uint64_t frontier = bit(s);
    seen |= frontier;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.neighbours(std::countr_zero(m));
      frontier = next & ~seen;
      seen |= frontier;
    }
  }
  return comps;
}

}  // namespace

bool is_strong_diforest(const SignedDigraph& g) {
  return g.is_doubly_directed() && g.edge_count() == g.order() - underlying_component_count(g);
}

bool is_strong_ditree(const SignedDigraph& g) {
  return g.order() >= 1 && is_strong_diforest(g) && underlying_component_count(g) == 1;
}

// ---------------------------------------------------------------------------
// Families.

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 12> kFamilyNames = {{
    {Family::Path, "path"},
    {Family::PathLoopEnd, "path-loop-end"},
    {Family::PathLoopBoth, "path-loop-both"},
    {Family::PathLoopAll, "path-loop-all"},
    {Family::Star, "star"},
    {Family::StarLoopCentre, "star-loop-centre"},
    {Family::LeafLoopStar, "leaf-loop-star"},
    {Family::Complete, "complete"},
    {Family::CompleteLoop, "complete-loop"},
    {Family::Cycle, "cycle"},
    {Family::CycleWithLoops, "cycle-with-loops"},
    {Family::DoublyDirectedCycle, "doubly-directed-cycle"},
}};

constexpr std::array<std::pair<SignRule, std::string_view>, 3> kRuleNames = {{
    {SignRule::Skew, "skew"},
    {SignRule::Positive, "positive"},
    {SignRule::NegativeDiagonal, "negative-diagonal"},
}};

Sign rule_sign(SignRule rule, int i, int j) {
  switch (rule) {
    case SignRule::Skew: return i < j ? Sign::Plus : Sign::Minus;
    case SignRule::Positive: return Sign::Plus;
    default: return i == j ? Sign::Minus : Sign::Plus;
  }
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

std::string_view to_string(SignRule r) noexcept {
  for (const auto& [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  return std::nullopt;
}

std::optional<SignRule> sign_rule_from_string(std::string_view name) {
  for (const auto& [rule, n] : kRuleNames)
    if (n == name) return rule;
  return std::nullopt;
}

SignPattern make_family(Family f, int k, SignRule rule, int loops) {
  int min_k = 1;
  switch (f) {
    case Family::PathLoopBoth:
    case Family::Star:
    case Family::StarLoopCentre:
    case Family::Cycle:
    case Family::CycleWithLoops: min_k = 2; break;
    case Family::LeafLoopStar:
    case Family::DoublyDirectedCycle: min_k = 3; break;
    default: break;
  }
  if (k < min_k || k > 64)
    throw PreconditionError("family " + std::string(to_string(f)) + " needs order >= " + std::to_string(min_k));
  if (f == Family::CycleWithLoops && (loops < 1 || loops > k))
    throw PreconditionError("cycle-with-loops needs 1 <= loops <= order");

  SignPattern p(k);
  auto arc = [&](int i, int j) { p.set(i, j, rule_sign(rule, i, j)); };
  auto edge = [&](int i, int j) {
    arc(i, j);
    arc(j, i);
  };
  switch (f) {
    case Family::Path:
    case Family::PathLoopEnd:
    case Family::PathLoopBoth:
    case Family::PathLoopAll:
      for (int i = 0; i + 1 < k; ++i) edge(i, i + 1);
      if (f == Family::PathLoopEnd || f == Family::PathLoopBoth) arc(0, 0);
      if (f == Family::PathLoopBoth) arc(k - 1, k - 1);
      if (f == Family::PathLoopAll)
        for (int i = 0; i < k; ++i) arc(i, i);
      break;
    case Family::Star:
    case Family::StarLoopCentre:
    case Family::LeafLoopStar:
      for (int j = 1; j < k; ++j) edge(0, j);
      if (f == Family::StarLoopCentre) arc(0, 0);
      if (f == Family::LeafLoopStar)
        for (int j = 1; j < k; ++j) arc(j, j);
      break;
    case Family::Complete:
    case Family::CompleteLoop:
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edge(i, j);
      if (f == Family::CompleteLoop) arc(0, 0);
      break;
    case Family::Cycle:
    case Family::CycleWithLoops:
      for (int i = 0; i < k; ++i) arc(i, (i + 1) % k);
      if (f == Family::CycleWithLoops)
        for (int i = 0; i < loops; ++i) arc(i, i);
      break;
    case Family::DoublyDirectedCycle:
      for (int i = 0; i < k; ++i) edge(i, (i + 1) % k);
      break;
  }
  return p;
}

}  // namespace sepr
