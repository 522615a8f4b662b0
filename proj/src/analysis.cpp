#include "sepr/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>

#include "sepr/error.hpp"
#include "sepr/parallel.hpp"

namespace sepr {

std::string_view to_string(TermStatus s) noexcept {
  switch (s) {
    case TermStatus::FixedBySignedDets: return "FixedBySignedDets";
    case TermStatus::FixedSstarByWitnesses: return "FixedSstarByWitnesses";
    case TermStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(UniqueStatus s) noexcept {
  switch (s) {
    case UniqueStatus::UniqueByCondition2: return "UniqueByCondition2";
    case UniqueStatus::NotUnique: return "NotUnique";
    case UniqueStatus::NotUniquePending: return "NotUniquePending";
    case UniqueStatus::UnknownBeyondConjecture: return "UnknownBeyondConjecture";
  }
  return "?";
}

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

int sign_slot(Sign s) { return s == Sign::Plus ? 0 : (s == Sign::Minus ? 1 : 2); }

Sign amb_to_sign(AmbSign a) {
  switch (a) {
    case AmbSign::Plus: return Sign::Plus;
    case AmbSign::Minus: return Sign::Minus;
    default: return Sign::Zero;
  }
}

}  // namespace

TermVerdict fixed_term(const SignPattern& p, int k) {
  const int n = p.order();
  if (k < 1 || k > n) throw PreconditionError("fixed_term: k must satisfy 1 <= k <= n");
  TermVerdict t;
  t.k = k;
  for_each_subset(n, k, [&](IndexSet alpha) {
    const AmbSign v = signed_det(p.principal(alpha)).value;
    if (v == AmbSign::Ambiguous) {
      t.ambiguous.push_back(alpha);
      return;
    }
    const Sign s = amb_to_sign(v);
    t.signed_values.add(s);
    auto& w = t.witnesses[static_cast<std::size_t>(sign_slot(s))];
    if (!w) w = alpha;
  });
  if (t.ambiguous.empty()) {
    t.status = TermStatus::FixedBySignedDets;
    t.symbol = symbol_from_signs(t.signed_values);
  } else if (t.signed_values.bits == (SignSet::kZero | SignSet::kPlus | SignSet::kMinus)) {
    t.status = TermStatus::FixedSstarByWitnesses;
    t.symbol = Symbol::Sst;
  }
  return t;
}

std::vector<TermVerdict> fixed_terms(const SignPattern& p) {
  std::vector<TermVerdict> out;
  for (int k = 1; k <= p.order(); ++k) out.push_back(fixed_term(p, k));
  return out;
}

namespace {

std::optional<SeprSequence> sequence_of_terms(const std::vector<TermVerdict>& terms) {
  std::vector<Symbol> s;
  for (const auto& t : terms) {
    if (!t.fixed()) return std::nullopt;
    s.push_back(t.symbol);
  }
  return SeprSequence(std::move(s));
}

}  // namespace

std::optional<SeprSequence> condition2_sequence(const SignPattern& p) { return sequence_of_terms(fixed_terms(p)); }

// ---------------------------------------------------------------------------
// Targeted realizations

namespace {

RationalMatrix ones_realization(const SignPattern& p) {
  const int n = p.order();
  RationalMatrix b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = static_cast<int>(p(i, j));
  return b;
}

// First nonzero term of det P[alpha] with the given sign, as global cells.
std::optional<std::vector<std::pair<int, int>>> term_cells(const SignPattern& p, IndexSet alpha, Sign want) {
  const auto idx = alpha.indices();
  std::optional<std::vector<std::pair<int, int>>> out;
  for_each_nonzero_term(p.principal(alpha), [&](const std::vector<int>& perm, Sign s) {
    if (s != want) return true;
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < perm.size(); ++r)
      cells.emplace_back(idx[r], idx[static_cast<std::size_t>(perm[r])]);
    out = std::move(cells);
    return false;
  });
  return out;
}

mpq_class factorial_plus_one(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return mpq_class(f + 1);
}

// Moves from `from` towards `to` one cell at a time and stops at the first
// point where det B[alpha] vanishes. det is affine in each single entry, so
// the crossing point is found exactly. Requires opposite nonzero signs at
// the two ends.
RationalMatrix zero_minor_between(const RationalMatrix& from, const RationalMatrix& to, IndexSet alpha) {
  RationalMatrix c = from;
  mpq_class f0 = determinant(c.principal(alpha));
  for (int i : alpha.indices()) {
    for (int j : alpha.indices()) {
      if (c(i, j) == to(i, j)) continue;
      const mpq_class c0 = c(i, j);
      RationalMatrix next = c;
      next(i, j) = to(i, j);
      const mpq_class f1 = determinant(next.principal(alpha));
      if (sgn(f1) == 0) return next;
      if (sgn(f0) != sgn(f1)) {
        const mpq_class slope = (f1 - f0) / (to(i, j) - c0);
        c(i, j) = c0 - f0 / slope;
        return c;
      }
      c = std::move(next);
      f0 = f1;
    }
  }
  throw InternalError("zero_minor_between: endpoints do not change sign");
}

}  // namespace

std::vector<Witness> targeted_realizations(const SignPattern& p) {
  const int n = p.order();
  std::vector<Witness> out;
  auto add = [&](RationalMatrix m, std::string source) {
    out.push_back(Witness{std::move(m), SeprSequence{}, std::move(source)});
  };
  if (n <= kAllNonzeroMaxOrder) add(allnonzero_realization(p), "allnonzero");
  const RationalMatrix ones = ones_realization(p);
  add(ones, "ones");

  const auto terms = fixed_terms(p);
  const mpq_class big = factorial_plus_one(n);
  for (const auto& t : terms) {
    if (t.fixed()) continue;
    const std::size_t limit = std::min<std::size_t>(t.ambiguous.size(), 16);
    for (std::size_t a = 0; a < limit; ++a) {
      const IndexSet alpha = t.ambiguous[a];
      std::array<RationalMatrix, 2> dom;
      for (int s = 0; s < 2; ++s) {
        const Sign want = s == 0 ? Sign::Plus : Sign::Minus;
        const auto cells = term_cells(p, alpha, want);
        if (!cells) throw InternalError("ambiguous subpattern without a term of each sign");
        dom[static_cast<std::size_t>(s)] = ones;
        for (auto [i, j] : *cells) dom[static_cast<std::size_t>(s)](i, j) *= big;
        add(dom[static_cast<std::size_t>(s)],
            "dominant" + std::string(1, sign_char(want)) + alpha.str());
      }
      add(zero_minor_between(dom[0], dom[1], alpha), "zero" + alpha.str());
    }
    if (t.k == 2) {
      // |b_ii b_jj| = 1 in the all-ones base; scale b_ji so |b_ij b_ji|
      // lands above, below or on it for every ambiguous 2x2 at once.
      for (const mpq_class& scale : {mpq_class(2), mpq_class(1, 2), mpq_class(1)}) {
        RationalMatrix m = ones;
        for (IndexSet alpha : t.ambiguous) {
          const auto idx = alpha.indices();
          m(idx[1], idx[0]) *= scale;
        }
        add(std::move(m), "pair-scale " + scale.get_str());
      }
    }
  }
  for (auto& w : out) w.sequence = sepr_of_matrix(w.matrix);
  return out;
}

// ---------------------------------------------------------------------------

UniqueVerdict unique_verdict(const SignPattern& p, const SearchOptions& opt) {
  const int n = p.order();
  UniqueVerdict v;
  v.terms = fixed_terms(p);
  if (auto s = sequence_of_terms(v.terms)) {
    v.status = UniqueStatus::UniqueByCondition2;
    v.sequence = std::move(s);
    return v;
  }

  auto consider = [&](Witness w) {
    ++v.candidates_tried;
    if (v.witnesses.empty()) {
      v.witnesses.push_back(std::move(w));
      return false;
    }
    if (w.sequence == v.witnesses.front().sequence) return false;
    v.witnesses.push_back(std::move(w));
    return true;
  };

  for (auto& w : targeted_realizations(p)) {
    if (consider(std::move(w))) {
      v.status = UniqueStatus::NotUnique;
      return v;
    }
  }

  // Seeded grid realizations, evaluated in fixed-size blocks so the first
  // differing index is the same for any thread count.
  const GridRealizer r(p, opt.grid, opt.budget, opt.seed);
  constexpr std::uint64_t kBlock = 2048;
  std::vector<SeprSequence> block;
  for (std::uint64_t start = 0; start < r.count(); start += kBlock) {
    const std::uint64_t len = std::min(kBlock, r.count() - start);
    block.assign(len, SeprSequence{});
    parallel_chunks(len, opt.threads, [&](std::uint64_t b, std::uint64_t e, int) {
      std::vector<std::int64_t> buf(static_cast<std::size_t>(n * n));
      for (std::uint64_t i = b; i < e; ++i) {
        r.scaled_at(start + i, buf);
        block[i] = sepr_of_int_matrix(buf, n);
      }
    });
    for (std::uint64_t i = 0; i < len; ++i) {
      if (block[i] == v.witnesses.front().sequence) {
        ++v.candidates_tried;
        continue;
      }
      if (consider(Witness{r.at(start + i), block[i], "grid #" + std::to_string(start + i)})) {
        v.status = UniqueStatus::NotUnique;
        return v;
      }
    }
  }

  std::ostringstream msg;
  msg << "the fixed-term condition fails but " << v.candidates_tried
      << " realizations gave a single sequence; enlarge the grid or the budget";
  if (n <= 4) {
    v.status = UniqueStatus::NotUniquePending;
  } else {
    v.status = UniqueStatus::UnknownBeyondConjecture;
    msg.str("");
    msg << "order " << n << ": the fixed-term condition fails and no second sequence was found in " << v.candidates_tried
        << " realizations";
  }
  v.warning = msg.str();
  return v;
}

// ---------------------------------------------------------------------------

std::vector<Symbol> upper_symbols(const TermVerdict& t) {
  const int a = static_cast<int>(t.ambiguous.size());
  if (a == 0) return {symbol_from_signs(t.signed_values)};
  std::set<Symbol> syms;
  for (std::uint8_t extra = 1; extra < 8; ++extra) {
    if (std::popcount(extra) > std::min(a, 3)) continue;
    SignSet s = t.signed_values;
    s.bits |= extra;
    syms.insert(symbol_from_signs(s));
  }
  std::vector<Symbol> out;
  for (Symbol s : kAllSymbols)
    if (syms.count(s)) out.push_back(s);
  return out;
}

SeprSetEstimate sepr_set_estimate(const SignPattern& p, const SearchOptions& opt) {
  const int n = p.order();
  SeprSetEstimate est;
  const GridRealizer r(p, opt.grid, opt.budget, opt.seed);
  const SeprSweep sweep = sweep_sepr(r, opt.threads);
  est.grid_exhaustive = sweep.exhaustive;
  est.visited = sweep.visited;
  for (const auto& [seq, index] : sweep.first_index)
    est.lower.emplace(seq, Witness{r.at(index), seq, "grid #" + std::to_string(index)});
  if (n <= kAllNonzeroMaxOrder) {
    RationalMatrix b = allnonzero_realization(p);
    SeprSequence s = sepr_of_matrix(b);
    ++est.visited;
    est.lower.emplace(s, Witness{std::move(b), s, "allnonzero"});
  }

  const auto terms = fixed_terms(p);
  std::size_t product = 1;
  bool tight = true;
  for (const auto& t : terms) {
    est.upper_per_position.push_back(upper_symbols(t));
    const auto& up = est.upper_per_position.back();
    product *= up.size();
    std::set<Symbol> seen;
    for (const auto& [seq, w] : est.lower) seen.insert(seq.term(static_cast<std::size_t>(t.k)));
    if (seen != std::set<Symbol>(up.begin(), up.end())) tight = false;
    // An ambiguous minor passes through zero somewhere in the class, but
    // possibly only at irrational magnitudes.
    const bool zero_seen = std::any_of(seen.begin(), seen.end(), [](Symbol y) { return signs_of(y).has(Sign::Zero); });
    if (!t.ambiguous.empty() && !zero_seen)
      est.notes.push_back("t_" + std::to_string(t.k) + ": zero attainable by continuity (not witnessed)");
  }
  est.tight = tight && est.lower.size() == product;
  return est;
}

// ---------------------------------------------------------------------------
// Predictions for structured digraphs

namespace {

Symbol a_symbol(Sign s) { return s == Sign::Plus ? Symbol::Ap : Symbol::Am; }

// Vertex order of a directed Hamiltonian cycle made of the non-loop arcs,
// when those arcs form exactly such a cycle.
std::optional<std::vector<int>> hamiltonian_cycle(const SignedDigraph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  std::vector<int> in(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (std::popcount(g.out_mask(i)) != 1) return std::nullopt;
    ++in[static_cast<std::size_t>(std::countr_zero(g.out_mask(i)))];
  }
  for (int d : in)
    if (d != 1) return std::nullopt;
  std::vector<int> order{0};
  for (int v = std::countr_zero(g.out_mask(0)); v != 0; v = std::countr_zero(g.out_mask(v))) order.push_back(v);
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

// Underlying graph is a single cycle through every vertex, n >= 3.
std::optional<std::vector<int>> undirected_cycle(const SignedDigraph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (std::popcount(g.neighbours(i)) != 2) return std::nullopt;
  std::vector<int> order{0};
  int prev = 0;
  int cur = std::countr_zero(g.neighbours(0));
  while (cur != 0) {
    order.push_back(cur);
    const std::uint64_t next = g.neighbours(cur) & ~bit(prev);
    prev = cur;
    cur = std::countr_zero(next);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

Sign product_along(const SignPattern& p, const std::vector<int>& cyc) {
  Sign s = Sign::Plus;
  for (std::size_t i = 0; i < cyc.size(); ++i) s = s * p(cyc[i], cyc[(i + 1) % cyc.size()]);
  return s;
}

Sign parity_sign(int k) { return k % 2 == 0 ? Sign::Plus : Sign::Minus; }

std::optional<Prediction> predict_cycle_family(const SignPattern& p, const SignedDigraph& g) {
  const int n = p.order();
  const auto cyc = hamiltonian_cycle(g);
  if (!cyc) return std::nullopt;
  const Sign x = parity_sign(n + 1) * product_along(p, *cyc);
  std::vector<int> loops;
  for (int i = 0; i < n; ++i)
    if (g.has_loop(i)) loops.push_back(i);
  const int l = static_cast<int>(loops.size());

  // k-subset products of the loop signs.
  auto loop_products = [&](int k) {
    SignSet s;
    for_each_subset(l, k, [&](IndexSet sub) {
      Sign prod = Sign::Plus;
      for (int i : sub.indices()) prod = prod * p(loops[static_cast<std::size_t>(i)], loops[static_cast<std::size_t>(i)]);
      s.add(prod);
    });
    return s;
  };

  std::vector<Symbol> t;
  if (l == 0) {
    t.assign(static_cast<std::size_t>(n - 1), Symbol::N);
    t.push_back(a_symbol(x));
    return Prediction{SeprSequence(std::move(t)), "n-cycle"};
  }
  if (l < n) {
    for (int k = 1; k < n; ++k) {
      if (k <= l) {
        SignSet s = loop_products(k);
        s.add(Sign::Zero);
        t.push_back(symbol_from_signs(s));
      } else {
        t.push_back(Symbol::N);
      }
    }
    t.push_back(a_symbol(x));
    return Prediction{SeprSequence(std::move(t)), "n-cycle with loops"};
  }
  const SignSet all = loop_products(n);
  if (!all.has(x)) return std::nullopt;
  for (int k = 1; k <= n; ++k) t.push_back(symbol_from_signs(loop_products(k)));
  return Prediction{SeprSequence(std::move(t)), "n-cycle with all loops"};
}

std::optional<Prediction> predict_doubly_directed_cycle(const SignPattern& p, const SignedDigraph& g) {
  const int n = p.order();
  if (g.loop_count() != 0 || !g.is_doubly_directed()) return std::nullopt;
  const auto cyc = undirected_cycle(g);
  if (!cyc) return std::nullopt;
  bool skew = true;
  bool symmetric = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!g.has_arc(i, j)) continue;
      if (p(i, j) != -p(j, i)) skew = false;
      if (p(i, j) != p(j, i)) symmetric = false;
    }
  }
  std::vector<Symbol> t;
  if (skew && n % 2 == 0 && product_along(p, *cyc) == Sign::Minus) {
    for (int k = 1; k < n - 1; ++k) t.push_back(k % 2 == 1 ? Symbol::N : Symbol::Sp);
    t.push_back(Symbol::N);
    t.push_back(Symbol::Ap);
    return Prediction{SeprSequence(std::move(t)), "skew doubly directed even cycle"};
  }
  if (symmetric && n % 2 == 1) {
    const int s = (n - 1) / 2;
    const Sign x = product_along(p, *cyc);
    const int reps = s % 2 == 0 ? (s - 2) / 2 : (s - 1) / 2;
    for (int r = 0; r < reps; ++r)
      for (Symbol y : {Symbol::N, Symbol::Sm, Symbol::N, Symbol::Sp}) t.push_back(y);
    if (s % 2 == 0) {
      for (Symbol y : {Symbol::N, Symbol::Sm, Symbol::N, Symbol::Ap}) t.push_back(y);
    } else {
      t.push_back(Symbol::N);
      t.push_back(Symbol::Am);
    }
    t.push_back(a_symbol(x));
    return Prediction{SeprSequence(std::move(t)), "symmetric doubly directed odd cycle"};
  }
  return std::nullopt;
}

bool all_cycle_products_negative(const SignedDigraph& g) {
  bool ok = true;
  for_each_simple_cycle(g, g.order(), [&](const SimpleCycle& c) {
    if (c.product != Sign::Minus) ok = false;
    return ok;
  });
  return ok;
}

}  // namespace

std::optional<Prediction> predicted_sepr(const SignPattern& p) {
  const int n = p.order();
  const SignedDigraph g(p);
  if (auto c = predict_cycle_family(p, g)) return c;
  if (auto c = predict_doubly_directed_cycle(p, g)) return c;
  if (g.loop_count() <= 1 && is_strong_ditree(g)) {
    if (auto s = condition2_sequence(p)) return Prediction{*s, "strong ditree with at most one loop"};
  }
  bool zero_diagonal = g.loop_count() == 0;
  if (zero_diagonal && n <= kMatchingMaxOrder && is_sign_semi_stable(p)) {
    const SignedDigraph h(simplify(p));
    const int mu = matching_number(h);
    std::vector<Symbol> t;
    for (int k = 1; k <= n; ++k) {
      if (k % 2 == 1 || k > 2 * mu) {
        t.push_back(Symbol::N);
      } else {
        t.push_back(k == n ? Symbol::Ap : Symbol::Sp);
      }
    }
    return Prediction{SeprSequence(std::move(t)), "semi-stable zero diagonal"};
  }
  if (all_cycle_products_negative(g)) {
    if (auto s = condition2_sequence(p)) {
      for (std::size_t k = 1; k <= s->size(); ++k) {
        const Symbol y = s->term(k);
        const bool even = k % 2 == 0;
        if (y != Symbol::N && y != (even ? Symbol::Sp : Symbol::Sm) && y != (even ? Symbol::Ap : Symbol::Am))
          throw InternalError("all-negative cycle products gave " + s->str() + " with wrong parity");
      }
      return Prediction{*s, "all cycle products negative"};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Laws for semi-stable sequences

LawReport check_sss_structure(const SeprSequence& s) {
  LawReport r;
  const std::size_t n = s.size();
  auto flag = [&](std::string law) {
    if (std::find(r.violations.begin(), r.violations.end(), law) == r.violations.end())
      r.violations.push_back(std::move(law));
  };
  for (std::size_t k = 1; k <= n; ++k) {
    const Symbol y = s.term(k);
    const bool ok = k % 2 == 0 ? (y == Symbol::N || y == Symbol::Sp || y == Symbol::Ap)
                               : (y == Symbol::N || y == Symbol::Sm || y == Symbol::Am);
    if (!ok) flag("parity");
  }
  for (std::size_t k = 1; k < n; ++k) {
    const Symbol y = s.term(k);
    if (y != Symbol::Ap && y != Symbol::Am) continue;
    const Symbol z = s.term(k + 1);
    if (z != (y == Symbol::Ap ? Symbol::Am : Symbol::Ap)) flag("a-persistence");
  }
  for (std::size_t k = 1; k <= n; ++k) {
    if (s.term(k) != Symbol::N) continue;
    if (k + 2 <= n && s.term(k + 2) != Symbol::N) flag("n-persistence");
    if (k % 2 == 0)
      for (std::size_t j = k + 1; j <= n; ++j)
        if (s.term(j) != Symbol::N) flag("n-persistence");
  }
  if (n >= 2 && is_s_family(s.term(1)) && s.term(n - 1) == Symbol::N && is_a_family(s.term(n)) &&
      s.term(n) != Symbol::Ast)
    flag("sss-no");
  return r;
}

bool semirecog(const SignPattern& p) {
  if (!is_sign_semi_stable(p)) throw PreconditionError("semirecog needs a sign semi-stable pattern");
  const int n = p.order();
  if (n <= 2) return true;
  const auto s = condition2_sequence(p);
  if (!s) throw InternalError("sign semi-stable pattern without fixed terms");
  for (std::size_t k = 3; k <= s->size(); ++k)
    if (s->term(k) != Symbol::N) return false;
  return true;
}

SignPattern addcycle_witness(const SignPattern& p) {
  if (simplify(p) != p) throw PreconditionError("addcycle_witness needs a simplified pattern");
  if (!is_sign_semi_stable(p)) throw PreconditionError("addcycle_witness needs a sign semi-stable pattern");
  const SignedDigraph g(p);
  const int n = g.order();
  // P_4 as u - v - x - y.
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!((g.neighbours(u) >> v) & 1U)) continue;
      for (int x = 0; x < n; ++x) {
        if (x == u || !((g.neighbours(v) >> x) & 1U)) continue;
        for (int y = 0; y < n; ++y) {
          if (y == u || y == v || !((g.neighbours(x) >> y) & 1U)) continue;
          SignPattern q = p;
          q.set(y, u, -(p(u, v) * p(v, x) * p(x, y)));
          return q;
        }
      }
    }
  // Loop-ended P_3 as u - v - x with a loop at x.
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!((g.neighbours(u) >> v) & 1U)) continue;
      for (int x = 0; x < n; ++x) {
        if (x == u || !g.has_loop(x) || !((g.neighbours(v) >> x) & 1U)) continue;
        SignPattern q = p;
        q.set(x, u, -(p(u, v) * p(v, x)));
        return q;
      }
    }
  throw PreconditionError("digraph contains neither P_4 nor a loop-ended P_3");
}

// ---------------------------------------------------------------------------
// Symmetric nonnegative

LawReport nonneg_start_check(const SeprSequence& s) {
  LawReport r;
  const std::size_t n = s.size();
  auto flag = [&](std::string law) {
    if (std::find(r.violations.begin(), r.violations.end(), law) == r.violations.end())
      r.violations.push_back(std::move(law));
  };
  auto at = [&](std::size_t k) { return s.term(k); };
  if (n == 0) return r;
  const Symbol t1 = at(1);
  if (t1 != Symbol::Ap && t1 != Symbol::N && t1 != Symbol::Sp) flag("start");
  if (n >= 2) {
    const Symbol t2 = at(2);
    if (t1 == Symbol::Ap && t2 == Symbol::N)
      for (std::size_t k = 3; k <= n; ++k)
        if (at(k) != Symbol::N) flag("A+N");
    if (t1 == Symbol::N && t2 == Symbol::Am && n >= 3 && at(3) != Symbol::Ap) flag("NA-");
    if (t1 == Symbol::N && t2 == Symbol::Sm && n >= 3) {
      if (at(3) != Symbol::Sp && at(3) != Symbol::N) flag("NS-");
      if (n == 3 && at(3) != Symbol::N) flag("NS-");
    }
    if (t1 == Symbol::N && n >= 3) {
      const std::string triple = SeprSequence({at(1), at(2), at(3)}).str();
      if (triple != "NA-A+" && triple != "NS-N" && triple != "NS-S+" && triple != "NNN") flag("N-triple");
    }
    const std::string start = SeprSequence({t1, t2}).str();
    for (const char* bad : {"NA*", "NA+", "NS*", "NS+", "S+A+"})
      if (start == bad) flag("start-" + start);
  }
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    if (at(k) == Symbol::N && at(k + 1) == Symbol::N)
      for (std::size_t j = k + 2; j <= n; ++j)
        if (at(j) != Symbol::N) flag("NN");
    if (at(k) == Symbol::Ast && at(k + 1) == Symbol::N) flag("A*N");
    if (at(k) == Symbol::N && at(k + 1) == Symbol::Ast) flag("NA*");
    if (k + 2 <= n && at(k) == Symbol::Sst && at(k + 1) == Symbol::N && at(k + 2) == Symbol::N) flag("S*NN");
  }
  return r;
}

namespace {

bool no_edges(const SignedDigraph& g) { return g.edge_count() == 0; }

std::string repeat(std::string_view s, int k) {
  std::string out;
  for (int i = 0; i < k; ++i) out += s;
  return out;
}

}  // namespace

std::optional<SymposClassification> classify_symposunique(const SignPattern& p) {
  if (!p.is_symmetric() || !p.is_nonnegative())
    throw PreconditionError("classify_symposunique needs a symmetric nonnegative pattern");
  const int n = p.order();
  if (n < 2) throw PreconditionError("classify_symposunique needs order >= 2");
  const auto seq = condition2_sequence(p);
  if (!seq) return std::nullopt;
  const SignedDigraph g(p);
  SymposClassification c;
  c.sequence = *seq;
  c.pair = SeprSequence({seq->term(1), seq->term(2)}).str();
  const int loops = g.loop_count();
  const std::string s = seq->str();

  auto expect = [&](int number, std::string digraph, bool shape_ok, const std::string& want) {
    c.case_number = number;
    c.digraph = std::move(digraph);
    if (!shape_ok || s != want)
      throw InternalError("pair " + c.pair + " (case " + std::to_string(number) + "): digraph or sequence mismatch, got " +
                          s + ", expected " + want);
  };

  if (c.pair == "A+A+") {
    expect(1, std::to_string(n) + " looped P1", loops == n && no_edges(g), repeat("A+", n));
  } else if (c.pair == "NA-") {
    const bool complete = loops == 0 && g.edge_count() == n * (n - 1) / 2;
    if (n == 2) expect(2, "K2", complete, "NA-");
    else expect(2, "K3", n == 3 && complete, "NA-A+");
  } else if (c.pair == "NN") {
    expect(3, "empty", p.nonzero_count() == 0, repeat("N", n));
  } else if (c.pair == "S+A*") {
    int centre = -1;
    for (int i = 0; i < n; ++i)
      if (!g.has_loop(i)) centre = i;
    const bool shape = n >= 3 && loops == n - 1 && centre >= 0 && g.edge_count() == n - 1 &&
                       std::popcount(g.neighbours(centre)) == n - 1;
    expect(4, "leaf-loop-star", shape, "S+" + repeat("A*", n - 2) + "A-");
  } else if (c.pair == "S+A-") {
    expect(5, "K2 with one loop", n == 2 && loops == 1 && g.edge_count() == 1, "S+A-");
  } else if (c.pair == "S+N") {
    expect(6, "looped P1 plus isolated vertices", loops == 1 && no_edges(g), "S+" + repeat("N", n - 1));
  } else if (c.pair == "S+S+") {
    expect(7, std::to_string(loops) + " looped P1 plus isolated vertices", loops >= 2 && loops < n && no_edges(g),
           repeat("S+", loops) + repeat("N", n - loops));
  } else if (c.pair == "NS-" || c.pair == "S+S-" || c.pair == "S+S*") {
    c.case_number = 0;
    c.digraph = "open";
  } else {
    throw InternalError("unexpected initial pair " + c.pair + " for a unique symmetric nonnegative pattern");
  }
  return c;
}

}  // namespace sepr
