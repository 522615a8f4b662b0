// Brute-force reference implementations. Deliberately naive: permutations,
// cofactor expansion, transitive closure. Only for small orders.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sepr/analysis.hpp"

namespace oracle {

using sepr::IndexSet;
using sepr::RationalMatrix;
using sepr::SeprSequence;
using sepr::Sign;
using sepr::SignPattern;
using sepr::Symbol;

inline int perm_parity(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv & 1;
}

// Leibniz formula.
inline mpq_class det(const RationalMatrix& m) {
  const int n = m.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    mpq_class term = perm_parity(perm) ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Sign sign(const mpq_class& q) { return q > 0 ? Sign::Plus : (q < 0 ? Sign::Minus : Sign::Zero); }

// The set {+, -, 0} -> symbol correspondence, written out from the glossary
// definitions rather than via the library.
inline Symbol symbol_of(bool plus, bool minus, bool zero) {
  if (!zero) return plus && minus ? Symbol::Ast : (plus ? Symbol::Ap : Symbol::Am);
  if (!plus && !minus) return Symbol::N;
  return plus && minus ? Symbol::Sst : (plus ? Symbol::Sp : Symbol::Sm);
}

inline void flags_of(Symbol s, bool& plus, bool& minus, bool& zero) {
  plus = s == Symbol::Ap || s == Symbol::Ast || s == Symbol::Sp || s == Symbol::Sst;
  minus = s == Symbol::Am || s == Symbol::Ast || s == Symbol::Sm || s == Symbol::Sst;
  zero = s == Symbol::N || s == Symbol::Sp || s == Symbol::Sm || s == Symbol::Sst;
}

// Sum of two minor families: union of their sign sets.
inline Symbol set_add(Symbol a, Symbol b) {
  bool ap, am, az, bp, bm, bz;
  flags_of(a, ap, am, az);
  flags_of(b, bp, bm, bz);
  return symbol_of(ap || bp, am || bm, az || bz);
}

// Product: every pairwise product of a sign from each set.
inline Symbol set_mul(Symbol a, Symbol b) {
  bool ap, am, az, bp, bm, bz;
  flags_of(a, ap, am, az);
  flags_of(b, bp, bm, bz);
  const bool plus = (ap && bp) || (am && bm);
  const bool minus = (ap && bm) || (am && bp);
  const bool zero = az || bz;
  return symbol_of(plus, minus, zero);
}

inline SeprSequence sepr(const RationalMatrix& m) {
  const int n = m.order();
  std::vector<Symbol> out;
  for (int k = 1; k <= n; ++k) {
    bool plus = false, minus = false, zero = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      const Sign s = sign(det(m.principal(IndexSet(mask))));
      plus |= s == Sign::Plus;
      minus |= s == Sign::Minus;
      zero |= s == Sign::Zero;
    }
    out.push_back(symbol_of(plus, minus, zero));
  }
  return SeprSequence(out);
}

struct TermSigns {
  bool plus = false;
  bool minus = false;
};

inline TermSigns det_terms(const SignPattern& p) {
  const int n = p.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  TermSigns t;
  do {
    int s = perm_parity(perm) ? -1 : 1;
    for (int i = 0; i < n; ++i) s *= static_cast<int>(p(i, perm[static_cast<std::size_t>(i)]));
    t.plus |= s > 0;
    t.minus |= s < 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

// Exhaustive Hall check: every row subset sees at least as many columns.
inline bool hall(const SignPattern& p) {
  const int n = p.rows();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t cols = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1U)
        for (int j = 0; j < p.cols(); ++j)
          if (p(i, j) != Sign::Zero) cols |= std::uint64_t{1} << j;
    if (std::popcount(cols) < std::popcount(mask)) return false;
  }
  return true;
}

inline std::vector<std::vector<bool>> reach(const SignPattern& p) {
  const int n = p.rows();
  std::vector<std::vector<bool>> r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    r[i][i] = true;
    for (int j = 0; j < n; ++j)
      if (p(i, j) != Sign::Zero) r[i][j] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

inline bool irreducible(const SignPattern& p) {
  const auto r = reach(p);
  for (const auto& row : r)
    for (bool b : row)
      if (!b) return false;
  return true;
}

// The fixed-term condition straight from the definition.
inline bool condition2(const SignPattern& p) {
  const int n = p.rows();
  for (int k = 1; k <= n; ++k) {
    bool all_signed = true, wp = false, wm = false, wz = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      const auto t = det_terms(p.principal(IndexSet(mask)));
      if (t.plus && t.minus) {
        all_signed = false;
        continue;
      }
      wp |= t.plus;
      wm |= t.minus;
      wz |= !t.plus && !t.minus;
    }
    if (!all_signed && !(wp && wm && wz)) return false;
  }
  return true;
}

inline SignPattern random_pattern(std::mt19937_64& rng, int n, double zero_weight = 1.0 / 3) {
  std::uniform_real_distribution<double> u(0, 1);
  SignPattern p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x = u(rng);
      p.set(i, j, x < zero_weight ? Sign::Zero : (x < (1 + zero_weight) / 2 ? Sign::Plus : Sign::Minus));
    }
  return p;
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, int n, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace oracle
