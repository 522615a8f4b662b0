#include "sepr/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "sepr/digraph.hpp"
#include "sepr/error.hpp"
#include "sepr/parallel.hpp"

namespace sepr {

namespace {

struct NamedConstraint {
  std::string_view name;
  Constraint bit;
};

constexpr NamedConstraint kConstraintNames[] = {
    {"symmetric", kSymmetric},          {"nonnegative", kNonnegative}, {"zero-diagonal", kZeroDiagonal},
    {"full-off-diagonal", kFullOffDiagonal}, {"semi-stable", kSemiStable}, {"irreducible", kIrreducible},
};

struct Cell {
  int i = 0;
  int j = 0;
  std::vector<Sign> values;
};

// Free cells in row-major order; for symmetric families only i <= j.
std::vector<Cell> free_cells(const PatternFamily& f) {
  const unsigned c = f.constraints;
  std::vector<Cell> cells;
  for (int i = 0; i < f.n; ++i) {
    for (int j = 0; j < f.n; ++j) {
      if ((c & kSymmetric) && j < i) continue;
      std::vector<Sign> v{Sign::Zero, Sign::Plus, Sign::Minus};
      auto drop = [&](Sign s) { v.erase(std::remove(v.begin(), v.end(), s), v.end()); };
      if (i == j) {
        if (c & kZeroDiagonal) v = {Sign::Zero};
        if (c & kNonnegative) drop(Sign::Minus);
        if (c & kSemiStable) drop(Sign::Plus);
      } else {
        // p_ij p_ji = p_ij^2 must not be +.
        if ((c & kSymmetric) && (c & kSemiStable)) v = {Sign::Zero};
        if (c & kFullOffDiagonal) drop(Sign::Zero);
        if (c & kNonnegative) drop(Sign::Minus);
      }
      cells.push_back(Cell{i, j, std::move(v)});
    }
  }
  return cells;
}

std::uint64_t space_of(const std::vector<Cell>& cells) {
  std::uint64_t total = 1;
  for (const auto& c : cells) {
    const std::uint64_t k = c.values.size();
    if (k == 0) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / k) return std::numeric_limits<std::uint64_t>::max();
    total *= k;
  }
  return total;
}

// Odometer over the raw space, last cell fastest.
class Walker {
 public:
  Walker(const PatternFamily& f, std::vector<Cell> cells)
      : f_(f), cells_(std::move(cells)), digits_(cells_.size(), 0), p_(f.n) {}

  void seek(std::uint64_t index) {
    for (std::size_t c = cells_.size(); c-- > 0;) {
      const std::uint64_t k = cells_[c].values.size();
      digits_[c] = static_cast<std::uint32_t>(index % k);
      index /= k;
    }
    for (std::size_t c = 0; c < cells_.size(); ++c) write(c);
  }

  void next() {
    for (std::size_t c = cells_.size(); c-- > 0;) {
      if (++digits_[c] < cells_[c].values.size()) {
        write(c);
        return;
      }
      digits_[c] = 0;
      write(c);
    }
  }

  const SignPattern& pattern() const { return p_; }

  bool accepted() const {
    const unsigned c = f_.constraints;
    if (c & kSemiStable) {
      for (int i = 0; i < f_.n; ++i)
        for (int j = i + 1; j < f_.n; ++j)
          if (p_(i, j) * p_(j, i) == Sign::Plus) return false;
      if (!is_sign_semi_stable(p_)) return false;
    }
    if ((c & kIrreducible) && !is_irreducible(p_)) return false;
    return true;
  }

 private:
  void write(std::size_t c) {
    const Cell& cell = cells_[c];
    const Sign s = cell.values[digits_[c]];
    p_.set(cell.i, cell.j, s);
    if (f_.constraints & kSymmetric) p_.set(cell.j, cell.i, s);
  }

  PatternFamily f_;
  std::vector<Cell> cells_;
  std::vector<std::uint32_t> digits_;
  SignPattern p_;
};

void check_family(const PatternFamily& f, std::uint64_t raw, std::uint64_t budget) {
  if (f.n < 1) throw PreconditionError("pattern family needs n >= 1");
  if (raw > budget)
    throw PreconditionError("enumeration budget exceeded: " + std::to_string(raw) + " raw assignments > " +
                            std::to_string(budget));
}

}  // namespace

unsigned parse_constraints(std::string_view csv) {
  unsigned out = 0;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', pos), csv.size());
    const std::string_view tok = csv.substr(pos, comma - pos);
    if (!tok.empty()) {
      bool found = false;
      for (const auto& nc : kConstraintNames) {
        if (nc.name == tok) {
          out |= nc.bit;
          found = true;
        }
      }
      if (!found) throw ParseError("unknown constraint '" + std::string(tok) + "'", 0, pos);
    }
    pos = comma + 1;
  }
  return out;
}

std::string constraints_str(unsigned constraints) {
  std::string out;
  for (const auto& nc : kConstraintNames) {
    if (!(constraints & nc.bit)) continue;
    if (!out.empty()) out += ',';
    out += nc.name;
  }
  return out;
}

std::uint64_t raw_space_size(const PatternFamily& f) { return space_of(free_cells(f)); }

void enumerate_patterns(const PatternFamily& f, const std::function<bool(const SignPattern&)>& fn,
                        std::uint64_t budget) {
  auto cells = free_cells(f);
  const std::uint64_t raw = space_of(cells);
  check_family(f, raw, budget);
  if (raw == 0) return;
  Walker w(f, std::move(cells));
  w.seek(0);
  for (std::uint64_t i = 0; i < raw; ++i) {
    if (i > 0) w.next();
    if (w.accepted() && !fn(w.pattern())) return;
  }
}

void enumerate_patterns_parallel(const PatternFamily& f, int threads,
                                 const std::function<void(const SignPattern&, int)>& fn, std::uint64_t budget) {
  const auto cells = free_cells(f);
  const std::uint64_t raw = space_of(cells);
  check_family(f, raw, budget);
  if (raw == 0) return;
  parallel_chunks(raw, threads, [&](std::uint64_t begin, std::uint64_t end, int worker) {
    if (begin == end) return;
    Walker w(f, cells);
    w.seek(begin);
    for (std::uint64_t i = begin; i < end; ++i) {
      if (i > begin) w.next();
      if (w.accepted()) fn(w.pattern(), worker);
    }
  });
}

std::uint64_t count_patterns(const PatternFamily& f, std::uint64_t budget) {
  std::uint64_t count = 0;
  enumerate_patterns(
      f,
      [&](const SignPattern&) {
        ++count;
        return true;
      },
      budget);
  return count;
}

void enumerate_simplified_semistable(int n, const std::function<bool(const SignPattern&)>& fn) {
  if (n < 1 || n > 6) throw PreconditionError("enumerate_simplified_semistable supports 1 <= n <= 6");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  for (std::uint64_t edges = 0; edges < subsets; ++edges) {
    // Union-find rejects edge sets containing a cycle.
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    std::vector<std::pair<int, int>> chosen;
    bool forest = true;
    for (std::size_t e = 0; e < pairs.size() && forest; ++e) {
      if (!((edges >> e) & 1U)) continue;
      const int a = find(pairs[e].first);
      const int b = find(pairs[e].second);
      if (a == b) forest = false;
      parent[static_cast<std::size_t>(a)] = b;
      chosen.push_back(pairs[e]);
    }
    if (!forest) continue;
    const std::uint64_t orient = std::uint64_t{1} << chosen.size();
    for (std::uint64_t o = 0; o < orient; ++o) {
      for (std::uint64_t d = 0; d < (std::uint64_t{1} << n); ++d) {
        SignPattern p(n);
        for (int i = 0; i < n; ++i)
          if ((d >> i) & 1U) p.set(i, i, Sign::Minus);
        for (std::size_t e = 0; e < chosen.size(); ++e) {
          const auto [i, j] = chosen[e];
          const bool flip = (o >> e) & 1U;
          p.set(i, j, flip ? Sign::Minus : Sign::Plus);
          p.set(j, i, flip ? Sign::Plus : Sign::Minus);
        }
        if (!fn(p)) return;
      }
    }
  }
}

}  // namespace sepr
