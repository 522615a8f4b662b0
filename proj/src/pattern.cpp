#include "sepr/pattern.hpp"

#include <algorithm>

#include "sepr/error.hpp"

namespace sepr {

IndexSet IndexSet::full(int n) {
  if (n < 0 || n > 64) throw PreconditionError("IndexSet supports at most 64 indices");
  return IndexSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

IndexSet IndexSet::of(std::initializer_list<int> indices) {
  std::uint64_t m = 0;
  for (int i : indices) {
    if (i < 0 || i >= 64) throw PreconditionError("index out of range for IndexSet");
    m |= std::uint64_t{1} << i;
  }
  return IndexSet(m);
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string IndexSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

SignPattern::SignPattern(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative pattern dimension");
  entries_.assign(static_cast<std::size_t>(rows * cols), Sign::Zero);
}

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<std::vector<Sign>> rows;
  std::vector<std::size_t> line_numbers;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view raw = text.substr(pos, eol - pos);
    std::vector<Sign> row;
    for (std::size_t c = 0; c < raw.size(); ++c) {
      switch (raw[c]) {
        case '+': row.push_back(Sign::Plus); break;
        case '-': row.push_back(Sign::Minus); break;
        case '0': row.push_back(Sign::Zero); break;
        case ' ':
        case '\t':
        case '\r': break;
        default:
          throw ParseError("invalid character '" + std::string(1, raw[c]) + "' at line " +
                               std::to_string(line + 1) + ", column " + std::to_string(c + 1),
                           line, c);
      }
    }
    if (!row.empty()) {
      rows.push_back(std::move(row));
      line_numbers.push_back(line);
    }
    pos = eol + 1;
    ++line;
  }
  if (rows.empty()) throw ParseError("empty pattern", 0, 0);
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ParseError("shape mismatch: line " + std::to_string(line_numbers[i] + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n),
                       line_numbers[i], std::min(rows[i].size(), n));
    }
  }
  const int order = static_cast<int>(n);
  SignPattern p(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) p.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return p;
}

SignPattern SignPattern::from_rows(const std::vector<std::string>& rows) {
  std::string text;
  for (const auto& r : rows) text += r + "\n";
  return parse(text);
}

int SignPattern::order() const {
  if (!is_square()) throw PreconditionError("sign pattern is not square");
  return rows_;
}

SignPattern SignPattern::sub(IndexSet rows, IndexSet cols) const {
  const auto ri = rows.indices();
  const auto ci = cols.indices();
  if ((!ri.empty() && ri.back() >= rows_) || (!ci.empty() && ci.back() >= cols_))
    throw PreconditionError("subpattern index out of range");
  SignPattern out(static_cast<int>(ri.size()), static_cast<int>(ci.size()));
  for (std::size_t a = 0; a < ri.size(); ++a)
    for (std::size_t b = 0; b < ci.size(); ++b)
      out.set(static_cast<int>(a), static_cast<int>(b), (*this)(ri[a], ci[b]));
  return out;
}

SignPattern SignPattern::principal_complement(IndexSet alpha) const {
  const IndexSet rest = alpha.complement(order());
  return sub(rest, rest);
}

int SignPattern::nonzero_count() const noexcept {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](Sign s) { return s != Sign::Zero; }));
}

bool SignPattern::is_symmetric() const noexcept {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool SignPattern::is_nonnegative() const noexcept {
  return std::none_of(entries_.begin(), entries_.end(), [](Sign s) { return s == Sign::Minus; });
}

SignPattern SignPattern::transpose() const {
  SignPattern t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

std::vector<std::string> SignPattern::row_strings() const {
  std::vector<std::string> out;
  for (int i = 0; i < rows_; ++i) {
    std::string r;
    for (int j = 0; j < cols_; ++j) r += sign_char((*this)(i, j));
    out.push_back(std::move(r));
  }
  return out;
}

std::string SignPattern::str() const {
  std::string s;
  for (const auto& r : row_strings()) {
    if (!s.empty()) s += '\n';
    s += r;
  }
  return s;
}

SignPattern direct_sum(const SignPattern& a, const SignPattern& b) {
  const int n = a.order();
  const int m = b.order();
  SignPattern out(n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set(i, j, a(i, j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.set(n + i, n + j, b(i, j));
  return out;
}

DetSummary signed_det(const SignPattern& p) {
  const int n = p.order();
  if (n > kSignedDetMaxOrder) throw PreconditionError("signed_det: order exceeds 16");
  DetSummary d;
  if (n == 0) {
    d.value = AmbSign::Plus;
    d.has_positive_term = true;
    d.term_count_bound = 1;
    return d;
  }
  // Cheap exit: an all-zero row or column kills every term.
  const Bigraph g = bigraph(p);
  std::uint64_t cols = 0;
  for (auto a : g.adjacency) {
    if (a == 0) return d;
    cols |= a;
  }
  if (cols != IndexSet::full(n).mask()) return d;

  constexpr std::uint64_t kCap = std::uint64_t{1} << 32;
  for_each_nonzero_term(p, [&](const std::vector<int>&, Sign s) {
    (s == Sign::Plus ? d.has_positive_term : d.has_negative_term) = true;
    if (d.term_count_bound < kCap) ++d.term_count_bound;
    return !(d.has_positive_term && d.has_negative_term);
  });
  if (d.has_positive_term && d.has_negative_term)
    d.value = AmbSign::Ambiguous;
  else if (d.has_positive_term)
    d.value = AmbSign::Plus;
  else if (d.has_negative_term)
    d.value = AmbSign::Minus;
  return d;
}

bool is_ambiguous(const SignPattern& p) { return signed_det(p).value == AmbSign::Ambiguous; }

std::uint64_t Bigraph::neighborhood(IndexSet xs) const {
  std::uint64_t out = 0;
  for (int i : xs.indices()) out |= adjacency[static_cast<std::size_t>(i)];
  return out;
}

Bigraph bigraph(const SignPattern& p) {
  if (p.cols() > 64) throw PreconditionError("bigraph supports at most 64 columns");
  Bigraph g;
  g.left = p.rows();
  g.right = p.cols();
  g.adjacency.assign(static_cast<std::size_t>(p.rows()), 0);
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j)
      if (p(i, j) != Sign::Zero) g.adjacency[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  return g;
}

namespace {

bool augment(const Bigraph& g, int x, std::uint64_t& visited, std::vector<int>& match_of_y) {
  for (std::uint64_t m = g.adjacency[static_cast<std::size_t>(x)] & ~visited; m; m &= m - 1) {
    const int y = std::countr_zero(m);
    if ((visited >> y) & 1U) continue;
    visited |= std::uint64_t{1} << y;
    int& owner = match_of_y[static_cast<std::size_t>(y)];
    if (owner < 0 || augment(g, owner, visited, match_of_y)) {
      owner = x;
      return true;
    }
  }
  return false;
}

}  // namespace

int maximum_matching(const Bigraph& g) {
  std::vector<int> match_of_y(static_cast<std::size_t>(g.right), -1);
  int size = 0;
  for (int x = 0; x < g.left; ++x) {
    std::uint64_t visited = 0;
    if (augment(g, x, visited, match_of_y)) ++size;
  }
  return size;
}

bool has_perfect_matching(const Bigraph& g) { return maximum_matching(g) == g.left; }

}  // namespace sepr
