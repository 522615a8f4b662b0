#include "sepr/rational.hpp"

#include <array>
#include <cctype>

#include "sepr/error.hpp"

namespace sepr {

namespace {
__extension__ typedef __int128 i128;
}  // namespace

mpq_class parse_rational(std::string_view text, std::size_t line, std::size_t column) {
  auto fail = [&]() -> mpq_class {
    throw ParseError("invalid rational '" + std::string(text) + "' at line " + std::to_string(line + 1) +
                         ", column " + std::to_string(column + 1),
                     line, column);
  };
  if (text.empty()) return fail();
  std::string s(text);
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  mpq_class q;
  const auto slash = s.find('/');
  const auto dot = s.find('.');
  if (slash != std::string::npos) {
    if (!digits(i, slash) || !digits(slash + 1, s.size())) return fail();
    const mpz_class num(s.substr(i, slash - i), 10);
    const mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) return fail();
    q = mpq_class(num, den);
  } else if (dot != std::string::npos) {
    const bool int_ok = dot == i || digits(i, dot);
    const bool frac_ok = dot + 1 == s.size() || digits(dot + 1, s.size());
    if (!int_ok || !frac_ok || (dot == i && dot + 1 == s.size())) return fail();
    const std::string whole = dot == i ? "0" : s.substr(i, dot - i);
    const std::string frac = s.substr(dot + 1);
    mpz_class den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    q = mpq_class(mpz_class(whole + frac, 10), den);
  } else {
    if (!digits(i, s.size())) return fail();
    q = mpq_class(mpz_class(s.substr(i), 10));
  }
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

Sign sign_of(const mpq_class& q) noexcept {
  const int s = sgn(q);
  return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero);
}

Sign sign_of(const mpz_class& z) noexcept {
  const int s = sgn(z);
  return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero);
}

RationalMatrix::RationalMatrix(int n) : n_(n) {
  if (n < 0) throw PreconditionError("negative matrix order");
  e_.assign(static_cast<std::size_t>(n * n), mpq_class(0));
}

RationalMatrix RationalMatrix::parse(std::string_view text) {
  std::vector<std::vector<mpq_class>> rows;
  std::vector<std::size_t> line_of;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view raw = text.substr(pos, eol - pos);
    std::vector<mpq_class> row;
    std::size_t c = 0;
    while (c < raw.size()) {
      while (c < raw.size() && (raw[c] == ' ' || raw[c] == '\t' || raw[c] == '\r' || raw[c] == ',')) ++c;
      if (c >= raw.size()) break;
      std::size_t end = c;
      while (end < raw.size() && raw[end] != ' ' && raw[end] != '\t' && raw[end] != '\r' && raw[end] != ',') ++end;
      row.push_back(parse_rational(raw.substr(c, end - c), line, c));
      c = end;
    }
    if (!row.empty()) {
      rows.push_back(std::move(row));
      line_of.push_back(line);
    }
    pos = eol + 1;
    ++line;
  }
  if (rows.empty()) throw ParseError("empty matrix", 0, 0);
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != n)
      throw ParseError("shape mismatch: line " + std::to_string(line_of[i] + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n),
                       line_of[i], 0);
  RationalMatrix m(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

RationalMatrix RationalMatrix::from_strings(
    std::initializer_list<std::initializer_list<std::string_view>> rows) {
  const int n = static_cast<int>(rows.size());
  RationalMatrix m(n);
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw PreconditionError("from_strings: ragged rows");
    int j = 0;
    for (auto lit : r) {
      m(i, j) = parse_rational(lit, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      ++j;
    }
    ++i;
  }
  return m;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::sub(IndexSet rows, IndexSet cols) const {
  const auto ri = rows.indices();
  const auto ci = cols.indices();
  if (ri.size() != ci.size()) throw PreconditionError("RationalMatrix::sub needs equal-size index sets");
  if ((!ri.empty() && ri.back() >= n_) || (!ci.empty() && ci.back() >= n_))
    throw PreconditionError("submatrix index out of range");
  RationalMatrix out(static_cast<int>(ri.size()));
  for (std::size_t a = 0; a < ri.size(); ++a)
    for (std::size_t b = 0; b < ci.size(); ++b) out(static_cast<int>(a), static_cast<int>(b)) = (*this)(ri[a], ci[b]);
  return out;
}

SignPattern RationalMatrix::sign_pattern() const {
  SignPattern p(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) p.set(i, j, sign_of((*this)(i, j)));
  return p;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::vector<std::string>> RationalMatrix::row_literals() const {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j).get_str());
  return out;
}

std::string RationalMatrix::str() const {
  std::string s;
  for (const auto& row : row_literals()) {
    if (!s.empty()) s += '\n';
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + row[j];
  }
  return s;
}

RationalMatrix block_upper(const RationalMatrix& a, const RationalMatrix& b, const std::vector<mpq_class>& c) {
  const int n = a.order();
  const int m = b.order();
  if (!c.empty() && c.size() != static_cast<std::size_t>(n * m)) throw PreconditionError("block_upper: bad C size");
  RationalMatrix out(n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = a(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out(n + i, n + j) = b(i, j);
  if (!c.empty())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) out(i, n + j) = c[static_cast<std::size_t>(i * m + j)];
  return out;
}

namespace {

// Bareiss on mpz; the matrix is consumed.
mpz_class bareiss_mpz(std::vector<mpz_class>& a, int n) {
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i * n + j)]; };
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

// Multiplies each row by the lcm of its denominators: row scalings are
// positive, so the determinant sign is unchanged and the value is scaled by
// the product of the factors.
std::vector<mpz_class> clear_denominators(const RationalMatrix& m, mpz_class& scale) {
  const int n = m.order();
  std::vector<mpz_class> a(static_cast<std::size_t>(n * n));
  scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  return a;
}

}  // namespace

mpq_class determinant(const RationalMatrix& m) {
  mpz_class scale;
  auto a = clear_denominators(m, scale);
  mpq_class d(bareiss_mpz(a, m.order()), scale);
  d.canonicalize();
  return d;
}

Sign determinant_sign(const RationalMatrix& m) {
  mpz_class scale;
  auto a = clear_denominators(m, scale);
  return sign_of(bareiss_mpz(a, m.order()));
}

RationalMatrix inverse(const RationalMatrix& m) {
  const int n = m.order();
  // Gauss-Jordan over Q.
  std::vector<mpq_class> a(static_cast<std::size_t>(n * 2 * n));
  auto at = [&](int i, int j) -> mpq_class& { return a[static_cast<std::size_t>(i * 2 * n + j)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = m(i, j);
    at(i, n + i) = 1;
  }
  for (int c = 0; c < n; ++c) {
    int r = c;
    while (r < n && at(r, c) == 0) ++r;
    if (r == n) throw PreconditionError("inverse: matrix is singular");
    if (r != c)
      for (int j = 0; j < 2 * n; ++j) std::swap(at(r, j), at(c, j));
    const mpq_class piv = at(c, c);
    for (int j = 0; j < 2 * n; ++j) at(c, j) /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == c || at(i, c) == 0) continue;
      const mpq_class f = at(i, c);
      for (int j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  RationalMatrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = at(i, n + j);
  return inv;
}

namespace {

constexpr int kIntMaxOrder = 16;

// Returns false when an intermediate overflows int64.
bool bareiss_i64(std::int64_t* a, int n, int& sign_out) {
  // Entries are kept below 2^62 in magnitude so that the difference of two
  // products always fits in 128 bits.
  constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  constexpr i128 lo = -static_cast<i128>(kLimit);
  constexpr i128 hi = kLimit;
  for (int i = 0; i < n * n; ++i)
    if (a[i] <= -kLimit || a[i] >= kLimit) return false;
  int sign = 1;
  std::int64_t prev = 1;
  auto at = [&](int i, int j) -> std::int64_t& { return a[i * n + j]; };
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) {
        sign_out = 0;
        return true;
      }
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const i128 v = (static_cast<i128>(at(k, k)) * at(i, j) - static_cast<i128>(at(i, k)) * at(k, j)) / prev;
        if (v < lo || v > hi) return false;
        at(i, j) = static_cast<std::int64_t>(v);
      }
    }
    prev = at(k, k);
  }
  const std::int64_t last = at(n - 1, n - 1);
  sign_out = last == 0 ? 0 : (last > 0 ? sign : -sign);
  return true;
}

Sign to_sign(int s) { return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero); }

}  // namespace

Sign int_determinant_sign(std::span<const std::int64_t> a, int n) {
  if (n == 0) return Sign::Plus;
  if (n <= kIntMaxOrder) {
    std::array<std::int64_t, kIntMaxOrder * kIntMaxOrder> buf{};
    std::copy(a.begin(), a.begin() + n * n, buf.begin());
    int s = 0;
    if (bareiss_i64(buf.data(), n, s)) return to_sign(s);
  }
  std::vector<mpz_class> z(static_cast<std::size_t>(n * n));
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = mpz_class(static_cast<long>(a[i]));
  return sign_of(bareiss_mpz(z, n));
}

Sign int_principal_minor_sign(std::span<const std::int64_t> a, int n, IndexSet alpha) {
  const auto idx = alpha.indices();
  const int k = static_cast<int>(idx.size());
  if (k == 0) return Sign::Plus;
  if (k == 1) {
    const std::int64_t v = a[static_cast<std::size_t>(idx[0] * n + idx[0])];
    return to_sign(v > 0 ? 1 : (v < 0 ? -1 : 0));
  }
  if (k == 2) {
    const auto i = static_cast<std::size_t>(idx[0]);
    const auto j = static_cast<std::size_t>(idx[1]);
    const auto un = static_cast<std::size_t>(n);
    const i128 d = static_cast<i128>(a[i * un + i]) * a[j * un + j] - static_cast<i128>(a[i * un + j]) * a[j * un + i];
    return to_sign(d > 0 ? 1 : (d < 0 ? -1 : 0));
  }
  if (k <= kIntMaxOrder) {
    std::array<std::int64_t, kIntMaxOrder * kIntMaxOrder> buf{};
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) buf[static_cast<std::size_t>(r * k + c)] = a[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)] * n + idx[static_cast<std::size_t>(c)])];
    int s = 0;
    if (bareiss_i64(buf.data(), k, s)) return to_sign(s);
  }
  std::vector<mpz_class> z(static_cast<std::size_t>(k * k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      z[static_cast<std::size_t>(r * k + c)] = mpz_class(static_cast<long>(a[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)] * n + idx[static_cast<std::size_t>(c)])]));
  return sign_of(bareiss_mpz(z, k));
}

}  // namespace sepr
