#include "sepr/realize.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "sepr/error.hpp"
#include "sepr/parallel.hpp"

namespace sepr {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Symbol classify_minor_signs(SignSet signs) { return symbol_from_signs(signs); }

namespace {

constexpr std::int64_t kIntLimit = std::int64_t{1} << 62;

// Scales the whole matrix to integers when that fits comfortably in int64.
std::optional<std::vector<std::int64_t>> integer_image(const RationalMatrix& b) {
  const int n = b.order();
  mpz_class l = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b(i, j).get_den_mpz_t());
  std::vector<std::int64_t> out(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const mpz_class v = b(i, j).get_num() * (l / b(i, j).get_den());
      if (!v.fits_slong_p()) return std::nullopt;
      const long x = v.get_si();
      if (x <= -kIntLimit || x >= kIntLimit) return std::nullopt;
      out[static_cast<std::size_t>(i * n + j)] = x;
    }
  }
  return out;
}

}  // namespace

SeprSequence sepr_of_int_matrix(std::span<const std::int64_t> a, int n) {
  if (n < 1) throw PreconditionError("sepr needs order >= 1");
  if (n > kSeprMaxOrder) throw PreconditionError("sepr_of_matrix supports order <= 14");
  std::vector<Symbol> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    SignSet seen;
    for_each_subset(n, k, [&](IndexSet alpha) { seen.add(int_principal_minor_sign(a, n, alpha)); });
    terms.push_back(symbol_from_signs(seen));
  }
  return SeprSequence(std::move(terms));
}

SeprSequence sepr_of_matrix(const RationalMatrix& b) {
  const int n = b.order();
  if (n < 1) throw PreconditionError("sepr needs order >= 1");
  if (n > kSeprMaxOrder) throw PreconditionError("sepr_of_matrix supports order <= 14");
  if (auto ints = integer_image(b)) return sepr_of_int_matrix(*ints, n);
  std::vector<Symbol> terms;
  for (int k = 1; k <= n; ++k) {
    SignSet seen;
    for_each_subset(n, k, [&](IndexSet alpha) { seen.add(determinant_sign(b.principal(alpha))); });
    terms.push_back(symbol_from_signs(seen));
  }
  return SeprSequence(std::move(terms));
}

// ---------------------------------------------------------------------------

MagnitudeGrid MagnitudeGrid::standard() {
  return MagnitudeGrid({mpq_class(1, 6), mpq_class(1, 3), mpq_class(1, 2), mpq_class(1), mpq_class(2), mpq_class(3),
                        mpq_class(6)});
}

MagnitudeGrid MagnitudeGrid::with_epsilon(int n) {
  if (n < 1 || n > 20) throw PreconditionError("with_epsilon: order out of range");
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  auto v = standard().values();
  v.push_back(mpq_class(mpz_class(1), f));
  return MagnitudeGrid(std::move(v));
}

MagnitudeGrid MagnitudeGrid::parse(std::string_view csv) {
  std::vector<mpq_class> v;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t end = csv.find(',', pos);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view tok = csv.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    const mpq_class q = parse_rational(tok, 0, pos);
    if (q <= 0) throw ParseError("grid values must be positive", 0, pos);
    v.push_back(q);
    pos = end + 1;
  }
  return MagnitudeGrid(std::move(v));
}

MagnitudeGrid::MagnitudeGrid(std::vector<mpq_class> values) : values_(std::move(values)) {
  if (values_.empty()) throw PreconditionError("magnitude grid is empty");
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  scale_ = 1;
  for (const auto& q : values_) {
    if (q <= 0) throw PreconditionError("magnitude grid values must be positive");
    mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), q.get_den_mpz_t());
  }
  for (const auto& q : values_) {
    const mpz_class v = q.get_num() * (scale_ / q.get_den());
    // Keep products of up to 14 scaled entries away from overflow in the
    // common case; larger values still work through the GMP fallback.
    if (!v.fits_slong_p() || v.get_si() >= (std::int64_t{1} << 40))
      throw PreconditionError("magnitude grid values too spread out");
    scaled_.push_back(v.get_si());
  }
}

std::string MagnitudeGrid::str() const {
  std::string s;
  for (const auto& q : values_) s += (s.empty() ? "" : ",") + q.get_str();
  return s;
}

// ---------------------------------------------------------------------------

GridRealizer::GridRealizer(const SignPattern& p, MagnitudeGrid grid, std::uint64_t budget, std::uint64_t seed)
    : n_(p.order()), grid_(std::move(grid)), seed_(seed) {
  if (budget < 1) throw PreconditionError("grid budget must be >= 1");
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (p(i, j) == Sign::Zero) continue;
      cells_.push_back(i * n_ + j);
      signs_.push_back(p(i, j));
    }
  }
  const std::uint64_t g = grid_.size();
  std::uint64_t total = 1;
  bool saturated = false;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (total > std::numeric_limits<std::uint64_t>::max() / g) {
      saturated = true;
      break;
    }
    total *= g;
  }
  exhaustive_ = !saturated && total <= budget;
  count_ = exhaustive_ ? total : budget;
}

void GridRealizer::digits(std::uint64_t i, std::vector<std::uint32_t>& d) const {
  const std::uint64_t g = grid_.size();
  d.resize(cells_.size());
  if (exhaustive_) {
    // Mixed radix with the last nonzero cell varying fastest.
    for (std::size_t c = cells_.size(); c-- > 0;) {
      d[c] = static_cast<std::uint32_t>(i % g);
      i /= g;
    }
    return;
  }
  std::uint64_t state = mix64(seed_ ^ mix64(i));
  for (auto& x : d) {
    state = mix64(state);
    x = static_cast<std::uint32_t>(state % g);
  }
}

RationalMatrix GridRealizer::at(std::uint64_t i) const {
  std::vector<std::uint32_t> d;
  digits(i, d);
  RationalMatrix m(n_);
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const mpq_class& v = grid_.values()[d[c]];
    m(cells_[c] / n_, cells_[c] % n_) = signs_[c] == Sign::Plus ? v : mpq_class(-v);
  }
  return m;
}

void GridRealizer::scaled_at(std::uint64_t i, std::span<std::int64_t> out) const {
  thread_local std::vector<std::uint32_t> d;
  digits(i, d);
  std::fill(out.begin(), out.begin() + n_ * n_, 0);
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const std::int64_t v = grid_.scaled()[d[c]];
    out[static_cast<std::size_t>(cells_[c])] = signs_[c] == Sign::Plus ? v : -v;
  }
}

SeprSweep sweep_sepr(const GridRealizer& r, int threads) {
  const int workers = chunk_workers(r.count(), threads);
  std::vector<std::map<SeprSequence, std::uint64_t>> local(static_cast<std::size_t>(workers));
  const int n = r.order();
  parallel_chunks(r.count(), threads, [&](std::uint64_t begin, std::uint64_t end, int w) {
    std::vector<std::int64_t> buf(static_cast<std::size_t>(n * n));
    auto& seen = local[static_cast<std::size_t>(w)];
    for (std::uint64_t i = begin; i < end; ++i) {
      r.scaled_at(i, buf);
      seen.emplace(sepr_of_int_matrix(buf, n), i);  // keeps the first (lowest) index
    }
  });
  SeprSweep out;
  out.visited = r.count();
  out.exhaustive = r.exhaustive();
  for (const auto& m : local) {
    for (const auto& [seq, idx] : m) {
      auto [it, inserted] = out.first_index.emplace(seq, idx);
      if (!inserted) it->second = std::min(it->second, idx);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<IndexSet, IndexSet>> ambiguous_pairs(const SignPattern& p) {
  const int n = p.order();
  std::vector<std::pair<IndexSet, IndexSet>> out;
  for (int k = 2; k <= n; ++k) {
    for_each_subset(n, k, [&](IndexSet alpha) {
      for_each_subset(n, k, [&](IndexSet beta) {
        if (signed_det(p.sub(alpha, beta)).value == AmbSign::Ambiguous) out.emplace_back(alpha, beta);
      });
    });
  }
  return out;
}

RationalMatrix allnonzero_realization(const SignPattern& p) {
  const int n = p.order();
  if (n > kAllNonzeroMaxOrder) throw PreconditionError("allnonzero_realization supports order <= 10");
  // Distinct magnitudes keep accidental cancellations rare, so few
  // perturbations are needed.
  RationalMatrix b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p(i, j) != Sign::Zero) b(i, j) = static_cast<long>((i * n + j) % 7 + 1) * (p(i, j) == Sign::Plus ? 1 : -1);

  const auto pairs = ambiguous_pairs(p);
  for (const auto& [alpha, beta] : pairs) {
    if (determinant_sign(b.sub(alpha, beta)) != Sign::Zero) continue;

    // An entry on a nonzero term whose complementary minor is nonzero.
    const auto ai = alpha.indices();
    const auto bi = beta.indices();
    int u = -1, v = -1;
    mpq_class cofactor;
    for_each_nonzero_term(p.sub(alpha, beta), [&](const std::vector<int>& perm, Sign) {
      for (std::size_t r = 0; r < perm.size() && u < 0; ++r) {
        const int uu = ai[r];
        const int vv = bi[static_cast<std::size_t>(perm[r])];
        const mpq_class c = determinant(b.sub(alpha.without(uu), beta.without(vv)));
        if (c != 0) {
          u = uu;
          v = vv;
          cofactor = c;
        }
      }
      return u < 0;
    });
    if (u < 0) throw InternalError("allnonzero_realization: no entry with a nonzero complementary minor");

    // Every currently nonzero ambiguous minor through (u, v) is affine in
    // b_uv with slope +-cofactor; half the smallest |m / slope| keeps all
    // of them away from zero.
    std::optional<mpq_class> bound;
    for (const auto& [g, d] : pairs) {
      if (!g.contains(u) || !d.contains(v)) continue;
      const mpq_class m = determinant(b.sub(g, d));
      if (m == 0) continue;
      const mpq_class slope = determinant(b.sub(g.without(u), d.without(v)));
      if (slope == 0) continue;
      const mpq_class ratio = abs(m / slope);
      if (!bound || ratio < *bound) bound = ratio;
    }
    const mpq_class step = bound ? mpq_class(*bound / 2) : mpq_class(abs(b(u, v)));
    b(u, v) += sgn(b(u, v)) > 0 ? step : mpq_class(-step);
    if (determinant_sign(b.sub(alpha, beta)) == Sign::Zero)
      throw InternalError("allnonzero_realization: perturbation left the minor at zero");
  }
  return b;
}

RationalMatrix scale_diagonal_to_one(const RationalMatrix& b) {
  const int n = b.order();
  std::vector<mpq_class> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (b(i, j) < 0) throw PreconditionError("scale_diagonal_to_one: negative entry");
    const mpq_class& x = b(i, i);
    if (x <= 0) throw PreconditionError("scale_diagonal_to_one: diagonal entry not positive");
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
      throw PreconditionError("scale_diagonal_to_one: diagonal entry is not a rational square");
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), x.get_den_mpz_t());
    d[static_cast<std::size_t>(i)] = mpq_class(rd, rn);
    d[static_cast<std::size_t>(i)].canonicalize();
  }
  RationalMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = d[static_cast<std::size_t>(i)] * b(i, j) * d[static_cast<std::size_t>(j)];
  return out;
}

InverseCheck verify_inverse_theorem(const RationalMatrix& b) {
  if (b.order() > 6) throw PreconditionError("verify_inverse_theorem supports order <= 6");
  const RationalMatrix inv = inverse(b);
  InverseCheck r;
  r.original = sepr_of_matrix(b);
  r.inverse = sepr_of_matrix(inv);
  r.expected = inverse_sequence(r.original);
  r.pass = r.inverse == r.expected;
  return r;
}

}  // namespace sepr
