#include "sepr/signs.hpp"

#include <optional>

#include "sepr/error.hpp"

namespace sepr {

namespace {

using enum Symbol;

// Transcribed row by row; row = left operand, column = right operand.
constexpr std::array<std::array<Symbol, 7>, 7> kAdd = {{
    {N, Sp, Sm, Sst, Sp, Sm, Sst},
    {Sp, Ap, Ast, Ast, Sp, Sst, Sst},
    {Sm, Ast, Am, Ast, Sst, Sm, Sst},
    {Sst, Ast, Ast, Ast, Sst, Sst, Sst},
    {Sp, Sp, Sst, Sst, Sp, Sst, Sst},
    {Sm, Sst, Sm, Sst, Sst, Sm, Sst},
    {Sst, Sst, Sst, Sst, Sst, Sst, Sst},
}};

constexpr std::array<std::array<Symbol, 7>, 7> kMul = {{
    {N, N, N, N, N, N, N},
    {N, Ap, Am, Ast, Sp, Sm, Sst},
    {N, Am, Ap, Ast, Sm, Sp, Sst},
    {N, Ast, Ast, Ast, Sst, Sst, Sst},
    {N, Sp, Sm, Sst, Sp, Sm, Sst},
    {N, Sm, Sp, Sst, Sm, Sp, Sst},
    {N, Sst, Sst, Sst, Sst, Sst, Sst},
}};

constexpr std::array<std::string_view, 7> kNames = {"N", "A+", "A-", "A*", "S+", "S-", "S*"};

constexpr std::size_t idx(Symbol s) { return static_cast<std::size_t>(s); }

}  // namespace

char sign_char(Sign s) noexcept {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    default: return '0';
  }
}

AmbSign operator+(AmbSign a, AmbSign b) noexcept {
  if (a == AmbSign::Ambiguous || b == AmbSign::Ambiguous) return AmbSign::Ambiguous;
  if (a == AmbSign::Zero) return b;
  if (b == AmbSign::Zero || a == b) return a;
  return AmbSign::Ambiguous;
}

AmbSign operator*(AmbSign a, AmbSign b) noexcept {
  if (a == AmbSign::Zero || b == AmbSign::Zero) return AmbSign::Zero;
  if (a == AmbSign::Ambiguous || b == AmbSign::Ambiguous) return AmbSign::Ambiguous;
  return a == b ? AmbSign::Plus : AmbSign::Minus;
}

std::string_view to_string(AmbSign s) noexcept {
  switch (s) {
    case AmbSign::Plus: return "+";
    case AmbSign::Minus: return "-";
    case AmbSign::Zero: return "0";
    default: return "ambiguous";
  }
}

std::string_view to_string(Symbol s) noexcept { return kNames[idx(s)]; }

Symbol symbol_from_signs(SignSet signs) {
  const bool z = signs.bits & SignSet::kZero;
  const bool p = signs.bits & SignSet::kPlus;
  const bool m = signs.bits & SignSet::kMinus;
  if (!z && !p && !m) throw PreconditionError("symbol_from_signs: empty sign set");
  if (!z) return p && m ? Ast : (p ? Ap : Am);
  if (!p && !m) return N;
  return p && m ? Sst : (p ? Sp : Sm);
}

SignSet signs_of(Symbol s) noexcept {
  constexpr std::uint8_t z = SignSet::kZero, p = SignSet::kPlus, m = SignSet::kMinus;
  constexpr std::array<std::uint8_t, 7> bits = {z, p, m, p | m, z | p, z | m, z | p | m};
  return SignSet{bits[idx(s)]};
}

Symbol symbol_add(Symbol a, Symbol b) noexcept { return kAdd[idx(a)][idx(b)]; }
Symbol symbol_mul(Symbol a, Symbol b) noexcept { return kMul[idx(a)][idx(b)]; }

const std::array<std::array<Symbol, 7>, 7>& addition_table() noexcept { return kAdd; }
const std::array<std::array<Symbol, 7>, 7>& multiplication_table() noexcept { return kMul; }

bool is_a_family(Symbol s) noexcept { return s == Ap || s == Am || s == Ast; }
bool is_s_family(Symbol s) noexcept { return s == Sp || s == Sm || s == Sst; }

SeprSequence::SeprSequence(std::initializer_list<Symbol> terms) : terms_(terms) {}
SeprSequence::SeprSequence(std::vector<Symbol> terms) : terms_(std::move(terms)) {}

SeprSequence SeprSequence::parse(std::string_view text) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == 'N') {
      out.push_back(N);
      ++i;
      continue;
    }
    if ((c == 'A' || c == 'S') && i + 1 < text.size()) {
      const char sup = text[i + 1];
      std::optional<Symbol> sym;
      if (sup == '+') sym = c == 'A' ? Ap : Sp;
      if (sup == '-') sym = c == 'A' ? Am : Sm;
      if (sup == '*') sym = c == 'A' ? Ast : Sst;
      if (sym) {
        out.push_back(*sym);
        i += 2;
        continue;
      }
    }
    throw ParseError("invalid sepr token at offset " + std::to_string(i), 0, i);
  }
  if (out.empty()) throw ParseError("empty sepr sequence", 0, 0);
  return SeprSequence(std::move(out));
}

std::string SeprSequence::str() const {
  std::string s;
  for (Symbol t : terms_) s += to_string(t);
  return s;
}

SeprSequence combine(const SeprSequence& a, const SeprSequence& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<Symbol> out;
  out.reserve(n + m);
  // a_0 = b_0 = A+; only indices inside both ranges contribute.
  auto at = [](const SeprSequence& s, std::size_t j) { return j == 0 ? Ap : s[j - 1]; };
  for (std::size_t k = 1; k <= n + m; ++k) {
    std::optional<Symbol> acc;
    const std::size_t lo = k > m ? k - m : 0;
    const std::size_t hi = std::min(k, n);
    for (std::size_t l = lo; l <= hi; ++l) {
      const Symbol term = symbol_mul(at(a, l), at(b, k - l));
      acc = acc ? symbol_add(*acc, term) : term;
    }
    if (!acc) throw InternalError("combine: no contributing term");
    out.push_back(*acc);
  }
  return SeprSequence(std::move(out));
}

SeprSequence neg_superscripts(const SeprSequence& s) {
  std::vector<Symbol> out(s.begin(), s.end());
  for (Symbol& t : out) {
    switch (t) {
      case Ap: t = Am; break;
      case Am: t = Ap; break;
      case Sp: t = Sm; break;
      case Sm: t = Sp; break;
      default: break;
    }
  }
  return SeprSequence(std::move(out));
}

SeprSequence inverse_sequence(const SeprSequence& s) {
  const std::size_t n = s.size();
  const Symbol last = s[n - 1];
  if (last != Ap && last != Am) throw PreconditionError("inverse_sequence: final term must be A+ or A-");
  std::vector<Symbol> out;
  out.reserve(n);
  for (std::size_t k = n - 1; k >= 1; --k) out.push_back(s[k - 1]);
  out.push_back(Ap);
  SeprSequence r(std::move(out));
  return last == Ap ? r : neg_superscripts(r);
}

}  // namespace sepr
