#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sepr {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
constexpr Sign operator-(Sign a) noexcept { return static_cast<Sign>(-static_cast<int>(a)); }

char sign_char(Sign s) noexcept;

/// Sign of a formula built from signs: `Ambiguous` once a `+` and a `-`
/// have been added together.
enum class AmbSign : std::uint8_t { Zero, Plus, Minus, Ambiguous };

constexpr AmbSign to_amb(Sign s) noexcept {
  switch (s) {
    case Sign::Plus: return AmbSign::Plus;
    case Sign::Minus: return AmbSign::Minus;
    default: return AmbSign::Zero;
  }
}

AmbSign operator+(AmbSign a, AmbSign b) noexcept;
AmbSign operator*(AmbSign a, AmbSign b) noexcept;
std::string_view to_string(AmbSign s) noexcept;

/// Subset of {+, -, 0} stored as a bit mask; used to accumulate which signs
/// occur among a family of minors.
struct SignSet {
  static constexpr std::uint8_t kZero = 1;
  static constexpr std::uint8_t kPlus = 2;
  static constexpr std::uint8_t kMinus = 4;

  std::uint8_t bits = 0;

  constexpr void add(Sign s) noexcept {
    bits |= s == Sign::Zero ? kZero : (s == Sign::Plus ? kPlus : kMinus);
  }
  constexpr bool has(Sign s) const noexcept {
    return bits & (s == Sign::Zero ? kZero : (s == Sign::Plus ? kPlus : kMinus));
  }
  constexpr bool empty() const noexcept { return bits == 0; }
  friend constexpr bool operator==(SignSet, SignSet) = default;
};

/// The seven sepr symbols, in the row/column order of the symbol tables.
enum class Symbol : std::uint8_t { N, Ap, Am, Ast, Sp, Sm, Sst };

inline constexpr std::array<Symbol, 7> kAllSymbols = {
    Symbol::N, Symbol::Ap, Symbol::Am, Symbol::Ast, Symbol::Sp, Symbol::Sm, Symbol::Sst};

/// ASCII spelling: N, A+, A-, A*, S+, S-, S*.
std::string_view to_string(Symbol s) noexcept;

/// Symbol describing a nonempty set of observed minor signs.
Symbol symbol_from_signs(SignSet signs);
/// Inverse of symbol_from_signs.
SignSet signs_of(Symbol s) noexcept;

Symbol symbol_add(Symbol a, Symbol b) noexcept;
Symbol symbol_mul(Symbol a, Symbol b) noexcept;

/// t_1 t_2 ... t_n; never empty.
class SeprSequence {
 public:
  SeprSequence() = default;
  SeprSequence(std::initializer_list<Symbol> terms);
  explicit SeprSequence(std::vector<Symbol> terms);

  /// Parses concatenated tokens from {N, A+, A-, A*, S+, S-, S*}.
  /// Throws ParseError carrying the offset of the first invalid token.
  static SeprSequence parse(std::string_view text);

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  Symbol operator[](std::size_t i) const { return terms_[i]; }
  /// One-based access matching t_k notation.
  Symbol term(std::size_t k) const { return terms_.at(k - 1); }
  std::span<const Symbol> terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  std::string str() const;

  friend bool operator==(const SeprSequence&, const SeprSequence&) = default;
  friend auto operator<=>(const SeprSequence&, const SeprSequence&) = default;

 private:
  std::vector<Symbol> terms_;
};

/// Sequence of a block upper-triangular matrix from the sequences of its
/// diagonal blocks.
SeprSequence combine(const SeprSequence& a, const SeprSequence& b);

/// Swaps A+/A- and S+/S-.
SeprSequence neg_superscripts(const SeprSequence& s);

/// t_{n-1} ... t_1 A+ (or its superscript negation when t_n = A-): the
/// sequence the inverse of a nonsingular matrix with sequence `s` must have.
SeprSequence inverse_sequence(const SeprSequence& s);

bool is_a_family(Symbol s) noexcept;
bool is_s_family(Symbol s) noexcept;

/// The 7x7 tables exactly as laid out in the literature, row-major in
/// kAllSymbols order. Exposed so tests can print and compare them.
const std::array<std::array<Symbol, 7>, 7>& addition_table() noexcept;
const std::array<std::array<Symbol, 7>, 7>& multiplication_table() noexcept;

}  // namespace sepr
