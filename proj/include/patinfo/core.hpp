#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patinfo {

/// An opaque pattern element. Tokenizers decide what a symbol is (a byte, a
/// Unicode scalar, a line, a word); estimators only rely on equality and the
/// total order.
struct Symbol {
  std::string value;

  Symbol() = default;
  explicit Symbol(std::string v) : value(std::move(v)) {}

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Finite value set. `members` are the named symbols (sorted, distinct);
/// `unnamed` counts declared slots for symbols that never occur, so a caller
/// can declare k larger than the observed alphabet without inventing atoms.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Symbol> members, std::size_t unnamed = 0);

  /// Alphabet of the distinct symbols in `symbols`.
  static Alphabet inferred(std::span<const Symbol> symbols);

  std::size_t size() const noexcept { return members_.size() + unnamed_; }
  bool degenerate() const noexcept { return size() == 0; }
  bool contains(const Symbol& s) const;

  const std::vector<Symbol>& members() const noexcept { return members_; }
  std::size_t unnamed() const noexcept { return unnamed_; }

  /// Same members, padded with unnamed slots up to `k`. Throws
  /// std::invalid_argument when `k` is smaller than the named member count.
  Alphabet widened(std::size_t k) const;

  /// Union of members; the size is at least the larger of the two sizes.
  static Alphabet merged(const Alphabet& a, const Alphabet& b);

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Symbol> members_;
  std::size_t unnamed_ = 0;
};

/// A finite sequence of symbols over an alphabet. Immutable after
/// construction; every symbol is guaranteed to be a member of the alphabet.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Symbol> symbols);
  /// Throws std::invalid_argument if a symbol is not in `alphabet`.
  Pattern(std::vector<Symbol> symbols, Alphabet alphabet);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  /// Alphabet size k (declared or inferred).
  std::size_t k() const noexcept { return alphabet_.size(); }

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Symbol> symbols_;
  Alphabet alphabet_;
};

/// Each byte of `text` becomes one symbol; alphabet inferred.
Pattern byte_pattern(std::string_view text);

Pattern reversed(const Pattern& p);
/// p followed by q over the merged alphabet.
Pattern concat(const Pattern& p, const Pattern& q);
/// p repeated r times (r = 0 gives the empty pattern).
Pattern repeated(const Pattern& p, std::size_t r);
/// Contiguous slice [pos, pos + len), alphabet preserved.
Pattern slice(const Pattern& p, std::size_t pos, std::size_t len);
/// Constant pattern of length n over `s`, alphabet {s}.
Pattern constant_pattern(const Symbol& s, std::size_t n);

/// Information in bits. Always finite and non-negative.
class InfoBits {
 public:
  constexpr InfoBits() = default;
  /// Throws std::domain_error on negative or non-finite input.
  explicit InfoBits(double bits);

  constexpr double value() const noexcept { return bits_; }

  friend constexpr auto operator<=>(InfoBits, InfoBits) = default;

 private:
  double bits_ = 0.0;
};

/// Per-symbol occurrence counts; only symbols with a positive count appear.
struct FrequencyTable {
  std::map<Symbol, std::uint64_t> counts;
  std::map<Symbol, double> rel;
  std::uint64_t n = 0;
};

FrequencyTable frequency_table(const Pattern& p);

/// Distinct symbols of p. Empty for the empty pattern (degenerate).
Alphabet infer_alphabet(const Pattern& p);

}  // namespace patinfo
