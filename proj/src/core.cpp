#include "patinfo/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace patinfo {

namespace {

std::vector<Symbol> sorted_distinct(std::vector<Symbol> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Alphabet::Alphabet(std::vector<Symbol> members, std::size_t unnamed)
    : members_(sorted_distinct(std::move(members))), unnamed_(unnamed) {}

Alphabet Alphabet::inferred(std::span<const Symbol> symbols) {
  return Alphabet(std::vector<Symbol>(symbols.begin(), symbols.end()));
}

bool Alphabet::contains(const Symbol& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

Alphabet Alphabet::widened(std::size_t k) const {
  if (k < members_.size()) {
    throw std::invalid_argument("declared alphabet size " + std::to_string(k) +
                                " is smaller than the " +
                                std::to_string(members_.size()) +
                                " distinct symbols present");
  }
  return Alphabet(members_, k - members_.size());
}

Alphabet Alphabet::merged(const Alphabet& a, const Alphabet& b) {
  std::vector<Symbol> all = a.members_;
  all.insert(all.end(), b.members_.begin(), b.members_.end());
  Alphabet out(std::move(all));
  const std::size_t k = std::max({a.size(), b.size(), out.size()});
  return out.widened(k);
}

Pattern::Pattern(std::vector<Symbol> symbols)
    : symbols_(std::move(symbols)), alphabet_(Alphabet::inferred(symbols_)) {}

Pattern::Pattern(std::vector<Symbol> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(std::move(alphabet)) {
  for (const auto& s : symbols_) {
    if (!alphabet_.contains(s)) {
      throw std::invalid_argument("symbol '" + s.value +
                                  "' is not a member of the declared alphabet");
    }
  }
}

Pattern byte_pattern(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) out.emplace_back(std::string(1, c));
  return Pattern(std::move(out));
}

Pattern reversed(const Pattern& p) {
  std::vector<Symbol> s(p.symbols().rbegin(), p.symbols().rend());
  return Pattern(std::move(s), p.alphabet());
}

Pattern concat(const Pattern& p, const Pattern& q) {
  std::vector<Symbol> s = p.symbols();
  s.insert(s.end(), q.symbols().begin(), q.symbols().end());
  return Pattern(std::move(s), Alphabet::merged(p.alphabet(), q.alphabet()));
}

Pattern repeated(const Pattern& p, std::size_t r) {
  std::vector<Symbol> s;
  s.reserve(p.size() * r);
  for (std::size_t i = 0; i < r; ++i) {
    s.insert(s.end(), p.symbols().begin(), p.symbols().end());
  }
  return Pattern(std::move(s), p.alphabet());
}

Pattern slice(const Pattern& p, std::size_t pos, std::size_t len) {
  if (pos > p.size() || len > p.size() - pos) {
    throw std::out_of_range("slice exceeds pattern bounds");
  }
  const auto first = p.symbols().begin() + static_cast<std::ptrdiff_t>(pos);
  return Pattern(std::vector<Symbol>(first, first + static_cast<std::ptrdiff_t>(len)),
                 p.alphabet());
}

Pattern constant_pattern(const Symbol& s, std::size_t n) {
  return Pattern(std::vector<Symbol>(n, s), Alphabet({s}));
}

InfoBits::InfoBits(double bits) : bits_(bits) {
  if (!std::isfinite(bits) || bits < 0.0) {
    throw std::domain_error("information must be finite and non-negative, got " +
                            std::to_string(bits));
  }
}

FrequencyTable frequency_table(const Pattern& p) {
  FrequencyTable t;
  for (const auto& s : p.symbols()) ++t.counts[s];
  t.n = p.size();
  for (const auto& [s, c] : t.counts) {
    t.rel.emplace(s, static_cast<double>(c) / static_cast<double>(t.n));
  }
  return t;
}

Alphabet infer_alphabet(const Pattern& p) { return Alphabet::inferred(p.symbols()); }

}  // namespace patinfo
