#include "patinfo/generators.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace patinfo {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // Reject the short final bucket so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::constant: return "constant";
    case GeneratorKind::uniform_random: return "uniform_random";
    case GeneratorKind::markov: return "markov";
    case GeneratorKind::fibonacci_digits: return "fibonacci_digits";
    case GeneratorKind::structured_circles: return "structured_circles";
    case GeneratorKind::redundant_repeat: return "redundant_repeat";
    case GeneratorKind::redundant_random: return "redundant_random";
    case GeneratorKind::english_text_file: return "english_text_file";
  }
  return "constant";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) noexcept {
  struct Alias {
    std::string_view name;
    GeneratorKind kind;
  };
  static constexpr Alias aliases[] = {
      {"uniform", GeneratorKind::uniform_random},
      {"random", GeneratorKind::uniform_random},
      {"fib", GeneratorKind::fibonacci_digits},
      {"fibonacci", GeneratorKind::fibonacci_digits},
      {"circles", GeneratorKind::structured_circles},
      {"repeat", GeneratorKind::redundant_repeat},
      {"redundant", GeneratorKind::redundant_random},
      {"file", GeneratorKind::english_text_file},
      {"english", GeneratorKind::english_text_file},
  };
  for (auto k : {GeneratorKind::constant, GeneratorKind::uniform_random, GeneratorKind::markov,
                 GeneratorKind::fibonacci_digits, GeneratorKind::structured_circles,
                 GeneratorKind::redundant_repeat, GeneratorKind::redundant_random,
                 GeneratorKind::english_text_file}) {
    if (to_string(k) == name) return k;
  }
  for (const auto& a : aliases) {
    if (a.name == name) return a.kind;
  }
  return std::nullopt;
}

Symbol generator_symbol(std::size_t i, std::size_t k) {
  static constexpr std::string_view alnum =
      "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  if (k > 256 || i >= k) {
    throw std::invalid_argument("generator alphabets hold at most 256 symbols");
  }
  if (k <= alnum.size()) return Symbol(std::string(1, alnum[i]));
  return Symbol(std::string(1, static_cast<char>(static_cast<unsigned char>(i))));
}

Alphabet generator_alphabet(std::size_t k) {
  std::vector<Symbol> members;
  members.reserve(k);
  for (std::size_t i = 0; i < k; ++i) members.push_back(generator_symbol(i, k));
  return Alphabet(std::move(members));
}

std::string fibonacci_digits(std::size_t n) {
  // Decimal strings, least significant digit first.
  std::string a = "0", b = "1", out;
  out.reserve(n + 32);
  auto emit = [&out](const std::string& rev) { out.append(rev.rbegin(), rev.rend()); };
  emit(a);
  while (out.size() < n) {
    emit(b);
    std::string sum;
    int carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
      const int d = carry + (i < a.size() ? a[i] - '0' : 0) + (i < b.size() ? b[i] - '0' : 0);
      sum.push_back(static_cast<char>('0' + d % 10));
      carry = d / 10;
    }
    a = std::move(b);
    b = std::move(sum);
  }
  out.resize(n);
  return out;
}

namespace {

void require_alphabet(std::size_t k) {
  if (k == 0 || k > 256) {
    throw std::invalid_argument("alphabet size must lie in [1, 256], got " + std::to_string(k));
  }
}

void validate_transition(const std::vector<std::vector<double>>& t) {
  if (t.empty()) throw std::invalid_argument("markov: empty transition matrix");
  for (const auto& row : t) {
    if (row.size() != t.size()) throw std::invalid_argument("markov: transition matrix is not square");
    double sum = 0.0;
    for (double p : row) {
      if (!(p >= 0.0)) throw std::invalid_argument("markov: negative transition probability");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::invalid_argument("markov: transition row sums to " + std::to_string(sum));
    }
  }
}

std::size_t sample_row(const std::vector<double>& row, Rng& rng) {
  const double u = rng.unit();
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] <= 0.0) continue;
    last = j;
    acc += row[j];
    if (u < acc) return j;
  }
  return last;
}

Pattern circles(const GeneratorSpec& spec) {
  if (spec.width == 0 || spec.height == 0) throw std::invalid_argument("circles: empty raster");
  if (spec.ring_step == 0) throw std::invalid_argument("circles: ring step must be positive");
  const Symbol zero("0"), one("1");
  std::vector<Symbol> out;
  out.reserve(spec.width * spec.height);
  const double cx = static_cast<double>(spec.width / 2);
  const double cy = static_cast<double>(spec.height / 2);
  for (std::size_t y = 0; y < spec.height; ++y) {
    for (std::size_t x = 0; x < spec.width; ++x) {
      const double d = std::hypot(static_cast<double>(x) - cx, static_cast<double>(y) - cy);
      const auto r = static_cast<std::size_t>(std::lround(d));
      out.push_back(r % spec.ring_step < spec.ring_thickness ? one : zero);
    }
  }
  return Pattern(std::move(out), Alphabet({zero, one}));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Pattern generate(const GeneratorSpec& spec) {
  const std::size_t n = spec.length;
  switch (spec.kind) {
    case GeneratorKind::constant: {
      const std::size_t k = std::max<std::size_t>(spec.alphabet_size, 1);
      Alphabet alpha = generator_alphabet(std::min<std::size_t>(k, 256));
      Symbol s = spec.symbol ? Symbol(*spec.symbol) : alpha.members().front();
      if (!alpha.contains(s)) alpha = Alphabet({s});
      if (alpha.size() < k) alpha = alpha.widened(k);
      return Pattern(std::vector<Symbol>(n, s), std::move(alpha));
    }
    case GeneratorKind::uniform_random: {
      require_alphabet(spec.alphabet_size);
      Rng rng(spec.seed);
      std::vector<Symbol> out;
      out.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(generator_symbol(rng.below(spec.alphabet_size), spec.alphabet_size));
      }
      return Pattern(std::move(out), generator_alphabet(spec.alphabet_size));
    }
    case GeneratorKind::markov: {
      validate_transition(spec.transition);
      const std::size_t k = spec.transition.size();
      require_alphabet(k);
      Rng rng(spec.seed);
      std::vector<Symbol> out;
      out.reserve(n);
      std::size_t state = rng.below(k);
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) state = sample_row(spec.transition[state], rng);
        out.push_back(generator_symbol(state, k));
      }
      return Pattern(std::move(out), generator_alphabet(k));
    }
    case GeneratorKind::fibonacci_digits: {
      const std::string digits = fibonacci_digits(n);
      std::vector<Symbol> out;
      out.reserve(n);
      for (char c : digits) out.emplace_back(std::string(1, c));
      return Pattern(std::move(out), generator_alphabet(10));
    }
    case GeneratorKind::structured_circles: {
      if (n != 0 && n != spec.width * spec.height) {
        throw std::invalid_argument("circles: length must equal width*height");
      }
      return circles(spec);
    }
    case GeneratorKind::redundant_repeat: {
      if (!spec.base) throw std::invalid_argument("repeat: base pattern required");
      if (n != 0 && n != spec.base->size() * spec.repeats) {
        throw std::invalid_argument("repeat: length must equal |base|*repeats");
      }
      return repeated(*spec.base, spec.repeats);
    }
    case GeneratorKind::redundant_random: {
      require_alphabet(spec.alphabet_size);
      if (!(spec.copy_probability >= 0.0 && spec.copy_probability <= 1.0)) {
        throw std::invalid_argument("redundant: copy probability must lie in [0, 1]");
      }
      Rng rng(spec.seed);
      std::vector<Symbol> out;
      out.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && rng.unit() < spec.copy_probability) {
          out.push_back(out.back());
        } else {
          out.push_back(generator_symbol(rng.below(spec.alphabet_size), spec.alphabet_size));
        }
      }
      return Pattern(std::move(out), generator_alphabet(spec.alphabet_size));
    }
    case GeneratorKind::english_text_file: {
      Pattern p = tokenize(read_file(spec.file), spec.file_mode);
      if (n == 0) return p;
      if (p.size() < n) {
        throw std::invalid_argument(spec.file.string() + " holds only " +
                                    std::to_string(p.size()) + " symbols");
      }
      std::vector<Symbol> head(p.symbols().begin(),
                               p.symbols().begin() + static_cast<std::ptrdiff_t>(n));
      return Pattern(std::move(head));
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace patinfo
