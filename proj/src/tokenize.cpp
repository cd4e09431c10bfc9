#include "patinfo/tokenize.hpp"

#include <stdexcept>
#include <vector>

namespace patinfo {

std::string_view to_string(TokenMode m) noexcept {
  switch (m) {
    case TokenMode::byte: return "byte";
    case TokenMode::chr: return "char";
    case TokenMode::line: return "line";
    case TokenMode::token: return "token";
  }
  return "byte";
}

std::optional<TokenMode> parse_token_mode(std::string_view name) noexcept {
  if (name == "byte") return TokenMode::byte;
  if (name == "char") return TokenMode::chr;
  if (name == "line") return TokenMode::line;
  if (name == "token") return TokenMode::token;
  return std::nullopt;
}

namespace {

// Length of the UTF-8 sequence starting at `s[i]`, validated.
std::size_t utf8_sequence_length(std::string_view s, std::size_t i) {
  const auto lead = static_cast<unsigned char>(s[i]);
  std::size_t len = 0;
  char32_t cp = 0;
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) { len = 2; cp = lead & 0x1F; }
  else if ((lead & 0xF0) == 0xE0) { len = 3; cp = lead & 0x0F; }
  else if ((lead & 0xF8) == 0xF0) { len = 4; cp = lead & 0x07; }
  else throw std::invalid_argument("invalid UTF-8 lead byte at offset " + std::to_string(i));

  if (i + len > s.size()) {
    throw std::invalid_argument("truncated UTF-8 sequence at offset " + std::to_string(i));
  }
  for (std::size_t j = 1; j < len; ++j) {
    const auto b = static_cast<unsigned char>(s[i + j]);
    if ((b & 0xC0) != 0x80) {
      throw std::invalid_argument("invalid UTF-8 continuation at offset " +
                                  std::to_string(i + j));
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t min_for_len[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < min_for_len[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    throw std::invalid_argument("non-scalar UTF-8 value at offset " + std::to_string(i));
  }
  return len;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

Pattern tokenize(std::string_view input, TokenMode mode) {
  std::vector<Symbol> out;
  switch (mode) {
    case TokenMode::byte:
      return byte_pattern(input);
    case TokenMode::chr:
      for (std::size_t i = 0; i < input.size();) {
        const std::size_t len = utf8_sequence_length(input, i);
        out.emplace_back(std::string(input.substr(i, len)));
        i += len;
      }
      break;
    case TokenMode::line: {
      std::size_t start = 0;
      while (start < input.size()) {
        const std::size_t nl = input.find('\n', start);
        if (nl == std::string_view::npos) {
          out.emplace_back(std::string(input.substr(start)));
          break;
        }
        out.emplace_back(std::string(input.substr(start, nl - start)));
        start = nl + 1;
      }
      break;
    }
    case TokenMode::token: {
      std::size_t i = 0;
      while (i < input.size()) {
        while (i < input.size() && is_space(input[i])) ++i;
        const std::size_t start = i;
        while (i < input.size() && !is_space(input[i])) ++i;
        if (i > start) out.emplace_back(std::string(input.substr(start, i - start)));
      }
      break;
    }
  }
  return Pattern(std::move(out));
}

}  // namespace patinfo
