#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "patinfo/core.hpp"

namespace patinfo {

/// How raw input is cut into symbols.
enum class TokenMode {
  byte,   // one symbol per byte
  chr,    // one symbol per Unicode scalar value (input must be UTF-8)
  line,   // one symbol per line, '\n' separated, trailing '\r' kept
  token,  // whitespace-separated words
};

std::string_view to_string(TokenMode m) noexcept;
std::optional<TokenMode> parse_token_mode(std::string_view name) noexcept;

/// Splits `input` into a pattern with an inferred alphabet. Throws
/// std::invalid_argument for malformed UTF-8 in `chr` mode.
Pattern tokenize(std::string_view input, TokenMode mode);

}  // namespace patinfo
