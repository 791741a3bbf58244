#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace gpcgate::detail {

std::string base64_encode(std::string_view bytes);

/// Strict decode: canonical alphabet, correct padding. Nullopt on any deviation.
std::optional<std::string> base64_decode(std::string_view text);

/// Lowercase hex SHA-256 digest of `bytes`.
std::string sha256_hex(std::string_view bytes);

}  // namespace gpcgate::detail
