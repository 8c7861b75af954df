#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace onioneco {

std::string base64_encode(std::string_view bytes);

// Returns nullopt on characters outside the alphabet or bad padding.
std::optional<std::string> base64_decode(std::string_view text);

}  // namespace onioneco
