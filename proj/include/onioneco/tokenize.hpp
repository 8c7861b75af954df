#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace onioneco {

// Lowercases, splits on anything that is not a letter or digit, and drops
// single-character tokens. Multibyte UTF-8 is kept inside tokens.
std::vector<std::string> tokenize(std::string_view text);

// Standard English stopword list.
const std::unordered_set<std::string>& default_stopwords();

}  // namespace onioneco
