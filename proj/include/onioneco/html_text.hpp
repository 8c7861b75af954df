#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace onioneco {

// Visible-text extraction from possibly malformed HTML bytes.
//
// Rules: element tags, comments, and the bodies of script/style elements are
// invisible; every tag boundary separates words; common character entities
// are decoded; invalid UTF-8 sequences are replaced with U+FFFD; whitespace
// is collapsed to single spaces and trimmed. Never throws.
std::string extract_text(std::string_view html);

// Raw href attribute values of <a> anchors, entity-decoded, document order.
std::vector<std::string> find_anchor_hrefs(std::string_view html);

// Count of whitespace-delimited tokens.
std::size_t count_words(std::string_view text);

}  // namespace onioneco
