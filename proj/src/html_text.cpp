#include "onioneco/html_text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

namespace onioneco {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
    }
    return true;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else if (cp < 0x110000) {
        out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
}

// Decodes the entity starting at html[pos] (== '&'). On success returns the
// position one past the entity and appends the replacement; otherwise leaves
// pos untouched and returns npos.
std::size_t decode_entity(std::string_view html, std::size_t pos, std::string& out) {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 7> kNamed = {{
        {"amp", "&"},
        {"lt", "<"},
        {"gt", ">"},
        {"quot", "\""},
        {"apos", "'"},
        {"nbsp", " "},
        {"mdash", "\xe2\x80\x94"},
    }};
    const std::size_t end = html.find(';', pos + 1);
    if (end == std::string_view::npos || end - pos > 10) return std::string_view::npos;
    const std::string_view body = html.substr(pos + 1, end - pos - 1);
    if (body.empty()) return std::string_view::npos;
    if (body[0] == '#') {
        std::uint32_t cp = 0;
        bool ok = false;
        if (body.size() > 1 && (body[1] == 'x' || body[1] == 'X')) {
            for (std::size_t i = 2; i < body.size(); ++i) {
                const char c = ascii_lower(body[i]);
                if (c >= '0' && c <= '9') cp = cp * 16 + static_cast<std::uint32_t>(c - '0');
                else if (c >= 'a' && c <= 'f') cp = cp * 16 + static_cast<std::uint32_t>(c - 'a' + 10);
                else return std::string_view::npos;
                ok = true;
            }
        } else {
            for (std::size_t i = 1; i < body.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(body[i]))) return std::string_view::npos;
                cp = cp * 10 + static_cast<std::uint32_t>(body[i] - '0');
                ok = true;
            }
        }
        if (!ok || cp == 0 || cp > 0x10ffff) return std::string_view::npos;
        append_utf8(out, cp);
        return end + 1;
    }
    for (const auto& [name, repl] : kNamed) {
        if (iequals(body, name)) {
            out.append(repl);
            return end + 1;
        }
    }
    return std::string_view::npos;
}

// True when '<' at pos opens markup we should treat as a tag.
bool starts_tag(std::string_view html, std::size_t pos) {
    if (pos + 1 >= html.size()) return false;
    const char c = html[pos + 1];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '/' || c == '!' || c == '?';
}

// Name of the tag at html[pos] (pos points at '<'), lowercased; empty for
// comments/doctype. Sets closing for </...>.
std::string tag_name(std::string_view html, std::size_t pos, bool& closing) {
    std::size_t i = pos + 1;
    closing = i < html.size() && html[i] == '/';
    if (closing) ++i;
    std::string name;
    while (i < html.size() && (std::isalnum(static_cast<unsigned char>(html[i])) || html[i] == '-')) {
        name.push_back(ascii_lower(html[i]));
        ++i;
    }
    return name;
}

// Replaces invalid UTF-8 with U+FFFD. Standalone pass so the tag scanner can
// work on raw bytes first.
std::string sanitize_utf8(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        const unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        std::uint32_t cp = 0;
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
            ++i;
            continue;
        }
        if ((c & 0xe0) == 0xc0) { len = 2; cp = c & 0x1f; }
        else if ((c & 0xf0) == 0xe0) { len = 3; cp = c & 0x0f; }
        else if ((c & 0xf8) == 0xf0) { len = 4; cp = c & 0x07; }
        bool ok = len > 0 && i + len <= bytes.size();
        for (std::size_t k = 1; ok && k < len; ++k) {
            const unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xc0) != 0x80) ok = false;
            else cp = (cp << 6) | (cc & 0x3f);
        }
        if (ok) {
            // Reject overlongs and surrogates.
            if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
                (cp >= 0xd800 && cp <= 0xdfff) || cp > 0x10ffff) {
                ok = false;
            }
        }
        if (ok) {
            out.append(bytes.substr(i, len));
            i += len;
        } else {
            out.append("\xef\xbf\xbd");  // U+FFFD
            ++i;
        }
    }
    return out;
}

void append_collapsed(std::string& out, std::string_view piece) {
    for (const char c : piece) {
        if (is_space(c)) {
            if (!out.empty() && out.back() != ' ') out.push_back(' ');
        } else {
            out.push_back(c);
        }
    }
}

}  // namespace

std::string extract_text(std::string_view raw) {
    const std::string html = sanitize_utf8(raw);
    std::string out;
    out.reserve(html.size() / 4);
    std::string_view view(html);
    std::size_t i = 0;
    while (i < view.size()) {
        const char c = view[i];
        if (c == '<' && starts_tag(view, i)) {
            // Comments and doctype-like markup.
            if (view.compare(i, 4, "<!--") == 0) {
                const auto end = view.find("-->", i + 4);
                i = end == std::string_view::npos ? view.size() : end + 3;
                append_collapsed(out, " ");
                continue;
            }
            bool closing = false;
            const std::string name = tag_name(view, i, closing);
            std::size_t end = view.find('>', i);
            if (end == std::string_view::npos) break;  // truncated tag: rest is markup
            i = end + 1;
            append_collapsed(out, " ");
            if (!closing && (name == "script" || name == "style")) {
                // Skip to the matching close tag, case-insensitive.
                const std::string close = "</" + name;
                std::size_t j = i;
                while (j + close.size() <= view.size()) {
                    if (iequals(view.substr(j, close.size()), close)) break;
                    ++j;
                }
                if (j + close.size() > view.size()) break;  // unterminated: drop the rest
                const auto close_end = view.find('>', j);
                i = close_end == std::string_view::npos ? view.size() : close_end + 1;
            }
            continue;
        }
        if (c == '&') {
            const std::size_t next = decode_entity(view, i, out);
            if (next != std::string_view::npos) {
                i = next;
                continue;
            }
        }
        if (is_space(c)) {
            append_collapsed(out, " ");
        } else {
            out.push_back(c);
        }
        ++i;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    std::size_t start = 0;
    while (start < out.size() && out[start] == ' ') ++start;
    return out.substr(start);
}

std::vector<std::string> find_anchor_hrefs(std::string_view raw) {
    const std::string html = sanitize_utf8(raw);
    std::vector<std::string> hrefs;
    std::string_view view(html);
    std::size_t i = 0;
    while (i < view.size()) {
        if (view[i] != '<' || !starts_tag(view, i)) {
            ++i;
            continue;
        }
        if (view.compare(i, 4, "<!--") == 0) {
            const auto end = view.find("-->", i + 4);
            i = end == std::string_view::npos ? view.size() : end + 3;
            continue;
        }
        bool closing = false;
        const std::string name = tag_name(view, i, closing);
        const std::size_t end = view.find('>', i);
        if (end == std::string_view::npos) break;
        if (!closing && name == "a") {
            // Scan attributes inside the tag for href=...
            std::string_view tag = view.substr(i, end - i);
            std::size_t p = 0;
            while ((p = tag.find("href", p)) != std::string_view::npos) {
                std::size_t q = p + 4;
                while (q < tag.size() && is_space(tag[q])) ++q;
                if (q >= tag.size() || tag[q] != '=') {
                    p = q;
                    continue;
                }
                ++q;
                while (q < tag.size() && is_space(tag[q])) ++q;
                std::string value;
                if (q < tag.size() && (tag[q] == '"' || tag[q] == '\'')) {
                    const char quote = tag[q++];
                    const auto vend = tag.find(quote, q);
                    value = std::string(tag.substr(q, vend == std::string_view::npos ? tag.size() - q
                                                                                     : vend - q));
                } else {
                    std::size_t vend = q;
                    while (vend < tag.size() && !is_space(tag[vend])) ++vend;
                    value = std::string(tag.substr(q, vend - q));
                }
                // Entity-decode the attribute value (&amp; in query strings).
                std::string decoded;
                for (std::size_t k = 0; k < value.size();) {
                    if (value[k] == '&') {
                        const std::size_t next = decode_entity(value, k, decoded);
                        if (next != std::string_view::npos) {
                            k = next;
                            continue;
                        }
                    }
                    decoded.push_back(value[k++]);
                }
                hrefs.push_back(decoded);
                break;
            }
        }
        if (!closing && (name == "script" || name == "style")) {
            const std::string close = "</" + name;
            std::size_t j = end + 1;
            while (j + close.size() <= view.size()) {
                if (iequals(view.substr(j, close.size()), close)) break;
                ++j;
            }
            if (j + close.size() > view.size()) break;
            const auto close_end = view.find('>', j);
            i = close_end == std::string_view::npos ? view.size() : close_end + 1;
            continue;
        }
        i = end + 1;
    }
    return hrefs;
}

std::size_t count_words(std::string_view text) {
    std::size_t count = 0;
    bool in_word = false;
    for (const char c : text) {
        if (is_space(c)) {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++count;
        }
    }
    return count;
}

}  // namespace onioneco
