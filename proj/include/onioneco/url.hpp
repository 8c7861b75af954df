#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace onioneco {

// Parsed absolute URL. Normalization lowercases scheme and host, strips the
// default port for http/https, and drops the fragment; path and query are
// kept verbatim so distinct pages of one host stay distinct.
struct Url {
    std::string scheme;
    std::string host;
    int port = -1;  // -1 means none/default
    std::string path;
    std::string query;  // without '?'

    // Canonical string form: scheme://host[:port]path[?query]
    std::string normalized() const;
    // Host with a leading "www."-free? No: identity is the full host.
    const std::string& domain() const { return host; }
    bool is_http() const { return scheme == "http" || scheme == "https"; }
};

std::optional<Url> parse_url(std::string_view raw);

// RFC 3986 section 5.3 reference resolution against an absolute base.
// Returns nullopt when the reference is unusable (e.g. unsupported scheme
// syntax or an empty result).
std::optional<Url> resolve_reference(const Url& base, std::string_view ref);

// RFC 3986 section 5.2.4; exposed for tests.
std::string remove_dot_segments(std::string_view path);

}  // namespace onioneco
