#include "onioneco/url.hpp"

#include <algorithm>
#include <cctype>

namespace onioneco {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool valid_scheme(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '+' || c == '-' || c == '.';
    });
}

int default_port(const std::string& scheme) {
    if (scheme == "http") return 80;
    if (scheme == "https") return 443;
    return -1;
}

// Splits "host[:port]" and validates. Returns false on empty host or bad port.
bool parse_authority(std::string_view authority, Url& url) {
    // Strip userinfo if present; crawl targets never need it.
    if (const auto at = authority.rfind('@'); at != std::string_view::npos) {
        authority = authority.substr(at + 1);
    }
    const auto colon = authority.rfind(':');
    std::string_view host = authority;
    if (colon != std::string_view::npos && authority.find(']') == std::string_view::npos) {
        host = authority.substr(0, colon);
        const std::string_view port_str = authority.substr(colon + 1);
        if (port_str.empty()) return false;
        int port = 0;
        for (const char c : port_str) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            port = port * 10 + (c - '0');
            if (port > 65535) return false;
        }
        url.port = port;
    }
    if (host.empty()) return false;
    url.host = to_lower(host);
    if (url.port == default_port(url.scheme)) url.port = -1;
    return true;
}

}  // namespace

std::string remove_dot_segments(std::string_view path) {
    std::string input(path);
    std::string output;
    while (!input.empty()) {
        if (input.rfind("../", 0) == 0) {
            input.erase(0, 3);
        } else if (input.rfind("./", 0) == 0) {
            input.erase(0, 2);
        } else if (input.rfind("/./", 0) == 0) {
            input.erase(0, 2);  // keep leading '/'
        } else if (input == "/.") {
            input = "/";
        } else if (input.rfind("/../", 0) == 0 || input == "/..") {
            input.erase(0, 3);
            if (input.empty()) input = "/";
            const auto slash = output.rfind('/');
            output.erase(slash == std::string::npos ? 0 : slash);
        } else if (input == "." || input == "..") {
            input.clear();
        } else {
            std::size_t end = input.find('/', input[0] == '/' ? 1 : 0);
            if (end == std::string::npos) end = input.size();
            output.append(input, 0, end);
            input.erase(0, end);
        }
    }
    return output;
}

std::optional<Url> parse_url(std::string_view raw) {
    // Trim surrounding whitespace; anchors in the wild carry plenty.
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.front()))) raw.remove_prefix(1);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);

    const auto colon = raw.find(':');
    if (colon == std::string_view::npos || !valid_scheme(raw.substr(0, colon))) return std::nullopt;

    Url url;
    url.scheme = to_lower(raw.substr(0, colon));
    std::string_view rest = raw.substr(colon + 1);
    if (rest.rfind("//", 0) != 0) return std::nullopt;  // only hierarchical URLs with a host
    rest.remove_prefix(2);

    auto authority_end = rest.find_first_of("/?#");
    if (authority_end == std::string_view::npos) authority_end = rest.size();
    if (!parse_authority(rest.substr(0, authority_end), url)) return std::nullopt;
    rest.remove_prefix(authority_end);

    if (const auto hash = rest.find('#'); hash != std::string_view::npos) {
        rest = rest.substr(0, hash);  // fragment dropped
    }
    if (const auto q = rest.find('?'); q != std::string_view::npos) {
        url.query = std::string(rest.substr(q + 1));
        rest = rest.substr(0, q);
    }
    url.path = rest.empty() ? "/" : remove_dot_segments(rest);
    return url;
}

std::string Url::normalized() const {
    std::string out = scheme + "://" + host;
    if (port >= 0 && port != (scheme == "http" ? 80 : scheme == "https" ? 443 : -1)) {
        out += ':' + std::to_string(port);
    }
    out += path.empty() ? "/" : path;
    if (!query.empty()) {
        out += '?';
        out += query;
    }
    return out;
}

std::optional<Url> resolve_reference(const Url& base, std::string_view ref) {
    while (!ref.empty() && std::isspace(static_cast<unsigned char>(ref.front()))) ref.remove_prefix(1);
    while (!ref.empty() && std::isspace(static_cast<unsigned char>(ref.back()))) ref.remove_suffix(1);
    if (ref.empty()) return base;

    // Absolute reference with its own scheme.
    const auto colon = ref.find(':');
    const auto slash = ref.find('/');
    if (colon != std::string_view::npos && (slash == std::string_view::npos || colon < slash) &&
        valid_scheme(ref.substr(0, colon))) {
        return parse_url(ref);
    }

    Url out;
    out.scheme = base.scheme;
    if (ref.rfind("//", 0) == 0) {
        // Network-path reference: keep scheme only.
        return parse_url(std::string(base.scheme) + ":" + std::string(ref));
    }

    out.host = base.host;
    out.port = base.port;

    if (const auto hash = ref.find('#'); hash != std::string_view::npos) ref = ref.substr(0, hash);
    if (ref.empty()) {
        out.path = base.path;
        out.query = base.query;
        return out;
    }

    std::string_view path = ref;
    if (const auto q = ref.find('?'); q != std::string_view::npos) {
        out.query = std::string(ref.substr(q + 1));
        path = ref.substr(0, q);
    }
    if (path.empty()) {
        out.path = base.path;
        return out;
    }
    if (path[0] == '/') {
        out.path = remove_dot_segments(path);
    } else {
        // Merge with the base path (RFC 3986 section 5.2.3).
        const auto last = base.path.rfind('/');
        std::string merged = last == std::string::npos ? "/" : base.path.substr(0, last + 1);
        merged.append(path);
        out.path = remove_dot_segments(merged);
    }
    if (out.path.empty()) out.path = "/";
    return out;
}

}  // namespace onioneco
