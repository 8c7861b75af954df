#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "onioneco/corpus.hpp"
#include "onioneco/url.hpp"

namespace onioneco {

struct Seed {
    std::string address;
};

struct FrontierEntry {
    std::string address;  // normalized
    int depth = 0;
    std::string discovered_from;  // empty for seeds
};

struct CrawlConfig {
    int max_depth = 4;
    int workers = 4;
    std::chrono::milliseconds per_host_delay{0};
    int crawl_id = 0;
    std::chrono::milliseconds timeout{10000};
    int retries = 1;  // one retry after a failed fetch
};

struct FetchResult {
    int status = 0;  // 0 on transport failure
    std::string body;
};

class Fetcher {
public:
    virtual ~Fetcher() = default;
    virtual FetchResult fetch(const std::string& url) = 0;
};

// Serves a directory tree: http://host/path maps to root/host/path, with
// index.html appended for directory-style paths.
class FixtureFetcher : public Fetcher {
public:
    explicit FixtureFetcher(std::filesystem::path root) : root_(std::move(root)) {}
    FetchResult fetch(const std::string& url) override;

private:
    std::filesystem::path root_;
};

// Plain HTTP(S) fetcher; requests only the page body, no embedded resources.
class HttpFetcher : public Fetcher {
public:
    explicit HttpFetcher(std::chrono::milliseconds timeout = std::chrono::milliseconds(10000))
        : timeout_(timeout) {}
    FetchResult fetch(const std::string& url) override;

private:
    std::chrono::milliseconds timeout_;
};

// Normalized absolute http(s) URLs from anchors, relative references
// resolved against base, duplicates removed keeping first occurrence.
std::vector<std::string> extract_links(std::string_view html, const Url& base);

struct CrawlStats {
    std::size_t fetched = 0;
    std::size_t failed = 0;
    std::size_t skipped_depth = 0;
};

// Depth-limited concurrent crawl. Every reachable page within max_depth of a
// seed is fetched at most once; traversal is depth-prioritized (LIFO frontier)
// subject to concurrency; successive requests to one host are spaced by
// per_host_delay. The sink is invoked serially. A non-null stop flag aborts
// cleanly, flushing records already emitted.
CrawlStats crawl(const std::vector<Seed>& seeds, const CrawlConfig& config, Fetcher& fetcher,
                 const std::function<void(const CrawlRecord&)>& sink,
                 std::atomic<bool>* stop = nullptr);

// Address-keyed union of two record streams; on duplicate addresses the
// record with the later crawl_id wins. Pages are processed (text, kind,
// language when profiles given).
Corpus union_crawls(const std::vector<CrawlRecord>& a, const std::vector<CrawlRecord>& b,
                    const std::vector<LanguageProfile>& profiles = {});

}  // namespace onioneco
