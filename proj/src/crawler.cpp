#include "onioneco/crawler.hpp"

#include <condition_variable>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#define CPPHTTPLIB_NO_EXCEPTIONS
#include <httplib.h>

#include "onioneco/html_text.hpp"
#include "onioneco/log.hpp"

namespace onioneco {

namespace {

std::string rfc3339_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

FetchResult FixtureFetcher::fetch(const std::string& url) {
    const auto parsed = parse_url(url);
    if (!parsed) return {0, ""};
    std::filesystem::path file = root_ / parsed->host;
    std::string path = parsed->path;
    if (path.empty() || path.back() == '/') path += "index.html";
    // Path components are safe by construction (dot segments already removed).
    file /= std::filesystem::path(path.substr(1));
    if (std::filesystem::is_directory(file)) file /= "index.html";
    std::ifstream in(file, std::ios::binary);
    if (!in) return {404, ""};
    std::ostringstream body;
    body << in.rdbuf();
    return {200, body.str()};
}

FetchResult HttpFetcher::fetch(const std::string& url) {
    const auto parsed = parse_url(url);
    if (!parsed || !parsed->is_http()) return {0, ""};
    std::string origin = parsed->scheme + "://" + parsed->host;
    if (parsed->port >= 0) origin += ':' + std::to_string(parsed->port);
    httplib::Client client(origin);
    client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout_).count(),
                                  (timeout_.count() % 1000) * 1000);
    client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout_).count(),
                            (timeout_.count() % 1000) * 1000);
    client.set_follow_location(true);
    std::string target = parsed->path;
    if (!parsed->query.empty()) target += '?' + parsed->query;
    const auto res = client.Get(target);
    if (!res) return {0, ""};
    return {res->status, res->body};
}

std::vector<std::string> extract_links(std::string_view html, const Url& base) {
    std::vector<std::string> links;
    std::unordered_set<std::string> seen;
    for (const std::string& href : find_anchor_hrefs(html)) {
        const auto resolved = resolve_reference(base, href);
        if (!resolved || !resolved->is_http()) continue;
        std::string normalized = resolved->normalized();
        if (seen.insert(normalized).second) links.push_back(std::move(normalized));
    }
    return links;
}

namespace {

// Shared crawl state: LIFO frontier (depth-prioritized), visited set, and a
// per-host reservation clock for politeness.
struct CrawlState {
    std::mutex mutex;
    std::condition_variable cv;
    std::vector<FrontierEntry> frontier;  // stack
    std::unordered_set<std::string> visited;
    std::unordered_map<std::string, std::chrono::steady_clock::time_point> host_next;
    int active_workers = 0;
    bool stopping = false;
};

}  // namespace

CrawlStats crawl(const std::vector<Seed>& seeds, const CrawlConfig& config, Fetcher& fetcher,
                 const std::function<void(const CrawlRecord&)>& sink, std::atomic<bool>* stop) {
    CrawlState state;
    CrawlStats stats;
    std::mutex sink_mutex;
    std::mutex stats_mutex;

    // Seeds enter the frontier in reverse so the first seed is popped first.
    for (auto it = seeds.rbegin(); it != seeds.rend(); ++it) {
        const auto parsed = parse_url(it->address);
        if (!parsed || !parsed->is_http()) {
            ONIONECO_LOG_WARN("skipping malformed seed: %s", it->address.c_str());
            continue;
        }
        const std::string normalized = parsed->normalized();
        if (state.visited.insert(normalized).second) {
            state.frontier.push_back({normalized, 0, ""});
        }
    }

    auto worker = [&]() {
        for (;;) {
            FrontierEntry entry;
            {
                std::unique_lock<std::mutex> lock(state.mutex);
                state.cv.wait(lock, [&] {
                    return state.stopping || !state.frontier.empty() || state.active_workers == 0;
                });
                if (state.stopping || (state.frontier.empty() && state.active_workers == 0)) return;
                if (state.frontier.empty()) continue;
                entry = std::move(state.frontier.back());
                state.frontier.pop_back();
                ++state.active_workers;
            }

            if (stop != nullptr && stop->load()) {
                std::lock_guard<std::mutex> lock(state.mutex);
                state.stopping = true;
                --state.active_workers;
                state.cv.notify_all();
                return;
            }

            const auto parsed = parse_url(entry.address);
            // Politeness: reserve the next slot for this host, then wait for it.
            if (config.per_host_delay.count() > 0 && parsed) {
                std::chrono::steady_clock::time_point slot;
                {
                    std::lock_guard<std::mutex> lock(state.mutex);
                    auto& next = state.host_next[parsed->host];
                    const auto now = std::chrono::steady_clock::now();
                    slot = next > now ? next : now;
                    next = slot + config.per_host_delay;
                }
                std::this_thread::sleep_until(slot);
            }

            FetchResult result = fetcher.fetch(entry.address);
            if (result.status != 200 && config.retries > 0) {
                for (int attempt = 0; attempt < config.retries && result.status != 200; ++attempt) {
                    result = fetcher.fetch(entry.address);
                }
            }

            CrawlRecord record;
            record.url = entry.address;
            record.fetched_at = rfc3339_now();
            record.crawl_id = config.crawl_id;
            if (result.status == 200) {
                record.html = std::move(result.body);
            } else {
                record.error = true;
            }
            {
                std::lock_guard<std::mutex> lock(sink_mutex);
                sink(record);
            }
            {
                std::lock_guard<std::mutex> lock(stats_mutex);
                record.error ? ++stats.failed : ++stats.fetched;
            }

            std::vector<FrontierEntry> children;
            if (!record.error && entry.depth < config.max_depth && parsed) {
                for (std::string& link : extract_links(record.html, *parsed)) {
                    children.push_back({std::move(link), entry.depth + 1, entry.address});
                }
            } else if (!record.error && entry.depth >= config.max_depth) {
                std::lock_guard<std::mutex> lock(stats_mutex);
                ++stats.skipped_depth;
            }

            {
                std::lock_guard<std::mutex> lock(state.mutex);
                // Reverse push keeps the page's first link on top of the stack.
                for (auto it = children.rbegin(); it != children.rend(); ++it) {
                    if (state.visited.insert(it->address).second) {
                        state.frontier.push_back(std::move(*it));
                    }
                }
                --state.active_workers;
            }
            state.cv.notify_all();
        }
    };

    std::vector<std::thread> threads;
    const int worker_count = std::max(1, config.workers);
    threads.reserve(worker_count);
    for (int i = 0; i < worker_count; ++i) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    return stats;
}

Corpus union_crawls(const std::vector<CrawlRecord>& a, const std::vector<CrawlRecord>& b,
                    const std::vector<LanguageProfile>& profiles) {
    std::vector<PageRecord> pages;
    pages.reserve(a.size() + b.size());
    for (const auto* stream : {&a, &b}) {
        for (const CrawlRecord& record : *stream) {
            auto page = make_page_record(record, profiles);
            if (!page) {
                ONIONECO_LOG_WARN("union_crawls: dropping record with malformed url: %s",
                                  record.url.c_str());
                continue;
            }
            pages.push_back(std::move(*page));
        }
    }
    return merge_pages(std::move(pages));
}

}  // namespace onioneco
