#include "onioneco/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "onioneco/base64.hpp"
#include "onioneco/errors.hpp"
#include "onioneco/html_text.hpp"
#include "onioneco/log.hpp"
#include "onioneco/url.hpp"

namespace onioneco {

namespace {

using nlohmann::json;

bool has_onion_suffix(const std::string& host) {
    static constexpr std::string_view suffix = ".onion";
    if (host.size() < suffix.size()) return false;
    return host.compare(host.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

AddressKind classify_address(std::string_view url) {
    const auto parsed = parse_url(url);
    if (!parsed) throw DataError("classify_address: malformed url: " + std::string(url));
    return has_onion_suffix(parsed->host) ? AddressKind::Onion : AddressKind::Surface;
}

std::vector<CrawlRecord> read_crawl_records(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open crawl record file: " + path.string());
    std::vector<CrawlRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json obj = json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": invalid JSON record");
        }
        CrawlRecord record;
        record.url = obj.value("url", "");
        record.fetched_at = obj.value("fetched_at", "");
        record.crawl_id = obj.value("crawl_id", 0);
        record.error = obj.value("error", false);
        const auto decoded = base64_decode(obj.value("html", ""));
        if (!decoded) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": invalid base64 html");
        }
        record.html = *decoded;
        records.push_back(std::move(record));
    }
    return records;
}

void write_crawl_record(std::ostream& out, const CrawlRecord& record) {
    json obj;
    obj["url"] = record.url;
    obj["html"] = base64_encode(record.html);
    obj["fetched_at"] = record.fetched_at;
    obj["crawl_id"] = record.crawl_id;
    if (record.error) obj["error"] = true;
    out << obj.dump() << '\n';
}

std::optional<PageRecord> make_page_record(const CrawlRecord& record,
                                           const std::vector<LanguageProfile>& profiles) {
    const auto parsed = parse_url(record.url);
    if (!parsed) return std::nullopt;
    PageRecord page;
    page.address = parsed->normalized();
    page.domain = parsed->host;
    page.html = record.html;
    page.crawl_id = record.crawl_id;
    page.fetch_failed = record.error;
    page.kind = has_onion_suffix(parsed->host) ? AddressKind::Onion : AddressKind::Surface;
    page.text = extract_text(page.html);
    page.word_count = count_words(page.text);
    if (!profiles.empty()) page.language = identify_language(page.text, profiles);
    return page;
}

Corpus merge_pages(std::vector<PageRecord> pages) {
    std::unordered_map<std::string, std::size_t> by_address;
    Corpus corpus;
    for (PageRecord& page : pages) {
        const auto it = by_address.find(page.address);
        if (it == by_address.end()) {
            by_address.emplace(page.address, corpus.pages.size());
            corpus.pages.push_back(std::move(page));
        } else if (page.crawl_id >= corpus.pages[it->second].crawl_id) {
            corpus.pages[it->second] = std::move(page);
        }
    }
    std::sort(corpus.pages.begin(), corpus.pages.end(),
              [](const PageRecord& a, const PageRecord& b) { return a.address < b.address; });
    std::set<int> ids;
    for (const PageRecord& page : corpus.pages) ids.insert(page.crawl_id);
    corpus.provenance.assign(ids.begin(), ids.end());
    return corpus;
}

Corpus filter_corpus(const Corpus& corpus, std::size_t min_words,
                     const std::optional<std::string>& language,
                     const std::optional<AddressKind>& kind) {
    Corpus out;
    for (const PageRecord& page : corpus.pages) {
        if (page.word_count <= min_words && min_words > 0) continue;
        if (language && page.language != *language) continue;
        if (kind && page.kind != *kind) continue;
        out.pages.push_back(page);
    }
    std::set<int> ids;
    for (const PageRecord& page : out.pages) ids.insert(page.crawl_id);
    out.provenance.assign(ids.begin(), ids.end());
    return out;
}

std::map<std::string, std::string> group_by_domain(const Corpus& corpus) {
    std::map<std::string, std::vector<const PageRecord*>> grouped;
    for (const PageRecord& page : corpus.pages) grouped[page.domain].push_back(&page);
    std::map<std::string, std::string> out;
    for (auto& [domain, pages] : grouped) {
        std::sort(pages.begin(), pages.end(),
                  [](const PageRecord* a, const PageRecord* b) { return a->address < b->address; });
        std::string text;
        for (const PageRecord* page : pages) {
            if (page->text.empty()) continue;
            if (!text.empty()) text.push_back(' ');
            text += page->text;
        }
        out.emplace(domain, std::move(text));
    }
    return out;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write corpus file: " + path.string());
    for (const PageRecord& page : corpus.pages) {
        json obj;
        obj["address"] = page.address;
        obj["domain"] = page.domain;
        obj["kind"] = page.kind == AddressKind::Onion ? "onion" : "surface";
        obj["language"] = page.language;
        obj["crawl_id"] = page.crawl_id;
        obj["word_count"] = page.word_count;
        obj["text"] = page.text;
        out << obj.dump() << '\n';
    }
}

Corpus read_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file: " + path.string());
    std::vector<PageRecord> pages;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json obj = json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": invalid corpus record");
        }
        PageRecord page;
        page.address = obj.value("address", "");
        page.domain = obj.value("domain", "");
        page.kind = obj.value("kind", "surface") == "onion" ? AddressKind::Onion : AddressKind::Surface;
        page.language = obj.value("language", kUnknownLanguage);
        page.crawl_id = obj.value("crawl_id", 0);
        page.word_count = obj.value("word_count", std::size_t{0});
        page.text = obj.value("text", "");
        pages.push_back(std::move(page));
    }
    return merge_pages(std::move(pages));
}

}  // namespace onioneco
