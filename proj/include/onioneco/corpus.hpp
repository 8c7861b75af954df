#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onioneco/language.hpp"

namespace onioneco {

enum class AddressKind { Onion, Surface };

// Onion iff the host suffix is ".onion" (case-insensitive). Throws DataError
// when the URL does not parse to a host.
AddressKind classify_address(std::string_view url);

// One crawled page after ingestion. `address` is normalized; `domain` is the
// full host (subdomains distinct).
struct PageRecord {
    std::string address;
    std::string domain;
    std::string html;  // raw bytes
    std::string text;
    int crawl_id = 0;
    AddressKind kind = AddressKind::Surface;
    std::string language = kUnknownLanguage;  // ISO-639-1 or "unknown"
    std::size_t word_count = 0;
    bool fetch_failed = false;
};

struct Corpus {
    std::vector<PageRecord> pages;
    std::vector<int> provenance;  // sorted distinct crawl ids present
};

// Wire form of one crawl output line (see read/write_crawl_records).
struct CrawlRecord {
    std::string url;
    std::string html;  // raw bytes (base64 on the wire)
    std::string fetched_at;  // RFC3339
    int crawl_id = 0;
    bool error = false;
};

// Crawl record files are JSON Lines: one object per page with keys "url",
// "html" (base64), "fetched_at" (RFC3339), "crawl_id"; failed fetches add
// "error": true. UTF-8, LF line endings.
std::vector<CrawlRecord> read_crawl_records(const std::filesystem::path& path);
void write_crawl_record(std::ostream& out, const CrawlRecord& record);

// Builds a processed page from a raw record: extracts text, classifies the
// address, identifies the language (when profiles are given), counts words.
// Returns nullopt when the URL cannot be parsed.
std::optional<PageRecord> make_page_record(const CrawlRecord& record,
                                           const std::vector<LanguageProfile>& profiles = {});

// Address-keyed union of processed pages; on duplicates the later crawl_id
// wins. Provenance lists every crawl id present.
Corpus merge_pages(std::vector<PageRecord> pages);

// Retains pages matching all given predicates; nullopt means "any".
// word_count must be strictly greater than min_words; min_words of 0
// disables the length filter.
Corpus filter_corpus(const Corpus& corpus, std::size_t min_words,
                     const std::optional<std::string>& language,
                     const std::optional<AddressKind>& kind);

// Concatenated text per domain, pages in ascending address order, joined by
// single spaces.
std::map<std::string, std::string> group_by_domain(const Corpus& corpus);

// Processed-corpus file: JSON Lines with address/domain/kind/language/
// crawl_id/word_count/text per page.
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);
Corpus read_corpus(const std::filesystem::path& path);

}  // namespace onioneco
