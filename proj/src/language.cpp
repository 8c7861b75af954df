#include "onioneco/language.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "onioneco/errors.hpp"
#include "onioneco/html_text.hpp"

namespace onioneco {

namespace {

// Words of letters only, lowercased (ASCII fold; multibyte UTF-8 kept as-is).
std::vector<std::string> letter_words(std::string_view text) {
    std::vector<std::string> words;
    std::string current;
    for (const char c : text) {
        const unsigned char u = static_cast<unsigned char>(c);
        if (std::isalpha(u) || u >= 0x80) {
            current.push_back(static_cast<char>(std::isupper(u) ? std::tolower(u) : c));
        } else if (!current.empty()) {
            words.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

std::unordered_map<std::string, long long> ngram_counts(std::string_view text,
                                                        const LanguageIdOptions& opts) {
    std::unordered_map<std::string, long long> counts;
    for (const std::string& word : letter_words(text)) {
        const std::string padded = "_" + word + "_";
        for (int n = opts.min_n; n <= opts.max_n; ++n) {
            if (padded.size() < static_cast<std::size_t>(n)) continue;
            for (std::size_t i = 0; i + n <= padded.size(); ++i) {
                ++counts[padded.substr(i, n)];
            }
        }
    }
    return counts;
}

LanguageProfile rank_counts(std::unordered_map<std::string, long long> counts, std::string label,
                            int profile_size) {
    std::vector<std::pair<std::string, long long>> entries(counts.begin(), counts.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (static_cast<int>(entries.size()) > profile_size) entries.resize(profile_size);

    LanguageProfile profile;
    profile.label = std::move(label);
    profile.ngrams.reserve(entries.size());
    for (std::size_t rank = 0; rank < entries.size(); ++rank) {
        profile.rank_of.emplace(entries[rank].first, static_cast<int>(rank));
        profile.ngrams.push_back(std::move(entries[rank].first));
    }
    return profile;
}

}  // namespace

LanguageProfile build_language_profile(std::string_view text, std::string label,
                                       const LanguageIdOptions& opts) {
    return rank_counts(ngram_counts(text, opts), std::move(label), opts.profile_size);
}

LanguageProfile load_language_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open language profile: " + path.string());
    LanguageProfile profile;
    profile.label = path.stem().string();
    std::string line;
    std::vector<std::pair<std::string, int>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw DataError("malformed profile line in " + path.string());
        rows.emplace_back(line.substr(0, tab), std::stoi(line.substr(tab + 1)));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].second != static_cast<int>(i)) {
            throw DataError("profile ranks not consecutive in " + path.string());
        }
        profile.rank_of.emplace(rows[i].first, rows[i].second);
        profile.ngrams.push_back(rows[i].first);
    }
    return profile;
}

void save_language_profile(const LanguageProfile& profile, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write language profile: " + path.string());
    for (std::size_t rank = 0; rank < profile.ngrams.size(); ++rank) {
        out << profile.ngrams[rank] << '\t' << rank << '\n';
    }
}

long long out_of_place_distance(const LanguageProfile& doc, const LanguageProfile& lang) {
    const long long penalty = static_cast<long long>(lang.size());
    long long distance = 0;
    for (std::size_t rank = 0; rank < doc.ngrams.size(); ++rank) {
        const auto it = lang.rank_of.find(doc.ngrams[rank]);
        if (it == lang.rank_of.end()) {
            distance += penalty;
        } else {
            distance += std::llabs(static_cast<long long>(rank) - it->second);
        }
    }
    return distance;
}

std::string identify_language(std::string_view text, const std::vector<LanguageProfile>& profiles,
                              const LanguageIdOptions& opts) {
    if (profiles.empty()) throw ConfigError("identify_language: no language profiles configured");
    if (count_words(text) < static_cast<std::size_t>(opts.min_words)) return kUnknownLanguage;

    const LanguageProfile doc = build_language_profile(text, "doc", opts);
    if (doc.ngrams.empty()) return kUnknownLanguage;

    std::string best;
    long long best_distance = 0;
    for (const LanguageProfile& lang : profiles) {
        const long long d = out_of_place_distance(doc, lang);
        if (best.empty() || d < best_distance || (d == best_distance && lang.label < best)) {
            best = lang.label;
            best_distance = d;
        }
    }
    return best;
}

}  // namespace onioneco
