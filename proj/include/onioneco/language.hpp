#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace onioneco {

// Character n-gram rank profile for one language. Ranks are dense from 0 in
// order of decreasing frequency (ties broken lexicographically).
struct LanguageProfile {
    std::string label;
    std::vector<std::string> ngrams;                 // ngrams[rank]
    std::unordered_map<std::string, int> rank_of;    // inverse of ngrams

    std::size_t size() const { return ngrams.size(); }
};

struct LanguageIdOptions {
    int min_n = 1;
    int max_n = 5;
    int profile_size = 400;
    int min_words = 25;  // shorter texts get "unknown"
};

inline constexpr const char* kUnknownLanguage = "unknown";

// Builds a rank profile from training text (word-boundary padded n-grams).
LanguageProfile build_language_profile(std::string_view text, std::string label,
                                       const LanguageIdOptions& opts = {});

// File format: one "ngram<TAB>rank" per line; label taken from the file stem.
LanguageProfile load_language_profile(const std::filesystem::path& path);
void save_language_profile(const LanguageProfile& profile, const std::filesystem::path& path);

// Sum of rank displacements between the document profile and a language
// profile; n-grams absent from the language profile cost its full size.
long long out_of_place_distance(const LanguageProfile& doc, const LanguageProfile& lang);

// Label of the nearest profile, or "unknown" for texts under min_words.
// Throws ConfigError when profiles is empty.
std::string identify_language(std::string_view text, const std::vector<LanguageProfile>& profiles,
                              const LanguageIdOptions& opts = {});

}  // namespace onioneco
