#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace onioneco {

// Indexed term list with per-word document frequency. Indices are dense.
struct Vocabulary {
    std::vector<std::string> words;  // sorted lexicographically
    std::vector<int> doc_freq;
    std::unordered_map<std::string, int> index;

    int size() const { return static_cast<int>(words.size()); }
    std::optional<int> id(const std::string& word) const {
        const auto it = index.find(word);
        return it == index.end() ? std::nullopt : std::optional<int>(it->second);
    }
};

using TokenDoc = std::vector<std::string>;
using IdDoc = std::vector<int>;

// Lowercased tokens with document frequency >= min_df, stopwords removed.
// Throws DataError when nothing survives filtering.
Vocabulary build_vocabulary(const std::vector<TokenDoc>& docs, int min_df,
                            const std::unordered_set<std::string>& stopwords);

// Maps docs to vocabulary ids, dropping out-of-vocabulary tokens.
std::vector<IdDoc> encode_docs(const std::vector<TokenDoc>& docs, const Vocabulary& vocab);

// LDA fitted by collapsed Gibbs sampling; phi/theta are posterior-mean
// estimates from the final sampler state.
struct TopicModel {
    int num_topics = 0;
    double alpha = 0.0;
    double beta = 0.0;
    std::uint64_t seed = 0;
    int iterations = 0;
    Vocabulary vocab;
    std::vector<std::vector<double>> phi;    // T x M, rows sum to 1
    std::vector<std::vector<double>> theta;  // N x T, rows sum to 1
    std::vector<IdDoc> assignments;          // final per-token topic labels

    std::string fingerprint() const;  // stable content hash for artifact checks
};

struct LdaOptions {
    double alpha = -1.0;  // <0 means 50/T
    double beta = 0.01;
    int iterations = 1000;
    std::uint64_t seed = 1;
};

// Collapsed Gibbs sampling; deterministic for a fixed seed. Throws DataError
// on an empty document list and ConfigError for T < 2 or iterations < 1.
TopicModel fit_lda(const std::vector<IdDoc>& docs, const Vocabulary& vocab, int num_topics,
                   const LdaOptions& opts = {});

// Word ids of the n most probable words of topic t, descending probability,
// ties to the lower word id.
std::vector<int> top_words(const TopicModel& model, int topic, int n);

// Log-ratio co-occurrence score over an ordered top-word list:
//   sum_{i=2..n} sum_{j<i} log((df(w_i, w_j) + 1) / df(w_j))
// df counts documents. Values nearer zero indicate higher coherence. Throws
// NumericError, naming the word, if some w_j appears in no document.
double coherence(const std::vector<int>& ordered_top_words, const std::vector<IdDoc>& docs,
                 const Vocabulary& vocab);

struct TopicCountSelection {
    int selected = 0;
    std::vector<std::pair<int, double>> mean_coherence;  // (T, mean over topics)
    TopicModel model;                                    // fitted model for the selected T
};

// Fits one model per candidate T (each with a seed derived from opts.seed and
// T) on documents longer than min_len tokens, scores mean top-n coherence,
// and picks the T minimizing |mean|; ties go to the smaller T.
TopicCountSelection select_topic_count(const std::vector<IdDoc>& docs, const Vocabulary& vocab,
                                       const std::vector<int>& candidates, int min_len, int top_n,
                                       const LdaOptions& opts = {}, bool parallel = true);

// Folds a document in against fixed phi (deterministic multinomial EM, the
// expectation of the Gibbs fold-in) and returns the most probable topic;
// exact ties resolve to the lower topic id. Throws DataError on empty input.
int dominant_topic(const TopicModel& model, const IdDoc& doc);

// Inferred topic mixture for a folded-in document.
std::vector<double> infer_topic_mixture(const TopicModel& model, const IdDoc& doc);

// Versioned JSON serialization.
void save_topic_model(const TopicModel& model, const std::filesystem::path& path);
TopicModel load_topic_model(const std::filesystem::path& path);

}  // namespace onioneco
