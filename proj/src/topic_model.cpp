#include "onioneco/topic_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "onioneco/errors.hpp"
#include "onioneco/log.hpp"
#include "onioneco/rng.hpp"

namespace onioneco {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

Vocabulary build_vocabulary(const std::vector<TokenDoc>& docs, int min_df,
                            const std::unordered_set<std::string>& stopwords) {
    if (docs.empty()) throw DataError("build_vocabulary: no documents");
    std::map<std::string, int> df;
    for (const TokenDoc& doc : docs) {
        std::unordered_set<std::string> seen;
        for (const std::string& raw : doc) {
            std::string token = raw;
            std::transform(token.begin(), token.end(), token.begin(), [](unsigned char c) {
                return static_cast<char>(std::tolower(c));
            });
            if (stopwords.count(token) > 0) continue;
            if (seen.insert(token).second) ++df[token];
        }
    }
    Vocabulary vocab;
    for (const auto& [word, count] : df) {
        if (count < min_df) continue;
        vocab.index.emplace(word, static_cast<int>(vocab.words.size()));
        vocab.words.push_back(word);
        vocab.doc_freq.push_back(count);
    }
    if (vocab.words.empty()) throw DataError("build_vocabulary: empty vocabulary after filtering");
    return vocab;
}

std::vector<IdDoc> encode_docs(const std::vector<TokenDoc>& docs, const Vocabulary& vocab) {
    std::vector<IdDoc> out;
    out.reserve(docs.size());
    for (const TokenDoc& doc : docs) {
        IdDoc ids;
        ids.reserve(doc.size());
        for (const std::string& raw : doc) {
            std::string token = raw;
            std::transform(token.begin(), token.end(), token.begin(), [](unsigned char c) {
                return static_cast<char>(std::tolower(c));
            });
            if (const auto id = vocab.id(token)) ids.push_back(*id);
        }
        out.push_back(std::move(ids));
    }
    return out;
}

TopicModel fit_lda(const std::vector<IdDoc>& docs, const Vocabulary& vocab, int num_topics,
                   const LdaOptions& opts) {
    if (docs.empty()) throw DataError("fit_lda: empty document list");
    if (num_topics < 2) throw ConfigError("fit_lda: need at least 2 topics");
    if (opts.iterations < 1) throw ConfigError("fit_lda: need at least 1 iteration");

    const int T = num_topics;
    const int M = vocab.size();
    const int N = static_cast<int>(docs.size());
    const double alpha = opts.alpha > 0 ? opts.alpha : 50.0 / T;
    const double beta = opts.beta;

    std::vector<std::vector<int>> doc_topic(N, std::vector<int>(T, 0));
    std::vector<std::vector<int>> word_topic(M, std::vector<int>(T, 0));
    std::vector<long long> topic_total(T, 0);
    std::vector<IdDoc> z(N);

    Rng rng(opts.seed);
    for (int d = 0; d < N; ++d) {
        z[d].resize(docs[d].size());
        for (std::size_t n = 0; n < docs[d].size(); ++n) {
            const int w = docs[d][n];
            const int t = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(T)));
            z[d][n] = t;
            ++doc_topic[d][t];
            ++word_topic[w][t];
            ++topic_total[t];
        }
    }

    std::vector<double> cdf(T);
    const double beta_sum = beta * M;
    for (int iter = 0; iter < opts.iterations; ++iter) {
        for (int d = 0; d < N; ++d) {
            auto& dt = doc_topic[d];
            for (std::size_t n = 0; n < docs[d].size(); ++n) {
                const int w = docs[d][n];
                const int old_t = z[d][n];
                auto& wt = word_topic[w];
                --dt[old_t];
                --wt[old_t];
                --topic_total[old_t];

                double sum = 0.0;
                for (int t = 0; t < T; ++t) {
                    sum += (wt[t] + beta) / (topic_total[t] + beta_sum) * (dt[t] + alpha);
                    cdf[t] = sum;
                }
                const double u = rng.uniform01() * sum;
                const int new_t = static_cast<int>(
                    std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
                const int picked = new_t >= T ? T - 1 : new_t;

                z[d][n] = picked;
                ++dt[picked];
                ++wt[picked];
                ++topic_total[picked];
            }
        }
    }

    TopicModel model;
    model.num_topics = T;
    model.alpha = alpha;
    model.beta = beta;
    model.seed = opts.seed;
    model.iterations = opts.iterations;
    model.vocab = vocab;
    model.phi.assign(T, std::vector<double>(M, 0.0));
    for (int t = 0; t < T; ++t) {
        const double denom = topic_total[t] + beta_sum;
        for (int w = 0; w < M; ++w) model.phi[t][w] = (word_topic[w][t] + beta) / denom;
    }
    model.theta.assign(N, std::vector<double>(T, 0.0));
    for (int d = 0; d < N; ++d) {
        const double denom = static_cast<double>(docs[d].size()) + alpha * T;
        for (int t = 0; t < T; ++t) model.theta[d][t] = (doc_topic[d][t] + alpha) / denom;
    }
    model.assignments = std::move(z);
    return model;
}

std::vector<int> top_words(const TopicModel& model, int topic, int n) {
    const auto& row = model.phi.at(topic);
    std::vector<int> ids(row.size());
    std::iota(ids.begin(), ids.end(), 0);
    const int keep = std::min<int>(n, static_cast<int>(ids.size()));
    std::partial_sort(ids.begin(), ids.begin() + keep, ids.end(), [&row](int a, int b) {
        if (row[a] != row[b]) return row[a] > row[b];
        return a < b;
    });
    ids.resize(keep);
    return ids;
}

double coherence(const std::vector<int>& ordered_top_words, const std::vector<IdDoc>& docs,
                 const Vocabulary& vocab) {
    const std::size_t n = ordered_top_words.size();
    // Per-document presence of each top word, then pairwise co-occurrence.
    std::vector<long long> df(n, 0);
    std::vector<std::vector<long long>> co(n, std::vector<long long>(n, 0));
    std::vector<char> present(n, 0);
    for (const IdDoc& doc : docs) {
        std::fill(present.begin(), present.end(), 0);
        for (const int w : doc) {
            for (std::size_t i = 0; i < n; ++i) {
                if (ordered_top_words[i] == w) present[i] = 1;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!present[i]) continue;
            ++df[i];
            for (std::size_t j = 0; j < n; ++j) {
                if (present[j]) ++co[i][j];
            }
        }
    }
    double score = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (df[j] == 0) {
                throw NumericError("coherence: word '" + vocab.words.at(ordered_top_words[j]) +
                                   "' appears in no document");
            }
            score += std::log((static_cast<double>(co[i][j]) + 1.0) / static_cast<double>(df[j]));
        }
    }
    return score;
}

TopicCountSelection select_topic_count(const std::vector<IdDoc>& docs, const Vocabulary& vocab,
                                       const std::vector<int>& candidates, int min_len, int top_n,
                                       const LdaOptions& opts, bool parallel) {
    if (candidates.empty()) throw ConfigError("select_topic_count: no candidate topic counts");
    std::vector<IdDoc> filtered;
    for (const IdDoc& doc : docs) {
        if (static_cast<int>(doc.size()) > min_len) filtered.push_back(doc);
    }
    if (filtered.empty()) throw DataError("select_topic_count: no documents longer than min_len");

    auto fit_one = [&](int T) {
        LdaOptions local = opts;
        local.seed = derive_seed(opts.seed, static_cast<std::uint64_t>(T));
        TopicModel model = fit_lda(filtered, vocab, T, local);
        double total = 0.0;
        for (int t = 0; t < T; ++t) {
            total += coherence(top_words(model, t, top_n), filtered, vocab);
        }
        return std::make_pair(total / T, std::move(model));
    };

    std::vector<std::pair<double, TopicModel>> results(candidates.size());
    if (parallel && candidates.size() > 1) {
        std::vector<std::future<std::pair<double, TopicModel>>> futures;
        futures.reserve(candidates.size());
        for (const int T : candidates) {
            futures.push_back(std::async(std::launch::async, fit_one, T));
        }
        for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < candidates.size(); ++i) results[i] = fit_one(candidates[i]);
    }

    TopicCountSelection selection;
    std::size_t best = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        selection.mean_coherence.emplace_back(candidates[i], results[i].first);
        const double score = std::abs(results[i].first);
        const double best_score = std::abs(results[best].first);
        if (score < best_score || (score == best_score && candidates[i] < candidates[best])) {
            best = i;
        }
    }
    selection.selected = candidates[best];
    selection.model = std::move(results[best].second);
    ONIONECO_LOG_INFO("selected %d topics (|mean coherence| = %.4f)", selection.selected,
                      std::abs(results[best].first));
    return selection;
}

std::vector<double> infer_topic_mixture(const TopicModel& model, const IdDoc& doc) {
    if (doc.empty()) throw DataError("infer_topic_mixture: empty document");
    const int T = model.num_topics;

    // Token multiplicities; only distinct words matter for the fixed point.
    std::map<int, int> counts;
    for (const int w : doc) ++counts[w];

    std::vector<double> theta(T, 1.0 / T);
    std::vector<double> next(T);
    const double len = static_cast<double>(doc.size());
    for (int iter = 0; iter < 200; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (const auto& [w, c] : counts) {
            double denom = 0.0;
            for (int t = 0; t < T; ++t) denom += model.phi[t][w] * theta[t];
            if (denom <= 0.0) continue;  // word unseen by every topic
            for (int t = 0; t < T; ++t) {
                next[t] += c * model.phi[t][w] * theta[t] / denom;
            }
        }
        double delta = 0.0;
        const double denom = len + model.alpha * T;
        for (int t = 0; t < T; ++t) {
            const double value = (next[t] + model.alpha) / denom;
            delta = std::max(delta, std::abs(value - theta[t]));
            theta[t] = value;
        }
        if (delta < 1e-12) break;
    }
    return theta;
}

int dominant_topic(const TopicModel& model, const IdDoc& doc) {
    const std::vector<double> theta = infer_topic_mixture(model, doc);
    int best = 0;
    for (int t = 1; t < model.num_topics; ++t) {
        if (theta[t] > theta[best]) best = t;
    }
    return best;
}

std::string TopicModel::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, &num_topics, sizeof(num_topics));
    h = fnv1a(h, &alpha, sizeof(alpha));
    h = fnv1a(h, &beta, sizeof(beta));
    h = fnv1a(h, &seed, sizeof(seed));
    for (const std::string& w : vocab.words) h = fnv1a(h, w.data(), w.size());
    for (const auto& row : phi) h = fnv1a(h, row.data(), row.size() * sizeof(double));
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void save_topic_model(const TopicModel& model, const std::filesystem::path& path) {
    json obj;
    obj["format"] = "onioneco-topic-model";
    obj["version"] = 1;
    obj["num_topics"] = model.num_topics;
    obj["alpha"] = model.alpha;
    obj["beta"] = model.beta;
    obj["seed"] = model.seed;
    obj["iterations"] = model.iterations;
    obj["vocabulary"] = model.vocab.words;
    obj["doc_freq"] = model.vocab.doc_freq;
    obj["phi"] = model.phi;
    obj["theta"] = model.theta;
    obj["fingerprint"] = model.fingerprint();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write model file: " + path.string());
    out << obj.dump(2) << '\n';
}

TopicModel load_topic_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open model file: " + path.string());
    json obj = json::parse(in, nullptr, false);
    if (obj.is_discarded() || obj.value("format", "") != "onioneco-topic-model") {
        throw DataError("not a topic model file: " + path.string());
    }
    TopicModel model;
    model.num_topics = obj.at("num_topics").get<int>();
    model.alpha = obj.at("alpha").get<double>();
    model.beta = obj.at("beta").get<double>();
    model.seed = obj.at("seed").get<std::uint64_t>();
    model.iterations = obj.value("iterations", 0);
    model.vocab.words = obj.at("vocabulary").get<std::vector<std::string>>();
    model.vocab.doc_freq = obj.value("doc_freq", std::vector<int>{});
    for (std::size_t i = 0; i < model.vocab.words.size(); ++i) {
        model.vocab.index.emplace(model.vocab.words[i], static_cast<int>(i));
    }
    model.phi = obj.at("phi").get<std::vector<std::vector<double>>>();
    model.theta = obj.at("theta").get<std::vector<std::vector<double>>>();
    const std::string recorded = obj.value("fingerprint", "");
    if (!recorded.empty() && recorded != model.fingerprint()) {
        throw DataError("model file fingerprint mismatch: " + path.string());
    }
    return model;
}

}  // namespace onioneco
