// onioneco: batch pipeline for onion-corpus content and hyperlink-structure
// analysis. Subcommands: crawl, ingest, topics, label, graph, powerlaw,
// report. Exit codes: 0 success, 1 usage, 2 data error, 3 numeric failure.

#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "onioneco/corpus.hpp"
#include "onioneco/crawler.hpp"
#include "onioneco/domain_graph.hpp"
#include "onioneco/errors.hpp"
#include "onioneco/graph_metrics.hpp"
#include "onioneco/labeler.hpp"
#include "onioneco/log.hpp"
#include "onioneco/powerlaw.hpp"
#include "onioneco/report.hpp"
#include "onioneco/tokenize.hpp"
#include "onioneco/topic_model.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace onioneco;

namespace {

std::atomic<bool> g_stop{false};

void handle_signal(int) { g_stop.store(true); }

std::vector<Seed> read_seeds(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open seed file: " + path.string());
    std::vector<Seed> seeds;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        seeds.push_back({line});
    }
    if (seeds.empty()) throw DataError("seed file has no seeds: " + path.string());
    return seeds;
}

std::vector<LanguageProfile> load_profiles(const fs::path& dir) {
    std::vector<LanguageProfile> profiles;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".profile") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) profiles.push_back(load_language_profile(file));
    if (profiles.empty()) throw ConfigError("no .profile files in " + dir.string());
    return profiles;
}

struct DomainTopicFile {
    std::string model_fingerprint;
    std::map<std::string, int> topic_of;
};

DomainTopicFile read_domain_topics(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open domain-topic file: " + path.string());
    DomainTopicFile out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("# model=", 0) == 0) {
            out.model_fingerprint = line.substr(8);
            continue;
        }
        if (line[0] == '#' || line.rfind("domain,", 0) == 0) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw DataError("malformed domain-topic row: " + line);
        out.topic_of[line.substr(0, comma)] = std::stoi(line.substr(comma + 1));
    }
    return out;
}

struct TopicLabelFile {
    std::string model_fingerprint;
    std::map<int, std::string> label_of;
};

TopicLabelFile read_topic_labels(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open topic label file: " + path.string());
    json obj = json::parse(in, nullptr, false);
    if (obj.is_discarded() || obj.value("format", "") != "onioneco-topic-labels") {
        throw DataError("not a topic label file: " + path.string());
    }
    TopicLabelFile out;
    out.model_fingerprint = obj.value("model_fingerprint", "");
    for (const auto& [key, entry] : obj.at("labels").items()) {
        out.label_of[std::stoi(key)] = entry.at("label").get<std::string>();
    }
    return out;
}

DomainGraph load_graph_from_flags(const std::string& edges, const std::string& page_links,
                                  const std::string& labels) {
    std::optional<fs::path> labels_path;
    if (!labels.empty()) labels_path = labels;
    if (!edges.empty()) return load_domain_graph(edges, labels_path);
    std::map<std::string, std::string> label_map;
    if (labels_path) label_map = load_labels_csv(*labels_path);
    return build_domain_graph(load_page_links(page_links), label_map);
}

// ---- subcommand bodies ----

int run_crawl(const std::string& seeds_file, const std::string& out_file,
              const std::string& fixture_dir, CrawlConfig config) {
    const std::vector<Seed> seeds = read_seeds(seeds_file);
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw DataError("cannot write crawl output: " + out_file);

    std::unique_ptr<Fetcher> fetcher;
    if (!fixture_dir.empty()) {
        fetcher = std::make_unique<FixtureFetcher>(fixture_dir);
    } else {
        fetcher = std::make_unique<HttpFetcher>(config.timeout);
    }
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);

    const CrawlStats stats = crawl(
        seeds, config, *fetcher, [&out](const CrawlRecord& record) { write_crawl_record(out, record); },
        &g_stop);
    out.flush();
    ONIONECO_LOG_INFO("crawl done: %zu fetched, %zu failed", stats.fetched, stats.failed);
    if (g_stop.load()) {
        ONIONECO_LOG_WARN("crawl interrupted; records flushed");
    }
    return 0;
}

int run_ingest(const std::vector<std::string>& record_files, const std::string& out_file,
               const std::string& profiles_dir, const std::string& links_out) {
    std::vector<LanguageProfile> profiles;
    if (!profiles_dir.empty()) profiles = load_profiles(profiles_dir);

    std::vector<PageRecord> pages;
    std::vector<CrawlRecord> raw_records;
    for (const std::string& file : record_files) {
        for (CrawlRecord& record : read_crawl_records(file)) {
            raw_records.push_back(std::move(record));
        }
    }
    for (const CrawlRecord& record : raw_records) {
        auto page = make_page_record(record, profiles);
        if (!page) {
            ONIONECO_LOG_WARN("ingest: dropping malformed url: %s", record.url.c_str());
            continue;
        }
        pages.push_back(std::move(*page));
    }
    const Corpus corpus = merge_pages(std::move(pages));
    write_corpus(corpus, out_file);

    if (!links_out.empty()) {
        // Re-extract links from the deduplicated pages, in address order.
        std::ofstream out(links_out, std::ios::binary);
        if (!out) throw DataError("cannot write links file: " + links_out);
        for (const PageRecord& page : corpus.pages) {
            if (page.html.empty()) continue;
            const auto base = parse_url(page.address);
            if (!base) continue;
            for (const std::string& link : extract_links(page.html, *base)) {
                out << page.address << '\t' << link << '\n';
            }
        }
    }

    std::size_t onion = 0, english = 0;
    for (const PageRecord& page : corpus.pages) {
        onion += page.kind == AddressKind::Onion ? 1 : 0;
        english += page.language == "en" ? 1 : 0;
    }
    ONIONECO_LOG_INFO("ingest: %zu pages (%zu onion, %zu english), crawls merged: %zu",
                      corpus.pages.size(), onion, english, corpus.provenance.size());
    return 0;
}

int run_topics(const std::string& corpus_file, const std::string& out_file, int t_min, int t_max,
               int min_words, int top_n, std::uint64_t seed, int min_df, int iters,
               const std::string& language, const std::string& kind_str,
               const std::string& domain_labels_out, const std::string& coherence_out,
               bool serial) {
    const Corpus raw = read_corpus(corpus_file);
    std::optional<std::string> lang;
    if (language != "any") lang = language;
    std::optional<AddressKind> kind;
    if (kind_str == "onion") kind = AddressKind::Onion;
    else if (kind_str == "surface") kind = AddressKind::Surface;
    const Corpus corpus = filter_corpus(raw, static_cast<std::size_t>(min_words), lang, kind);
    if (corpus.pages.empty()) throw DataError("topics: no pages survive filtering");

    std::vector<TokenDoc> docs;
    docs.reserve(corpus.pages.size());
    for (const PageRecord& page : corpus.pages) docs.push_back(tokenize(page.text));
    const Vocabulary vocab = build_vocabulary(docs, min_df, default_stopwords());
    const std::vector<IdDoc> ids = encode_docs(docs, vocab);

    std::vector<int> candidates;
    for (int t = t_min; t <= t_max; ++t) candidates.push_back(t);
    LdaOptions opts;
    opts.seed = seed;
    opts.iterations = iters;
    // Documents were already filtered by raw word count; token filtering in
    // select uses min_len 0 so every surviving page contributes.
    const TopicCountSelection selection =
        select_topic_count(ids, vocab, candidates, 0, top_n, opts, !serial);
    save_topic_model(selection.model, out_file);

    if (!coherence_out.empty()) {
        std::ofstream out(coherence_out, std::ios::binary);
        if (!out) throw DataError("cannot write coherence file: " + coherence_out);
        out << "topics,mean_coherence,selected\n";
        for (const auto& [t, c] : selection.mean_coherence) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6f", c);
            out << t << ',' << buf << ',' << (t == selection.selected ? "yes" : "") << "\n";
        }
    }

    if (!domain_labels_out.empty()) {
        std::ofstream out(domain_labels_out, std::ios::binary);
        if (!out) throw DataError("cannot write domain labels: " + domain_labels_out);
        out << "# model=" << selection.model.fingerprint() << "\n";
        out << "domain,topic\n";
        for (const auto& [domain, text] : group_by_domain(corpus)) {
            const IdDoc doc = encode_docs({tokenize(text)}, vocab).front();
            if (doc.empty()) {
                ONIONECO_LOG_WARN("topics: domain %s has no in-vocabulary tokens", domain.c_str());
                continue;
            }
            out << domain << ',' << dominant_topic(selection.model, doc) << "\n";
        }
    }
    ONIONECO_LOG_INFO("topics: selected T=%d over %zu documents", selection.selected,
                      corpus.pages.size());
    return 0;
}

int run_label(const std::string& model_file, const std::string& kg_file,
              const std::string& out_file, int top_n) {
    const TopicModel model = load_topic_model(model_file);
    const KnowledgeGraph kg = load_knowledge_graph(kg_file);
    json labels = json::object();
    for (int t = 0; t < model.num_topics; ++t) {
        std::vector<std::string> words;
        for (const int id : top_words(model, t, top_n)) words.push_back(model.vocab.words[id]);
        std::vector<LabelScore> ranked;
        try {
            ranked = rank_topic_labels(kg, words);
        } catch (const DataError& e) {
            throw DataError("topic " + std::to_string(t) + ": " + e.what());
        }
        json entry;
        entry["label"] = ranked.front().label;
        entry["gamma"] = ranked.front().gamma;
        json runners = json::array();
        for (std::size_t i = 1; i < ranked.size() && i <= 5; ++i) {
            runners.push_back({{"label", ranked[i].label}, {"gamma", ranked[i].gamma}});
        }
        entry["runner_ups"] = runners;
        labels[std::to_string(t)] = entry;
    }
    json out_obj;
    out_obj["format"] = "onioneco-topic-labels";
    out_obj["model_fingerprint"] = model.fingerprint();
    out_obj["labels"] = labels;
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw DataError("cannot write label file: " + out_file);
    out << out_obj.dump(2) << '\n';
    return 0;
}

int run_graph(const std::string& edges, const std::string& page_links, const std::string& labels,
              const std::string& out_dir) {
    const DomainGraph g = load_graph_from_flags(edges, page_links, labels);
    if (g.vertex_count() == 0) throw DataError("graph: empty input graph");
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_summary_csv(dir / "network_summary.csv", summary_stats(g));
    write_centrality_csv(dir / "centrality.csv", g);
    write_centrality_distributions(dir, g);
    write_robustness_csv(dir / "robustness.csv", g);
    write_modularity_csv(dir / "modularity.csv", g);
    write_community_matrix_csv(dir / "community_degree_matrix.csv", community_degree_matrix(g));
    write_intra_components_csv(dir / "intra_components.csv", g);
    return 0;
}

int run_powerlaw(const std::string& edges, const std::string& page_links, const std::string& labels,
                 const std::string& out_file, int boot, std::uint64_t seed, double threshold,
                 int threads) {
    const DomainGraph g = load_graph_from_flags(edges, page_links, labels);
    if (g.vertex_count() == 0) throw DataError("powerlaw: empty input graph");
    const auto rows = community_tail_report(g, boot, seed, threads);
    write_powerlaw_csv(out_file, rows, threshold);
    return 0;
}

int run_report(const std::string& model_file, const std::string& topic_labels_file,
               const std::string& domain_topics_file, const std::string& edges,
               const std::string& page_links, const std::string& labels_file,
               const std::string& out_dir, int boot, std::uint64_t seed, double threshold,
               int threads, bool skip_powerlaw) {
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    const fs::path incomplete = dir / "INCOMPLETE";
    {
        std::ofstream marker(incomplete);
        marker << "report in progress\n";
    }

    std::optional<TopicModel> model;
    if (!model_file.empty()) model = load_topic_model(model_file);

    std::optional<TopicLabelFile> topic_labels;
    if (!topic_labels_file.empty()) {
        topic_labels = read_topic_labels(topic_labels_file);
        if (model && topic_labels->model_fingerprint != model->fingerprint()) {
            throw DataError("report: topic labels were produced from a different model");
        }
    }

    std::optional<DomainTopicFile> domain_topics;
    if (!domain_topics_file.empty()) {
        domain_topics = read_domain_topics(domain_topics_file);
        if (model && !domain_topics->model_fingerprint.empty() &&
            domain_topics->model_fingerprint != model->fingerprint()) {
            throw DataError("report: domain topics were produced from a different model");
        }
    }

    if (model) {
        std::map<int, std::string> names;
        if (topic_labels) names = topic_labels->label_of;
        write_topic_table_csv(dir / "topic_table.csv", *model, 10, names);
    }

    // Domain label map: either a direct labels CSV or domain topics joined
    // with topic label names.
    std::map<std::string, std::string> domain_labels;
    if (!labels_file.empty()) {
        domain_labels = load_labels_csv(labels_file);
    } else if (domain_topics) {
        for (const auto& [domain, topic] : domain_topics->topic_of) {
            std::string name = "topic-" + std::to_string(topic);
            if (topic_labels) {
                const auto it = topic_labels->label_of.find(topic);
                if (it != topic_labels->label_of.end()) name = it->second;
            }
            domain_labels[domain] = name;
        }
        std::ofstream out(dir / "domain_labels.csv", std::ios::binary);
        out << "domain,label\n";
        for (const auto& [domain, label] : domain_labels) out << domain << ',' << label << "\n";
    }
    if (!domain_labels.empty()) {
        write_label_distribution_csv(dir / "label_distribution.csv", domain_labels);
    }

    if (!edges.empty() || !page_links.empty()) {
        DomainGraph g;
        if (!edges.empty()) {
            std::optional<fs::path> labels_path;
            if (!labels_file.empty()) labels_path = fs::path(labels_file);
            g = load_domain_graph(edges, labels_path);
            if (labels_file.empty() && !domain_labels.empty()) {
                for (int v = 0; v < g.vertex_count(); ++v) {
                    const auto it = domain_labels.find(g.name(v));
                    if (it != domain_labels.end()) g.set_label(v, it->second);
                }
            }
        } else {
            g = build_domain_graph(load_page_links(page_links), domain_labels);
        }
        if (g.vertex_count() == 0) throw DataError("report: empty input graph");
        write_summary_csv(dir / "network_summary.csv", summary_stats(g));
        write_centrality_csv(dir / "centrality.csv", g);
        write_centrality_distributions(dir, g);
        write_robustness_csv(dir / "robustness.csv", g);
        write_modularity_csv(dir / "modularity.csv", g);
        write_community_matrix_csv(dir / "community_degree_matrix.csv", community_degree_matrix(g));
        write_intra_components_csv(dir / "intra_components.csv", g);
        if (!skip_powerlaw) {
            write_powerlaw_csv(dir / "powerlaw.csv", community_tail_report(g, boot, seed, threads),
                               threshold);
        }
    }

    fs::remove(incomplete);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"onion content-ecosystem analysis pipeline"};
    app.require_subcommand(1);

    // crawl
    auto* crawl_cmd = app.add_subcommand("crawl", "depth-limited hyperlink crawl");
    std::string seeds_file, crawl_out, fixture_dir;
    CrawlConfig crawl_config;
    int delay_ms = 0, timeout_ms = 10000;
    crawl_cmd->add_option("--seeds", seeds_file, "seed URL file, one per line")->required();
    crawl_cmd->add_option("--out", crawl_out, "output crawl record JSONL")->required();
    crawl_cmd->add_option("--max-depth", crawl_config.max_depth, "link depth limit");
    crawl_cmd->add_option("--workers", crawl_config.workers, "fetch worker count");
    crawl_cmd->add_option("--delay-ms", delay_ms, "per-host politeness delay");
    crawl_cmd->add_option("--crawl-id", crawl_config.crawl_id, "crawl id stamped on records");
    crawl_cmd->add_option("--timeout-ms", timeout_ms, "fetch timeout");
    crawl_cmd->add_option("--fixture", fixture_dir, "serve pages from this directory tree");

    // ingest
    auto* ingest_cmd = app.add_subcommand("ingest", "merge crawls into a processed corpus");
    std::vector<std::string> record_files;
    std::string corpus_out, profiles_dir, links_out;
    ingest_cmd->add_option("--records", record_files, "crawl record JSONL files")->required();
    ingest_cmd->add_option("--out", corpus_out, "output corpus JSONL")->required();
    ingest_cmd->add_option("--profiles", profiles_dir, "language profile directory");
    ingest_cmd->add_option("--links-out", links_out, "write page-level links here");

    // topics (fit)
    auto* topics_cmd = app.add_subcommand("topics", "topic modeling");
    auto* fit_cmd = topics_cmd->add_subcommand("fit", "fit LDA and select the topic count");
    std::string topics_corpus, model_out, topics_language = "en", topics_kind = "onion";
    std::string domain_labels_out, coherence_out;
    int t_min = 3, t_max = 15, min_words = 50, top_n = 10, min_df = 2, iters = 1000;
    std::uint64_t topics_seed = 1;
    bool serial = false;
    fit_cmd->add_option("--corpus", topics_corpus, "corpus JSONL")->required();
    fit_cmd->add_option("--out", model_out, "output model JSON")->required();
    fit_cmd->add_option("--t-min", t_min, "smallest candidate topic count");
    fit_cmd->add_option("--t-max", t_max, "largest candidate topic count");
    fit_cmd->add_option("--min-words", min_words, "minimum page words");
    fit_cmd->add_option("--top-n", top_n, "top words per topic for coherence");
    fit_cmd->add_option("--seed", topics_seed, "sampler seed");
    fit_cmd->add_option("--min-df", min_df, "minimum document frequency");
    fit_cmd->add_option("--iters", iters, "Gibbs iterations");
    fit_cmd->add_option("--language", topics_language, "language filter or 'any'");
    fit_cmd->add_option("--kind", topics_kind, "onion|surface|any");
    fit_cmd->add_option("--domain-labels-out", domain_labels_out, "per-domain topic CSV");
    fit_cmd->add_option("--coherence-out", coherence_out, "per-T coherence CSV");
    fit_cmd->add_flag("--serial", serial, "fit candidates sequentially");

    // label
    auto* label_cmd = app.add_subcommand("label", "name topics via the knowledge graph");
    std::string label_model, kg_file, label_out;
    int label_top_n = 10;
    label_cmd->add_option("--model", label_model, "topic model JSON")->required();
    label_cmd->add_option("--kg", kg_file, "knowledge graph TSV snapshot")->required();
    label_cmd->add_option("--out", label_out, "output labels JSON")->required();
    label_cmd->add_option("--top-n", label_top_n, "top words per topic");

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "domain graph structural tables");
    std::string graph_edges, graph_page_links, graph_labels, graph_out_dir;
    graph_cmd->add_option("--graph,--edges", graph_edges, "domain edge list");
    graph_cmd->add_option("--page-links", graph_page_links, "page-level link file");
    graph_cmd->add_option("--labels", graph_labels, "domain,label CSV");
    graph_cmd->add_option("--out-dir", graph_out_dir, "output directory")->required();

    // powerlaw
    auto* pl_cmd = app.add_subcommand("powerlaw", "degree-tail hypothesis tests");
    std::string pl_edges, pl_page_links, pl_labels, pl_out;
    int pl_boot = 2500, pl_threads = 0;
    std::uint64_t pl_seed = 1;
    double pl_threshold = 0.05;
    pl_cmd->add_option("--graph,--edges", pl_edges, "domain edge list");
    pl_cmd->add_option("--page-links", pl_page_links, "page-level link file");
    pl_cmd->add_option("--labels", pl_labels, "domain,label CSV");
    pl_cmd->add_option("--out", pl_out, "output CSV")->required();
    pl_cmd->add_option("--boot", pl_boot, "bootstrap replicates");
    pl_cmd->add_option("--seed", pl_seed, "bootstrap seed");
    pl_cmd->add_option("--threshold", pl_threshold, "rejection threshold");
    pl_cmd->add_option("--threads", pl_threads, "bootstrap threads (0 = auto)");

    // report
    auto* report_cmd = app.add_subcommand("report", "aggregate pipeline outputs");
    std::string rep_model, rep_topic_labels, rep_domain_topics, rep_edges, rep_page_links,
        rep_labels, rep_out_dir;
    int rep_boot = 2500, rep_threads = 0;
    std::uint64_t rep_seed = 1;
    double rep_threshold = 0.05;
    bool rep_skip_powerlaw = false;
    report_cmd->add_option("--model", rep_model, "topic model JSON");
    report_cmd->add_option("--topic-labels", rep_topic_labels, "labels JSON from `label`");
    report_cmd->add_option("--domain-topics", rep_domain_topics, "per-domain topic CSV");
    report_cmd->add_option("--graph,--edges", rep_edges, "domain edge list");
    report_cmd->add_option("--page-links", rep_page_links, "page-level link file");
    report_cmd->add_option("--labels", rep_labels, "domain,label CSV");
    report_cmd->add_option("--out-dir", rep_out_dir, "output directory")->required();
    report_cmd->add_option("--boot", rep_boot, "bootstrap replicates");
    report_cmd->add_option("--seed", rep_seed, "bootstrap seed");
    report_cmd->add_option("--threshold", rep_threshold, "rejection threshold");
    report_cmd->add_option("--threads", rep_threads, "bootstrap threads (0 = auto)");
    report_cmd->add_flag("--skip-powerlaw", rep_skip_powerlaw, "skip the bootstrap tests");

    CLI11_PARSE(app, argc, argv);

    try {
        if (crawl_cmd->parsed()) {
            crawl_config.per_host_delay = std::chrono::milliseconds(delay_ms);
            crawl_config.timeout = std::chrono::milliseconds(timeout_ms);
            return run_crawl(seeds_file, crawl_out, fixture_dir, crawl_config);
        }
        if (ingest_cmd->parsed()) {
            return run_ingest(record_files, corpus_out, profiles_dir, links_out);
        }
        if (topics_cmd->parsed()) {
            if (!fit_cmd->parsed()) {
                std::cerr << "topics: expected a subcommand (fit)\n";
                return 1;
            }
            return run_topics(topics_corpus, model_out, t_min, t_max, min_words, top_n,
                              topics_seed, min_df, iters, topics_language, topics_kind,
                              domain_labels_out, coherence_out, serial);
        }
        if (label_cmd->parsed()) {
            return run_label(label_model, kg_file, label_out, label_top_n);
        }
        if (graph_cmd->parsed()) {
            if (graph_edges.empty() == graph_page_links.empty()) {
                std::cerr << "graph: exactly one of --graph/--page-links is required\n";
                return 1;
            }
            return run_graph(graph_edges, graph_page_links, graph_labels, graph_out_dir);
        }
        if (pl_cmd->parsed()) {
            if (pl_edges.empty() == pl_page_links.empty()) {
                std::cerr << "powerlaw: exactly one of --graph/--page-links is required\n";
                return 1;
            }
            return run_powerlaw(pl_edges, pl_page_links, pl_labels, pl_out, pl_boot, pl_seed,
                                pl_threshold, pl_threads);
        }
        if (report_cmd->parsed()) {
            return run_report(rep_model, rep_topic_labels, rep_domain_topics, rep_edges,
                              rep_page_links, rep_labels, rep_out_dir, rep_boot, rep_seed,
                              rep_threshold, rep_threads, rep_skip_powerlaw);
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
