#include "onioneco/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "onioneco/errors.hpp"

namespace onioneco {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write output file: " + path.string());
    return out;
}

std::string fmt(double value, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

}  // namespace

DomainGraph nonisolated_subgraph(const DomainGraph& g) {
    DomainGraph sub;
    std::vector<int> local(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= 1) local[v] = sub.add_vertex(g.name(v), g.label(v));
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (local[v] < 0) continue;
        for (const int w : g.out(v)) {
            if (local[w] >= 0) sub.add_edge(local[v], local[w]);
        }
    }
    sub.undirected_edge_count();
    return sub;
}

void write_summary_csv(const std::filesystem::path& path, const NetworkSummary& s) {
    auto out = open_out(path);
    out << "# mean_degree = 2|E_u|/|V| and density = |E_u|/C(|V|,2) on the undirected collapse\n";
    out << "statistic,value\n";
    out << "domain_count," << s.vertex_count << "\n";
    out << "hyperlink_count," << s.edge_count << "\n";
    out << "undirected_edge_count," << s.undirected_edge_count << "\n";
    out << "mean_degree," << fmt(s.mean_degree, 4) << "\n";
    out << "max_degree," << s.max_degree << "\n";
    out << "density," << fmt(s.density, 6) << "\n";
    out << "wcc_count," << s.wcc_count << "\n";
    out << "scc_count," << s.scc_count << "\n";
    out << "max_wcc_size," << s.max_wcc_size << "\n";
    out << "max_scc_size," << s.max_scc_size << "\n";
}

void write_centrality_csv(const std::filesystem::path& path, const DomainGraph& g) {
    const auto degree = centrality(g, CentralityMeasure::Degree);
    const auto betweenness = centrality(g, CentralityMeasure::Betweenness);
    const auto closeness = centrality(g, CentralityMeasure::Closeness);
    const auto eigen = g.vertex_count() > 0 ? centrality(g, CentralityMeasure::Eigenvector)
                                            : std::vector<double>{};
    auto out = open_out(path);
    out << "domain,label,degree,betweenness,closeness,eigenvector\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << g.name(v) << ',' << g.label(v) << ',' << static_cast<int>(degree[v]) << ','
            << fmt(betweenness[v]) << ',' << fmt(closeness[v]) << ',' << fmt(eigen[v]) << "\n";
    }
}

void write_centrality_distributions(const std::filesystem::path& dir, const DomainGraph& g) {
    const DomainGraph sub = nonisolated_subgraph(g);
    auto write_cdf = [&](const std::filesystem::path& path, std::vector<double> scores) {
        std::sort(scores.begin(), scores.end());
        auto out = open_out(path);
        out << "value,cumulative_fraction\n";
        const std::size_t n = scores.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (i + 1 < n && scores[i + 1] == scores[i]) continue;  // emit last of ties
            out << fmt(scores[i]) << ',' << fmt(static_cast<double>(i + 1) / n) << "\n";
        }
    };
    if (sub.vertex_count() == 0) {
        write_cdf(dir / "betweenness_cdf.csv", {});
        write_cdf(dir / "closeness_cdf.csv", {});
        auto out = open_out(dir / "eigenvector_hist.csv");
        out << "bin_low,bin_high,count\n";
        return;
    }
    write_cdf(dir / "betweenness_cdf.csv", centrality(sub, CentralityMeasure::Betweenness));
    write_cdf(dir / "closeness_cdf.csv", centrality(sub, CentralityMeasure::Closeness));

    const auto eigen = centrality(sub, CentralityMeasure::Eigenvector);
    constexpr int kBins = 50;
    std::vector<long long> bins(kBins, 0);
    for (const double x : eigen) {
        const int b = std::min(kBins - 1, static_cast<int>(x * kBins));
        ++bins[b];
    }
    auto out = open_out(dir / "eigenvector_hist.csv");
    out << "bin_low,bin_high,count\n";
    for (int b = 0; b < kBins; ++b) {
        out << fmt(static_cast<double>(b) / kBins, 3) << ','
            << fmt(static_cast<double>(b + 1) / kBins, 3) << ',' << bins[b] << "\n";
    }
}

void write_robustness_csv(const std::filesystem::path& path, const DomainGraph& g) {
    auto out = open_out(path);
    out << "community,r_betweenness,r_closeness,r_degree\n";
    for (const std::string& label : g.label_set()) {
        const DomainGraph sub = intra_subgraph(g, label);
        if (sub.vertex_count() < 2) {
            out << label << ",,,\n";
            continue;
        }
        out << label << ',' << fmt(robustness_coefficient(sub, CentralityMeasure::Betweenness), 4)
            << ',' << fmt(robustness_coefficient(sub, CentralityMeasure::Closeness), 4) << ','
            << fmt(robustness_coefficient(sub, CentralityMeasure::Degree), 4) << "\n";
    }
}

void write_modularity_csv(const std::filesystem::path& path, const DomainGraph& g) {
    auto out = open_out(path);
    out << "community,modularity\n";
    const auto per_community = per_community_modularity(g);
    // Rows sorted by modularity descending, ties by name, then the global sum.
    std::vector<std::pair<std::string, double>> rows(per_community.begin(), per_community.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    for (const auto& [label, value] : rows) out << label << ',' << fmt(value) << "\n";
    out << "_global," << fmt(modularity(g)) << "\n";
}

void write_community_matrix_csv(const std::filesystem::path& path, const CommunityDegreeMatrix& m) {
    auto out = open_out(path);
    out << "src\\dst";
    for (const std::string& label : m.labels) out << ',' << label;
    out << "\n";
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        out << m.labels[i];
        for (std::size_t j = 0; j < m.labels.size(); ++j) out << ',' << m.counts[i][j];
        out << "\n";
    }
}

void write_intra_components_csv(const std::filesystem::path& path, const DomainGraph& g) {
    auto out = open_out(path);
    out << "community,vertices,edges,components_nonisolated,isolated\n";
    for (const std::string& label : g.label_set()) {
        const DomainGraph sub = intra_subgraph(g, label);
        int isolated = 0;
        for (int v = 0; v < sub.vertex_count(); ++v) isolated += sub.degree(v) == 0 ? 1 : 0;
        const DomainGraph connected = nonisolated_subgraph(sub);
        int components = 0;
        if (connected.vertex_count() > 0) {
            const auto wcc = weakly_connected_components(connected);
            components = 1 + *std::max_element(wcc.begin(), wcc.end());
        }
        out << label << ',' << sub.vertex_count() << ',' << sub.edge_count() << ',' << components
            << ',' << isolated << "\n";
    }
}

void write_powerlaw_csv(const std::filesystem::path& path, const std::vector<TailReportRow>& rows,
                        double threshold) {
    auto out = open_out(path);
    out << "community,direction,samples,positive,status,p_value,alpha,xmin,n_tail,ks,verdict\n";
    for (const TailReportRow& row : rows) {
        out << row.community << ',' << row.direction << ',' << row.sample_count << ','
            << row.positive_count << ',';
        if (row.skipped) {
            out << "skipped,,,,,,insufficient data\n";
            continue;
        }
        const bool reject = row.gof.p_value < threshold;
        out << "ok," << fmt(row.gof.p_value, 4) << ',';
        // The exponent is only meaningful when the tail is not rejected.
        if (reject) {
            out << ',';
        } else {
            out << fmt(row.fit.alpha, 4) << ',';
        }
        out << row.fit.xmin << ',' << row.fit.n_tail << ',' << fmt(row.fit.ks, 6) << ','
            << (reject ? "reject" : "fail-to-reject") << "\n";
    }
}

void write_topic_table_csv(const std::filesystem::path& path, const TopicModel& model, int top_n,
                           const std::map<int, std::string>& topic_labels) {
    auto out = open_out(path);
    out << "topic,label,top_words\n";
    for (int t = 0; t < model.num_topics; ++t) {
        out << t << ',';
        const auto it = topic_labels.find(t);
        out << (it == topic_labels.end() ? "" : it->second) << ',';
        const auto ids = top_words(model, t, top_n);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            out << (i == 0 ? "" : " ") << model.vocab.words[ids[i]];
        }
        out << "\n";
    }
}

void write_label_distribution_csv(const std::filesystem::path& path,
                                  const std::map<std::string, std::string>& domain_labels) {
    std::map<std::string, long long> counts;
    for (const auto& [domain, label] : domain_labels) ++counts[label];
    const double total = static_cast<double>(domain_labels.size());
    auto out = open_out(path);
    out << "label,domains,percent\n";
    for (const auto& [label, count] : counts) {
        out << label << ',' << count << ',' << fmt(total > 0 ? 100.0 * count / total : 0.0, 2)
            << "\n";
    }
}

}  // namespace onioneco
