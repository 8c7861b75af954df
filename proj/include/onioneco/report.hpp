#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "onioneco/domain_graph.hpp"
#include "onioneco/graph_metrics.hpp"
#include "onioneco/powerlaw.hpp"
#include "onioneco/topic_model.hpp"

namespace onioneco {

// Machine-readable table writers. All output is deterministic for fixed
// inputs: fixed column orders, fixed float formatting, no timestamps.

void write_summary_csv(const std::filesystem::path& path, const NetworkSummary& summary);

void write_centrality_csv(const std::filesystem::path& path, const DomainGraph& g);

// CDF files (value ascending, cumulative fraction) for betweenness and
// closeness plus a fixed-width histogram for eigenvector scores, computed on
// the subgraph of vertices with degree >= 1.
void write_centrality_distributions(const std::filesystem::path& dir, const DomainGraph& g);

// Per-community robustness under betweenness, closeness, and degree removal.
void write_robustness_csv(const std::filesystem::path& path, const DomainGraph& g);

// Global and per-community modularity.
void write_modularity_csv(const std::filesystem::path& path, const DomainGraph& g);

void write_community_matrix_csv(const std::filesystem::path& path, const CommunityDegreeMatrix& m);

// Per-community intra-subgraph connectivity: vertices, edges, connected
// components among non-isolated vertices, isolated count.
void write_intra_components_csv(const std::filesystem::path& path, const DomainGraph& g);

void write_powerlaw_csv(const std::filesystem::path& path, const std::vector<TailReportRow>& rows,
                        double threshold);

// Topic table: id, concept label (optional), top-n words by probability.
void write_topic_table_csv(const std::filesystem::path& path, const TopicModel& model, int top_n,
                           const std::map<int, std::string>& topic_labels);

// Domain-label distribution: label, domain count, percentage.
void write_label_distribution_csv(const std::filesystem::path& path,
                                  const std::map<std::string, std::string>& domain_labels);

// Induced subgraph on vertices with undirected degree >= 1.
DomainGraph nonisolated_subgraph(const DomainGraph& g);

}  // namespace onioneco
