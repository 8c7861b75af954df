#pragma once

#include <map>
#include <string>
#include <vector>

#include "onioneco/domain_graph.hpp"

namespace onioneco {

struct NetworkSummary {
    int vertex_count = 0;
    std::size_t edge_count = 0;            // directed binary edges
    std::size_t undirected_edge_count = 0;
    double mean_degree = 0.0;              // 2|E_u| / |V|
    int max_degree = 0;                    // undirected
    double density = 0.0;                  // |E_u| / C(|V|, 2)
    int wcc_count = 0;
    int scc_count = 0;
    int max_wcc_size = 0;
    int max_scc_size = 0;
};

NetworkSummary summary_stats(const DomainGraph& g);

// Weakly connected component id per vertex (undirected collapse).
std::vector<int> weakly_connected_components(const DomainGraph& g);
// Strongly connected component id per vertex (directed; Tarjan).
std::vector<int> strongly_connected_components(const DomainGraph& g);

enum class CentralityMeasure { Degree, Betweenness, Closeness, Eigenvector };

// Per-vertex scores on the undirected collapse. Betweenness is shortest-path
// betweenness normalized by (n-1)(n-2)/2; closeness is the inverse mean
// distance within the vertex's component (0 for isolated vertices);
// eigenvector is the principal adjacency eigenvector scaled to max 1 (power
// iteration, tolerance 1e-10).
std::vector<double> centrality(const DomainGraph& g, CentralityMeasure measure);

struct CommunityDegreeMatrix {
    std::vector<std::string> labels;        // row/column order
    std::vector<std::vector<long long>> counts;  // counts[i][j]: edges i -> j
};

// Entry (i, j) counts directed edges from community i to community j; the
// total over the matrix equals the directed edge count.
CommunityDegreeMatrix community_degree_matrix(const DomainGraph& g);

// Area ratio of the largest-component-size curve under targeted removal:
//   R = 6 * sum_i i * C_i / (|V| (|V|+1) (|V|-1))
// where C_i is the largest undirected component size after removing the i
// highest-kappa vertices (static ordering from the intact graph, ties by
// lexicographic domain name).
double robustness_coefficient(const DomainGraph& g, CentralityMeasure kappa);

// Largest-component-size sequence C_0..C_|V| used by the coefficient.
std::vector<int> shattering_sequence(const DomainGraph& g, CentralityMeasure kappa);

// Newman label modularity on the undirected collapse:
//   M = 1/(2|E|) * sum_ij (A_ij - d_i d_j / (2|E|)) [label_i == label_j]
// Throws NumericError when the graph has no edges.
double modularity(const DomainGraph& g);

// Restriction of both modularity terms to intra-community pairs, normalized
// by the global 2|E|; the values sum to the global modularity.
std::map<std::string, double> per_community_modularity(const DomainGraph& g);

}  // namespace onioneco
