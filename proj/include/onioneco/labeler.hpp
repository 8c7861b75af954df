#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace onioneco {

// Directed typed concept graph loaded from a TSV triple snapshot. Only the
// five class/category predicates survive loading; concept labels are
// normalized (lowercase, underscores to spaces).
struct KnowledgeGraph {
    std::vector<std::string> labels;                         // by vertex id
    std::unordered_map<std::string, std::vector<int>> by_label;
    std::vector<std::vector<int>> out;                       // successors
    std::vector<std::vector<int>> in;                        // predecessors
    std::size_t skipped_lines = 0;

    int vertex_count() const { return static_cast<int>(labels.size()); }
};

// TSV triples: subject<TAB>predicate<TAB>object. Malformed lines are skipped
// with a warning count; a file yielding zero triples is a DataError.
KnowledgeGraph load_knowledge_graph(const std::filesystem::path& path);

// Anchor concepts (exact normalized label match against the topic's top
// words) plus their directed 1- and 2-hop successor neighborhoods; edges are
// all knowledge-graph relations among the kept vertices.
struct CandidateSubgraph {
    std::vector<int> kg_vertex;              // local id -> knowledge graph id
    std::vector<std::string> labels;         // by local id
    std::vector<std::vector<int>> adjacency; // undirected view used for scoring
    std::vector<int> anchors;                // local ids, sorted

    int vertex_count() const { return static_cast<int>(labels.size()); }
};

// Throws DataError when no top word matches any concept label; unmatched
// words are otherwise dropped from the anchor set.
CandidateSubgraph candidate_subgraph(const KnowledgeGraph& kg,
                                     const std::vector<std::string>& top_words);

struct LabelScore {
    int vertex = -1;  // local id in the candidate subgraph
    std::string label;
    double gamma = 0.0;
};

// Current-flow betweenness of every subgraph vertex restricted to anchor
// pairs: for each pair, the unit-current throughput 0.5 * sum_j A_ij *
// |T_ix - T_iy - T_jx + T_jy| from the grounded-Laplacian inverse T. Scores
// are averaged over C(n,2) pairs for non-anchors and (n-1)(n-2)/2 for
// anchors. Disconnected subgraphs are scored per component with only that
// component's anchor pairs. Throws DataError with fewer than two anchors.
//
// grounding selects which row/column of each component's Laplacian is
// removed (by position within the component, modulo its size); the result is
// invariant to this choice and the parameter exists for tests.
std::vector<LabelScore> frwbc_scores(const CandidateSubgraph& g, int grounding = 0);

// All candidate scores sorted by gamma descending, ties by label ascending.
std::vector<LabelScore> rank_topic_labels(const KnowledgeGraph& kg,
                                          const std::vector<std::string>& top_words);

// argmax of gamma over the candidate subgraph built from the top words; ties
// resolve to the lexicographically smallest concept label.
LabelScore label_topic(const KnowledgeGraph& kg, const std::vector<std::string>& top_words);

// Lowercases and replaces underscores with spaces; used for both concept
// labels and topic words before matching.
std::string normalize_concept_label(std::string_view raw);

}  // namespace onioneco
