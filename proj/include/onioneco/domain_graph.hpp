#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace onioneco {

inline constexpr const char* kUnlabeled = "Unlabeled";

// Directed domain hyperlink graph. Vertices are domains carrying a content
// label; edges are binary (multiplicity collapsed), with no self-loops.
class DomainGraph {
public:
    int add_vertex(const std::string& name, const std::string& label = kUnlabeled);
    // Ignored when src == dst or the edge already exists.
    void add_edge(int src, int dst);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::string& name(int v) const { return names_[v]; }
    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, const std::string& label) { labels_[v] = label; }
    std::optional<int> find(const std::string& name) const;

    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    // Undirected collapse: neighbors linked in either direction, each once.
    const std::vector<int>& undirected(int v) const;
    int degree(int v) const { return static_cast<int>(undirected(v).size()); }
    std::size_t undirected_edge_count() const;

    // Distinct labels present, sorted.
    std::vector<std::string> label_set() const;

private:
    std::vector<std::string> names_;
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::size_t edge_count_ = 0;
    mutable std::vector<std::vector<int>> undirected_;  // built lazily
    mutable bool undirected_dirty_ = true;
};

// One vertex per domain; a directed edge (u, v), u != v, iff some page of u
// links to a page of v. Only onion hosts become vertices; label-map domains
// are included as (possibly isolated) vertices; missing labels map to
// "Unlabeled".
DomainGraph build_domain_graph(const std::vector<std::pair<std::string, std::string>>& page_links,
                               const std::map<std::string, std::string>& labels);

// Edge-list file: one "src_domain<whitespace>dst_domain" per line; '#'
// comments and blank lines are tolerated. Labels CSV: "domain,label" rows
// (optional header). Vertices are the union of both files' domains.
DomainGraph load_domain_graph(const std::filesystem::path& edges,
                              const std::optional<std::filesystem::path>& labels_csv);

std::map<std::string, std::string> load_labels_csv(const std::filesystem::path& path);

// Page-link file: one "src_url<TAB>dst_url" per line, '#' comments allowed.
std::vector<std::pair<std::string, std::string>> load_page_links(
    const std::filesystem::path& path);

// Induced subgraph on vertices carrying the given label.
DomainGraph intra_subgraph(const DomainGraph& g, const std::string& label);

}  // namespace onioneco
