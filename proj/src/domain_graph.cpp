#include "onioneco/domain_graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "onioneco/errors.hpp"
#include "onioneco/url.hpp"

namespace onioneco {

int DomainGraph::add_vertex(const std::string& name, const std::string& label) {
    const auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    const int id = vertex_count();
    index_.emplace(name, id);
    names_.push_back(name);
    labels_.push_back(label);
    out_.emplace_back();
    in_.emplace_back();
    undirected_dirty_ = true;
    return id;
}

void DomainGraph::add_edge(int src, int dst) {
    if (src == dst) return;
    auto& successors = out_[src];
    if (std::find(successors.begin(), successors.end(), dst) != successors.end()) return;
    successors.push_back(dst);
    in_[dst].push_back(src);
    ++edge_count_;
    undirected_dirty_ = true;
}

std::optional<int> DomainGraph::find(const std::string& name) const {
    const auto it = index_.find(name);
    return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
}

const std::vector<int>& DomainGraph::undirected(int v) const {
    if (undirected_dirty_) {
        undirected_.assign(names_.size(), {});
        for (int u = 0; u < vertex_count(); ++u) {
            std::set<int> neighbors(out_[u].begin(), out_[u].end());
            neighbors.insert(in_[u].begin(), in_[u].end());
            undirected_[u].assign(neighbors.begin(), neighbors.end());
        }
        undirected_dirty_ = false;
    }
    return undirected_[v];
}

std::size_t DomainGraph::undirected_edge_count() const {
    std::size_t degree_sum = 0;
    for (int v = 0; v < vertex_count(); ++v) degree_sum += undirected(v).size();
    return degree_sum / 2;
}

std::vector<std::string> DomainGraph::label_set() const {
    std::set<std::string> labels(labels_.begin(), labels_.end());
    return {labels.begin(), labels.end()};
}

DomainGraph build_domain_graph(const std::vector<std::pair<std::string, std::string>>& page_links,
                               const std::map<std::string, std::string>& labels) {
    DomainGraph g;
    auto lookup_label = [&labels](const std::string& domain) -> const std::string& {
        static const std::string unlabeled = kUnlabeled;
        const auto it = labels.find(domain);
        return it == labels.end() ? unlabeled : it->second;
    };
    // Labeled domains become vertices even when no link touches them.
    for (const auto& [domain, label] : labels) g.add_vertex(domain, label);

    auto onion_host = [](const std::string& url) -> std::optional<std::string> {
        const auto parsed = parse_url(url);
        if (!parsed) return std::nullopt;
        const std::string& host = parsed->host;
        if (host.size() < 6 || host.compare(host.size() - 6, 6, ".onion") != 0) return std::nullopt;
        return host;
    };

    for (const auto& [src_url, dst_url] : page_links) {
        const auto src = onion_host(src_url);
        const auto dst = onion_host(dst_url);
        if (!src) continue;  // source pages must be onion domains
        const int u = g.add_vertex(*src, lookup_label(*src));
        if (!dst) continue;  // surface-web targets excluded
        const int v = g.add_vertex(*dst, lookup_label(*dst));
        g.add_edge(u, v);
    }
    g.undirected_edge_count();  // materialize the collapse before shared reads
    return g;
}

std::map<std::string, std::string> load_labels_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open labels file: " + path.string());
    std::map<std::string, std::string> labels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": expected domain,label");
        }
        const std::string domain = line.substr(0, comma);
        const std::string label = line.substr(comma + 1);
        if (lineno == 1 && (domain == "domain" || domain == "Domain")) continue;  // header
        labels[domain] = label;
    }
    return labels;
}

DomainGraph load_domain_graph(const std::filesystem::path& edges,
                              const std::optional<std::filesystem::path>& labels_csv) {
    std::map<std::string, std::string> labels;
    if (labels_csv) labels = load_labels_csv(*labels_csv);

    DomainGraph g;
    for (const auto& [domain, label] : labels) g.add_vertex(domain, label);

    std::ifstream in(edges, std::ios::binary);
    if (!in) throw DataError("cannot open edge list: " + edges.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string src, dst;
        if (!(row >> src >> dst)) {
            throw DataError(edges.string() + ":" + std::to_string(lineno) + ": expected src dst");
        }
        auto label_of = [&labels](const std::string& d) {
            const auto it = labels.find(d);
            return it == labels.end() ? std::string(kUnlabeled) : it->second;
        };
        const int u = g.add_vertex(src, label_of(src));
        const int v = g.add_vertex(dst, label_of(dst));
        g.add_edge(u, v);
    }
    g.undirected_edge_count();
    return g;
}

std::vector<std::pair<std::string, std::string>> load_page_links(
    const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open page-link file: " + path.string());
    std::vector<std::pair<std::string, std::string>> links;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": expected src<TAB>dst");
        }
        links.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return links;
}

DomainGraph intra_subgraph(const DomainGraph& g, const std::string& label) {
    DomainGraph sub;
    std::vector<int> local(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.label(v) == label) local[v] = sub.add_vertex(g.name(v), label);
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

}  // namespace onioneco
