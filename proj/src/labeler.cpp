#include "onioneco/labeler.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>
#include <unordered_set>

#include <Eigen/Dense>

#include "onioneco/errors.hpp"
#include "onioneco/log.hpp"

namespace onioneco {

namespace {

const std::unordered_set<std::string>& allowed_predicates() {
    static const std::unordered_set<std::string> predicates = {
        "rdfs:type", "dcterms:subject", "skos:broader", "skos:broaderOf", "rdfs:subClassOf",
    };
    return predicates;
}

}  // namespace

std::string normalize_concept_label(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (const char c : raw) {
        if (c == '_') {
            out.push_back(' ');
        } else {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

KnowledgeGraph load_knowledge_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open knowledge graph snapshot: " + path.string());

    KnowledgeGraph kg;
    std::unordered_map<std::string, int> id_of;
    auto intern = [&](const std::string& raw) {
        const std::string label = normalize_concept_label(raw);
        const auto it = id_of.find(label);
        if (it != id_of.end()) return it->second;
        const int id = kg.vertex_count();
        id_of.emplace(label, id);
        kg.labels.push_back(label);
        kg.by_label[label].push_back(id);
        kg.out.emplace_back();
        kg.in.emplace_back();
        return id;
    };

    std::string line;
    std::size_t triples = 0;
    std::set<std::pair<int, int>> seen_edges;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos) {
            ++kg.skipped_lines;
            continue;
        }
        const std::string subject = line.substr(0, tab1);
        const std::string predicate = line.substr(tab1 + 1, tab2 - tab1 - 1);
        const std::string object = line.substr(tab2 + 1);
        if (subject.empty() || object.empty()) {
            ++kg.skipped_lines;
            continue;
        }
        if (allowed_predicates().count(predicate) == 0) continue;
        const int s = intern(subject);
        const int o = intern(object);
        ++triples;
        if (s != o && seen_edges.emplace(s, o).second) {
            kg.out[s].push_back(o);
            kg.in[o].push_back(s);
        }
    }
    if (kg.skipped_lines > 0) {
        ONIONECO_LOG_WARN("knowledge graph: skipped %zu malformed lines", kg.skipped_lines);
    }
    if (triples == 0) throw DataError("knowledge graph snapshot has no usable triples: " + path.string());
    return kg;
}

CandidateSubgraph candidate_subgraph(const KnowledgeGraph& kg,
                                     const std::vector<std::string>& top_words) {
    std::set<int> anchor_ids;
    for (const std::string& word : top_words) {
        const auto it = kg.by_label.find(normalize_concept_label(word));
        if (it == kg.by_label.end()) continue;
        anchor_ids.insert(it->second.begin(), it->second.end());
    }
    if (anchor_ids.empty()) {
        std::string joined;
        for (const std::string& w : top_words) joined += (joined.empty() ? "" : ", ") + w;
        throw DataError("candidate_subgraph: no concept matches any of: " + joined);
    }

    // Directed 1- and 2-hop successor neighborhoods of the anchors.
    std::set<int> kept(anchor_ids);
    for (const int a : anchor_ids) {
        for (const int b : kg.out[a]) {
            kept.insert(b);
            for (const int c : kg.out[b]) kept.insert(c);
        }
    }

    CandidateSubgraph sub;
    std::unordered_map<int, int> local_of;
    for (const int v : kept) {
        local_of.emplace(v, sub.vertex_count());
        sub.kg_vertex.push_back(v);
        sub.labels.push_back(kg.labels[v]);
    }
    sub.adjacency.assign(kept.size(), {});
    std::set<std::pair<int, int>> edges;
    for (const int v : kept) {
        for (const int w : kg.out[v]) {
            if (kept.count(w) == 0 || v == w) continue;
            const int lv = local_of[v];
            const int lw = local_of[w];
            // Scoring treats the subgraph as undirected; store each edge once.
            const auto key = std::minmax(lv, lw);
            if (edges.emplace(key.first, key.second).second) {
                sub.adjacency[lv].push_back(lw);
                sub.adjacency[lw].push_back(lv);
            }
        }
    }
    for (auto& neighbors : sub.adjacency) std::sort(neighbors.begin(), neighbors.end());
    for (const int a : anchor_ids) sub.anchors.push_back(local_of[a]);
    std::sort(sub.anchors.begin(), sub.anchors.end());
    return sub;
}

std::vector<LabelScore> frwbc_scores(const CandidateSubgraph& g, int grounding) {
    const int n_vertices = g.vertex_count();
    if (static_cast<int>(g.anchors.size()) < 2) {
        throw DataError("frwbc_scores: need at least two anchor vertices");
    }

    // Connected components of the undirected scoring graph.
    std::vector<int> component(n_vertices, -1);
    std::vector<std::vector<int>> members;
    for (int start = 0; start < n_vertices; ++start) {
        if (component[start] >= 0) continue;
        const int c = static_cast<int>(members.size());
        members.emplace_back();
        std::queue<int> queue;
        queue.push(start);
        component[start] = c;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            members[c].push_back(v);
            for (const int w : g.adjacency[v]) {
                if (component[w] < 0) {
                    component[w] = c;
                    queue.push(w);
                }
            }
        }
    }

    std::vector<double> raw(n_vertices, 0.0);
    std::vector<long long> anchors_per_component(members.size(), 0);
    for (const int a : g.anchors) ++anchors_per_component[component[a]];

    for (std::size_t c = 0; c < members.size(); ++c) {
        const std::vector<int>& verts = members[c];
        const int m = static_cast<int>(verts.size());
        std::vector<int> anchors_here;
        for (const int a : g.anchors) {
            if (component[a] == static_cast<int>(c)) anchors_here.push_back(a);
        }
        const int k = static_cast<int>(anchors_here.size());
        if (k < 2 || m < 2) continue;

        std::unordered_map<int, int> local;
        for (int i = 0; i < m; ++i) local.emplace(verts[i], i);

        // Grounded Laplacian inverse, padded with a zero row/column at the
        // removed index. The removed row is chosen by `grounding` modulo the
        // component size; gamma is invariant to this choice.
        Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            for (const int w : g.adjacency[verts[i]]) {
                const int j = local[w];
                laplacian(i, j) -= 1.0;
                laplacian(i, i) += 1.0;
            }
        }
        const int removed = ((grounding % m) + m) % m;
        Eigen::MatrixXd reduced(m - 1, m - 1);
        for (int i = 0, ri = 0; i < m; ++i) {
            if (i == removed) continue;
            for (int j = 0, rj = 0; j < m; ++j) {
                if (j == removed) continue;
                reduced(ri, rj) = laplacian(i, j);
                ++rj;
            }
            ++ri;
        }
        const Eigen::MatrixXd inverse = reduced.inverse();
        Eigen::MatrixXd transfer = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0, ri = 0; i < m; ++i) {
            if (i == removed) continue;
            for (int j = 0, rj = 0; j < m; ++j) {
                if (j == removed) continue;
                transfer(i, j) = inverse(ri, rj);
                ++rj;
            }
            ++ri;
        }

        for (std::size_t xi = 0; xi < anchors_here.size(); ++xi) {
            for (std::size_t yi = xi + 1; yi < anchors_here.size(); ++yi) {
                const int x = local[anchors_here[xi]];
                const int y = local[anchors_here[yi]];
                for (int i = 0; i < m; ++i) {
                    double flow = 0.0;
                    for (const int w : g.adjacency[verts[i]]) {
                        const int j = local[w];
                        flow += std::abs(transfer(i, x) - transfer(i, y) - transfer(j, x) +
                                         transfer(j, y));
                    }
                    raw[verts[i]] += 0.5 * flow;
                }
            }
        }
    }

    std::vector<char> is_anchor(n_vertices, 0);
    for (const int a : g.anchors) is_anchor[a] = 1;

    std::vector<LabelScore> scores(n_vertices);
    for (int v = 0; v < n_vertices; ++v) {
        const long long k = anchors_per_component[component[v]];
        // Normalization counts only the pairs actually summed in v's
        // component: C(k,2) for non-anchors, (k-1)(k-2)/2 for anchors.
        const long long denom = is_anchor[v] ? (k - 1) * (k - 2) / 2 : k * (k - 1) / 2;
        scores[v].vertex = v;
        scores[v].label = g.labels[v];
        scores[v].gamma = denom > 0 ? raw[v] / static_cast<double>(denom) : 0.0;
    }
    return scores;
}

std::vector<LabelScore> rank_topic_labels(const KnowledgeGraph& kg,
                                          const std::vector<std::string>& top_words) {
    const CandidateSubgraph sub = candidate_subgraph(kg, top_words);
    std::vector<LabelScore> scores = frwbc_scores(sub);
    std::sort(scores.begin(), scores.end(), [](const LabelScore& a, const LabelScore& b) {
        if (a.gamma != b.gamma) return a.gamma > b.gamma;
        return a.label < b.label;
    });
    return scores;
}

LabelScore label_topic(const KnowledgeGraph& kg, const std::vector<std::string>& top_words) {
    return rank_topic_labels(kg, top_words).front();
}

}  // namespace onioneco
