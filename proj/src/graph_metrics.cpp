#include "onioneco/graph_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stack>

#include "onioneco/errors.hpp"

namespace onioneco {

std::vector<int> weakly_connected_components(const DomainGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> component(n, -1);
    int next = 0;
    for (int start = 0; start < n; ++start) {
        if (component[start] >= 0) continue;
        std::queue<int> queue;
        queue.push(start);
        component[start] = next;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            for (const int w : g.undirected(v)) {
                if (component[w] < 0) {
                    component[w] = next;
                    queue.push(w);
                }
            }
        }
        ++next;
    }
    return component;
}

std::vector<int> strongly_connected_components(const DomainGraph& g) {
    // Iterative Tarjan.
    const int n = g.vertex_count();
    std::vector<int> component(n, -1), index(n, -1), lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> scc_stack;
    int next_index = 0, next_component = 0;

    struct Frame {
        int vertex;
        std::size_t child;
    };
    for (int start = 0; start < n; ++start) {
        if (index[start] >= 0) continue;
        std::stack<Frame> frames;
        frames.push({start, 0});
        index[start] = lowlink[start] = next_index++;
        scc_stack.push_back(start);
        on_stack[start] = 1;
        while (!frames.empty()) {
            Frame& frame = frames.top();
            const int v = frame.vertex;
            if (frame.child < g.out(v).size()) {
                const int w = g.out(v)[frame.child++];
                if (index[w] < 0) {
                    index[w] = lowlink[w] = next_index++;
                    scc_stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push({w, 0});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                frames.pop();
                if (!frames.empty()) {
                    lowlink[frames.top().vertex] = std::min(lowlink[frames.top().vertex], lowlink[v]);
                }
                if (lowlink[v] == index[v]) {
                    for (;;) {
                        const int w = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[w] = 0;
                        component[w] = next_component;
                        if (w == v) break;
                    }
                    ++next_component;
                }
            }
        }
    }
    return component;
}

NetworkSummary summary_stats(const DomainGraph& g) {
    NetworkSummary s;
    s.vertex_count = g.vertex_count();
    if (s.vertex_count == 0) return s;
    s.edge_count = g.edge_count();
    s.undirected_edge_count = g.undirected_edge_count();
    s.mean_degree = 2.0 * static_cast<double>(s.undirected_edge_count) / s.vertex_count;
    for (int v = 0; v < s.vertex_count; ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
    if (s.vertex_count > 1) {
        s.density = static_cast<double>(s.undirected_edge_count) /
                    (static_cast<double>(s.vertex_count) * (s.vertex_count - 1) / 2.0);
    }

    const std::vector<int> wcc = weakly_connected_components(g);
    const std::vector<int> scc = strongly_connected_components(g);
    auto count_sizes = [](const std::vector<int>& component, int& count, int& max_size) {
        std::vector<int> sizes;
        for (const int c : component) {
            if (c >= static_cast<int>(sizes.size())) sizes.resize(c + 1, 0);
            ++sizes[c];
        }
        count = static_cast<int>(sizes.size());
        max_size = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
    };
    count_sizes(wcc, s.wcc_count, s.max_wcc_size);
    count_sizes(scc, s.scc_count, s.max_scc_size);
    return s;
}

namespace {

// Brandes accumulation over the undirected collapse; raw dependency with
// each unordered pair counted once.
std::vector<double> betweenness_raw(const DomainGraph& g) {
    const int n = g.vertex_count();
    std::vector<double> score(n, 0.0);
    std::vector<int> distance(n), sigma(n), order;
    std::vector<double> delta(n);
    std::vector<std::vector<int>> predecessors(n);
    for (int s = 0; s < n; ++s) {
        std::fill(distance.begin(), distance.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : predecessors) p.clear();
        order.clear();
        std::queue<int> queue;
        distance[s] = 0;
        sigma[s] = 1;
        queue.push(s);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            order.push_back(v);
            for (const int w : g.undirected(v)) {
                if (distance[w] < 0) {
                    distance[w] = distance[v] + 1;
                    queue.push(w);
                }
                if (distance[w] == distance[v] + 1) {
                    sigma[w] += sigma[v];
                    predecessors[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int w = *it;
            for (const int v : predecessors[w]) {
                delta[v] += static_cast<double>(sigma[v]) / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) score[w] += delta[w];
        }
    }
    // Each unordered pair was visited from both endpoints.
    for (double& x : score) x /= 2.0;
    return score;
}

std::vector<double> closeness_scores(const DomainGraph& g) {
    const int n = g.vertex_count();
    std::vector<double> score(n, 0.0);
    std::vector<int> distance(n);
    for (int s = 0; s < n; ++s) {
        std::fill(distance.begin(), distance.end(), -1);
        std::queue<int> queue;
        distance[s] = 0;
        queue.push(s);
        long long total = 0;
        int reached = 0;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            if (v != s) {
                total += distance[v];
                ++reached;
            }
            for (const int w : g.undirected(v)) {
                if (distance[w] < 0) {
                    distance[w] = distance[v] + 1;
                    queue.push(w);
                }
            }
        }
        score[s] = total > 0 ? static_cast<double>(reached) / static_cast<double>(total) : 0.0;
    }
    return score;
}

std::vector<double> eigenvector_scores(const DomainGraph& g) {
    const int n = g.vertex_count();
    std::vector<double> x(n, 1.0), next(n);
    // Shifted iteration (A + I) keeps bipartite structures from oscillating
    // without changing the principal eigenvector.
    for (int iter = 0; iter < 100000; ++iter) {
        double max_val = 0.0;
        for (int v = 0; v < n; ++v) {
            double sum = x[v];
            for (const int w : g.undirected(v)) sum += x[w];
            next[v] = sum;
            max_val = std::max(max_val, sum);
        }
        if (max_val <= 0.0) break;
        double delta = 0.0;
        for (int v = 0; v < n; ++v) {
            next[v] /= max_val;
            delta = std::max(delta, std::abs(next[v] - x[v]));
        }
        x.swap(next);
        if (delta < 1e-10) break;
    }
    const double max_val = *std::max_element(x.begin(), x.end());
    if (max_val > 0) {
        for (double& v : x) v /= max_val;
    }
    return x;
}

}  // namespace

std::vector<double> centrality(const DomainGraph& g, CentralityMeasure measure) {
    const int n = g.vertex_count();
    switch (measure) {
        case CentralityMeasure::Degree: {
            std::vector<double> score(n);
            for (int v = 0; v < n; ++v) score[v] = g.degree(v);
            return score;
        }
        case CentralityMeasure::Betweenness: {
            std::vector<double> score = betweenness_raw(g);
            if (n > 2) {
                const double norm = static_cast<double>(n - 1) * (n - 2) / 2.0;
                for (double& x : score) x /= norm;
            }
            return score;
        }
        case CentralityMeasure::Closeness:
            return closeness_scores(g);
        case CentralityMeasure::Eigenvector:
            if (n == 0) throw DataError("eigenvector centrality: empty graph");
            return eigenvector_scores(g);
    }
    return {};
}

CommunityDegreeMatrix community_degree_matrix(const DomainGraph& g) {
    CommunityDegreeMatrix m;
    m.labels = g.label_set();
    std::map<std::string, int> row;
    for (std::size_t i = 0; i < m.labels.size(); ++i) row[m.labels[i]] = static_cast<int>(i);
    m.counts.assign(m.labels.size(), std::vector<long long>(m.labels.size(), 0));
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const int w : g.out(v)) {
            ++m.counts[row[g.label(v)]][row[g.label(w)]];
        }
    }
    return m;
}

std::vector<int> shattering_sequence(const DomainGraph& g, CentralityMeasure kappa) {
    const int n = g.vertex_count();
    const std::vector<double> score = centrality(g, kappa);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (score[a] != score[b]) return score[a] > score[b];
        return g.name(a) < g.name(b);
    });

    std::vector<char> removed(n, 0);
    std::vector<int> sequence;
    sequence.reserve(n + 1);

    // Largest undirected component among the surviving vertices.
    std::vector<int> seen(n, -1);
    auto largest_component = [&](int stamp) {
        int best = 0;
        std::vector<int> queue;
        for (int start = 0; start < n; ++start) {
            if (removed[start] || seen[start] == stamp) continue;
            queue.clear();
            queue.push_back(start);
            seen[start] = stamp;
            int size = 0;
            while (!queue.empty()) {
                const int v = queue.back();
                queue.pop_back();
                ++size;
                for (const int w : g.undirected(v)) {
                    if (!removed[w] && seen[w] != stamp) {
                        seen[w] = stamp;
                        queue.push_back(w);
                    }
                }
            }
            best = std::max(best, size);
        }
        return best;
    };

    sequence.push_back(largest_component(0));
    for (int i = 0; i < n; ++i) {
        removed[order[i]] = 1;
        sequence.push_back(largest_component(i + 1));
    }
    return sequence;
}

double robustness_coefficient(const DomainGraph& g, CentralityMeasure kappa) {
    const long long n = g.vertex_count();
    if (n < 2) throw DataError("robustness_coefficient: need at least 2 vertices");
    const std::vector<int> sequence = shattering_sequence(g, kappa);
    long long weighted = 0;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        weighted += static_cast<long long>(i) * sequence[i];
    }
    return 6.0 * static_cast<double>(weighted) / (static_cast<double>(n) * (n + 1) * (n - 1));
}

double modularity(const DomainGraph& g) {
    double total = 0.0;
    for (const auto& [label, value] : per_community_modularity(g)) total += value;
    return total;
}

std::map<std::string, double> per_community_modularity(const DomainGraph& g) {
    const double m2 = 2.0 * static_cast<double>(g.undirected_edge_count());
    if (m2 <= 0) throw NumericError("modularity: graph has no edges");
    const int n = g.vertex_count();

    // Group vertices by label; both the edge and the null term restrict to
    // ordered intra-community pairs (i == j included in the null term).
    std::map<std::string, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[g.label(v)].push_back(v);

    std::map<std::string, double> result;
    for (const auto& [label, verts] : groups) {
        double edge_term = 0.0;
        double degree_sum = 0.0;
        for (const int v : verts) {
            degree_sum += g.degree(v);
            for (const int w : g.undirected(v)) {
                if (g.label(w) == label) edge_term += 1.0;  // ordered pairs
            }
        }
        const double null_term = degree_sum * degree_sum / m2;
        result[label] = (edge_term - null_term) / m2;
    }
    return result;
}

}  // namespace onioneco
