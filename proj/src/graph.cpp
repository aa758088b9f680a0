#include "propcolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <set>

namespace propcolor {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count) {
    if (vertex_count < 0) {
        throw std::invalid_argument("vertex count must be nonnegative");
    }
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop");
        }
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) {
            throw std::invalid_argument("duplicate edge");
        }
    }
    edges_.assign(seen.begin(), seen.end());
    adjacency_.assign(vertex_count_, {});
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({n - 1, 0});
    return Graph(n, std::move(edges));
}

Graph Graph::complete(int n) {
    if (n < 1) throw std::invalid_argument("complete requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph Graph::star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star requires m >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph(leaves + 1, std::move(edges));
}

Graph Graph::complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite requires positive sides");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(a + b, std::move(edges));
}

Graph Graph::disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> edges = g.edges_;
    const int shift = g.vertex_count_;
    for (auto [u, v] : h.edges_) edges.push_back({u + shift, v + shift});
    return Graph(g.vertex_count_ + h.vertex_count_, std::move(edges));
}

Graph Graph::linear_forest(const std::vector<int>& orders) {
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (int n : orders) {
        if (n < 1) throw std::invalid_argument("component order must be positive");
        for (int i = 0; i + 1 < n; ++i) edges.push_back({base + i, base + i + 1});
        base += n;
    }
    return Graph(base, std::move(edges));
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adjacency_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

std::vector<int> Graph::component_of() const {
    std::vector<int> comp(vertex_count_, -1);
    int id = 0;
    for (int s = 0; s < vertex_count_; ++s) {
        if (comp[s] != -1) continue;
        std::deque<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adjacency_[v]) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    queue.push_back(w);
                }
            }
        }
        ++id;
    }
    return comp;
}

ComponentProfile Graph::components() const {
    std::vector<int> comp = component_of();
    int count = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<int> orders(count, 0);
    for (int c : comp) ++orders[c];

    // A component is a path iff it is acyclic and has max degree <= 2;
    // equivalently every vertex has degree <= 2 and component has
    // order-1 edges.
    std::vector<int> comp_edges(count, 0);
    for (auto [u, v] : edges_) ++comp_edges[comp[u]];
    bool linear = true;
    for (int v = 0; v < vertex_count_; ++v) {
        if (degree(v) > 2) linear = false;
    }
    if (linear) {
        for (int c = 0; c < count; ++c) {
            if (comp_edges[c] != orders[c] - 1) linear = false;
        }
    }
    std::sort(orders.begin(), orders.end(), std::greater<>());
    return ComponentProfile{std::move(orders), linear};
}

bool Graph::is_proportionally_2_choosable_profile() const {
    ComponentProfile profile = components();
    if (!profile.is_linear_forest) return false;
    const auto& orders = profile.component_orders;
    if (orders.empty()) return true;
    if (orders.front() > 5) return false;
    for (std::size_t i = 1; i < orders.size(); ++i) {
        if (orders[i] > 2) return false;
    }
    return true;
}

Graph Graph::core() const {
    std::vector<bool> alive(vertex_count_, true);
    std::vector<int> deg(vertex_count_);
    for (int v = 0; v < vertex_count_; ++v) deg[v] = degree(v);
    std::deque<int> queue;
    for (int v = 0; v < vertex_count_; ++v)
        if (deg[v] == 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (!alive[v] || deg[v] != 1) continue;
        alive[v] = false;
        for (int w : adjacency_[v]) {
            if (alive[w] && --deg[w] == 1) queue.push_back(w);
        }
    }
    std::vector<int> remap(vertex_count_, -1);
    int n = 0;
    for (int v = 0; v < vertex_count_; ++v)
        if (alive[v]) remap[v] = n++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : edges_)
        if (alive[u] && alive[v]) edges.push_back({remap[u], remap[v]});
    return Graph(n, std::move(edges));
}

namespace {

// Connected graph with exactly two degree-3 vertices, rest degree 2,
// whose three internally disjoint branch-to-branch paths have lengths
// {2, 2, 2m} for some m >= 1.
bool is_theta_222m(const Graph& g) {
    int a = -1, b = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d == 3) {
            if (a == -1) a = v;
            else if (b == -1) b = v;
            else return false;
        } else if (d != 2) {
            return false;
        }
    }
    if (b == -1) return false;
    // Walk each of the three paths leaving a.
    std::vector<int> lengths;
    for (int start : g.neighbors(a)) {
        int prev = a, cur = start, len = 1;
        while (cur != b) {
            if (g.degree(cur) != 2) return false;
            const auto& nbrs = g.neighbors(cur);
            int next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
            prev = cur;
            cur = next;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    if (lengths.size() != 3) return false;
    // Degree census plus the walks account for every edge, so the paths
    // are internally disjoint whenever the total length matches.
    if (lengths[0] + lengths[1] + lengths[2] != g.edge_count()) return false;
    return lengths[0] == 2 && lengths[1] == 2 && lengths[2] >= 2 && lengths[2] % 2 == 0;
}

bool is_even_cycle(const Graph& g) {
    if (g.vertex_count() < 3 || g.vertex_count() % 2 != 0) return false;
    if (g.edge_count() != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return g.components().component_orders.size() == 1;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> remap(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) remap[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (remap[u] != -1 && remap[v] != -1) edges.push_back({remap[u], remap[v]});
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

}  // namespace

bool Graph::is_two_choosable() const {
    std::vector<int> comp = component_of();
    int count = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    for (int c = 0; c < count; ++c) {
        std::vector<int> vertices;
        for (int v = 0; v < vertex_count_; ++v)
            if (comp[v] == c) vertices.push_back(v);
        Graph core = induced_subgraph(*this, vertices).core();
        if (core.vertex_count() <= 1) continue;
        if (is_even_cycle(core)) continue;
        if (is_theta_222m(core)) continue;
        return false;
    }
    return true;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> Graph::bipartition() const {
    std::vector<int> side(vertex_count_, -1);
    for (int s = 0; s < vertex_count_; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adjacency_[v]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < vertex_count_; ++v) {
        (side[v] == 0 ? parts.first : parts.second).push_back(v);
    }
    return parts;
}

bool Graph::is_complete() const {
    return 2 * edge_count() == vertex_count_ * (vertex_count_ - 1);
}

bool Graph::isomorphic_to(const Graph& other) const {
    if (vertex_count_ != other.vertex_count_ || edge_count() != other.edge_count()) return false;
    std::vector<int> perm(vertex_count_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : edges_) {
            if (!other.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph wang_lih_tree(int k) {
    if (k < 3) throw std::invalid_argument("wang_lih_tree requires k >= 3");
    const int u = 0, v = 1, w = 2;
    std::vector<std::pair<int, int>> edges{{u, v}, {v, w}};
    int next = 3;
    for (int i = 0; i < k; ++i) edges.push_back({u, next++});
    for (int i = 0; i < k; ++i) edges.push_back({w, next++});
    for (int i = 0; i < 2 * k - 1; ++i) edges.push_back({v, next++});
    return Graph(next, std::move(edges));
}

}  // namespace propcolor
