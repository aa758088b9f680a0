#ifndef PROPCOLOR_GRAPH_HPP
#define PROPCOLOR_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

namespace propcolor {

/// Multiset of component orders plus the linear-forest flag.
struct ComponentProfile {
    std::vector<int> component_orders;  // sorted descending
    bool is_linear_forest = false;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Generators fix the vertex labeling so that every witness produced
/// downstream is reproducible byte-for-byte:
///   - path(n): vertices in path order 0-1-...-(n-1)
///   - cycle(n): 0-1-...-(n-1)-0
///   - star(m): center 0, leaves 1..m
///   - complete_bipartite(a, b): side A = 0..a-1, side B = a..a+b-1
///   - disjoint_union(g, h): vertices of g first, then h shifted by |V(g)|
///   - linear_forest(orders): paths concatenated in the given order
class Graph {
  public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    static Graph path(int n);
    static Graph cycle(int n);  // requires n >= 3
    static Graph complete(int n);
    static Graph star(int leaves);  // K_{1,m}
    static Graph complete_bipartite(int a, int b);
    static Graph empty(int n) { return Graph(n, {}); }
    static Graph disjoint_union(const Graph& g, const Graph& h);
    static Graph linear_forest(const std::vector<int>& orders);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

    int max_degree() const;
    ComponentProfile components() const;
    std::vector<int> component_of() const;  // vertex -> component id

    /// Linear forest, largest component <= 5 vertices, all others <= 2.
    bool is_proportionally_2_choosable_profile() const;

    /// Iteratively deletes degree-1 vertices until none remain.  The
    /// surviving vertices keep their relative order.
    Graph core() const;

    /// Every component's core is K_1, an even cycle, or a theta graph
    /// with path lengths 2, 2, 2m.
    bool is_two_choosable() const;

    /// Returns the two sides of a bipartition, or nullopt if an odd
    /// cycle exists.  Side assignment is fixed by BFS from the least
    /// vertex of each component (which lands in the first side).
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition() const;

    bool is_complete() const;
    bool isomorphic_to(const Graph& other) const;  // brute force, small graphs only

  private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Tree from the equitable-choosability counterexample: path u-v-w with k
/// pendant leaves on u, k on w, and 2k-1 on v.  Requires k >= 3.
/// Labeling: u=0, v=1, w=2, then leaves of u, leaves of w, leaves of v.
Graph wang_lih_tree(int k);

}  // namespace propcolor

#endif
