#include "doctest.h"
#include "propcolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

using namespace propcolor;

TEST_CASE("simple-graph invariants are enforced") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    Graph g(3, {{1, 0}});
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
}

TEST_CASE("max_degree") {
    CHECK(Graph::path(5).max_degree() == 2);
    CHECK(Graph::star(3).max_degree() == 3);
    CHECK(Graph::empty(4).max_degree() == 0);
}

TEST_CASE("components and linear-forest detection") {
    Graph g = Graph::disjoint_union(Graph::path(5), Graph::path(2));
    ComponentProfile profile = g.components();
    CHECK(profile.component_orders == std::vector<int>{5, 2});
    CHECK(profile.is_linear_forest);

    profile = Graph::cycle(4).components();
    CHECK(profile.component_orders == std::vector<int>{4});
    CHECK_FALSE(profile.is_linear_forest);

    profile = Graph::star(3).components();
    CHECK(profile.component_orders == std::vector<int>{4});
    CHECK_FALSE(profile.is_linear_forest);
}

TEST_CASE("is_proportionally_2_choosable_profile") {
    CHECK(Graph::linear_forest({5, 2, 1}).is_proportionally_2_choosable_profile());
    CHECK_FALSE(Graph::linear_forest({3, 3}).is_proportionally_2_choosable_profile());
    CHECK_FALSE(Graph::path(6).is_proportionally_2_choosable_profile());
    CHECK(Graph::path(1).is_proportionally_2_choosable_profile());
    CHECK(Graph::empty(0).is_proportionally_2_choosable_profile());
    CHECK_FALSE(Graph::cycle(4).is_proportionally_2_choosable_profile());
}

TEST_CASE("generators") {
    Graph p1 = Graph::path(1);
    CHECK(p1.vertex_count() == 1);
    CHECK(p1.edge_count() == 0);

    Graph k22 = Graph::complete_bipartite(2, 2);
    CHECK(k22.vertex_count() == 4);
    CHECK(k22.edge_count() == 4);
    CHECK(k22.max_degree() == 2);
    CHECK(k22.bipartition().has_value());
    CHECK(k22.isomorphic_to(Graph::cycle(4)));

    Graph two_paths = Graph::disjoint_union(Graph::path(3), Graph::path(3));
    CHECK(two_paths.vertex_count() == 6);
    CHECK(two_paths.edge_count() == 4);
    CHECK(two_paths.components().component_orders.size() == 2);

    CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(Graph::path(0), std::invalid_argument);
}

TEST_CASE("wang_lih_tree structure") {
    Graph t3 = wang_lih_tree(3);
    CHECK(t3.vertex_count() == 14);
    CHECK(t3.edge_count() == 13);
    auto parts = t3.bipartition();
    REQUIRE(parts.has_value());
    CHECK(parts->first.size() == 7);
    CHECK(parts->second.size() == 7);

    CHECK(wang_lih_tree(4).vertex_count() == 18);
    CHECK_THROWS_AS(wang_lih_tree(2), std::invalid_argument);

    // u-v-w path with the documented degrees.
    CHECK(t3.adjacent(0, 1));
    CHECK(t3.adjacent(1, 2));
    CHECK(t3.degree(0) == 4);   // u: v plus k leaves
    CHECK(t3.degree(1) == 7);   // v: u, w plus 2k-1 leaves
    CHECK(t3.degree(2) == 4);   // w
}

TEST_CASE("wang_lih_tree is balanced bipartite for k in 3..8") {
    for (int k = 3; k <= 8; ++k) {
        auto parts = wang_lih_tree(k).bipartition();
        REQUIRE(parts.has_value());
        CHECK(parts->first.size() == static_cast<std::size_t>(2 * k + 1));
        CHECK(parts->second.size() == static_cast<std::size_t>(2 * k + 1));
    }
}

TEST_CASE("core_of") {
    CHECK(wang_lih_tree(3).core().vertex_count() == 1);
    CHECK(Graph::path(5).core().vertex_count() == 1);
    Graph c4_core = Graph::cycle(4).core();
    CHECK(c4_core.vertex_count() == 4);
    CHECK(c4_core.edge_count() == 4);

    // Two tree components reduce to one vertex each.
    Graph forest = Graph::disjoint_union(Graph::path(4), Graph::star(3));
    CHECK(forest.core().vertex_count() == 2);
}

TEST_CASE("core is idempotent") {
    std::vector<Graph> corpus{Graph::path(7),           Graph::cycle(5),
                              Graph::star(4),           Graph::complete(4),
                              Graph::complete_bipartite(2, 3), wang_lih_tree(3),
                              Graph::disjoint_union(Graph::cycle(4), Graph::path(3))};
    for (const Graph& g : corpus) {
        Graph once = g.core();
        Graph twice = once.core();
        CHECK(once.vertex_count() == twice.vertex_count());
        CHECK(once.edges() == twice.edges());
    }
}

TEST_CASE("is_two_choosable") {
    CHECK(wang_lih_tree(3).is_two_choosable());
    CHECK_FALSE(Graph::complete(3).is_two_choosable());
    CHECK(Graph::cycle(6).is_two_choosable());
    CHECK_FALSE(Graph::cycle(5).is_two_choosable());
    CHECK(Graph::star(3).is_two_choosable());
    CHECK(Graph::complete_bipartite(2, 3).is_two_choosable());  // theta(2,2,2)
    CHECK_FALSE(Graph::complete_bipartite(2, 4).is_two_choosable());
    CHECK_FALSE(Graph::complete(4).is_two_choosable());
    // Disconnected: conjunction over components.
    CHECK(Graph::disjoint_union(Graph::cycle(4), Graph::path(3)).is_two_choosable());
    CHECK_FALSE(Graph::disjoint_union(Graph::cycle(4), Graph::complete(3)).is_two_choosable());

    // Theta with paths 2, 2, 4: subdivide one K_{2,3} path once more.
    Graph theta224(7, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 6}, {6, 1}});
    CHECK(theta224.is_two_choosable());
    // Theta with paths 2, 2, 3 is not in the family.
    Graph theta223(6, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}});
    CHECK_FALSE(theta223.is_two_choosable());
}

TEST_CASE("component orders always sum to the vertex count") {
    std::vector<Graph> corpus{Graph::empty(6), Graph::path(6), Graph::cycle(6),
                              Graph::star(5),  wang_lih_tree(4),
                              Graph::disjoint_union(Graph::cycle(3), Graph::empty(2))};
    for (const Graph& g : corpus) {
        auto orders = g.components().component_orders;
        CHECK(std::accumulate(orders.begin(), orders.end(), 0) == g.vertex_count());
    }
}

TEST_CASE("characterized profile from orders matches the graph computation") {
    // Direct formula on a component-order multiset: max <= 5, second <= 2.
    auto direct = [](const std::vector<int>& orders) {
        std::vector<int> sorted = orders;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (sorted.empty()) return true;
        if (sorted[0] > 5) return false;
        return sorted.size() < 2 || sorted[1] <= 2;
    };
    std::vector<std::vector<int>> stack{{}};
    while (!stack.empty()) {
        std::vector<int> orders = stack.back();
        stack.pop_back();
        int total = std::accumulate(orders.begin(), orders.end(), 0);
        if (total > 0) {
            CHECK(Graph::linear_forest(orders).is_proportionally_2_choosable_profile() == direct(orders));
        }
        int max_next = orders.empty() ? 10 : orders.back();
        for (int part = 1; part <= std::min(max_next, 10 - total); ++part) {
            std::vector<int> extended = orders;
            extended.push_back(part);
            stack.push_back(std::move(extended));
        }
    }
}
