#ifndef PROPCOLOR_ASSIGNMENT_HPP
#define PROPCOLOR_ASSIGNMENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "propcolor/graph.hpp"

namespace propcolor {

/// Uniform list assignment: every vertex gets exactly k distinct colors.
/// Colors are small positive integers; lists are stored sorted.
class ListAssignment {
  public:
    ListAssignment(int k, std::vector<std::vector<int>> lists);

    int k() const { return k_; }
    int vertex_count() const { return static_cast<int>(lists_.size()); }
    const std::vector<int>& list(int v) const { return lists_[v]; }
    const std::vector<std::vector<int>>& lists() const { return lists_; }
    std::vector<int> palette() const;

    bool operator==(const ListAssignment& other) const = default;
    bool operator<(const ListAssignment& other) const;  // vertex-major flattening

  private:
    int k_;
    std::vector<std::vector<int>> lists_;
};

struct MultiplicityProfile {
    std::map<int, int> eta;       // color -> number of lists containing it
    std::map<int, int> residues;  // color -> eta mod k
    std::vector<int> odd_colors;  // colors with odd eta
};

MultiplicityProfile multiplicity_profile(const ListAssignment& assignment);

/// Applies a color permutation elementwise.  pi must be injective on the
/// palette; colors absent from pi map to themselves.
ListAssignment relabel(const ListAssignment& assignment, const std::map<int, int>& pi);

/// Lexicographically least relabeling under all palette permutations,
/// compared by the vertex-major, list-sorted flattening.  Two assignments
/// are relabel-equivalent iff their canonical forms are equal.
ListAssignment canonical_form(const ListAssignment& assignment);

enum class EnumerationStrategy {
    RestrictedGrowth,  // first-use color numbering; covers every orbit
    CanonicalFilter,   // restricted growth, keeping only canonical forms
};

/// Streams all k-assignments on n vertices in first-use canonical order:
/// colors are numbered by first appearance scanning vertices in index
/// order with each list sorted ascending.  Every orbit of k-assignments
/// under color permutations is represented at least once, and no raw
/// assignment is emitted twice.  Order is vertex-major lexicographic.
class AssignmentEnumerator {
  public:
    AssignmentEnumerator(int vertex_count, int k,
                         EnumerationStrategy strategy = EnumerationStrategy::RestrictedGrowth);

    /// Next assignment, or nullopt when the stream is exhausted.
    std::optional<ListAssignment> next();

    std::uint64_t emitted() const { return emitted_; }

  private:
    bool advance();
    const std::vector<std::vector<int>>& candidates_for(int used_colors);

    int vertex_count_;
    int k_;
    EnumerationStrategy strategy_;
    bool done_ = false;
    bool started_ = false;
    std::uint64_t emitted_ = 0;
    struct Level {
        int used_before;    // palette size before this vertex's list
        std::size_t index;  // position in the candidate table
    };
    std::vector<Level> stack_;
    std::map<int, std::vector<std::vector<int>>> candidate_cache_;
};

inline AssignmentEnumerator enumerate_assignments(
    const Graph& g, int k, EnumerationStrategy strategy = EnumerationStrategy::RestrictedGrowth) {
    return AssignmentEnumerator(g.vertex_count(), k, strategy);
}

}  // namespace propcolor

#endif
