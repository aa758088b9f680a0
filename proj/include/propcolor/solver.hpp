#ifndef PROPCOLOR_SOLVER_HPP
#define PROPCOLOR_SOLVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "propcolor/assignment.hpp"
#include "propcolor/graph.hpp"

namespace propcolor {

/// Total vertex -> color map.
struct Coloring {
    std::vector<int> color_of;

    std::map<int, int> class_sizes() const;
    bool operator==(const Coloring& other) const = default;
};

enum class ColoringMode {
    Proper,         // proper L-coloring, no class-size constraints
    EquitableList,  // every color used at most ceil(|V|/k) times
    Proportional,   // every palette color used floor(eta/k) or ceil(eta/k) times
};

enum class ColorUse {
    WellDistributedPerfect,  // k | eta(c) and used exactly eta(c)/k times
    AlmostExcessive,         // k does not divide eta(c), used ceil(eta(c)/k) times
    AlmostDeficient,         // k does not divide eta(c), used floor(eta(c)/k) times
    Violating,
};

bool is_proper_l_coloring(const Graph& g, const ListAssignment& L, const Coloring& f);
bool is_equitable_l_coloring(const Graph& g, const ListAssignment& L, const Coloring& f);
bool is_proportional_l_coloring(const Graph& g, const ListAssignment& L, const Coloring& f);

/// Per-palette-color usage tags.  Requires f to be a proper L-coloring.
/// f is proportional iff no color is tagged Violating.
std::map<int, ColorUse> classify_colors(const ListAssignment& L, const Coloring& f);

/// Number of almost excessive colors of a proportional L-coloring.
/// Cross-checked against (1/k) * sum of residues eta(l) mod k; a mismatch
/// is an internal-consistency fault and throws std::logic_error.
int count_almost_excessive(const ListAssignment& L, const Coloring& f);

/// Sound pruning toggles for the complete search; disabling them only
/// slows the search down, verdicts are unchanged.
struct SolverOptions {
    bool prune_class_cap = true;      // stop when a color hits its upper budget
    bool prune_color_support = true;  // stop when a color can no longer meet its lower budget
    bool prune_total_demand = true;   // stop when remaining vertices cannot fill all lower budgets
};

struct SolverStats {
    std::uint64_t nodes = 0;
};

/// Complete depth-first search for an L-coloring of the requested mode.
/// Vertices are processed in descending-degree order (ties by index) and
/// colors in ascending order, so the first coloring found is
/// deterministic.  Returns nullopt exactly when no such coloring exists.
std::optional<Coloring> find_coloring(const Graph& g, const ListAssignment& L, ColoringMode mode,
                                      const SolverOptions& options = {},
                                      SolverStats* stats = nullptr);

/// Complete search for a proper k-coloring with every class size in
/// {floor(|V|/k), ceil(|V|/k)}.  Colors are interchangeable, so the
/// search only admits colorings where class j+1 first appears (in vertex
/// index order) after class j; in particular vertex 0 gets class 1.
std::optional<Coloring> find_equitable_k_coloring(const Graph& g, int k);

}  // namespace propcolor

#endif
