#ifndef PROPCOLOR_CHOOSABILITY_HPP
#define PROPCOLOR_CHOOSABILITY_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "propcolor/assignment.hpp"
#include "propcolor/graph.hpp"
#include "propcolor/solver.hpp"

namespace propcolor {

enum class DecisionStatus { Choosable, NotChoosable, Unknown };

/// Three-valued choosability result.  `witness` is present exactly for
/// NotChoosable and is the enumeration-least failing assignment, so
/// re-running a decision reproduces it byte-for-byte regardless of the
/// worker count.
struct Verdict {
    DecisionStatus status = DecisionStatus::Unknown;
    std::optional<ListAssignment> witness;
    std::uint64_t assignments_checked = 0;
    bool exhausted = false;
    std::chrono::duration<double> elapsed{0};
};

struct DecideOptions {
    std::optional<std::uint64_t> budget;  // assignments scanned, not wall clock
    int threads = 1;
    EnumerationStrategy strategy = EnumerationStrategy::RestrictedGrowth;
    SolverOptions solver;
    SolverStats* stats = nullptr;  // aggregated search-node counter, optional
};

/// Decides k-choosability in the given mode by scanning the complete
/// canonical stream of k-assignments.  Mode names follow the coloring
/// notion being universally quantified: Proper = plain list coloring.
Verdict decide(const Graph& g, int k, ColoringMode mode, const DecideOptions& options = {});

struct ChiPcReport {
    int lower_bound = 1;
    std::string lower_bound_reason;          // "degree-bound" or "explicit-witness"
    std::optional<int> exact;                // set when some k was proved choosable
    std::string exact_reason;                // "decider-exhausted"
    int k_max = 0;                           // cap actually applied
    bool exceeded_cap = false;               // every k <= k_max refuted
    std::map<int, Verdict> per_k;
};

/// Smallest k for which the graph is proportionally k-choosable, found by
/// scanning k = 1, 2, ... (monotonicity justifies stopping at the first
/// success).  Default cap is |V|-1 for non-complete graphs and |V| for
/// complete ones; above the cap the result is reported unknown, never
/// extrapolated.
ChiPcReport chi_pc(const Graph& g, std::optional<int> k_max = std::nullopt,
                   const DecideOptions& options = {});

}  // namespace propcolor

#endif
