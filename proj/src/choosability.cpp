#include "propcolor/choosability.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace propcolor {

namespace {

// Consistency checks applied to every proportional coloring the decider
// produces: the residue counting identity, and for k = 2 the fact that
// exactly half of the odd colors land on the larger class size.
void check_proportional_invariants(const ListAssignment& L, const Coloring& f) {
    const int excessive = count_almost_excessive(L, f);
    if (L.k() == 2) {
        const auto odd = multiplicity_profile(L).odd_colors;
        if (odd.size() % 2 != 0 || excessive * 2 != static_cast<int>(odd.size())) {
            throw std::logic_error("odd-color parity invariant violated");
        }
    }
}

}  // namespace

Verdict decide(const Graph& g, int k, ColoringMode mode, const DecideOptions& options) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const auto start = std::chrono::steady_clock::now();

    AssignmentEnumerator enumerator(g.vertex_count(), k, options.strategy);
    std::mutex stream_mutex;
    std::uint64_t dispensed = 0;
    bool stream_ended = false;
    bool budget_hit = false;

    std::mutex result_mutex;
    std::uint64_t best_fail_index = UINT64_MAX;
    std::optional<ListAssignment> best_witness;

    auto worker = [&] {
        while (true) {
            std::optional<ListAssignment> assignment;
            std::uint64_t index;
            {
                std::lock_guard lock(stream_mutex);
                if (options.budget && dispensed >= *options.budget) {
                    // Peek so a budget equal to the stream length still
                    // counts as exhaustion.
                    if (!enumerator.next()) stream_ended = true;
                    else budget_hit = true;
                    return;
                }
                {
                    std::lock_guard result_lock(result_mutex);
                    // Everything before the least failure seen so far has
                    // already been dispensed; later indices cannot win.
                    if (dispensed > best_fail_index) return;
                }
                assignment = enumerator.next();
                if (!assignment) {
                    stream_ended = true;
                    return;
                }
                index = dispensed++;
            }
            SolverStats local_stats;
            auto coloring = find_coloring(g, *assignment, mode, options.solver,
                                          options.stats ? &local_stats : nullptr);
            if (options.stats) {
                std::lock_guard lock(result_mutex);
                options.stats->nodes += local_stats.nodes;
            }
            if (coloring) {
                if (mode == ColoringMode::Proportional) {
                    check_proportional_invariants(*assignment, *coloring);
                }
            } else {
                std::lock_guard lock(result_mutex);
                if (index < best_fail_index) {
                    best_fail_index = index;
                    best_witness = std::move(assignment);
                }
            }
        }
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    Verdict verdict;
    verdict.elapsed = std::chrono::steady_clock::now() - start;
    if (best_fail_index != UINT64_MAX) {
        verdict.status = DecisionStatus::NotChoosable;
        verdict.witness = std::move(best_witness);
        verdict.assignments_checked = best_fail_index + 1;
        verdict.exhausted = false;
    } else if (stream_ended && !budget_hit) {
        verdict.status = DecisionStatus::Choosable;
        verdict.assignments_checked = dispensed;
        verdict.exhausted = true;
    } else {
        verdict.status = DecisionStatus::Unknown;
        verdict.assignments_checked = dispensed;
        verdict.exhausted = false;
    }
    return verdict;
}

ChiPcReport chi_pc(const Graph& g, std::optional<int> k_max, const DecideOptions& options) {
    ChiPcReport report;
    const int n = g.vertex_count();
    const int default_cap = g.is_complete() ? n : n - 1;
    report.k_max = std::max(1, k_max.value_or(default_cap));

    const int degree_bound = (g.max_degree() + 3) / 2;  // chi_pc > (Delta+1)/2
    report.lower_bound = std::max(1, degree_bound);
    report.lower_bound_reason = "degree-bound";

    for (int k = 1; k <= report.k_max; ++k) {
        Verdict verdict = decide(g, k, ColoringMode::Proportional, options);
        if (verdict.status == DecisionStatus::NotChoosable && k + 1 > report.lower_bound) {
            report.lower_bound = k + 1;
            report.lower_bound_reason = "explicit-witness";
        }
        bool stop = verdict.status != DecisionStatus::NotChoosable;
        if (verdict.status == DecisionStatus::Choosable) {
            report.exact = k;
            report.exact_reason = "decider-exhausted";
        }
        report.per_k.emplace(k, std::move(verdict));
        if (stop) break;  // Unknown also stops: larger k would not be conclusive
    }
    report.exceeded_cap = !report.exact && !report.per_k.empty() &&
                          report.per_k.rbegin()->second.status == DecisionStatus::NotChoosable &&
                          report.per_k.rbegin()->first == report.k_max;
    return report;
}

}  // namespace propcolor
