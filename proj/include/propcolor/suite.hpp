#ifndef PROPCOLOR_SUITE_HPP
#define PROPCOLOR_SUITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "propcolor/certificate.hpp"
#include "propcolor/choosability.hpp"

namespace propcolor {

struct ClaimRecord {
    std::string id;
    std::string anchor;      // where the claim lives in the literature
    std::string params;
    std::string status;      // verified | refuted | skipped-budget
    std::string evidence;    // witness summary or exhaustion stats
    std::optional<Certificate> certificate;
    bool informational = false;  // computed but not claimed anywhere
};

struct SuiteReport {
    std::vector<ClaimRecord> claims;

    bool all_verified() const;
    bool any_refuted() const;
    bool any_skipped() const;
};

struct SuiteOptions {
    int characterization_nmax = 7;
    int star_kmax = 3;
    int disjoint_stars_kmax = 2;  // 3 enables the long-running 12-vertex case
    int orderplus1_nmax = 4;
    int wang_lih_kmax = 4;
    int threads = 1;
    std::optional<std::uint64_t> budget;
};

// Individual claim checks; each appends to the report.  Claim ids are
// stable and the report is assembled in a fixed order, so two runs with
// equal settings serialize identically.
void check_characterization(SuiteReport& report, int n_max, const SuiteOptions& options);
void check_star(SuiteReport& report, int k, const SuiteOptions& options);
void check_degree_corollary(SuiteReport& report, const SuiteOptions& options);
void check_disjoint_stars(SuiteReport& report, int k, const SuiteOptions& options);
void check_kmm(SuiteReport& report, int m, const SuiteOptions& options);
void check_orderplus1(SuiteReport& report, int n_max, const SuiteOptions& options);
void check_wang_lih(SuiteReport& report, int k, const SuiteOptions& options);
void check_prop1_implications(SuiteReport& report, const SuiteOptions& options);

SuiteReport run_suite(const SuiteOptions& options = {});

/// All component-order multisets (partitions) with total exactly n,
/// parts descending, in deterministic order.
std::vector<std::vector<int>> partitions_of(int n);

/// The exact 2-assignment from the equitable-choosability counterexample:
/// {1,2} on v and its leaves, {1,3} on u, {2,3} on leaves of u, {2,3} on
/// w, {1,3} on leaves of w.  Matches the wang_lih_tree labeling.
ListAssignment wang_lih_assignment(int k);

}  // namespace propcolor

#endif
