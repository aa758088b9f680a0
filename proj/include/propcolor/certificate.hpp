#ifndef PROPCOLOR_CERTIFICATE_HPP
#define PROPCOLOR_CERTIFICATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "propcolor/choosability.hpp"

namespace propcolor {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "propcolor 1.0.0";
inline constexpr const char* kEnumerationOrderTag = "restricted-growth-v1";

/// Serializable witness of a refuted choosability claim.  Fields are kept
/// raw (plain integers, no invariant-enforcing types) so that a
/// certificate read from disk can carry arbitrary garbage and still be
/// *checked* rather than trusted.
struct Certificate {
    std::string schema_version = kSchemaVersion;
    std::string claim;  // not_prop_choosable | not_equit_choosable | not_choosable
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    std::vector<std::vector<int>> witness_lists;
    std::string tool_version = kToolVersion;
    std::string enumeration_order = kEnumerationOrderTag;

    bool operator==(const Certificate&) const = default;
};

std::string claim_for_mode(ColoringMode mode);

/// Packages a NotChoosable verdict.  Requires verdict.witness.
Certificate make_certificate(const Verdict& verdict, const Graph& g, int k, ColoringMode mode);

/// Re-checks a certificate from scratch: well-formedness (simple graph,
/// proper k-assignment shape, known claim kind) plus emptiness of the
/// claimed coloring space, established by brute force over all
/// list-respecting maps.  Shares no code with the backtracking solver or
/// the assignment enumerator.  Returns false on any defect, never throws.
bool verify_certificate(const Certificate& certificate);

}  // namespace propcolor

#endif
