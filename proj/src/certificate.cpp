#include "propcolor/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace propcolor {

std::string claim_for_mode(ColoringMode mode) {
    switch (mode) {
        case ColoringMode::Proportional: return "not_prop_choosable";
        case ColoringMode::EquitableList: return "not_equit_choosable";
        case ColoringMode::Proper: return "not_choosable";
    }
    throw std::invalid_argument("unknown mode");
}

Certificate make_certificate(const Verdict& verdict, const Graph& g, int k, ColoringMode mode) {
    if (verdict.status != DecisionStatus::NotChoosable || !verdict.witness) {
        throw std::invalid_argument("certificates exist only for refuted claims");
    }
    Certificate certificate;
    certificate.claim = claim_for_mode(mode);
    certificate.vertex_count = g.vertex_count();
    certificate.edges = g.edges();
    certificate.k = k;
    certificate.witness_lists = verdict.witness->lists();
    return certificate;
}

namespace {

// Deliberately self-contained: plain loops over raw fields, independent
// of the Graph/ListAssignment/solver code paths being certified.
bool well_formed(const Certificate& c) {
    if (c.schema_version != kSchemaVersion) return false;
    if (c.claim != "not_prop_choosable" && c.claim != "not_equit_choosable" &&
        c.claim != "not_choosable") {
        return false;
    }
    if (c.vertex_count < 1 || c.k < 1) return false;
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : c.edges) {
        if (u < 0 || v < 0 || u >= c.vertex_count || v >= c.vertex_count) return false;
        if (u == v) return false;  // self-loop
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) return false;  // duplicate edge
    }
    if (static_cast<int>(c.witness_lists.size()) != c.vertex_count) return false;
    for (const auto& list : c.witness_lists) {
        if (static_cast<int>(list.size()) != c.k) return false;
        std::set<int> distinct(list.begin(), list.end());
        if (static_cast<int>(distinct.size()) != c.k) return false;
        for (int color : list) {
            if (color < 1) return false;
        }
    }
    return true;
}

}  // namespace

bool verify_certificate(const Certificate& c) {
    if (!well_formed(c)) return false;

    const int n = c.vertex_count;
    std::map<int, int> eta;
    for (const auto& list : c.witness_lists) {
        for (int color : list) ++eta[color];
    }
    const int cap = (n + c.k - 1) / c.k;

    // Odometer over all k^n list-respecting maps.
    std::vector<int> pick(n, 0);
    while (true) {
        bool proper = true;
        for (auto [u, v] : c.edges) {
            if (c.witness_lists[u][pick[u]] == c.witness_lists[v][pick[v]]) {
                proper = false;
                break;
            }
        }
        if (proper) {
            std::map<int, int> used;
            for (int v = 0; v < n; ++v) ++used[c.witness_lists[v][pick[v]]];
            bool qualifies = true;
            if (c.claim == "not_equit_choosable") {
                for (auto [color, count] : used) {
                    if (count > cap) qualifies = false;
                }
            } else if (c.claim == "not_prop_choosable") {
                for (auto [color, count] : eta) {
                    int size = used.count(color) ? used.at(color) : 0;
                    if (size < count / c.k || size > (count + c.k - 1) / c.k) qualifies = false;
                }
            }
            if (qualifies) return false;  // the witness is colorable: claim refuted
        }
        int i = n - 1;
        while (i >= 0 && pick[i] == c.k - 1) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return true;
}

}  // namespace propcolor
