#include "propcolor/assignment.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace propcolor {

ListAssignment::ListAssignment(int k, std::vector<std::vector<int>> lists)
    : k_(k), lists_(std::move(lists)) {
    if (k < 1) throw std::invalid_argument("list size k must be positive");
    for (auto& list : lists_) {
        if (static_cast<int>(list.size()) != k) {
            throw std::invalid_argument("every list must have exactly k colors");
        }
        std::sort(list.begin(), list.end());
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i] < 1) throw std::invalid_argument("colors must be positive integers");
            if (i > 0 && list[i] == list[i - 1]) {
                throw std::invalid_argument("repeated color in a list");
            }
        }
    }
}

std::vector<int> ListAssignment::palette() const {
    std::set<int> colors;
    for (const auto& list : lists_) colors.insert(list.begin(), list.end());
    return {colors.begin(), colors.end()};
}

bool ListAssignment::operator<(const ListAssignment& other) const {
    return lists_ < other.lists_;
}

MultiplicityProfile multiplicity_profile(const ListAssignment& assignment) {
    MultiplicityProfile profile;
    for (const auto& list : assignment.lists()) {
        for (int c : list) ++profile.eta[c];
    }
    const int k = assignment.k();
    for (auto [c, count] : profile.eta) {
        profile.residues[c] = count % k;
        if (count % 2 == 1) profile.odd_colors.push_back(c);
    }
    return profile;
}

ListAssignment relabel(const ListAssignment& assignment, const std::map<int, int>& pi) {
    std::set<int> images;
    for (int c : assignment.palette()) {
        auto it = pi.find(c);
        int image = (it == pi.end()) ? c : it->second;
        if (!images.insert(image).second) {
            throw std::invalid_argument("permutation is not injective on the palette");
        }
    }
    std::vector<std::vector<int>> lists;
    lists.reserve(assignment.vertex_count());
    for (const auto& list : assignment.lists()) {
        std::vector<int> mapped;
        mapped.reserve(list.size());
        for (int c : list) {
            auto it = pi.find(c);
            mapped.push_back(it == pi.end() ? c : it->second);
        }
        lists.push_back(std::move(mapped));
    }
    return ListAssignment(assignment.k(), std::move(lists));
}

namespace {

constexpr int kUnassigned = std::numeric_limits<int>::max();

// Flattened key of a partially relabeled assignment: per vertex, the
// mapped values of its list sorted ascending, then kUnassigned slots for
// colors not yet mapped (their final values exceed every mapped one).
std::vector<int> partial_key(const ListAssignment& assignment, const std::map<int, int>& mapping) {
    std::vector<int> key;
    key.reserve(assignment.vertex_count() * assignment.k());
    for (const auto& list : assignment.lists()) {
        std::vector<int> mapped;
        int unknown = 0;
        for (int c : list) {
            auto it = mapping.find(c);
            if (it == mapping.end()) ++unknown;
            else mapped.push_back(it->second);
        }
        std::sort(mapped.begin(), mapped.end());
        key.insert(key.end(), mapped.begin(), mapped.end());
        key.insert(key.end(), unknown, kUnassigned);
    }
    return key;
}

// True when every completion of `partial` is >= `best`, so the branch
// cannot improve on the incumbent.
bool prunable(const std::vector<int>& partial, const std::vector<int>& best) {
    for (std::size_t i = 0; i < partial.size(); ++i) {
        if (partial[i] == kUnassigned || best[i] == kUnassigned) return false;
        if (partial[i] < best[i]) return false;
        if (partial[i] > best[i]) return true;
    }
    return false;
}

struct CanonicalSearch {
    const ListAssignment& assignment;
    std::vector<int> palette;
    std::map<int, int> mapping;
    std::vector<int> best;

    void run(int next_value) {
        if (next_value > static_cast<int>(palette.size())) {
            std::vector<int> key = partial_key(assignment, mapping);
            if (best.empty() || key < best) best = std::move(key);
            return;
        }
        for (int color : palette) {
            if (mapping.count(color)) continue;
            mapping[color] = next_value;
            if (best.empty() || !prunable(partial_key(assignment, mapping), best)) {
                run(next_value + 1);
            }
            mapping.erase(color);
        }
    }
};

}  // namespace

ListAssignment canonical_form(const ListAssignment& assignment) {
    CanonicalSearch search{assignment, assignment.palette(), {}, {}};
    search.run(1);
    const int k = assignment.k();
    std::vector<std::vector<int>> lists;
    lists.reserve(assignment.vertex_count());
    for (int v = 0; v < assignment.vertex_count(); ++v) {
        lists.emplace_back(search.best.begin() + v * k, search.best.begin() + (v + 1) * k);
    }
    return ListAssignment(k, std::move(lists));
}

AssignmentEnumerator::AssignmentEnumerator(int vertex_count, int k, EnumerationStrategy strategy)
    : vertex_count_(vertex_count), k_(k), strategy_(strategy) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (k < 1) throw std::invalid_argument("list size k must be positive");
    if (vertex_count == 0) done_ = true;  // a single empty assignment is meaningless
}

const std::vector<std::vector<int>>& AssignmentEnumerator::candidates_for(int used_colors) {
    auto it = candidate_cache_.find(used_colors);
    if (it != candidate_cache_.end()) return it->second;

    // All sorted k-subsets of {1..used+k}, lex order, whose colors above
    // `used` form the consecutive run used+1, used+2, ...
    std::vector<std::vector<int>> result;
    std::vector<int> subset(k_);
    for (int i = 0; i < k_; ++i) subset[i] = i + 1;
    const int limit = used_colors + k_;
    while (true) {
        bool valid = true;
        int expected_new = used_colors + 1;
        for (int c : subset) {
            if (c > used_colors) {
                if (c != expected_new) {
                    valid = false;
                    break;
                }
                ++expected_new;
            }
        }
        if (valid) result.push_back(subset);
        int i = k_ - 1;
        while (i >= 0 && subset[i] == limit - (k_ - 1 - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k_; ++j) subset[j] = subset[j - 1] + 1;
    }
    return candidate_cache_.emplace(used_colors, std::move(result)).first->second;
}

bool AssignmentEnumerator::advance() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        stack_.clear();
        int used = 0;
        for (int v = 0; v < vertex_count_; ++v) {
            stack_.push_back({used, 0});
            used = std::max(used, candidates_for(used).front().back());
        }
        return true;
    }
    while (!stack_.empty()) {
        Level& top = stack_.back();
        const auto& cands = candidates_for(top.used_before);
        if (++top.index < cands.size()) {
            int used = std::max(top.used_before, cands[top.index].back());
            while (static_cast<int>(stack_.size()) < vertex_count_) {
                stack_.push_back({used, 0});
                used = std::max(used, candidates_for(used).front().back());
            }
            return true;
        }
        stack_.pop_back();
    }
    done_ = true;
    return false;
}

std::optional<ListAssignment> AssignmentEnumerator::next() {
    while (advance()) {
        std::vector<std::vector<int>> lists;
        lists.reserve(vertex_count_);
        for (const Level& level : stack_) {
            lists.push_back(candidates_for(level.used_before)[level.index]);
        }
        ListAssignment assignment(k_, std::move(lists));
        if (strategy_ == EnumerationStrategy::CanonicalFilter &&
            !(canonical_form(assignment) == assignment)) {
            continue;
        }
        ++emitted_;
        return assignment;
    }
    return std::nullopt;
}

}  // namespace propcolor
