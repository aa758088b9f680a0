#include "doctest.h"
#include "propcolor/assignment.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using namespace propcolor;

namespace {

std::vector<ListAssignment> collect(AssignmentEnumerator enumerator) {
    std::vector<ListAssignment> all;
    while (auto a = enumerator.next()) all.push_back(std::move(*a));
    return all;
}

// Brute-force orbit oracle: all raw k-assignments on n vertices over a
// palette of n*k colors, one set of lexicographically-least orbit
// representatives.  Independent of the enumerator.
std::set<std::vector<std::vector<int>>> orbit_representatives(int n, int k) {
    const int palette = n * k;
    std::vector<std::vector<int>> all_lists;
    std::vector<int> subset(k);
    auto gen_subsets = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            all_lists.push_back(subset);
            return;
        }
        for (int c = start; c <= palette; ++c) {
            subset[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    gen_subsets(gen_subsets, 1, 0);

    std::set<std::vector<std::vector<int>>> reps;
    std::vector<int> pick(n, 0);
    while (true) {
        std::vector<std::vector<int>> lists;
        for (int v = 0; v < n; ++v) lists.push_back(all_lists[pick[v]]);
        reps.insert(canonical_form(ListAssignment(k, lists)).lists());
        int i = n - 1;
        while (i >= 0 && pick[i] + 1 == static_cast<int>(all_lists.size())) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return reps;
}

}  // namespace

TEST_CASE("list assignment validation") {
    CHECK_THROWS_AS(ListAssignment(2, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(ListAssignment(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ListAssignment(2, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ListAssignment(0, {}), std::invalid_argument);
    ListAssignment a(2, {{5, 2}});
    CHECK(a.list(0) == std::vector<int>{2, 5});  // stored sorted
}

TEST_CASE("multiplicity_profile") {
    ListAssignment p3(2, {{1, 2}, {1, 2}, {1, 2}});
    MultiplicityProfile profile = multiplicity_profile(p3);
    CHECK(profile.eta.at(1) == 3);
    CHECK(profile.eta.at(2) == 3);
    CHECK(profile.residues.at(1) == 1);
    CHECK(profile.residues.at(2) == 1);
    CHECK(profile.odd_colors == std::vector<int>{1, 2});

    ListAssignment single(2, {{7, 9}});
    profile = multiplicity_profile(single);
    CHECK(profile.eta.at(7) == 1);
    CHECK(profile.eta.at(9) == 1);

    ListAssignment c4(2, {{1, 2}, {2, 3}, {1, 2}, {2, 3}});
    profile = multiplicity_profile(c4);
    CHECK(profile.eta.at(1) == 2);
    CHECK(profile.eta.at(2) == 4);
    CHECK(profile.eta.at(3) == 2);
    CHECK(profile.odd_colors.empty());
}

TEST_CASE("enumeration on tiny vertex counts") {
    auto one = collect(AssignmentEnumerator(1, 2));
    REQUIRE(one.size() == 1);
    CHECK(one[0].lists() == std::vector<std::vector<int>>{{1, 2}});

    auto two = collect(AssignmentEnumerator(2, 2));
    CHECK(two.size() == 4);  // restricted growth may repeat orbits
    std::set<std::vector<std::vector<int>>> orbits;
    for (const auto& a : two) orbits.insert(canonical_form(a).lists());
    CHECK(orbits.size() == 3);

    auto three = collect(AssignmentEnumerator(3, 2));
    CHECK(three.size() == 29);
    orbits.clear();
    for (const auto& a : three) orbits.insert(canonical_form(a).lists());
    CHECK(orbits.size() == 16);  // frozen from the brute-force orbit oracle
}

TEST_CASE("enumeration covers every orbit (brute-force oracle, n <= 3)") {
    for (int n = 1; n <= 3; ++n) {
        std::set<std::vector<std::vector<int>>> streamed;
        for (const auto& a : collect(AssignmentEnumerator(n, 2))) streamed.insert(a.lists());
        for (const auto& rep : orbit_representatives(n, 2)) {
            CHECK(streamed.count(rep) == 1);
        }
    }
}

TEST_CASE("enumeration emits no duplicates") {
    for (int n : {3, 4}) {
        auto all = collect(AssignmentEnumerator(n, 2));
        std::set<std::vector<std::vector<int>>> raw;
        for (const auto& a : all) raw.insert(a.lists());
        CHECK(raw.size() == all.size());
    }
    auto k3 = collect(AssignmentEnumerator(3, 3));
    std::set<std::vector<std::vector<int>>> raw;
    for (const auto& a : k3) raw.insert(a.lists());
    CHECK(raw.size() == k3.size());
}

TEST_CASE("canonical filter emits exactly one representative per orbit") {
    auto filtered = collect(AssignmentEnumerator(3, 2, EnumerationStrategy::CanonicalFilter));
    CHECK(filtered.size() == 16);
    for (const auto& a : filtered) CHECK(canonical_form(a) == a);
}

TEST_CASE("canonical_form") {
    // Swapping colors 1 and 2 turns ({2,5},{5,9}) into the pattern
    // ({1,2},{1,3}), which flattens below ({1,2},{2,3}).
    ListAssignment a(2, {{2, 5}, {5, 9}});
    CHECK(canonical_form(a).lists() == std::vector<std::vector<int>>{{1, 2}, {1, 3}});

    // On two vertices every pair of lists sharing exactly one color is in
    // the same orbit: 1 <-> 2 maps the chain onto the fan.
    ListAssignment chain(2, {{1, 2}, {2, 3}});
    ListAssignment fan(2, {{1, 2}, {1, 3}});
    CHECK(canonical_form(chain) == canonical_form(fan));
    ListAssignment swapped(2, {{2, 3}, {1, 2}});
    CHECK(canonical_form(chain) == canonical_form(swapped));

    // Vertices are labeled; only colors are permuted.  Which vertices
    // carry *equal* lists is orbit-invariant, so these two must differ.
    ListAssignment pair_front(2, {{1, 2}, {1, 2}, {3, 4}});
    ListAssignment pair_split(2, {{1, 2}, {3, 4}, {1, 2}});
    CHECK(canonical_form(pair_front).lists() != canonical_form(pair_split).lists());

    // Idempotence.
    CHECK(canonical_form(canonical_form(a)) == canonical_form(a));
}

TEST_CASE("relabel") {
    ListAssignment a(2, {{1, 2}, {1, 3}});
    CHECK(relabel(a, {}) == a);
    CHECK(relabel(a, {{1, 2}, {2, 1}}).lists() ==
          std::vector<std::vector<int>>{{1, 2}, {2, 3}});
    CHECK_THROWS_AS(relabel(a, {{1, 3}}), std::invalid_argument);  // 1 and 3 collide

    // Functoriality: relabel(relabel(L, pi), sigma) = relabel(L, sigma o pi).
    std::map<int, int> pi{{1, 4}, {2, 1}, {3, 2}};
    std::map<int, int> sigma{{4, 3}, {1, 5}, {2, 6}};
    std::map<int, int> composed;
    for (auto [from, mid] : pi) composed[from] = sigma.count(mid) ? sigma.at(mid) : mid;
    CHECK(relabel(relabel(a, pi), sigma) == relabel(a, composed));
}

TEST_CASE("canonical form is relabeling-invariant") {
    std::mt19937 rng(20180527);
    auto stream = collect(AssignmentEnumerator(4, 2));
    for (int trial = 0; trial < 50; ++trial) {
        const ListAssignment& a = stream[rng() % stream.size()];
        std::vector<int> palette = a.palette();
        std::vector<int> images(palette.size());
        std::iota(images.begin(), images.end(), 1);
        std::shuffle(images.begin(), images.end(), rng);
        std::map<int, int> pi;
        for (std::size_t i = 0; i < palette.size(); ++i) pi[palette[i]] = images[i];
        CHECK(canonical_form(relabel(a, pi)) == canonical_form(a));
    }
}

TEST_CASE("multiplicity and parity invariants over full streams") {
    for (int n : {2, 3, 4}) {
        AssignmentEnumerator enumerator(n, 2);
        while (auto a = enumerator.next()) {
            MultiplicityProfile profile = multiplicity_profile(*a);
            int total = 0;
            for (auto [color, eta] : profile.eta) {
                CHECK(eta >= 1);
                total += eta;
            }
            CHECK(total == 2 * n);
            CHECK(profile.odd_colors.size() % 2 == 0);
        }
    }
}
