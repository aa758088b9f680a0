#include "propcolor/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace propcolor {

std::map<int, int> Coloring::class_sizes() const {
    std::map<int, int> sizes;
    for (int c : color_of) ++sizes[c];
    return sizes;
}

namespace {

void require_total(const Graph& g, const ListAssignment& L, const Coloring& f) {
    if (L.vertex_count() != g.vertex_count() ||
        static_cast<int>(f.color_of.size()) != g.vertex_count()) {
        throw std::invalid_argument("assignment/coloring size mismatch");
    }
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

bool is_proper_l_coloring(const Graph& g, const ListAssignment& L, const Coloring& f) {
    require_total(g, L, f);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& list = L.list(v);
        if (!std::binary_search(list.begin(), list.end(), f.color_of[v])) return false;
    }
    for (auto [u, v] : g.edges()) {
        if (f.color_of[u] == f.color_of[v]) return false;
    }
    return true;
}

bool is_equitable_l_coloring(const Graph& g, const ListAssignment& L, const Coloring& f) {
    if (!is_proper_l_coloring(g, L, f)) return false;
    const int cap = ceil_div(g.vertex_count(), L.k());
    for (auto [color, size] : f.class_sizes()) {
        if (size > cap) return false;
    }
    return true;
}

bool is_proportional_l_coloring(const Graph& g, const ListAssignment& L, const Coloring& f) {
    if (!is_proper_l_coloring(g, L, f)) return false;
    MultiplicityProfile profile = multiplicity_profile(L);
    std::map<int, int> sizes = f.class_sizes();
    // The lower bound binds every palette color, including colors f
    // never uses.
    for (auto [color, eta] : profile.eta) {
        int size = sizes.count(color) ? sizes.at(color) : 0;
        if (size < eta / L.k() || size > ceil_div(eta, L.k())) return false;
    }
    return true;
}

std::map<int, ColorUse> classify_colors(const ListAssignment& L, const Coloring& f) {
    MultiplicityProfile profile = multiplicity_profile(L);
    std::map<int, int> sizes = f.class_sizes();
    const int k = L.k();
    std::map<int, ColorUse> tags;
    for (auto [color, eta] : profile.eta) {
        int size = sizes.count(color) ? sizes.at(color) : 0;
        if (eta % k == 0) {
            tags[color] = (size == eta / k) ? ColorUse::WellDistributedPerfect : ColorUse::Violating;
        } else if (size == ceil_div(eta, k)) {
            tags[color] = ColorUse::AlmostExcessive;
        } else if (size == eta / k) {
            tags[color] = ColorUse::AlmostDeficient;
        } else {
            tags[color] = ColorUse::Violating;
        }
    }
    return tags;
}

int count_almost_excessive(const ListAssignment& L, const Coloring& f) {
    int count = 0;
    for (auto [color, tag] : classify_colors(L, f)) {
        if (tag == ColorUse::Violating) {
            throw std::invalid_argument("count_almost_excessive requires a proportional coloring");
        }
        if (tag == ColorUse::AlmostExcessive) ++count;
    }
    MultiplicityProfile profile = multiplicity_profile(L);
    int residue_sum = 0;
    for (auto [color, r] : profile.residues) residue_sum += r;
    if (count * L.k() != residue_sum) {
        throw std::logic_error("almost-excessive counting identity violated");
    }
    return count;
}

namespace {

struct ListSearch {
    const Graph& g;
    const ListAssignment& L;
    const SolverOptions& options;
    SolverStats* stats;

    std::vector<int> order;          // vertices, descending degree then index
    std::vector<int> palette;        // sorted palette colors
    std::vector<int> color_index;    // color -> palette slot (dense)
    std::vector<int> lower, upper;   // per palette slot
    std::vector<int> class_size;     // per palette slot
    std::vector<int> support;        // unassigned vertices whose list holds the color
    std::vector<int> color_of;       // per vertex, -1 while unassigned
    int deficit = 0;                 // sum of unmet lower budgets

    bool dfs(int depth) {
        if (stats) ++stats->nodes;
        const int n = g.vertex_count();
        if (depth == n) {
            for (std::size_t s = 0; s < palette.size(); ++s) {
                if (class_size[s] < lower[s] || class_size[s] > upper[s]) return false;
            }
            return true;
        }
        const int v = order[depth];
        const int remaining = n - depth - 1;
        for (int c : L.list(v)) {
            const int s = color_index[c];
            if (class_size[s] >= upper[s] && options.prune_class_cap) continue;
            bool conflict = false;
            for (int w : g.neighbors(v)) {
                if (color_of[w] == c) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) continue;

            color_of[v] = c;
            ++class_size[s];
            if (class_size[s] <= lower[s]) --deficit;
            for (int x : L.list(v)) --support[color_index[x]];

            bool viable = true;
            if (options.prune_color_support) {
                for (int x : L.list(v)) {
                    const int sx = color_index[x];
                    if (class_size[sx] + support[sx] < lower[sx]) {
                        viable = false;
                        break;
                    }
                }
            }
            if (viable && options.prune_total_demand && deficit > remaining) viable = false;
            if (viable && dfs(depth + 1)) return true;

            for (int x : L.list(v)) ++support[color_index[x]];
            if (class_size[s] <= lower[s]) ++deficit;
            --class_size[s];
            color_of[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Coloring> find_coloring(const Graph& g, const ListAssignment& L, ColoringMode mode,
                                      const SolverOptions& options, SolverStats* stats) {
    if (L.vertex_count() != g.vertex_count()) {
        throw std::invalid_argument("assignment does not match the graph");
    }
    const int n = g.vertex_count();
    if (n == 0) return Coloring{{}};

    ListSearch search{g, L, options, stats, {}, {}, {}, {}, {}, {}, {}, {}, 0};
    search.order.resize(n);
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&g](int a, int b) { return g.degree(a) > g.degree(b); });

    search.palette = L.palette();
    const int max_color = search.palette.back();
    search.color_index.assign(max_color + 1, -1);
    for (std::size_t s = 0; s < search.palette.size(); ++s) {
        search.color_index[search.palette[s]] = static_cast<int>(s);
    }

    MultiplicityProfile profile = multiplicity_profile(L);
    const int slots = static_cast<int>(search.palette.size());
    search.lower.assign(slots, 0);
    search.upper.assign(slots, n);
    for (int s = 0; s < slots; ++s) {
        const int c = search.palette[s];
        switch (mode) {
            case ColoringMode::Proper:
                break;
            case ColoringMode::EquitableList:
                search.upper[s] = ceil_div(n, L.k());
                break;
            case ColoringMode::Proportional:
                search.lower[s] = profile.eta.at(c) / L.k();
                search.upper[s] = ceil_div(profile.eta.at(c), L.k());
                break;
        }
        search.deficit += search.lower[s];
    }
    search.class_size.assign(slots, 0);
    search.support.assign(slots, 0);
    for (int v = 0; v < n; ++v) {
        for (int c : L.list(v)) ++search.support[search.color_index[c]];
    }
    search.color_of.assign(n, -1);

    if (!search.dfs(0)) return std::nullopt;
    return Coloring{std::move(search.color_of)};
}

std::optional<Coloring> find_equitable_k_coloring(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const int n = g.vertex_count();
    if (n == 0) return Coloring{{}};

    const int floor_size = n / k;
    const int cap = ceil_div(n, k);
    std::vector<int> color_of(n, -1);
    std::vector<int> class_size(k + 1, 0);

    // Classes are interchangeable: class j+1 may first appear only after
    // class j, and vertex 0 always opens class 1.
    auto dfs = [&](auto&& self, int v, int max_used) -> bool {
        if (v == n) {
            for (int j = 1; j <= k; ++j) {
                if (class_size[j] != floor_size && class_size[j] != cap) return false;
            }
            return true;
        }
        const int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (class_size[c] >= cap) continue;
            bool conflict = false;
            for (int w : g.neighbors(v)) {
                if (color_of[w] == c) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) continue;
            color_of[v] = c;
            ++class_size[c];
            int deficit = 0;
            for (int j = 1; j <= k; ++j) deficit += std::max(0, floor_size - class_size[j]);
            if (deficit <= n - v - 1 && self(self, v + 1, std::max(max_used, c))) return true;
            --class_size[c];
            color_of[v] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0, 0)) return std::nullopt;
    return Coloring{std::move(color_of)};
}

}  // namespace propcolor
