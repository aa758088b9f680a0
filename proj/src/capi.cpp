#include "propcolor/propcolor_c.h"

#include <chrono>
#include <cstring>
#include <string>

#include "json.hpp"
#include "propcolor/certificate.hpp"
#include "propcolor/choosability.hpp"
#include "propcolor/graph.hpp"
#include "propcolor/io.hpp"
#include "propcolor/suite.hpp"

using namespace propcolor;

struct pc_graph {
    Graph graph;
};

namespace {

void set_error(char* errbuf, size_t errbuf_len, const std::string& message) {
    if (!errbuf || errbuf_len == 0) return;
    std::strncpy(errbuf, message.c_str(), errbuf_len - 1);
    errbuf[errbuf_len - 1] = '\0';
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

DecideOptions make_options(int64_t budget, int threads) {
    DecideOptions options;
    if (budget >= 0) options.budget = static_cast<std::uint64_t>(budget);
    options.threads = threads > 0 ? threads : 1;
    return options;
}

pc_decision decision_of(DecisionStatus status) {
    switch (status) {
        case DecisionStatus::Choosable: return PC_DECISION_CHOOSABLE;
        case DecisionStatus::NotChoosable: return PC_DECISION_NOT_CHOOSABLE;
        case DecisionStatus::Unknown: return PC_DECISION_UNKNOWN;
    }
    return PC_DECISION_UNKNOWN;
}

}  // namespace

extern "C" {

const char* pc_version(void) { return kToolVersion; }

void pc_string_free(char* s) { delete[] s; }

void pc_graph_free(pc_graph* g) { delete g; }

pc_status pc_graph_parse(const char* text, pc_graph** out, char* errbuf, size_t errbuf_len) {
    if (!text || !out) {
        set_error(errbuf, errbuf_len, "null argument");
        return PC_ERR_INVALID_ARGUMENT;
    }
    try {
        *out = new pc_graph{parse_graph(text)};
        return PC_OK;
    } catch (const ParseError& e) {
        set_error(errbuf, errbuf_len, e.what());
        return PC_ERR_PARSE;
    } catch (const std::exception& e) {
        set_error(errbuf, errbuf_len, e.what());
        return PC_ERR_INTERNAL;
    }
}

pc_status pc_graph_family(const char* family, const int* params, int n_params, pc_graph** out,
                          char* errbuf, size_t errbuf_len) {
    if (!family || !out || (n_params > 0 && !params)) {
        set_error(errbuf, errbuf_len, "null argument");
        return PC_ERR_INVALID_ARGUMENT;
    }
    try {
        const std::string name = family;
        auto need = [&](int count) {
            if (n_params != count) {
                throw std::invalid_argument("family '" + name + "' expects " +
                                            std::to_string(count) + " parameter(s)");
            }
        };
        Graph g = Graph::path(1);
        if (name == "path") {
            need(1);
            g = Graph::path(params[0]);
        } else if (name == "cycle") {
            need(1);
            g = Graph::cycle(params[0]);
        } else if (name == "star") {
            need(1);
            g = Graph::star(params[0]);
        } else if (name == "complete") {
            need(1);
            g = Graph::complete(params[0]);
        } else if (name == "kmm") {
            need(1);
            g = Graph::complete_bipartite(params[0], params[0]);
        } else if (name == "wang-lih") {
            need(1);
            g = wang_lih_tree(params[0]);
        } else if (name == "linear-forest") {
            if (n_params < 1) throw std::invalid_argument("linear-forest expects component orders");
            g = Graph::linear_forest(std::vector<int>(params, params + n_params));
        } else {
            throw std::invalid_argument("unknown family: " + name);
        }
        *out = new pc_graph{std::move(g)};
        return PC_OK;
    } catch (const std::exception& e) {
        set_error(errbuf, errbuf_len, e.what());
        return PC_ERR_INVALID_ARGUMENT;
    }
}

int pc_graph_vertex_count(const pc_graph* g) { return g ? g->graph.vertex_count() : -1; }

int pc_graph_edge_count(const pc_graph* g) { return g ? g->graph.edge_count() : -1; }

pc_status pc_graph_format(const pc_graph* g, char** out_text) {
    if (!g || !out_text) return PC_ERR_INVALID_ARGUMENT;
    *out_text = copy_string(format_graph(g->graph));
    return PC_OK;
}

pc_status pc_decide(const pc_graph* g, int k, const char* mode, int64_t budget, int threads,
                    pc_decision* out_decision, char** out_json, char** out_cert_json,
                    char* errbuf, size_t errbuf_len) {
    if (!g || !mode || !out_decision) {
        set_error(errbuf, errbuf_len, "null argument");
        return PC_ERR_INVALID_ARGUMENT;
    }
    try {
        ColoringMode coloring_mode = mode_from_name(mode);
        Verdict verdict = decide(g->graph, k, coloring_mode, make_options(budget, threads));
        *out_decision = decision_of(verdict.status);
        if (out_json) *out_json = copy_string(serialize_verdict(verdict, g->graph, k, coloring_mode));
        if (out_cert_json) {
            *out_cert_json = nullptr;
            if (verdict.status == DecisionStatus::NotChoosable) {
                Certificate certificate = make_certificate(verdict, g->graph, k, coloring_mode);
                *out_cert_json = copy_string(serialize_certificate(certificate));
            }
        }
        return PC_OK;
    } catch (const std::invalid_argument& e) {
        set_error(errbuf, errbuf_len, e.what());
        return PC_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(errbuf, errbuf_len, e.what());
        return PC_ERR_INTERNAL;
    }
}

pc_status pc_chi_pc(const pc_graph* g, int k_max, int64_t budget, int threads,
                    pc_decision* out_decision, char** out_json, char* errbuf, size_t errbuf_len) {
    if (!g || !out_decision) {
        set_error(errbuf, errbuf_len, "null argument");
        return PC_ERR_INVALID_ARGUMENT;
    }
    try {
        std::optional<int> cap;
        if (k_max >= 0) cap = k_max;
        ChiPcReport report = chi_pc(g->graph, cap, make_options(budget, threads));
        *out_decision = report.exact ? PC_DECISION_CHOOSABLE : PC_DECISION_UNKNOWN;
        if (out_json) *out_json = copy_string(serialize_chi_pc(report, g->graph));
        return PC_OK;
    } catch (const std::exception& e) {
        set_error(errbuf, errbuf_len, e.what());
        return PC_ERR_INTERNAL;
    }
}

pc_status pc_suite_run(int nmax, int64_t budget, int threads, pc_decision* out_decision,
                       char** out_json, char** out_text, char* errbuf, size_t errbuf_len) {
    if (!out_decision) {
        set_error(errbuf, errbuf_len, "null argument");
        return PC_ERR_INVALID_ARGUMENT;
    }
    try {
        SuiteOptions options;
        if (nmax > 0) options.characterization_nmax = nmax;
        if (budget >= 0) options.budget = static_cast<std::uint64_t>(budget);
        options.threads = threads > 0 ? threads : 1;
        SuiteReport report = run_suite(options);
        *out_decision = report.any_refuted()   ? PC_DECISION_NOT_CHOOSABLE
                        : report.any_skipped() ? PC_DECISION_UNKNOWN
                                               : PC_DECISION_CHOOSABLE;
        if (out_json) *out_json = copy_string(serialize_suite(report));
        if (out_text) *out_text = copy_string(suite_text(report));
        return PC_OK;
    } catch (const std::exception& e) {
        set_error(errbuf, errbuf_len, e.what());
        return PC_ERR_INTERNAL;
    }
}

pc_status pc_cert_verify(const char* cert_json, int* out_valid, char* errbuf, size_t errbuf_len) {
    if (!cert_json || !out_valid) {
        set_error(errbuf, errbuf_len, "null argument");
        return PC_ERR_INVALID_ARGUMENT;
    }
    try {
        Certificate certificate = parse_certificate(cert_json);
        *out_valid = verify_certificate(certificate) ? 1 : 0;
        return PC_OK;
    } catch (const ParseError& e) {
        set_error(errbuf, errbuf_len, e.what());
        return PC_ERR_PARSE;
    } catch (const std::exception& e) {
        set_error(errbuf, errbuf_len, e.what());
        return PC_ERR_INTERNAL;
    }
}

pc_status pc_bench(const pc_graph* g, int k, const char* mode, int64_t budget, int threads,
                   const char* strategy, int vary_pruning, int* out_agree, char** out_json,
                   char* errbuf, size_t errbuf_len) {
    if (!g || !mode || !out_agree) {
        set_error(errbuf, errbuf_len, "null argument");
        return PC_ERR_INVALID_ARGUMENT;
    }
    try {
        ColoringMode coloring_mode = mode_from_name(mode);

        struct Config {
            const char* strategy_name;
            EnumerationStrategy strategy;
            bool pruning;
        };
        std::vector<Config> configs;
        auto want = [&](const char* name) {
            return !strategy || std::strcmp(strategy, name) == 0;
        };
        for (bool pruning : vary_pruning ? std::vector<bool>{true, false}
                                         : std::vector<bool>{true}) {
            if (want("restricted-growth")) {
                configs.push_back({"restricted-growth", EnumerationStrategy::RestrictedGrowth,
                                   pruning});
            }
            if (want("canonical-filter")) {
                configs.push_back({"canonical-filter", EnumerationStrategy::CanonicalFilter,
                                   pruning});
            }
        }
        if (configs.empty()) {
            set_error(errbuf, errbuf_len, std::string("unknown strategy: ") + strategy);
            return PC_ERR_INVALID_ARGUMENT;
        }

        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        std::optional<Verdict> reference;
        bool agree = true;
        for (const Config& config : configs) {
            DecideOptions options = make_options(budget, threads);
            options.strategy = config.strategy;
            if (!config.pruning) {
                options.solver = SolverOptions{false, false, false};
            }
            SolverStats stats;
            options.stats = &stats;
            auto start = std::chrono::steady_clock::now();
            Verdict verdict = decide(g->graph, k, coloring_mode, options);
            std::chrono::duration<double, std::milli> elapsed =
                std::chrono::steady_clock::now() - start;

            nlohmann::ordered_json row{{"strategy", config.strategy_name},
                                       {"pruning", config.pruning},
                                       {"status", status_name(verdict.status)},
                                       {"assignments_checked", verdict.assignments_checked},
                                       {"solver_nodes", stats.nodes},
                                       {"wall_ms", elapsed.count()}};
            if (verdict.witness) row["witness_lists"] = verdict.witness->lists();
            rows.push_back(std::move(row));

            if (!reference) {
                reference = std::move(verdict);
            } else if (reference->status != verdict.status ||
                       reference->witness != verdict.witness) {
                agree = false;
            }
        }
        *out_agree = agree ? 1 : 0;
        nlohmann::ordered_json doc{{"schema_version", kSchemaVersion},
                                   {"type", "bench"},
                                   {"mode", mode_name(coloring_mode)},
                                   {"k", k},
                                   {"verdicts_agree", agree},
                                   {"configurations", rows}};
        if (out_json) *out_json = copy_string(doc.dump(2) + "\n");
        return PC_OK;
    } catch (const std::invalid_argument& e) {
        set_error(errbuf, errbuf_len, e.what());
        return PC_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(errbuf, errbuf_len, e.what());
        return PC_ERR_INTERNAL;
    }
}

}  // extern "C"
