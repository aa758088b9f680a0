// Command-line front end.  Talks to the engine exclusively through the
// C API in propcolor_c.h.
//
// Exit codes: 0 = claim verified / coloring exists, 1 = refuted /
// witness produced, 2 = unknown (budget), 3 = usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "propcolor/propcolor_c.h"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

struct GraphSource {
    std::string input_file;
    std::string family;
    int n = 0;
    std::vector<int> orders;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--input", input_file, "graph file (\"n m\" header then edge lines)");
        cmd->add_option("--family", family,
                        "graph family: path|cycle|star|complete|kmm|wang-lih|linear-forest");
        cmd->add_option("--n", n, "family size parameter (k for wang-lih, m for kmm)");
        cmd->add_option("--orders", orders, "component orders for linear-forest");
    }

    // Returns a graph handle or null after printing a diagnostic.
    pc_graph* build() const {
        char errbuf[256] = {0};
        pc_graph* g = nullptr;
        if (!input_file.empty()) {
            std::ifstream in(input_file);
            if (!in) {
                std::cerr << "error: cannot open " << input_file << '\n';
                return nullptr;
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            if (pc_graph_parse(buffer.str().c_str(), &g, errbuf, sizeof errbuf) != PC_OK) {
                std::cerr << "error: " << errbuf << '\n';
                return nullptr;
            }
            return g;
        }
        if (family.empty()) {
            std::cerr << "error: provide --input or --family\n";
            return nullptr;
        }
        std::vector<int> params;
        if (family == "linear-forest") params = orders;
        else params.push_back(n);
        if (pc_graph_family(family.c_str(), params.data(), static_cast<int>(params.size()), &g,
                            errbuf, sizeof errbuf) != PC_OK) {
            std::cerr << "error: " << errbuf << '\n';
            return nullptr;
        }
        return g;
    }
};

bool write_file(const std::string& path, const char* content) {
    std::ofstream out(path);
    if (!out) return false;
    out << content;
    return out.good();
}

int exit_code_for(pc_decision decision) {
    switch (decision) {
        case PC_DECISION_CHOOSABLE: return kExitVerified;
        case PC_DECISION_NOT_CHOOSABLE: return kExitRefuted;
        case PC_DECISION_UNKNOWN: return kExitUnknown;
    }
    return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"proportional / equitable / classical list-coloring verification engine"};
    app.require_subcommand(1);
    app.set_version_flag("--version", pc_version());

    // decide
    auto* decide_cmd = app.add_subcommand("decide", "decide a choosability claim");
    GraphSource decide_src;
    decide_src.add_flags(decide_cmd);
    int k = 2;
    std::string mode = "proportional";
    std::int64_t budget = -1;
    int threads = 1;
    bool json = false;
    std::string cert_file;
    decide_cmd->add_option("--k", k, "list size")->required();
    decide_cmd->add_option("--mode", mode, "list|equitable-list|proportional");
    decide_cmd->add_option("--budget", budget, "max assignments to scan (-1 = unbounded)");
    decide_cmd->add_option("--threads", threads, "worker count");
    decide_cmd->add_flag("--json", json, "structured output on stdout");
    decide_cmd->add_option("--cert", cert_file, "write a certificate here when refuted");

    // chi-pc
    auto* chipc_cmd = app.add_subcommand("chi-pc", "compute the proportional choice number");
    GraphSource chipc_src;
    chipc_src.add_flags(chipc_cmd);
    int kmax = -1;
    chipc_cmd->add_option("--kmax", kmax, "cap on k (-1 = default |V|-1 / |V|)");
    chipc_cmd->add_option("--budget", budget, "max assignments per k (-1 = unbounded)");
    chipc_cmd->add_option("--threads", threads, "worker count");
    chipc_cmd->add_flag("--json", json, "structured output on stdout");

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "run the full claim suite");
    int nmax = 7;
    suite_cmd->add_option("--nmax", nmax, "linear-forest sweep size");
    suite_cmd->add_option("--budget", budget, "per-decision assignment budget (-1 = unbounded)");
    suite_cmd->add_option("--threads", threads, "worker count");
    suite_cmd->add_flag("--json", json, "structured output on stdout");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "emit a generated graph in the text format");
    GraphSource gen_src;
    gen_src.add_flags(gen_cmd);

    // cert-verify
    auto* cert_cmd = app.add_subcommand("cert-verify", "independently re-check a certificate");
    std::string cert_path;
    cert_cmd->add_option("certificate", cert_path, "certificate JSON file")->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "differential strategy/pruning benchmark");
    GraphSource bench_src;
    bench_src.add_flags(bench_cmd);
    std::string strategy;
    bool vary_pruning = false;
    bench_cmd->add_option("--k", k, "list size")->required();
    bench_cmd->add_option("--mode", mode, "list|equitable-list|proportional");
    bench_cmd->add_option("--strategy", strategy,
                          "restricted-growth|canonical-filter (default: both)");
    bench_cmd->add_flag("--vary-pruning", vary_pruning, "also run with pruning disabled");
    bench_cmd->add_option("--budget", budget, "max assignments to scan (-1 = unbounded)");
    bench_cmd->add_option("--threads", threads, "worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) std::cerr << e.what() << '\n';
        else std::cout << app.help();
        return e.get_exit_code() == 0 ? kExitVerified : kExitUsage;
    }

    char errbuf[256] = {0};

    if (decide_cmd->parsed()) {
        pc_graph* g = decide_src.build();
        if (!g) return kExitUsage;
        pc_decision decision;
        char* out_json = nullptr;
        char* out_cert = nullptr;
        pc_status status = pc_decide(g, k, mode.c_str(), budget, threads, &decision, &out_json,
                                     &out_cert, errbuf, sizeof errbuf);
        pc_graph_free(g);
        if (status != PC_OK) {
            std::cerr << "error: " << errbuf << '\n';
            return kExitUsage;
        }
        std::cout << out_json;
        if (out_cert && !cert_file.empty() && !write_file(cert_file, out_cert)) {
            std::cerr << "error: cannot write " << cert_file << '\n';
        }
        pc_string_free(out_json);
        pc_string_free(out_cert);
        return exit_code_for(decision);
    }

    if (chipc_cmd->parsed()) {
        pc_graph* g = chipc_src.build();
        if (!g) return kExitUsage;
        pc_decision decision;
        char* out_json = nullptr;
        pc_status status =
            pc_chi_pc(g, kmax, budget, threads, &decision, &out_json, errbuf, sizeof errbuf);
        pc_graph_free(g);
        if (status != PC_OK) {
            std::cerr << "error: " << errbuf << '\n';
            return kExitUsage;
        }
        std::cout << out_json;
        pc_string_free(out_json);
        return exit_code_for(decision);
    }

    if (suite_cmd->parsed()) {
        pc_decision decision;
        char* out_json = nullptr;
        char* out_text = nullptr;
        pc_status status = pc_suite_run(nmax, budget, threads, &decision, &out_json, &out_text,
                                        errbuf, sizeof errbuf);
        if (status != PC_OK) {
            std::cerr << "error: " << errbuf << '\n';
            return kExitUsage;
        }
        std::cout << (json ? out_json : out_text);
        pc_string_free(out_json);
        pc_string_free(out_text);
        return exit_code_for(decision);
    }

    if (gen_cmd->parsed()) {
        pc_graph* g = gen_src.build();
        if (!g) return kExitUsage;
        char* text = nullptr;
        pc_graph_format(g, &text);
        std::cout << text;
        pc_string_free(text);
        pc_graph_free(g);
        return kExitVerified;
    }

    if (cert_cmd->parsed()) {
        std::ifstream in(cert_path);
        if (!in) {
            std::cerr << "error: cannot open " << cert_path << '\n';
            return kExitUsage;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        int valid = 0;
        pc_status status = pc_cert_verify(buffer.str().c_str(), &valid, errbuf, sizeof errbuf);
        if (status != PC_OK) {
            std::cerr << "error: " << errbuf << '\n';
            return kExitUsage;
        }
        std::cout << (valid ? "certificate accepted\n" : "certificate rejected\n");
        return valid ? kExitVerified : kExitRefuted;
    }

    if (bench_cmd->parsed()) {
        pc_graph* g = bench_src.build();
        if (!g) return kExitUsage;
        int agree = 0;
        char* out_json = nullptr;
        pc_status status =
            pc_bench(g, k, mode.c_str(), budget, threads, strategy.empty() ? nullptr : strategy.c_str(),
                     vary_pruning ? 1 : 0, &agree, &out_json, errbuf, sizeof errbuf);
        pc_graph_free(g);
        if (status != PC_OK) {
            std::cerr << "error: " << errbuf << '\n';
            return kExitUsage;
        }
        std::cout << out_json;
        pc_string_free(out_json);
        if (!agree) std::cerr << "error: configurations disagree\n";
        return agree ? kExitVerified : kExitRefuted;
    }

    return kExitUsage;
}
