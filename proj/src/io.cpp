#include "propcolor/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "propcolor/suite.hpp"

namespace propcolor {

using ordered_json = nlohmann::ordered_json;

namespace {

bool parse_int(const std::string& token, int& out) {
    if (token.empty()) return false;
    std::size_t pos = 0;
    try {
        long value = std::stol(token, &pos);
        if (pos != token.size()) return false;
        out = static_cast<int>(value);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto tokens_of = [](const std::string& s) {
        std::istringstream ts(s);
        std::vector<std::string> tokens;
        std::string t;
        while (ts >> t) tokens.push_back(t);
        return tokens;
    };

    if (!next_line()) throw ParseError(1, "empty input, expected \"n m\" header");
    auto header = tokens_of(line);
    int n = 0, m = 0;
    if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m)) {
        throw ParseError(line_no, "expected header \"n m\" with two integers");
    }
    if (n < 0 || m < 0) throw ParseError(line_no, "n and m must be nonnegative");

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError(line_no + 1, "unexpected end of input, expected an edge");
        auto tokens = tokens_of(line);
        int u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
            throw ParseError(line_no, "expected edge \"u v\" with two integers");
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError(line_no, "vertex index out of range");
        }
        if (u == v) throw ParseError(line_no, "self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw ParseError(line_no, "duplicate edge");
        edges.push_back(key);
    }
    if (next_line()) throw ParseError(line_no, "trailing content after the last edge");
    return Graph(n, std::move(edges));
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string mode_name(ColoringMode mode) {
    switch (mode) {
        case ColoringMode::Proper: return "list";
        case ColoringMode::EquitableList: return "equitable-list";
        case ColoringMode::Proportional: return "proportional";
    }
    throw std::invalid_argument("unknown mode");
}

ColoringMode mode_from_name(const std::string& name) {
    if (name == "list") return ColoringMode::Proper;
    if (name == "equitable-list" || name == "equitable_list") return ColoringMode::EquitableList;
    if (name == "proportional") return ColoringMode::Proportional;
    throw std::invalid_argument("unknown mode: " + name);
}

std::string status_name(DecisionStatus status) {
    switch (status) {
        case DecisionStatus::Choosable: return "choosable";
        case DecisionStatus::NotChoosable: return "not_choosable";
        case DecisionStatus::Unknown: return "unknown";
    }
    throw std::invalid_argument("unknown status");
}

namespace {

ordered_json graph_json(const Graph& g) {
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

ordered_json verdict_json(const Verdict& verdict, int k, ColoringMode mode) {
    ordered_json doc{{"status", status_name(verdict.status)},
                     {"mode", mode_name(mode)},
                     {"k", k},
                     {"assignments_checked", verdict.assignments_checked},
                     {"exhausted", verdict.exhausted}};
    if (verdict.witness) doc["witness"] = {{"k", k}, {"lists", verdict.witness->lists()}};
    return doc;
}

ordered_json certificate_json(const Certificate& c) {
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : c.edges) edges.push_back({u, v});
    return {{"schema_version", c.schema_version},
            {"type", "certificate"},
            {"claim", c.claim},
            {"graph", {{"n", c.vertex_count}, {"edges", edges}}},
            {"k", c.k},
            {"witness", {{"k", c.k}, {"lists", c.witness_lists}}},
            {"metadata",
             {{"tool_version", c.tool_version}, {"enumeration_order", c.enumeration_order}}}};
}

}  // namespace

std::string serialize_verdict(const Verdict& verdict, const Graph& g, int k, ColoringMode mode) {
    ordered_json doc{{"schema_version", kSchemaVersion}, {"type", "verdict"}};
    doc["graph"] = graph_json(g);
    doc.update(verdict_json(verdict, k, mode));
    return doc.dump(2) + "\n";
}

std::string serialize_certificate(const Certificate& certificate) {
    return certificate_json(certificate).dump(2) + "\n";
}

Certificate parse_certificate(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    Certificate c;
    try {
        c.schema_version = doc.value("schema_version", "");
        c.claim = doc.value("claim", "");
        c.vertex_count = doc.at("graph").value("n", -1);
        for (const auto& edge : doc.at("graph").value("edges", ordered_json::array())) {
            c.edges.push_back({edge.at(0).get<int>(), edge.at(1).get<int>()});
        }
        c.k = doc.value("k", -1);
        for (const auto& list : doc.at("witness").value("lists", ordered_json::array())) {
            c.witness_lists.push_back(list.get<std::vector<int>>());
        }
        if (doc.contains("metadata")) {
            c.tool_version = doc["metadata"].value("tool_version", "");
            c.enumeration_order = doc["metadata"].value("enumeration_order", "");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("malformed certificate: ") + e.what());
    }
    return c;
}

std::string serialize_chi_pc(const ChiPcReport& report, const Graph& g) {
    ordered_json doc{{"schema_version", kSchemaVersion}, {"type", "chi_pc"}};
    doc["graph"] = graph_json(g);
    doc["lower_bound"] = report.lower_bound;
    doc["lower_bound_reason"] = report.lower_bound_reason;
    if (report.exact) {
        doc["exact"] = *report.exact;
        doc["exact_reason"] = report.exact_reason;
    }
    doc["k_max"] = report.k_max;
    doc["exceeded_cap"] = report.exceeded_cap;
    ordered_json per_k = ordered_json::array();
    for (const auto& [k, verdict] : report.per_k) {
        per_k.push_back(verdict_json(verdict, k, ColoringMode::Proportional));
    }
    doc["per_k"] = per_k;
    return doc.dump(2) + "\n";
}

std::string serialize_suite(const SuiteReport& report) {
    ordered_json claims = ordered_json::array();
    for (const ClaimRecord& claim : report.claims) {
        ordered_json entry{{"id", claim.id},
                           {"anchor", claim.anchor},
                           {"params", claim.params},
                           {"status", claim.status},
                           {"evidence", claim.evidence},
                           {"informational", claim.informational}};
        if (claim.certificate) entry["certificate"] = certificate_json(*claim.certificate);
        claims.push_back(std::move(entry));
    }
    ordered_json doc{{"schema_version", kSchemaVersion},
                     {"type", "suite_report"},
                     {"all_verified", report.all_verified()},
                     {"claims", claims}};
    return doc.dump(2) + "\n";
}

std::string suite_text(const SuiteReport& report) {
    std::ostringstream out;
    for (const ClaimRecord& claim : report.claims) {
        out << (claim.status == "verified" ? "[ OK ]" :
                claim.status == "refuted" ? "[FAIL]" : "[SKIP]")
            << ' ' << claim.id;
        if (!claim.params.empty()) out << " (" << claim.params << ")";
        if (claim.informational) out << " [informational]";
        out << ": " << claim.evidence << '\n';
    }
    out << (report.any_refuted() ? "RESULT: refuted claims present\n"
            : report.any_skipped() ? "RESULT: verified with budget skips\n"
                                   : "RESULT: all claims verified\n");
    return out.str();
}

}  // namespace propcolor
