#include "doctest.h"
#include "propcolor/io.hpp"
#include "propcolor/suite.hpp"

using namespace propcolor;

TEST_CASE("parse_graph accepts the documented format") {
    Graph p2 = parse_graph("2 1\n0 1\n");
    CHECK(p2.vertex_count() == 2);
    CHECK(p2.edge_count() == 1);

    Graph k3 = parse_graph("3 3\n0 1\n1 2\n0 2\n");
    CHECK(k3.is_complete());

    Graph empty = parse_graph("4 0\n");
    CHECK(empty.vertex_count() == 4);
    CHECK(empty.edge_count() == 0);
}

TEST_CASE("parse_graph errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("2 1\n0 0\n") == 2);          // self-loop
    CHECK(line_of("3 2\n0 1\n0 1\n") == 3);     // duplicate edge
    CHECK(line_of("2 1\n0 5\n") == 2);          // out of range
    CHECK(line_of("2 1\n0 x\n") == 2);          // non-integer token
    CHECK(line_of("nope\n") == 1);              // bad header
    CHECK(line_of("2 2\n0 1\n") == 3);          // missing edge
    CHECK(line_of("2 1\n0 1\nextra\n") == 3);   // trailing content
    CHECK(line_of("") == 1);
}

TEST_CASE("graph format round-trips") {
    Graph g = wang_lih_tree(3);
    Graph back = parse_graph(format_graph(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("mode and status names") {
    for (ColoringMode mode :
         {ColoringMode::Proper, ColoringMode::EquitableList, ColoringMode::Proportional}) {
        CHECK(mode_from_name(mode_name(mode)) == mode);
    }
    CHECK_THROWS_AS(mode_from_name("bogus"), std::invalid_argument);
    CHECK(status_name(DecisionStatus::Unknown) == "unknown");
}

TEST_CASE("certificate serialization round-trips") {
    Graph c4 = Graph::cycle(4);
    Verdict verdict = decide(c4, 2, ColoringMode::Proportional);
    Certificate certificate = make_certificate(verdict, c4, 2, ColoringMode::Proportional);
    Certificate back = parse_certificate(serialize_certificate(certificate));
    CHECK(back == certificate);
    CHECK(verify_certificate(back));

    CHECK_THROWS_AS(parse_certificate("not json at all"), ParseError);
    CHECK_THROWS_AS(parse_certificate("{}"), ParseError);
    // Structurally complete but defective documents parse fine and are
    // rejected by verification instead.
    Certificate hollow = parse_certificate(
        R"({"claim":"not_prop_choosable","graph":{"n":0,"edges":[]},"k":0,)"
        R"("witness":{"lists":[]}})");
    CHECK_FALSE(verify_certificate(hollow));
}

TEST_CASE("verdict serialization is deterministic") {
    Graph p6 = Graph::path(6);
    Verdict verdict = decide(p6, 2, ColoringMode::Proportional);
    std::string a = serialize_verdict(verdict, p6, 2, ColoringMode::Proportional);
    std::string b = serialize_verdict(decide(p6, 2, ColoringMode::Proportional), p6, 2,
                                      ColoringMode::Proportional);
    CHECK(a == b);
    CHECK(a.find("\"witness\"") != std::string::npos);
}

TEST_CASE("suite report serialization is deterministic at small size") {
    SuiteOptions options;
    options.characterization_nmax = 4;
    options.star_kmax = 2;
    options.orderplus1_nmax = 3;
    options.wang_lih_kmax = 3;
    std::string a = serialize_suite(run_suite(options));
    std::string b = serialize_suite(run_suite(options));
    CHECK(a == b);
    CHECK(suite_text(run_suite(options)).find("RESULT: all claims verified") != std::string::npos);
}
