#ifndef PROPCOLOR_IO_HPP
#define PROPCOLOR_IO_HPP

#include <stdexcept>
#include <string>

#include "propcolor/certificate.hpp"
#include "propcolor/choosability.hpp"
#include "propcolor/graph.hpp"

namespace propcolor {

struct SuiteReport;

/// Line-numbered failure while reading the text graph format.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Text graph format: first line "n m", then m lines "u v" with
/// 0 <= u < v < n.  Rejects self-loops, duplicate edges, out-of-range
/// indices, and non-integer tokens.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

std::string mode_name(ColoringMode mode);
ColoringMode mode_from_name(const std::string& name);  // throws std::invalid_argument
std::string status_name(DecisionStatus status);

// JSON documents, schema version "1".  Field names and ordering are
// frozen; serialization is byte-deterministic.  Wall-clock timings are
// never serialized so reports compare byte-for-byte across runs.
std::string serialize_verdict(const Verdict& verdict, const Graph& g, int k, ColoringMode mode);
std::string serialize_certificate(const Certificate& certificate);
Certificate parse_certificate(const std::string& json_text);  // throws ParseError on bad JSON
std::string serialize_chi_pc(const ChiPcReport& report, const Graph& g);
std::string serialize_suite(const SuiteReport& report);
std::string suite_text(const SuiteReport& report);

}  // namespace propcolor

#endif
