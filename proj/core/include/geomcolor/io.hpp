#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "geomcolor/hypergraph.hpp"
#include "geomcolor/types.hpp"

namespace geomcolor {

// Malformed JSON, missing fields, or bad rational literals.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Family name not in the routing table (its own exit code downstream).
struct UnknownFamilyError : ParseError {
    using ParseError::ParseError;
};

// JSON schema (exact: integers serialize as numbers, other rationals as
// "p/q" strings):
//   instance: {"family": "...", "points": [["x","y"], ...]}
//             {"family": "b-rects", "rects": [{"a":.., "b":.., "c":..}, ...]}
//             {"family": "h-rects",
//              "halfplanes": [{"slope":.., "intercept":.., "region":"above"}]}
//             {"family": "bprime-rects",
//              "baseline_rects": [{"a":.., "b":.., "bottom":.., "top":..}]}
//   coloring: {"palette": c, "colors": [0, 1, ...]}
// Round-trip invariant: parse(serialize(x)) == x.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

std::string serialize_coloring(const Coloring& col);
Coloring parse_coloring(const std::string& text);

std::string serialize_verdict(const Verdict& verdict);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace geomcolor
