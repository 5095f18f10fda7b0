#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "hyturan/hypergraph.hpp"
#include "hyturan/pattern.hpp"

namespace hyturan {

// Text format: first line "n k", then one edge per line as k space-separated
// 0-based labels. JSON format: {"n": .., "k": .., "edges": [[..], ..]}.
// Both round-trip exactly (edges are stored canonically sorted).

std::string to_text(const Hypergraph& h);
Hypergraph hypergraph_from_text(std::istream& in);
Hypergraph hypergraph_from_text(const std::string& text);

nlohmann::json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Pattern& p);
Pattern pattern_from_json(const nlohmann::json& j);

// Reads a hypergraph from a file ("-" = stdin); the format is sniffed: JSON
// when the first non-space byte is '{', text otherwise.
Hypergraph load_hypergraph(const std::string& path);
Hypergraph hypergraph_from_string(const std::string& data);

// Rounds every number in a JSON tree to 12 significant digits (CLI output
// policy, keeps diffs stable across platforms).
nlohmann::json round_floats(const nlohmann::json& j);

}  // namespace hyturan
