#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "loopdec/decomposition.hpp"
#include "loopdec/pbd.hpp"

namespace loopdec {

using nlohmann::json;

// Graph files: {"n": int, "c": int, "edges": [[u,v],...], "loops":
// {"<vertex>": {"<color>": count}}} with edges sorted (u < v) and zero
// multiplicities omitted.  Loading validates everything and reports
// MalformedInput.
json graph_to_json(const LoopedGraph& g);
LoopedGraph graph_from_json(const json& j);

// Decomposition files: {"graph": ..., "host": {"v", "lambda", "mu"},
// "blocks": [{"map": [...], "sign": k}, ...]}.
json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

// PBD files: {"v": int, "blocks": [[...], ...]}.
json pbd_to_json(const Pbd& p);
Pbd pbd_from_json(const json& j);

// Coloring files: {"s": int, "colors": [c_1..c_b]}, colors 1-based.
json coloring_to_json(int s, const std::vector<int>& colors);
void coloring_from_json(const json& j, int& s, std::vector<int>& colors);

// Ordering files: {"order": [block indices]}.
json order_to_json(const std::vector<int>& order);
std::vector<int> order_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace loopdec
