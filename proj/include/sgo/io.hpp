#pragma once

// JSON reading and writing for orders, ideal matrices, groups, graded orders
// and verdicts.
//
// Orders and ideal matrices:
//   {"ring": "Z[i]", "n": 5, "entries": [[ideal, ...], ...]}       global
//   {"ring": "Z", "n": 2, "entries": [[0, 0], [1, 0]], "prime": "2"}   local
//   {"ring": "Z", "shorthand": "hereditary_staircase([2,1])", "prime": "2"}
//   {"components": [order, ...]}                                  direct sum
// A global ideal is null (zero), {"gen": "a+bi"} or {"factors": [["gen", e], ...]};
// a local entry is an exponent or null. "ring" defaults to "Z".
//
// Groups: {"cyclic": n}, {"symmetric": d}, {"trivial": true} or
// {"degree": d, "generators": ["(1 2 3)", ...]}.
//
// Graded orders carry "kind":
//   "explicit":         group, delta, components {"(1 2)": ideal matrix, ...}, twist?
//   "pic-construction": delta, x, n?
//   "crossed-product":  group, delta, generator_images [{"perm": [2, 3, 1], "scalars": ["1", ...]}], cocycle?
// A twist or cocycle is a list of {"g": "(1 2)", "h": "(1 2)", "value": "a+bi"};
// unlisted pairs are 1. A delta given in local form makes the graded order
// local at that place.

#include <json.hpp>
#include <string>

#include "sgo/oracle.hpp"
#include "sgo/pic.hpp"
#include "sgo/semiprime.hpp"

namespace sgo {

using Json = nlohmann::ordered_json;

/// Malformed input. path names the offending field ("$.delta.entries[2][0]").
class SchemaError : public ValidationError {
 public:
  SchemaError(std::string path, const std::string& what);
  std::string path;
};

Json parse_json_text(const std::string& text);
std::string read_file(const std::string& path);

struct ParsedOrder {
  GlobalTiledOrder order;
  std::optional<MaximalIdeal> local_place;
};

ParsedOrder order_from_json(const Json& j, const std::string& path = "$");
GroupPtr group_from_json(const Json& j, const std::string& path = "$");
GradedOrder graded_order_from_json(const Json& j, const std::string& path = "$");

Json to_json(const GlobalIdealMatrix& x);
Json to_json(const GlobalPicent& g);
Json to_json(const PicClass& c);
Json to_json(const HereditaryVerdict& v);
Json to_json(const InnerClassification& c);
Json to_json(const OrbitCorner& c);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace sgo
