#ifndef TILED_JSON_IO_HPP
#define TILED_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "tiled/errors.hpp"
#include "tiled/exponent_matrix.hpp"
#include "tiled/type_number.hpp"

namespace tiled {

// Malformed schema (missing field, wrong type).  JSON syntax errors surface
// as nlohmann::json::parse_error; both map to exit code 2 in the CLI.
class schema_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct LabeledOrder {
  std::string label;
  ExponentMatrix order;
};

// {"n": int, "exponent_matrix": [[int]], "label": str?}
LabeledOrder parse_order(const nlohmann::json& j);
LabeledOrder load_order_file(const std::string& path);

// {"degree": int, "class_group": {"invariant_factors": [int]},
//  "omega": [str]?, "t_primes": [{"label": str, "d": int,
//  "kind": "p_class"|"q_class", "vector": [int]}]?}
GlobalProblem parse_problem(const nlohmann::json& j);
GlobalProblem load_problem_file(const std::string& path);

nlohmann::json error_to_json(const error& e);

} // namespace tiled

#endif
