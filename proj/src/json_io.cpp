#include "tiled/json_io.hpp"

#include <fstream>
#include <iostream>

#include "tiled/errors.hpp"

namespace tiled {

namespace {

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer())
    throw schema_error(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_vector(const nlohmann::json& j,
                                        const char* what) {
  if (!j.is_array())
    throw schema_error(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

nlohmann::json slurp(const std::string& path) {
  if (path == "-") return nlohmann::json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw schema_error("cannot open '" + path + "'");
  return nlohmann::json::parse(in);
}

} // namespace

LabeledOrder parse_order(const nlohmann::json& j) {
  const int n = static_cast<int>(as_int(require(j, "n"), "'n'"));
  const auto& rows = require(j, "exponent_matrix");
  if (!rows.is_array())
    throw schema_error("'exponent_matrix' must be an array of rows");
  IntMatrix mu;
  mu.reserve(rows.size());
  for (const auto& row : rows)
    mu.push_back(as_int_vector(row, "matrix entry"));

  LabeledOrder out{.label = "", .order = ExponentMatrix::validate(n, mu)};
  if (j.contains("label")) {
    if (!j.at("label").is_string())
      throw schema_error("'label' must be a string");
    out.label = j.at("label").get<std::string>();
  }
  return out;
}

LabeledOrder load_order_file(const std::string& path) {
  return parse_order(slurp(path));
}

GlobalProblem parse_problem(const nlohmann::json& j) {
  GlobalProblem p;
  p.degree = static_cast<int>(as_int(require(j, "degree"), "'degree'"));
  p.class_group = FinAbGroup(as_int_vector(
      require(require(j, "class_group"), "invariant_factors"),
      "invariant factor"));
  if (j.contains("omega")) {
    const auto& omega = j.at("omega");
    if (!omega.is_array()) throw schema_error("'omega' must be an array");
    for (const auto& v : omega) {
      if (!v.is_string()) throw schema_error("'omega' entries must be strings");
      p.omega.push_back(v.get<std::string>());
    }
  }
  if (j.contains("t_primes")) {
    const auto& primes = j.at("t_primes");
    if (!primes.is_array()) throw schema_error("'t_primes' must be an array");
    for (const auto& entry : primes) {
      TPrime tp;
      const auto& label = require(entry, "label");
      if (!label.is_string()) throw schema_error("'label' must be a string");
      tp.label = label.get<std::string>();
      tp.d = static_cast<int>(as_int(require(entry, "d"), "'d'"));
      const auto& kind = require(entry, "kind");
      if (kind == "q_class")
        tp.kind = ClassVectorKind::q_class;
      else if (kind == "p_class")
        tp.kind = ClassVectorKind::p_class;
      else
        throw schema_error("'kind' must be \"p_class\" or \"q_class\"");
      tp.vector = as_int_vector(require(entry, "vector"), "class vector entry");
      p.t_primes.push_back(std::move(tp));
    }
  }
  return p;
}

GlobalProblem load_problem_file(const std::string& path) {
  return parse_problem(slurp(path));
}

nlohmann::json error_to_json(const error& e) {
  nlohmann::json out;
  out["kind"] = e.kind();
  out["message"] = e.what();
  switch (e.code()) {
  case errc::nonzero_diagonal:
    out["i"] = e.args()[0];
    break;
  case errc::ring_condition_violated:
    out["i"] = e.args()[0];
    out["j"] = e.args()[1];
    out["k"] = e.args()[2];
    break;
  case errc::entry_out_of_range:
    if (e.arg_count() == 2) {
      out["i"] = e.args()[0];
      out["j"] = e.args()[1];
    }
    break;
  case errc::not_prime:
  case errc::too_large:
  case errc::unsupported_dimension:
    if (e.arg_count() >= 1) out["n"] = e.args()[0];
    break;
  case errc::invalid_local_exponent:
    if (!e.label().empty()) out["label"] = e.label();
    if (e.arg_count() == 2) out["d"] = e.args()[0];
    break;
  default:
    break;
  }
  return out;
}

} // namespace tiled
