// Command-line front end: JSON in, deterministic JSON (or SVG) out.
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiled/apartment.hpp"
#include "tiled/errors.hpp"
#include "tiled/json_io.hpp"
#include "tiled/reflection.hpp"
#include "tiled/runtime.hpp"
#include "tiled/type_number.hpp"

namespace {

using nlohmann::json;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_validate(const std::string& path) {
  try {
    tiled::load_order_file(path);
  } catch (const tiled::error& e) {
    json out;
    out["valid"] = false;
    out["error"] = tiled::error_to_json(e);
    emit(out);
    return 1;
  }
  emit(json{{"valid", true}});
  return 0;
}

int cmd_classes(const std::string& path, bool prime, bool oracle,
                bool with_normalizer) {
  const tiled::LabeledOrder in = tiled::load_order_file(path);
  const tiled::ExponentMatrix& e = in.order;

  int d = 0;
  if (prime)
    d = tiled::reflection_class_count_prime(e);
  else if (oracle)
    d = tiled::oracle_reflection_class_count(e);
  else
    d = tiled::reflection_class_count(e);

  json out;
  out["d"] = d;
  out["types"] = tiled::vertex_types(e).t;
  if (e.size() == 3) {
    const auto six = tiled::structural_invariants(e).six_tuple();
    out["invariants_6tuple"] = std::vector<std::int64_t>(six.begin(), six.end());
  }
  if (with_normalizer) {
    const tiled::NormalizerData norm = tiled::normalizer(e);
    std::vector<std::string> cycles;
    cycles.reserve(norm.h.size());
    for (const auto& sigma : norm.h) cycles.push_back(sigma.cycle_string());
    out["H"] = cycles;
    out["xi_types"] = norm.xi_types;
  }
  emit(out);
  return 0;
}

int cmd_isomorphic(const std::string& path_a, const std::string& path_b,
                   bool reflection) {
  const tiled::ExponentMatrix a = tiled::load_order_file(path_a).order;
  const tiled::ExponentMatrix b = tiled::load_order_file(path_b).order;
  const auto sigma = reflection ? tiled::reflection_equivalent(a, b)
                                : tiled::are_isomorphic(a, b);
  json out;
  out["isomorphic"] = sigma.has_value();
  out["sigma"] = sigma ? json(sigma->cycle_string()) : json(nullptr);
  emit(out);
  return 0;
}

int cmd_type_number(const std::string& path) {
  const tiled::GlobalProblem problem = tiled::load_problem_file(path);
  const tiled::TypeNumberReport report = tiled::type_number(problem);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  json out;
  out["cl_T_hat"] = report.cl_t_hat.factors();
  out["type_number"] = report.type_number;
  out["max_bound"] = report.max_bound;
  emit(out);
  return 0;
}

int cmd_plot(const std::vector<std::string>& paths, const std::string& out_path,
             const std::vector<std::int64_t>& window, bool no_labels) {
  std::vector<tiled::ScenePolytope> polytopes;
  for (const auto& p : paths)
    polytopes.push_back({tiled::load_order_file(p).order, ""});

  tiled::ApartmentScene scene;
  if (window.empty()) {
    scene = tiled::ApartmentScene::fit(std::move(polytopes));
  } else {
    scene.a_min = window[0];
    scene.a_max = window[1];
    scene.b_min = window[2];
    scene.b_max = window[3];
    scene.polytopes = std::move(polytopes);
  }
  scene.labels = !no_labels;

  const std::string svg = tiled::render_svg(scene);
  if (out_path.empty()) {
    std::cout << svg;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw tiled::schema_error("cannot write '" + out_path + "'");
    out << svg;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("TILED_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) tiled::set_max_threads(unsigned(v));
  }

  CLI::App app{"Tiled orders: reflection classes, normalizer norms and type "
               "numbers"};
  app.require_subcommand(1);

  std::string order_path, path_a, path_b, problem_path, out_path;
  bool prime = false, oracle = false, with_normalizer = false;
  bool reflection = false, no_labels = false;
  std::vector<std::string> plot_paths;
  std::vector<std::int64_t> window;

  auto* validate = app.add_subcommand("validate", "Check an order file");
  validate->add_option("file", order_path, "order file (JSON)")->required();

  auto* classes =
      app.add_subcommand("classes", "Reflection classes of a local order");
  classes->add_option("file", order_path, "order file (JSON)")->required();
  auto* opt_prime = classes->add_flag(
      "--prime", prime, "use the prime-degree algorithm (n must be prime)");
  classes->add_flag("--oracle", oracle, "use the brute-force search (n <= 9)")
      ->excludes(opt_prime);
  classes->add_flag("--normalizer", with_normalizer,
                    "include the permutation group H and its types");

  auto* isomorphic =
      app.add_subcommand("isomorphic", "Compare two local orders");
  isomorphic->add_option("first", path_a, "order file (JSON)")->required();
  isomorphic->add_option("second", path_b, "order file (JSON)")->required();
  isomorphic->add_flag("--reflection", reflection,
                       "require matching vertex types as well");

  auto* type_number =
      app.add_subcommand("type-number", "Type number from a problem file");
  type_number->add_option("file", problem_path, "problem file (JSON)")
      ->required();

  auto* plot = app.add_subcommand("plot", "Render n = 3 orders as SVG");
  plot->add_option("files", plot_paths, "order files (JSON)");
  plot->add_option("--out", out_path, "output path (default: stdout)");
  plot->add_option("--window", window,
                   "window as a_min a_max b_min b_max (default: fit)")
      ->expected(4);
  plot->add_flag("--no-labels", no_labels, "omit vertex labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(order_path);
    if (classes->parsed())
      return cmd_classes(order_path, prime, oracle, with_normalizer);
    if (isomorphic->parsed()) return cmd_isomorphic(path_a, path_b, reflection);
    if (type_number->parsed()) return cmd_type_number(problem_path);
    if (plot->parsed()) return cmd_plot(plot_paths, out_path, window, no_labels);
  } catch (const tiled::error& e) {
    emit(nlohmann::json{{"error", tiled::error_to_json(e)}});
    return 1;
  } catch (const tiled::schema_error& e) {
    emit(nlohmann::json{
        {"error", {{"kind", "ParseError"}, {"message", e.what()}}}});
    return 2;
  } catch (const nlohmann::json::parse_error& e) {
    emit(nlohmann::json{
        {"error", {{"kind", "ParseError"}, {"message", e.what()}}}});
    return 2;
  }
  return 2;
}
