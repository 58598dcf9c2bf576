#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "lenscx/error.hpp"
#include "lenscx/homology.hpp"
#include "lenscx/json_io.hpp"
#include "lenscx/lens.hpp"
#include "lenscx/sphere_map.hpp"
#include "lenscx/surface.hpp"

namespace lenscx::cli {

namespace {

struct RunConfig {
  std::string command;
  int n = 5;
  int k = 1;
  int k2 = 1;
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  bool run_torsion = false;
  bool run_pi1 = false;
  std::size_t max_cosets = 0;
  int subdivisions = 0;
  std::string input;
  std::string action;
  bool pretty = false;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LENSCX_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "LENSCX_SEED is not an unsigned integer");
    }
  }
  return 42;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

Json envelope(const RunConfig& cfg, Json config) {
  Json resolved = {{"command", cfg.command}};
  resolved.update(config);
  config = std::move(resolved);
  Json doc = {{"schema", kSchemaVersion}, {"config", std::move(config)}};
  return doc;
}

void emit(std::ostream& out, const Json& doc, bool pretty) {
  out << (pretty ? doc.dump(2) : doc.dump()) << '\n';
}

Json f_vector_json(const SimplicialComplex& k) {
  Json arr = Json::array();
  for (auto f : f_vector(k)) arr.push_back(f);
  return arr;
}

Json report_doc(Json doc, const Report& report) {
  doc["checks"] = report.checks_json();
  doc["overall"] = report.overall();
  return doc;
}

int cmd_mn(const RunConfig& cfg, std::ostream& out) {
  const SimplicialComplex mn = build_mn(cfg.n);
  Json doc = envelope(cfg, {{"n", cfg.n}});
  doc.update(complex_to_json(mn));
  doc["f_vector"] = f_vector_json(mn);
  doc["euler_characteristic"] = euler_characteristic(mn);
  emit(out, doc, cfg.pretty);
  return 0;
}

int cmd_verify_lens(const RunConfig& cfg, std::ostream& out) {
  LensOptions options;
  options.run_torsion = cfg.run_torsion;
  options.run_pi1 = cfg.run_pi1;
  options.max_cosets = cfg.max_cosets;
  const std::size_t resolved_cosets = cfg.max_cosets ? cfg.max_cosets : 10 * static_cast<std::size_t>(std::max(cfg.n, 0));
  Json doc = envelope(cfg, {{"n", cfg.n},
                            {"k", cfg.k},
                            {"torsion", cfg.run_torsion},
                            {"pi1", cfg.run_pi1},
                            {"max_cosets", resolved_cosets}});
  const LensVerification v = verify_lens(cfg.n, cfg.k, options);
  doc["n"] = v.n;
  doc["k"] = v.k;
  doc["subdivisions"] = v.subdivisions;
  doc = report_doc(std::move(doc), v.report);
  emit(out, doc, cfg.pretty);
  return v.report.overall() ? 0 : 1;
}

int cmd_homology(const RunConfig& cfg, std::ostream& out) {
  const SimplicialComplex k = complex_from_json(read_json_file(cfg.input));
  Json doc = envelope(cfg, {{"input", cfg.input}});
  doc["f_vector"] = f_vector_json(k);
  doc["euler_characteristic"] = euler_characteristic(k);
  doc.update(homology_to_json(homology_groups(k)));
  emit(out, doc, cfg.pretty);
  return 0;
}

int cmd_quotient(const RunConfig& cfg, std::ostream& out) {
  SimplicialComplex k = complex_from_json(read_json_file(cfg.input));
  CyclicAction a = action_from_json(read_json_file(cfg.action));
  if (!is_simplicial(a, k)) throw Error(ErrorKind::NotSimplicial, "action does not preserve the complex");
  for (int s = 0; s < cfg.subdivisions; ++s) {
    a = induced_action_on_subdivision(a, k);
    k = barycentric_subdivision(k);
  }
  const SimplicialComplex q = quotient(k, a);
  Json doc = envelope(cfg, {{"input", cfg.input}, {"action", cfg.action}, {"subdivisions", cfg.subdivisions}});
  doc.update(complex_to_json(q));
  doc["f_vector"] = f_vector_json(q);
  emit(out, doc, cfg.pretty);
  return 0;
}

int cmd_fn_check(const RunConfig& cfg, std::ostream& out) {
  psi_k_on_mn(cfg.n, cfg.k);  // validates n and k
  const FnCheck r = fn_check(cfg.n, cfg.k, cfg.samples, cfg.seed);
  Json doc = envelope(cfg, {{"n", cfg.n}, {"k", cfg.k}, {"samples", cfg.samples}, {"seed", cfg.seed}});
  doc["max_norm_err"] = r.max_norm_err;
  doc["max_seam_err"] = r.max_seam_err;
  doc["max_equiv_err"] = r.max_equiv_err;
  doc["max_roundtrip_err"] = r.max_roundtrip_err;
  doc["origin_hit"] = r.origin_hit;
  const bool pass = r.max_norm_err < 1e-12 && r.max_seam_err < 1e-12 && r.max_equiv_err < 1e-12 &&
                    r.max_roundtrip_err < 1e-9 && !r.origin_hit;
  doc["overall"] = pass;
  emit(out, doc, cfg.pretty);
  return pass ? 0 : 1;
}

Json surface_doc(const CyclePair& pair, Report report) {
  Json classes = Json::array();
  for (const auto& c : pair.classes) {
    classes.push_back({{"self_intersection", intersect(c, c)}, {"minus_one_curve", is_minus_one_curve(c)}});
  }
  Json doc = cycle_pair_to_json(pair);
  doc["class_data"] = classes;
  if (report.overall()) doc["product_dual_complex_f_vector"] = f_vector_json(product_dual_complex(pair));
  doc["checks"] = report.checks_json();
  doc["overall"] = report.overall();
  return doc;
}

int cmd_surface(const RunConfig& cfg, std::ostream& out) {
  CyclePair pair;
  Report report;
  Json config = {{"input", cfg.input}};
  if (cfg.command == "surface demo-z3") {
    pair = demo_z3();
    report = verify_anticanonical_cycle(pair);
    config = Json::object();
  } else if (cfg.command == "surface demo-z5") {
    pair = demo_z5();
    report = verify_anticanonical_cycle(pair);
    bool curves = true;
    for (const auto& c : pair.classes) curves = curves && is_minus_one_curve(c);
    report.add("minus_one_curves", curves, pair.classes.size());
    for (auto& c : m05_cyclic_check().checks) report.checks.push_back(std::move(c));
    config = Json::object();
  } else {
    pair = cycle_pair_from_json(read_json_file(cfg.input));
    report = verify_anticanonical_cycle(pair);
  }
  Json doc = envelope(cfg, config);
  doc.update(surface_doc(pair, report));
  emit(out, doc, cfg.pretty);
  return report.overall() ? 0 : 1;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const LensClassification c = classify_lens_params(cfg.n, cfg.k, cfg.k2);
  Json doc = envelope(cfg, {{"n", cfg.n}, {"k1", cfg.k}, {"k2", cfg.k2}});
  doc["homotopy_equivalent"] = c.homotopy_equivalent;
  doc["orbit1"] = c.orbit1;
  doc["orbit2"] = c.orbit2;
  emit(out, doc, cfg.pretty);
  return 0;
}

int error_exit(std::ostream& out, const std::string& kind, const std::string& message) {
  out << Json{{"error", kind}, {"message", message}}.dump() << '\n';
  return 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  CLI::App app{"Lens-space dual complex certification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", cfg.pretty, "Indent the JSON output");

  auto* mn = app.add_subcommand("mn", "Emit the complex M_n");
  mn->add_option("--n", cfg.n, "Cycle length")->required();

  auto* verify = app.add_subcommand("verify-lens", "Certify that Sd(M_n)/Psi_k has the invariants of L(n,k)");
  verify->add_option("--n", cfg.n)->required();
  verify->add_option("--k", cfg.k)->required();
  verify->add_flag("--torsion", cfg.run_torsion, "Compute the cup/Bockstein orbit");
  verify->add_flag("--pi1", cfg.run_pi1, "Enumerate cosets of the edge-path group");
  verify->add_option("--max-cosets", cfg.max_cosets, "Coset limit (default 10 n)");

  auto* homology = app.add_subcommand("homology", "Integral homology of a complex JSON file");
  homology->add_option("file", cfg.input)->required();

  auto* quot = app.add_subcommand("quotient", "Orbit complex of a complex under a cyclic action");
  quot->add_option("file", cfg.input)->required();
  quot->add_option("action", cfg.action)->required();
  quot->add_option("--subdivisions", cfg.subdivisions, "Barycentric subdivisions applied first")->check(CLI::Range(0, 3));

  auto* fn = app.add_subcommand("fn-check", "Numerical checks of the map L_n -> S^3");
  fn->add_option("--n", cfg.n)->required();
  fn->add_option("--k", cfg.k)->required();
  fn->add_option("--samples", cfg.samples);
  fn->add_option("--seed", cfg.seed, "Default from LENSCX_SEED, else 42");

  auto* surface = app.add_subcommand("surface", "Picard-lattice checks of boundary cycles");
  surface->require_subcommand(1);
  auto* z3 = surface->add_subcommand("demo-z3", "Coordinate triangle in the plane");
  auto* z5 = surface->add_subcommand("demo-z5", "Five boundary curves on the 4-point blowup");
  auto* check = surface->add_subcommand("check", "Check a pair JSON file");
  check->add_option("file", cfg.input)->required();

  auto* classify = app.add_subcommand("classify", "Homotopy classification of L(n,k1) vs L(n,k2)");
  classify->add_option("n", cfg.n)->required();
  classify->add_option("k1", cfg.k)->required();
  classify->add_option("k2", cfg.k2)->required();

  try {
    cfg.seed = default_seed();
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return error_exit(out, "UsageError", e.what());
  } catch (const Error& e) {
    return error_exit(out, std::string(to_string(e.kind())), e.what());
  }

  try {
    if (*mn) {
      cfg.command = "mn";
      return cmd_mn(cfg, out);
    }
    if (*verify) {
      cfg.command = "verify-lens";
      return cmd_verify_lens(cfg, out);
    }
    if (*homology) {
      cfg.command = "homology";
      return cmd_homology(cfg, out);
    }
    if (*quot) {
      cfg.command = "quotient";
      return cmd_quotient(cfg, out);
    }
    if (*fn) {
      cfg.command = "fn-check";
      return cmd_fn_check(cfg, out);
    }
    if (*classify) {
      cfg.command = "classify";
      return cmd_classify(cfg, out);
    }
    if (*surface) {
      cfg.command = *z3 ? "surface demo-z3" : *z5 ? "surface demo-z5" : "surface check";
      return cmd_surface(cfg, out);
    }
  } catch (const Error& e) {
    return error_exit(out, std::string(to_string(e.kind())), e.what());
  }
  return error_exit(out, "UsageError", "no command given");
}

}  // namespace lenscx::cli
