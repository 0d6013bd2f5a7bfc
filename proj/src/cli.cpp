// Copyright 2026 The polyrho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polyrho/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyrho/hadamard.hpp"
#include "polyrho/json_io.hpp"
#include "polyrho/observable.hpp"
#include "polyrho/shift_bell.hpp"
#include "polyrho/shot_sampler.hpp"
#include "polyrho/state_gen.hpp"

namespace polyrho::cli {

namespace {

using nlohmann::json;

// Flag combinations the parser cannot reject on its own (exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonInputs {
  std::string state_path;
  std::string poly_expr;
  std::string poly_file;
  int degree = 0;  // 0 means "no explicit lift"
  std::size_t cap = kDefaultDimCap;
};

void add_poly_options(CLI::App* cmd, CommonInputs* in) {
  cmd->add_option("--state", in->state_path, "state JSON file")->required();
  cmd->add_option("--poly", in->poly_expr,
                  "polynomial expression, e.g. \"r[0,1]*r[1,0]\"");
  cmd->add_option("--poly-file", in->poly_file, "polynomial JSON file");
  cmd->add_option("--degree", in->degree,
                  "homogenize to this degree instead of the maximum present");
  cmd->add_option("--cap", in->cap, "limit on the composite dimension d^m");
}

PolynomialSpec resolve_poly(const CommonInputs& in, const DensityMatrix& state) {
  const bool have_expr = !in.poly_expr.empty();
  const bool have_file = !in.poly_file.empty();
  if (have_expr == have_file)
    throw UsageError("provide exactly one of --poly and --poly-file");
  PolynomialSpec spec = have_expr ? parse_polynomial(in.poly_expr, state.dim())
                                  : load_poly_file(in.poly_file);
  if (spec.dim() != state.dim())
    throw std::invalid_argument("polynomial dim " + std::to_string(spec.dim()) +
                                " does not match state dim " +
                                std::to_string(state.dim()));
  return spec;
}

PolynomialSpec lift(const PolynomialSpec& spec, int degree) {
  return degree > 0 ? homogenize(spec, degree) : homogenize(spec);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_exact(const CommonInputs& in, bool dump_operator, bool symmetrize_flag,
              std::ostream& out) {
  const DensityMatrix state = load_state_file(in.state_path);
  const PolynomialSpec spec = resolve_poly(in, state);
  const PolynomialSpec hom = lift(spec, in.degree);
  const Complex value = evaluate_exact(spec, state);
  json j{{"command", "exact"},
         {"dim", spec.dim()},
         {"degree", hom.degree()},
         {"value", complex_to_json(value)}};
  if (dump_operator) {
    CMatrix a_f = assemble_A(hom, in.cap);
    if (symmetrize_flag) a_f = symmetrize(a_f, hom.dim(), hom.degree());
    const ObservablePair pair = hermitian_pair(std::move(a_f));
    j["operators"] = json{{"a_f", matrix_to_json(pair.a_f)},
                          {"o_real", matrix_to_json(pair.o_real)},
                          {"o_imag", matrix_to_json(pair.o_imag)}};
  }
  emit(out, j);
  return 0;
}

int cmd_estimate(const CommonInputs& in, long long shots, std::uint64_t seed,
                 const std::string& method, bool symmetrize_flag,
                 bool no_exact, std::ostream& out) {
  if (method != "eigen" && method != "hadamard")
    throw UsageError("estimate supports --method eigen or hadamard");
  const DensityMatrix state = load_state_file(in.state_path);
  const PolynomialSpec spec = lift(resolve_poly(in, state), in.degree);
  EstimateOptions options;
  options.symmetrize = symmetrize_flag;
  options.attach_exact = !no_exact;
  options.cap = in.cap;
  const EstimateReport report = estimate_polynomial(
      spec, state, shots, seed,
      method == "eigen" ? EstimateMethod::kEigen : EstimateMethod::kHadamard,
      options);
  json j = report_to_json(report);
  j["command"] = "estimate";
  j["method"] = method;
  j["degree"] = spec.degree();
  emit(out, j);
  return 0;
}

int cmd_purity(const std::string& state_path, int m,
               const std::string& method, long long shots, std::uint64_t seed,
               std::size_t cap, std::ostream& out) {
  if (m < 1) throw UsageError("--m must be >= 1");
  const DensityMatrix state = load_state_file(state_path);
  json j{{"command", "purity"}, {"method", method}, {"m", m}};
  if (method == "swap-exact") {
    j["value"] = purity_exact(state, m, cap);
    j["direct"] = trace_power(state, m);
  } else if (method == "bell-sample") {
    if (m != 2) throw UsageError("bell-sample measures m = 2 only");
    if (state.dim() != 2)
      throw std::invalid_argument("bell-sample needs a qubit state");
    const ShotStats stats = estimate_purity_bell(state, shots, seed);
    j["estimate"] = stats.mean;
    j["stderr"] = stats.std_error;
    j["shots"] = shots;
    j["seed"] = seed;
    j["exact"] = purity_exact(state, 2, cap);
  } else if (method == "hadamard") {
    const EmbeddedUnitary emb =
        embed_from_unitary(cyclic_shift(state.dim(), m, cap));
    const TensorState joint = tensor_power(state, m, cap);
    const ControlStats stats = sample_control(emb, joint, shots, seed);
    j["estimate"] = stats.mean;
    j["stderr"] = stats.std_error;
    j["shots"] = shots;
    j["seed"] = seed;
    j["scale"] = emb.scale;
    j["exact"] = purity_exact(state, m, cap);
  } else {
    throw UsageError("purity supports --method swap-exact, bell-sample or hadamard");
  }
  emit(out, j);
  return 0;
}

int cmd_gen_state(const std::string& kind_name, int dim,
                  std::optional<int> rank, std::uint64_t seed,
                  const std::string& out_path, std::ostream& out) {
  StateRecipe recipe;
  recipe.kind = parse_state_kind(kind_name);
  recipe.dim = dim;
  recipe.rank = rank;
  recipe.seed = seed;
  const DensityMatrix state = generate(recipe);
  json j = state_to_json(state);
  json recipe_json{{"kind", to_string(recipe.kind)},
                   {"dim", recipe.dim},
                   {"seed", recipe.seed}};
  if (recipe.rank) recipe_json["rank"] = *recipe.rank;
  j["recipe"] = std::move(recipe_json);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot write state file: " + out_path);
    file << j.dump(2) << "\n";
  }
  emit(out, j);
  return 0;
}

int cmd_check(const CommonInputs& in, std::ostream& out) {
  const DensityMatrix state = load_state_file(in.state_path);
  const PolynomialSpec spec = resolve_poly(in, state);
  const PolynomialSpec hom = lift(spec, in.degree);
  const ObservablePair pair = hermitian_pair(assemble_A(hom, in.cap));
  const TensorState joint = tensor_power(state, hom.degree(), in.cap);

  const Complex oracle = evaluate_exact(spec, state);
  const Complex via_pair =
      expectation(pair.o_real, joint) +
      Complex{0.0, 1.0} * expectation(pair.o_imag, joint);
  const double eq1 = std::abs(via_pair - oracle);

  double spectral_dev = 0.0;
  for (const CMatrix* o : {&pair.o_real, &pair.o_imag}) {
    if (max_abs(*o) <= 1e-12) continue;
    const OutcomeDistribution dist = outcome_distribution(eigh(*o), joint);
    spectral_dev = std::max(
        spectral_dev,
        std::abs(weighted_mean(dist) - expectation(*o, joint).real()));
  }

  const EmbeddedUnitary emb = embed_unitary(pair.o_real);
  const std::size_t n = emb.dim();
  const double unitarity =
      max_abs_diff(emb.u * emb.u.adjoint(), CMatrix::identity(n));
  CMatrix scaled_real = pair.o_real;
  scaled_real *= Complex{1.0 / emb.scale, 0.0};
  const double real_part = max_abs_diff(emb.u.hermitized(), scaled_real);
  const double circuit_vs_formula =
      std::abs(run_circuit_exact(emb, joint) -
               trace_product(emb.u, joint.entries).real());
  const double e_operator = e_operator_check(emb, joint);

  const double worst =
      std::max({eq1, spectral_dev, unitarity, real_part, circuit_vs_formula,
                e_operator});
  const bool ok = worst <= 1e-10;
  json j{{"command", "check"},
         {"ok", ok},
         {"deviations",
          json{{"eq1_identity", eq1},
               {"spectral_identity", spectral_dev},
               {"unitarity", unitarity},
               {"real_part", real_part},
               {"circuit_vs_formula", circuit_vs_formula},
               {"e_operator", e_operator}}}};
  emit(out, j);
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "polyrho: polynomial functions of a density matrix as observables on "
      "copies of the state"};
  app.require_subcommand(1);

  CommonInputs exact_in;
  bool exact_dump = false;
  bool exact_symmetrize = false;
  CLI::App* exact = app.add_subcommand(
      "exact", "evaluate a polynomial on a state exactly");
  add_poly_options(exact, &exact_in);
  exact->add_flag("--dump-operator", exact_dump,
                  "include the assembled operator and its Hermitian pair");
  exact->add_flag("--symmetrize", exact_symmetrize,
                  "average the dumped operator over copy permutations");

  CommonInputs est_in;
  long long est_shots = 10000;
  std::uint64_t est_seed = 0;
  std::string est_method = "eigen";
  bool est_symmetrize = false;
  bool est_no_exact = false;
  CLI::App* estimate = app.add_subcommand(
      "estimate", "estimate a polynomial from simulated measurements");
  add_poly_options(estimate, &est_in);
  estimate->add_option("--shots", est_shots, "total shot budget");
  estimate->add_option("--seed", est_seed, "RNG seed");
  estimate->add_option("--method", est_method, "eigen or hadamard")
      ->check(CLI::IsMember({"eigen", "hadamard"}));
  estimate->add_flag("--symmetrize", est_symmetrize,
                     "average the operator over copy permutations");
  estimate->add_flag("--no-exact", est_no_exact,
                     "skip attaching the exact oracle value");

  std::string pur_state;
  int pur_m = 2;
  std::string pur_method = "swap-exact";
  long long pur_shots = 10000;
  std::uint64_t pur_seed = 0;
  std::size_t pur_cap = kDefaultDimCap;
  CLI::App* purity = app.add_subcommand(
      "purity", "compute or estimate Tr rho^m through the cyclic shift");
  purity->add_option("--state", pur_state, "state JSON file")->required();
  purity->add_option("--m", pur_m, "number of copies");
  purity->add_option("--method", pur_method,
                     "swap-exact, bell-sample or hadamard")
      ->check(CLI::IsMember({"swap-exact", "bell-sample", "hadamard"}));
  purity->add_option("--shots", pur_shots, "shots for sampled methods");
  purity->add_option("--seed", pur_seed, "RNG seed");
  purity->add_option("--cap", pur_cap, "limit on the composite dimension d^m");

  std::string gen_kind;
  int gen_dim = 2;
  int gen_rank = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen-state",
                                     "generate a test state as JSON");
  gen->add_option("--kind", gen_kind,
                  "pure-random, ginibre, maximally-mixed, computational or "
                  "bell-singlet")
      ->required();
  gen->add_option("--dim", gen_dim, "state dimension");
  gen->add_option("--rank", gen_rank, "ginibre rank (defaults to dim)");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "also write the JSON to this file");

  CommonInputs check_in;
  CLI::App* check = app.add_subcommand(
      "check", "run the internal consistency identities on given inputs");
  add_poly_options(check, &check_in);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (exact->parsed())
      return cmd_exact(exact_in, exact_dump, exact_symmetrize, out);
    if (estimate->parsed())
      return cmd_estimate(est_in, est_shots, est_seed, est_method,
                          est_symmetrize, est_no_exact, out);
    if (purity->parsed())
      return cmd_purity(pur_state, pur_m, pur_method, pur_shots, pur_seed,
                        pur_cap, out);
    if (gen->parsed())
      return cmd_gen_state(gen_kind, gen_dim,
                           gen_rank > 0 ? std::optional<int>(gen_rank)
                                        : std::nullopt,
                           gen_seed, gen_out, out);
    if (check->parsed()) return cmd_check(check_in, out);
    err << "usage error: no command given\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace polyrho::cli
