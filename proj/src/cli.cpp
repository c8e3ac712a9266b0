// Copyright 2026 The bosonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosonlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "bosonlab/architecture.hpp"
#include "bosonlab/cayley.hpp"
#include "bosonlab/gbs.hpp"
#include "bosonlab/noise.hpp"
#include "bosonlab/parallel.hpp"
#include "bosonlab/probability.hpp"
#include "bosonlab/routing.hpp"
#include "bosonlab/sampling.hpp"
#include "bosonlab/stats.hpp"

namespace bosonlab::cli {

using nlohmann::json;

namespace {

enum class Kind { kInt, kDouble, kString, kIntList, kStringList, kFlag };

struct FlagSpec {
  std::string name;
  Kind kind;
  json fallback;
  std::string help;
};

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<FlagSpec> flags;
};

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> table = {
      {"collision-ratio",
       "Collision-free ratio of sampled outcomes across circuit ensembles (CSV)",
       {{"modes", Kind::kInt, 64, "number of modes M"},
        {"photons", Kind::kIntList, json::array({4, 6, 8}), "photon numbers N"},
        {"reps", Kind::kIntList, json::array({1, 2, 3}), "repetitions q of (B B*)^q"},
        {"circuits", Kind::kInt, 100, "circuits per ensemble and q"},
        {"samples", Kind::kInt, 200, "samples per circuit and N"},
        {"ensembles", Kind::kStringList, json::array({"local", "haar"}),
         "ensembles: local, localperm, haar"},
        {"full-scale", Kind::kFlag, false,
         "M=256, N=4,8,12,16, q=1,2,3, 500 circuits x 500 samples"},
        {"assert-equivalence", Kind::kFlag, false,
         "exit 2 unless every local mean is within 3 combined standard errors of haar"}}},
      {"birthday-bound",
       "Collision probability under local-random times permutation vs 2N^2/M",
       {{"modes", Kind::kInt, 32, "number of modes M (M >= 2 N^2)"},
        {"photons", Kind::kInt, 3, "photon number N"},
        {"reps", Kind::kInt, 1, "repetitions q"},
        {"circuits", Kind::kInt, 200, "circuits"},
        {"samples", Kind::kInt, 200, "samples per circuit"}}},
      {"balls-bins",
       "Singleton statistics of N balls in M bins",
       {{"modes", Kind::kInt, 256, "bins M"},
        {"photons", Kind::kInt, 16, "balls N"},
        {"trials", Kind::kInt, 10000, "trials"},
        {"threshold", Kind::kDouble, -1.0,
         "tail threshold c N^lambda (default: half the Poissonised mean)"}}},
      {"route-permutation",
       "Route a permutation onto B B* and check the unitary",
       {{"modes", Kind::kInt, 8, "number of modes M"},
        {"perm", Kind::kString, "", "1-based image list, e.g. 3,1,2,4 (default: random)"}}},
      {"reduction-demo",
       "Extrapolate the Cayley path to theta = 1 and compare with the direct value",
       {{"modes", Kind::kInt, 2, "number of modes M"},
        {"photons", Kind::kInt, 1, "photon number N"},
        {"q0", Kind::kInt, 1, "repetitions of the worst-case circuit"},
        {"delta", Kind::kDouble, 0.05, "node interval [0, delta]"},
        {"precision", Kind::kString, "auto", "double, extended or auto"},
        {"identity", Kind::kFlag, false, "worst-case circuit = identity, s0 = t"},
        {"tolerance", Kind::kDouble, 1e-6, "pass threshold on the absolute error"}}},
      {"degree-check",
       "Verify the polynomial degree of p_s(V(theta) P1) Q(theta)",
       {{"modes", Kind::kInt, 4, "number of modes M"},
        {"photons", Kind::kInt, 2, "photon number N"},
        {"reps", Kind::kInt, 1, "repetitions q"}}},
      {"loss-check",
       "Lossy trajectories against p_s prod(1 - rho)",
       {{"modes", Kind::kInt, 4, "number of modes M"},
        {"photons", Kind::kInt, 2, "photon number N"},
        {"reps", Kind::kInt, 1, "repetitions q"},
        {"rho", Kind::kDouble, 0.15, "loss rate per channel"},
        {"samples", Kind::kInt, 200000, "trajectories"}}},
      {"gbs-check",
       "Hafnian, permanent and truncated-Fock views of the TMSV embedding",
       {{"m0", Kind::kInt, 2, "modes of the embedded circuit"},
        {"n0", Kind::kInt, 1, "photons of the embedded instance"},
        {"r", Kind::kDouble, 0.5, "squeezing parameter"},
        {"cutoff", Kind::kInt, 6, "Fock cutoff (total photons)"}}},
  };
  return table;
}

const CommandSpec& command(const std::string& name) {
  for (const auto& c : commands()) {
    if (c.name == name) return c;
  }
  throw UsageError("unknown subcommand '" + name + "'");
}

const FlagSpec& flag_spec(const CommandSpec& cmd, const std::string& name) {
  for (const auto& f : cmd.flags) {
    if (f.name == name) return f;
  }
  throw UsageError("subcommand " + cmd.name + " has no flag --" + name);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long long to_integer(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--" + flag + ": expected an integer, got '" + text + "'");
}

double to_real(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--" + flag + ": expected a number, got '" + text + "'");
}

// Brings a flag value (from the command line or a config file) to its
// canonical JSON type.
json normalize(const FlagSpec& spec, const json& value) {
  auto text_of = [&](const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  switch (spec.kind) {
    case Kind::kInt:
      if (value.is_number_integer()) return value;
      return to_integer(spec.name, text_of(value));
    case Kind::kDouble:
      if (value.is_number()) return value.get<double>();
      return to_real(spec.name, text_of(value));
    case Kind::kString:
      if (value.is_string()) return value;
      throw UsageError("--" + spec.name + ": expected a string");
    case Kind::kFlag:
      if (value.is_boolean()) return value;
      if (value == "true" || value == "1") return true;
      if (value == "false" || value == "0") return false;
      throw UsageError("--" + spec.name + ": expected true or false");
    case Kind::kIntList: {
      json out = json::array();
      if (value.is_array()) {
        for (const auto& v : value) {
          out.push_back(v.is_number_integer() ? v.get<long long>()
                                              : to_integer(spec.name, text_of(v)));
        }
      } else {
        for (const auto& item : split_list(text_of(value))) {
          out.push_back(to_integer(spec.name, item));
        }
      }
      return out;
    }
    case Kind::kStringList: {
      json out = json::array();
      if (value.is_array()) {
        for (const auto& v : value) out.push_back(text_of(v));
      } else {
        for (const auto& item : split_list(text_of(value))) out.push_back(item);
      }
      return out;
    }
  }
  return value;
}

// Typed access with the table default filled in.
class Flags {
 public:
  Flags(const RunConfig& config) : cmd_(command(config.subcommand)), raw_(config.flags) {
    for (const auto& [key, value] : raw_.items()) flag_spec(cmd_, key);
  }

  json get(const std::string& name) const {
    const FlagSpec& spec = flag_spec(cmd_, name);
    return raw_.contains(name) ? normalize(spec, raw_.at(name)) : spec.fallback;
  }
  int integer(const std::string& name) const { return get(name).get<int>(); }
  double real(const std::string& name) const { return get(name).get<double>(); }
  std::string text(const std::string& name) const { return get(name).get<std::string>(); }
  bool flag(const std::string& name) const { return get(name).get<bool>(); }
  std::vector<int> integers(const std::string& name) const {
    return get(name).get<std::vector<int>>();
  }
  std::vector<std::string> texts(const std::string& name) const {
    return get(name).get<std::vector<std::string>>();
  }

 private:
  const CommandSpec& cmd_;
  json raw_;
};

void emit(const RunConfig& config, const json& report, std::ostream& out) {
  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!config.out.empty()) {
    file = std::make_unique<std::ofstream>(config.out);
    if (!*file) throw UsageError("cannot open " + config.out + " for writing");
    sink = file.get();
  }
  if (config.format == "text") {
    for (const auto& [key, value] : report.items()) {
      *sink << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
    }
  } else {
    *sink << report.dump(2) << '\n';
  }
}

int cmd_collision_ratio(const RunConfig& config, const Flags& f, std::ostream& out,
                        std::ostream& err) {
  ExperimentConfig ec;
  ec.modes = f.integer("modes");
  ec.photons = f.integers("photons");
  ec.reps = f.integers("reps");
  ec.circuits = f.integer("circuits");
  ec.samples = f.integer("samples");
  ec.ensembles.clear();
  for (const auto& name : f.texts("ensembles")) ec.ensembles.push_back(parse_ensemble(name));
  if (f.flag("full-scale")) {
    ec.modes = 256;
    ec.photons = {4, 8, 12, 16};
    ec.reps = {1, 2, 3};
    ec.circuits = 500;
    ec.samples = 500;
  }
  log2_exact(ec.modes);
  ec.seed = config.seed;

  const std::vector<ExperimentRecord> records = collision_ratio_experiment(ec);
  if (config.out.empty()) {
    write_experiment_csv(out, records);
  } else {
    std::ofstream file(config.out);
    if (!file) throw UsageError("cannot open " + config.out + " for writing");
    write_experiment_csv(file, records);
  }

  const std::vector<ExperimentSummary> summary = summarize(records);
  bool equivalent = true;
  std::ostream& log = config.out.empty() ? err : out;
  for (const auto& s : summary) {
    log << s.ensemble << " q=" << s.reps << " N=" << s.photons << " mean=" << s.ratio.mean
        << " se=" << s.ratio.std_error << '\n';
    if (s.ensemble == "haar") continue;
    for (const auto& h : summary) {
      if (h.ensemble != "haar" || h.photons != s.photons) continue;
      const double se = std::hypot(s.ratio.std_error, h.ratio.std_error);
      if (std::abs(s.ratio.mean - h.ratio.mean) > 3.0 * se) equivalent = false;
    }
  }
  if (f.flag("assert-equivalence") && !equivalent) {
    log << "local and haar means differ by more than 3 standard errors\n";
    return kExitAssertion;
  }
  return kExitPass;
}

int cmd_birthday(const RunConfig& config, const Flags& f, std::ostream& out) {
  const int m = f.integer("modes"), n = f.integer("photons");
  log2_exact(m);
  Rng rng(config.seed);
  const BirthdayCheck check =
      birthday_bound_check(m, n, f.integer("circuits"), f.integer("samples"),
                           f.integer("reps"), rng);
  const bool uniform_ok = uniform_collision_bound_holds(m, n);
  emit(config,
       {{"modes", m},
        {"photons", n},
        {"collision_probability", check.collision_probability},
        {"std_error", check.std_error},
        {"bound", check.bound},
        {"uniform_bound_holds", uniform_ok},
        {"passed", check.passed && uniform_ok}},
       out);
  return check.passed && uniform_ok ? kExitPass : kExitAssertion;
}

int cmd_balls_bins(const RunConfig& config, const Flags& f, std::ostream& out) {
  const int m = f.integer("modes"), n = f.integer("photons"), trials = f.integer("trials");
  double threshold = f.real("threshold");
  if (threshold < 0.0) threshold = 0.5 * n * std::exp(-static_cast<double>(n) / m);
  Rng rng(config.seed);
  const BallsBinsReport r = balls_bins_singletons(m, n, trials, threshold, rng);
  // The finite-M mean sits O(N/M) above the Poissonised one.
  const double tolerance = 3.0 * r.singletons.std_error + static_cast<double>(n) / m;
  const bool mean_ok = std::abs(r.singletons.mean - r.poisson_mean) <= tolerance;
  const double tail_se = std::sqrt(r.tail_empirical * (1.0 - r.tail_empirical) / trials);
  const bool tail_ok = r.tail_empirical <= r.chernoff_bound + 3.0 * tail_se + 1.0 / trials;
  emit(config,
       {{"modes", m},
        {"balls", n},
        {"trials", trials},
        {"mean_singletons", r.singletons.mean},
        {"std_error", r.singletons.std_error},
        {"poisson_mean", r.poisson_mean},
        {"exact_mean", r.exact_mean},
        {"tolerance", tolerance},
        {"threshold", r.threshold},
        {"tail_empirical", r.tail_empirical},
        {"chernoff_bound", r.chernoff_bound},
        {"passed", mean_ok && tail_ok}},
       out);
  return mean_ok && tail_ok ? kExitPass : kExitAssertion;
}

int cmd_route(const RunConfig& config, const Flags& f, std::ostream& out) {
  const std::string text = f.text("perm");
  Rng rng(config.seed);
  const Permutation perm =
      text.empty() ? sample_permutation(f.integer("modes"), rng) : Permutation::parse_one_based(text);
  const Circuit circuit = route_permutation(perm);
  const double residual = max_abs_diff(circuit_unitary(circuit).matrix(), perm.matrix());
  json layers = json::array();
  std::size_t g = 0;
  int swaps = 0;
  for (const auto& layer : circuit.architecture().layers()) {
    std::string bits;
    for (std::size_t k = 0; k < layer.size(); ++k) {
      const bool swap = std::abs(circuit.gates()[g++](0, 1)) > 0.5;
      bits += swap ? '1' : '0';
      swaps += swap;
    }
    layers.push_back(bits);
  }
  const bool ok = residual <= 1e-10;
  emit(config,
       {{"modes", perm.size()},
        {"permutation", perm.str_one_based()},
        {"swaps", swaps},
        {"layers", layers},
        {"residual", residual},
        {"passed", ok}},
       out);
  return ok ? kExitPass : kExitAssertion;
}

int cmd_reduction(const RunConfig& config, const Flags& f, std::ostream& out) {
  ReductionOptions o;
  o.modes = f.integer("modes");
  o.photons = f.integer("photons");
  o.reps = f.integer("q0");
  o.delta = f.real("delta");
  o.precision = parse_precision(f.text("precision"));
  o.identity_worst_case = f.flag("identity");
  o.tolerance = f.real("tolerance");
  o.seed = config.seed;
  const ReductionReport r = reduction_demo(o);
  const bool ok = r.abs_error < o.tolerance;
  emit(config,
       {{"extrapolated", r.extrapolated},
        {"direct", r.direct},
        {"abs_error", r.abs_error},
        {"amplification", r.amplification},
        {"degree", r.degree},
        {"lagrange_amplification", r.lagrange_amplification},
        {"q_at_one", r.q_at_one},
        {"gates", r.gates},
        {"delta", r.delta},
        {"precision", r.precision},
        {"required_bits", r.required_bits},
        {"s0", r.s0},
        {"t", r.t},
        {"passed", ok}},
       out);
  return ok ? kExitPass : kExitAssertion;
}

int cmd_degree(const RunConfig& config, const Flags& f, std::ostream& out) {
  Rng rng(config.seed);
  const PathInstance inst =
      random_path_instance(f.integer("modes"), f.integer("photons"), f.integer("reps"), rng);
  const DegreeCheckReport r = rational_degree_check(inst);
  const bool ok = r.interval_residual < 1e-10 && r.circle_residual < 1e-10 &&
                  r.circle_residual_lower >= 1e-4;
  emit(config,
       {{"degree", r.degree},
        {"interval_residual", r.interval_residual},
        {"interval_residual_lower", r.interval_residual_lower},
        {"circle_radius", r.circle_radius},
        {"circle_residual", r.circle_residual},
        {"circle_residual_lower", r.circle_residual_lower},
        {"top_coefficient", r.top_coefficient},
        {"excess_coefficient", r.excess_coefficient},
        {"passed", ok}},
       out);
  return ok ? kExitPass : kExitAssertion;
}

int cmd_loss(const RunConfig& config, const Flags& f, std::ostream& out) {
  const int m = f.integer("modes"), n = f.integer("photons"), samples = f.integer("samples");
  Rng rng(config.seed);
  const Circuit circuit = random_local_circuit(build_kaleidoscope(m, f.integer("reps")), rng);
  const OutcomeConfig t = OutcomeConfig::first_modes(m, n);
  const LossModel loss = LossModel::uniform(circuit.gates().size(), f.real("rho"));
  const std::vector<LossySample> draws =
      lossy_sample_batch(circuit, t, loss, samples, split(RngHandle{config.seed}, 1));

  const ComplexUnitary u = circuit_unitary(circuit);
  const std::vector<OutcomeConfig> outcomes = enumerate_outcomes(m, n);
  std::map<OutcomeConfig, std::size_t> index;
  for (std::size_t i = 0; i < outcomes.size(); ++i) index[outcomes[i]] = i;
  // Cells: (s, no loss) for every s, plus one cell for "some channel fired".
  std::vector<std::uint64_t> counts(outcomes.size() + 1, 0);
  std::vector<double> probs(outcomes.size() + 1, 0.0);
  std::uint64_t flagged = 0;
  for (const auto& d : draws) {
    if (d.no_loss) {
      ++flagged;
      ++counts[index.at(d.outcome)];
    } else {
      ++counts.back();
    }
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    probs[i] = lossy_outcome_probability(u, outcomes[i], t, loss);
  }
  const double p0 = no_loss_probability(loss);
  probs.back() = 1.0 - p0;
  const TestResult joint = chi_square_gof(counts, probs);
  const double rate = static_cast<double>(flagged) / samples;
  // With p0 in {0, 1} the flag rate is deterministic and z is undefined.
  const bool random_flag = p0 > 0.0 && p0 < 1.0;
  const double z = random_flag ? (rate - p0) / std::sqrt(p0 * (1.0 - p0) / samples) : 0.0;
  const bool rate_ok = random_flag ? std::abs(z) < 4.0 : rate == p0;
  // Post-selection needs at least one loss-free trajectory.
  const bool ok = flagged > 0 && joint.p_value > 0.01 && rate_ok;
  emit(config,
       {{"modes", m},
        {"photons", n},
        {"gates", circuit.gates().size()},
        {"rho", f.real("rho")},
        {"samples", samples},
        {"no_loss_rate", rate},
        {"no_loss_probability", p0},
        {"no_loss_z", z},
        {"chi_square", joint.statistic},
        {"dof", joint.dof},
        {"p_value", joint.p_value},
        {"passed", ok}},
       out);
  return ok ? kExitPass : kExitAssertion;
}

int cmd_gbs(const RunConfig& config, const Flags& f, std::ostream& out) {
  const int m0 = f.integer("m0"), n0 = f.integer("n0"), cutoff = f.integer("cutoff");
  const double r = f.real("r");
  Rng rng(config.seed);
  const Circuit c0 = random_local_circuit(build_kaleidoscope(m0, 1), rng);
  const OutcomeConfig s0 = sample_collision_free_outcome(m0, n0, rng);
  const GbsReductionCheck check = verify_gbs_reduction(c0, s0, r);
  const BlowupFactor blow = blowup_factor(m0, n0, r);

  json report = {{"m0", m0},
                 {"n0", n0},
                 {"r", r},
                 {"s0", s0.str()},
                 {"circuit_outcome", check.circuit_outcome.str()},
                 {"hafnian_side", check.lhs},
                 {"permanent_side", check.rhs},
                 {"abs_diff", check.abs_diff},
                 {"blowup", blow.value},
                 {"blowup_log2", blow.log2_value}};
  report["blowup_closed_form"] = blow.closed_form ? json(*blow.closed_form) : json(nullptr);
  bool ok = check.abs_diff <= 1e-10;
  if (2 * m0 <= 8 && 2 * n0 <= cutoff) {
    const FockGbsResult fock =
        truncated_fock_gbs(circuit_unitary(build_tmsv_embedding(c0)), r, cutoff);
    const double pf = fock_probability(fock, check.circuit_outcome);
    const double rel = std::abs(pf - check.lhs) / std::max(check.lhs, 1e-300);
    report["fock_side"] = pf;
    report["fock_rel_diff"] = rel;
    report["truncation_bound"] = fock.truncation_bound;
    ok = ok && rel <= 1e-6;
  } else {
    report["fock_side"] = nullptr;
  }
  report["passed"] = ok;
  emit(config, report, out);
  return ok ? kExitPass : kExitAssertion;
}

}  // namespace

void to_json(json& j, const RunConfig& c) {
  j = c.flags;
  j["subcommand"] = c.subcommand;
  j["seed"] = c.seed;
  if (c.threads) j["threads"] = *c.threads;
  if (!c.out.empty()) j["out"] = c.out;
  j["format"] = c.format;
}

void from_json(const json& j, RunConfig& c) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  c = RunConfig{};
  for (const auto& [key, value] : j.items()) {
    if (key == "subcommand") {
      c.subcommand = value.get<std::string>();
    } else if (key == "seed") {
      c.seed = value.is_string() ? std::stoull(value.get<std::string>())
                                 : value.get<std::uint64_t>();
    } else if (key == "threads") {
      c.threads = value.get<int>();
    } else if (key == "out") {
      c.out = value.get<std::string>();
    } else if (key == "format") {
      c.format = value.get<std::string>();
    } else {
      c.flags[key] = value;
    }
  }
}

std::vector<std::string> subcommand_names() {
  std::vector<std::string> out;
  for (const auto& c : commands()) out.push_back(c.name);
  return out;
}

ParseResult parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"bosonlab: shallow-depth linear-optical boson sampling toolkit", "bosonlab"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string config_path, seed_text, threads_text, out_path, format;
  auto* opt_config = app.add_option("--config", config_path, "JSON run configuration");
  auto* opt_seed = app.add_option("--seed", seed_text, "master seed (default 1)");
  auto* opt_threads =
      app.add_option("--threads", threads_text, "OpenMP threads (default: BOSONLAB_THREADS)");
  auto* opt_out = app.add_option("--out", out_path, "output file (default: stdout)");
  auto* opt_format = app.add_option("--format", format, "json or text");
  (void)opt_config;

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, CLI::Option*>> options;
  std::map<std::string, CLI::App*> subs;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    subs[cmd.name] = sub;
    for (const auto& spec : cmd.flags) {
      std::string& slot = values[cmd.name][spec.name];
      std::string help = spec.help;
      if (spec.kind != Kind::kFlag) help += " (default " + spec.fallback.dump() + ")";
      if (spec.kind == Kind::kFlag) {
        options[cmd.name][spec.name] = sub->add_flag("--" + spec.name)->description(help);
      } else {
        options[cmd.name][spec.name] = sub->add_option("--" + spec.name, slot, help);
      }
    }
  }

  ParseResult result;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    result.help_requested = true;
    result.help_text = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.help_requested = true;
    result.help_text = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig config;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot read config file " + config_path);
    try {
      config = json::parse(in).get<RunConfig>();
    } catch (const json::exception& e) {
      throw UsageError(std::string("config file: ") + e.what());
    }
  }
  if (opt_seed->count()) {
    config.seed = static_cast<std::uint64_t>(to_integer("seed", seed_text));
  }
  if (opt_threads->count()) config.threads = static_cast<int>(to_integer("threads", threads_text));
  if (opt_out->count()) config.out = out_path;
  if (opt_format->count()) config.format = format;

  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    if (!config.subcommand.empty() && config.subcommand != name) config.flags = json::object();
    config.subcommand = name;
    const CommandSpec& cmd = command(name);
    for (const auto& spec : cmd.flags) {
      CLI::Option* opt = options[name][spec.name];
      if (!opt->count()) continue;
      config.flags[spec.name] =
          spec.kind == Kind::kFlag ? json(true) : normalize(spec, values[name][spec.name]);
    }
  }
  if (config.subcommand.empty()) {
    throw UsageError("no subcommand given; run with --help for the list");
  }
  if (config.format != "json" && config.format != "text") {
    throw UsageError("--format must be json or text");
  }
  result.config = std::move(config);
  return result;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  configure_threads(config.threads);
  const Flags flags(config);
  const std::string& name = config.subcommand;
  if (name == "collision-ratio") return cmd_collision_ratio(config, flags, out, err);
  if (name == "birthday-bound") return cmd_birthday(config, flags, out);
  if (name == "balls-bins") return cmd_balls_bins(config, flags, out);
  if (name == "route-permutation") return cmd_route(config, flags, out);
  if (name == "reduction-demo") return cmd_reduction(config, flags, out);
  if (name == "degree-check") return cmd_degree(config, flags, out);
  if (name == "loss-check") return cmd_loss(config, flags, out);
  if (name == "gbs-check") return cmd_gbs(config, flags, out);
  throw UsageError("unknown subcommand '" + name + "'");
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const ParseResult parsed = parse_command_line(argc, argv);
    if (parsed.help_requested) {
      out << parsed.help_text;
      return kExitPass;
    }
    return run(parsed.config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace bosonlab::cli
