// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qillum/io.hpp"
#include "qillum/report.hpp"
#include "qillum/version.hpp"

namespace {

using namespace qillum;

struct ScenarioCli {
  double eta = 0.0;
  double b = 0.0;
  int d = 1;
  double prior0 = 0.5;
  std::string psi = "uniform";
  std::string config;
  std::uint64_t seed = 0;

  CLI::Option* eta_opt = nullptr;
  CLI::Option* b_opt = nullptr;
  CLI::Option* d_opt = nullptr;
  CLI::Option* prior_opt = nullptr;
  CLI::Option* psi_opt = nullptr;
  CLI::Option* config_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

void add_scenario_flags(CLI::App* cmd, ScenarioCli& s, bool with_psi = true) {
  s.eta_opt = cmd->add_option("--eta", s.eta, "object reflectivity");
  s.b_opt = cmd->add_option("--b", s.b, "thermal photon weight per mode");
  s.d_opt = cmd->add_option("--d", s.d, "mode count");
  s.prior_opt = cmd->add_option("--prior0", s.prior0, "prior of object absent");
  if (with_psi) {
    s.psi_opt = cmd->add_option(
        "--psi", s.psi, "signal state: 'uniform' or comma-separated re:im list");
  }
  s.config_opt = cmd->add_option("--config", s.config, "scenario config file")
                     ->check(CLI::ExistingFile);
  s.seed_opt = cmd->add_option("--seed", s.seed, "RNG seed");
}

struct ResolvedScenario {
  ScenarioParams params;
  bool psi_uniform = true;
  std::vector<std::complex<double>> psi;
  std::optional<std::uint64_t> seed;
};

ResolvedScenario resolve_scenario(const ScenarioCli& s) {
  ResolvedScenario r;
  if (s.config_opt && s.config_opt->count() > 0) {
    std::ifstream in(s.config);
    if (!in) throw ConfigError("cannot open config file '" + s.config + "'");
    const ScenarioFile file = parse_scenario_file(in);
    if (file.eta) r.params.reflectivity = *file.eta;
    if (file.b) r.params.thermal_weight = *file.b;
    if (file.d) r.params.mode_count = *file.d;
    if (file.prior0) r.params.prior_absent = *file.prior0;
    if (file.seed) r.seed = *file.seed;
    if (file.psi) {
      r.psi = *file.psi;
      r.psi_uniform = false;
    } else if (file.psi_uniform) {
      r.psi_uniform = true;
    }
  }
  if (s.eta_opt && s.eta_opt->count() > 0) r.params.reflectivity = s.eta;
  if (s.b_opt && s.b_opt->count() > 0) r.params.thermal_weight = s.b;
  if (s.d_opt && s.d_opt->count() > 0) r.params.mode_count = s.d;
  if (s.prior_opt && s.prior_opt->count() > 0) r.params.prior_absent = s.prior0;
  if (s.seed_opt && s.seed_opt->count() > 0) r.seed = s.seed;
  if (s.psi_opt && s.psi_opt->count() > 0) {
    // Route the flag through the config parser so both spellings share one
    // grammar and one diagnostic.
    std::istringstream line("psi = " + s.psi);
    const ScenarioFile file = parse_scenario_file(line);
    if (file.psi) {
      r.psi = *file.psi;
      r.psi_uniform = false;
    } else {
      r.psi_uniform = true;
    }
  }
  return r;
}

SignalSpec make_signal(const ResolvedScenario& r) {
  if (r.psi_uniform) return SignalSpec::uniform(r.params.mode_count);
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(r.psi.size()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    amps(i) = r.psi[static_cast<std::size_t>(i)];
  }
  return SignalSpec(std::move(amps));
}

std::uint64_t require_seed(const ResolvedScenario& r) {
  if (!r.seed) {
    throw ConfigError("--seed is required (or a 'seed' line in the config file)");
  }
  return *r.seed;
}

std::vector<Kind> parse_kinds(const std::string& value) {
  if (value == "unentangled") return {Kind::Unentangled};
  if (value == "entangled") return {Kind::Entangled};
  if (value == "both") return {Kind::Unentangled, Kind::Entangled};
  throw ConfigError("unknown kind '" + value + "'");
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  fn(out);
}

void dump_pair_states(const HypothesisPair& pair, const std::string& prefix) {
  const std::string base = prefix + "." + to_string(pair.kind);
  std::ofstream absent(base + ".absent.txt");
  std::ofstream present(base + ".present.txt");
  if (!absent || !present) {
    throw ConfigError("cannot open state dump files at prefix '" + base + "'");
  }
  write_matrix_dump(absent, pair.absent.entries());
  write_matrix_dump(present, pair.present.entries());
}

HypothesisPair build_pair(const ResolvedScenario& r, Kind kind) {
  return kind == Kind::Unentangled
             ? unentangled_pair(r.params, make_signal(r))
             : entangled_pair(r.params);
}

struct EvalOptions {
  ScenarioCli scenario;
  std::string kind = "both";
  std::string output;
  std::string format = "csv";
  bool dump_states = false;
};

void add_eval_flags(CLI::App* cmd, EvalOptions& o) {
  add_scenario_flags(cmd, o.scenario);
  cmd->add_option("--kind", o.kind, "unentangled, entangled, or both")
      ->check(CLI::IsMember({"unentangled", "entangled", "both"}));
  cmd->add_option("--output", o.output, "output path (default stdout)");
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--dump-states", o.dump_states,
                "write the hypothesis matrices next to the output");
}

std::string dump_prefix(const std::string& output) {
  return output.empty() ? "states" : output + ".states";
}

int run_chernoff(const EvalOptions& o) {
  const ResolvedScenario r = resolve_scenario(o.scenario);
  const std::vector<Kind> kinds = parse_kinds(o.kind);

  struct Row {
    Kind kind;
    ChernoffResult res;
  };
  std::vector<Row> rows;
  for (Kind kind : kinds) {
    const HypothesisPair pair = build_pair(r, kind);
    rows.push_back(Row{kind, chernoff_numeric(pair)});
    if (o.dump_states) dump_pair_states(pair, dump_prefix(o.output));
  }

  with_output(o.output, [&](std::ostream& out) {
    if (o.format == "csv") {
      out << "# qillum " << kVersion << "\n";
      out << "kind,q,s_star,exponent\n";
      for (const Row& row : rows) {
        out << to_string(row.kind) << "," << fmt17(row.res.q) << ","
            << fmt17(row.res.s_star) << "," << fmt17(row.res.exponent) << "\n";
      }
    } else {
      nlohmann::ordered_json doc;
      doc["version"] = kVersion;
      doc["rows"] = nlohmann::ordered_json::array();
      for (const Row& row : rows) {
        nlohmann::ordered_json j;
        j["kind"] = to_string(row.kind);
        j["q"] = row.res.q;
        j["s_star"] = row.res.s_star;
        j["exponent"] = row.res.exponent;
        doc["rows"].push_back(std::move(j));
      }
      out << doc.dump(2) << "\n";
    }
  });
  return 0;
}

int run_helstrom(const EvalOptions& o) {
  const ResolvedScenario r = resolve_scenario(o.scenario);
  const std::vector<Kind> kinds = parse_kinds(o.kind);

  struct Row {
    Kind kind;
    double p_error;
  };
  std::vector<Row> rows;
  for (Kind kind : kinds) {
    const HypothesisPair pair = build_pair(r, kind);
    const HelstromResult res =
        helstrom(pair, r.params.prior_absent, r.params.prior_present());
    rows.push_back(Row{kind, res.p_error});
    if (o.dump_states) dump_pair_states(pair, dump_prefix(o.output));
  }

  with_output(o.output, [&](std::ostream& out) {
    if (o.format == "csv") {
      out << "# qillum " << kVersion << "\n";
      out << "kind,prior0,p_error\n";
      for (const Row& row : rows) {
        out << to_string(row.kind) << "," << fmt17(r.params.prior_absent)
            << "," << fmt17(row.p_error) << "\n";
      }
    } else {
      nlohmann::ordered_json doc;
      doc["version"] = kVersion;
      doc["rows"] = nlohmann::ordered_json::array();
      for (const Row& row : rows) {
        nlohmann::ordered_json j;
        j["kind"] = to_string(row.kind);
        j["prior0"] = r.params.prior_absent;
        j["p_error"] = row.p_error;
        doc["rows"].push_back(std::move(j));
      }
      out << doc.dump(2) << "\n";
    }
  });
  return 0;
}

int run_probs(const EvalOptions& o) {
  const ResolvedScenario r = resolve_scenario(o.scenario);
  const std::vector<Kind> kinds = parse_kinds(o.kind);

  std::vector<TrialOutcomeModel> rows;
  for (Kind kind : kinds) {
    rows.push_back(conditional_probs(r.params, kind));
    if (o.dump_states) dump_pair_states(build_pair(r, kind), dump_prefix(o.output));
  }

  with_output(o.output, [&](std::ostream& out) {
    if (o.format == "csv") {
      out << "# qillum " << kVersion << "\n";
      out << "kind,p_yes_given_absent,p_yes_given_present\n";
      for (const TrialOutcomeModel& m : rows) {
        out << to_string(m.kind) << "," << fmt17(m.p_yes_given_absent) << ","
            << fmt17(m.p_yes_given_present) << "\n";
      }
    } else {
      nlohmann::ordered_json doc;
      doc["version"] = kVersion;
      doc["rows"] = nlohmann::ordered_json::array();
      for (const TrialOutcomeModel& m : rows) {
        nlohmann::ordered_json j;
        j["kind"] = to_string(m.kind);
        j["p_yes_given_absent"] = m.p_yes_given_absent;
        j["p_yes_given_present"] = m.p_yes_given_present;
        doc["rows"].push_back(std::move(j));
      }
      out << doc.dump(2) << "\n";
    }
  });
  return 0;
}

struct SweepOptions {
  std::vector<double> etas;
  std::vector<double> bs;
  std::vector<int> ds;
  std::string kind = "both";
  double prior0 = 0.5;
  std::string output;
  std::string format = "csv";
};

int run_sweep_cmd(const SweepOptions& o) {
  const std::vector<SweepRow> rows =
      run_sweep(o.etas, o.bs, o.ds, parse_kinds(o.kind), o.prior0);
  with_output(o.output, [&](std::ostream& out) {
    if (o.format == "csv") {
      write_sweep_csv(out, rows);
    } else {
      write_sweep_json(out, rows);
    }
  });
  return 0;
}

struct SimulateOptions {
  ScenarioCli scenario;
  std::string kind = "both";
  std::string truth = "both";
  std::string rule = "sprt";
  double alpha = 0.01;
  double beta = 0.01;
  int replicas = 1000;
  int max_shots = 1000000;
  std::string output;
  std::string format = "csv";
};

int run_simulate(const SimulateOptions& o) {
  const ResolvedScenario r = resolve_scenario(o.scenario);
  const std::uint64_t seed = require_seed(r);
  const std::vector<Kind> kinds = parse_kinds(o.kind);
  std::vector<Truth> truths;
  if (o.truth == "present") {
    truths = {Truth::Present};
  } else if (o.truth == "absent") {
    truths = {Truth::Absent};
  } else {
    truths = {Truth::Present, Truth::Absent};
  }
  const StopRule rule =
      o.rule == "sprt" ? StopRule::Sequential : StopRule::FirstPhoton;

  TrialConfig config;
  config.seed = seed;
  config.alpha = o.alpha;
  config.beta = o.beta;
  config.max_shots = o.max_shots;
  config.replicas = o.replicas;

  std::vector<CampaignRow> rows;
  for (Kind kind : kinds) {
    const TrialOutcomeModel model = conditional_probs(r.params, kind);
    for (Truth truth : truths) {
      CampaignRow row;
      row.kind = kind;
      row.truth = truth;
      row.eta = r.params.reflectivity;
      row.b = r.params.thermal_weight;
      row.d = r.params.mode_count;
      row.alpha = o.alpha;
      row.beta = o.beta;
      row.summary = campaign(model, truth, config, rule);
      row.seed = seed;
      rows.push_back(std::move(row));
    }
  }

  with_output(o.output, [&](std::ostream& out) {
    if (o.format == "csv") {
      write_campaign_csv(out, rows);
    } else {
      write_campaign_json(out, rows);
    }
  });
  return 0;
}

struct ImageOptions {
  ScenarioCli scenario;
  std::string map_path;
  int shots = 1000;
  double threshold = 0.0;
  CLI::Option* threshold_opt = nullptr;
  std::string kind = "unentangled";
  bool compare = false;
  std::string pgm;
  std::string output;
  std::string format = "csv";
};

int run_image(const ImageOptions& o) {
  const ResolvedScenario r = resolve_scenario(o.scenario);
  const std::uint64_t seed = require_seed(r);

  std::ifstream map_in(o.map_path);
  if (!map_in) throw ConfigError("cannot open map file '" + o.map_path + "'");
  const ReflectivityMap map = read_map(map_in);

  if (o.compare) {
    const ModeComparison cmp =
        compare_modes(map, r.params.thermal_weight, r.params.mode_count,
                      o.shots, seed);
    with_output(o.output, [&](std::ostream& out) {
      if (o.format == "csv") {
        write_comparison_csv(out, cmp);
      } else {
        write_comparison_json(out, cmp);
      }
    });
    return 0;
  }

  if (o.threshold_opt->count() == 0) {
    throw ConfigError("--threshold is required unless --compare is set");
  }
  const std::vector<Kind> kinds = parse_kinds(o.kind);
  if (kinds.size() != 1) {
    throw ConfigError("image scans take a single --kind");
  }

  ImagingConfig config;
  config.shots_per_pixel = o.shots;
  config.kind = kinds.front();
  config.thermal_weight = r.params.thermal_weight;
  config.mode_count = r.params.mode_count;
  config.threshold = o.threshold;
  config.seed = seed;

  const ImageResult result = scan_image(map, config);
  if (!result.threshold_warnings.empty()) {
    std::cerr << "warning: threshold " << fmt17(o.threshold)
              << " does not separate the hypotheses at "
              << result.threshold_warnings.size() << " pixel(s):";
    const std::size_t shown = std::min<std::size_t>(
        result.threshold_warnings.size(), 16);
    for (std::size_t i = 0; i < shown; ++i) {
      std::cerr << " " << result.threshold_warnings[i];
    }
    if (shown < result.threshold_warnings.size()) std::cerr << " ...";
    std::cerr << "\n";
  }

  with_output(o.output, [&](std::ostream& out) {
    write_grid(out, result.width, result.height, result.yes_fraction);
    out << "pixel_error_rate=" << fmt17(result.pixel_error_rate) << "\n";
  });
  if (!o.pgm.empty()) {
    std::ofstream pgm(o.pgm);
    if (!pgm) throw ConfigError("cannot open PGM output '" + o.pgm + "'");
    write_pgm(pgm, result);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum illumination scenario toolkit"};
  app.require_subcommand(1);

  EvalOptions chernoff_opts;
  CLI::App* chernoff_cmd =
      app.add_subcommand("chernoff", "minimized overlap bound per kind");
  add_eval_flags(chernoff_cmd, chernoff_opts);

  EvalOptions helstrom_opts;
  CLI::App* helstrom_cmd =
      app.add_subcommand("helstrom", "single-shot optimal error per kind");
  add_eval_flags(helstrom_cmd, helstrom_opts);

  EvalOptions probs_opts;
  CLI::App* probs_cmd =
      app.add_subcommand("probs", "per-shot outcome probabilities per kind");
  add_eval_flags(probs_cmd, probs_opts);

  SweepOptions sweep_opts;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Cartesian parameter grid report");
  sweep_cmd->add_option("--eta", sweep_opts.etas, "reflectivity list")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--b", sweep_opts.bs, "thermal weight list")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--d", sweep_opts.ds, "mode count list")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--kind", sweep_opts.kind, "unentangled, entangled, or both")
      ->check(CLI::IsMember({"unentangled", "entangled", "both"}));
  sweep_cmd->add_option("--prior0", sweep_opts.prior0, "prior of object absent");
  sweep_cmd->add_option("--output", sweep_opts.output, "output path (default stdout)");
  sweep_cmd->add_option("--format", sweep_opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  SimulateOptions sim_opts;
  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "Monte Carlo detection campaigns");
  add_scenario_flags(sim_cmd, sim_opts.scenario, false);
  sim_cmd->add_option("--kind", sim_opts.kind, "unentangled, entangled, or both")
      ->check(CLI::IsMember({"unentangled", "entangled", "both"}));
  sim_cmd->add_option("--truth", sim_opts.truth, "present, absent, or both")
      ->check(CLI::IsMember({"present", "absent", "both"}));
  sim_cmd->add_option("--rule", sim_opts.rule, "stopping rule")
      ->check(CLI::IsMember({"sprt", "first-photon"}));
  sim_cmd->add_option("--alpha", sim_opts.alpha, "target false-alarm probability");
  sim_cmd->add_option("--beta", sim_opts.beta, "target miss probability");
  sim_cmd->add_option("--replicas", sim_opts.replicas, "independent replicas");
  sim_cmd->add_option("--max-shots", sim_opts.max_shots, "per-replica shot cap");
  sim_cmd->add_option("--output", sim_opts.output, "output path (default stdout)");
  sim_cmd->add_option("--format", sim_opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  ImageOptions image_opts;
  CLI::App* image_cmd =
      app.add_subcommand("image", "per-pixel detection over a reflectivity map");
  add_scenario_flags(image_cmd, image_opts.scenario, false);
  image_cmd->add_option("--map", image_opts.map_path, "reflectivity map file")
      ->required()
      ->check(CLI::ExistingFile);
  image_cmd->add_option("--shots", image_opts.shots, "shots per pixel");
  image_opts.threshold_opt = image_cmd->add_option(
      "--threshold", image_opts.threshold, "yes-fraction decision threshold");
  image_cmd->add_option("--kind", image_opts.kind, "unentangled or entangled")
      ->check(CLI::IsMember({"unentangled", "entangled"}));
  image_cmd->add_flag("--compare", image_opts.compare,
                      "matched-budget comparison of both kinds");
  image_cmd->add_option("--pgm", image_opts.pgm, "write detected map as PGM");
  image_cmd->add_option("--output", image_opts.output, "output path (default stdout)");
  image_cmd->add_option("--format", image_opts.format,
                        "csv or json (compare mode only)")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(chernoff_cmd)) return run_chernoff(chernoff_opts);
    if (app.got_subcommand(helstrom_cmd)) return run_helstrom(helstrom_opts);
    if (app.got_subcommand(probs_cmd)) return run_probs(probs_opts);
    if (app.got_subcommand(sweep_cmd)) return run_sweep_cmd(sweep_opts);
    if (app.got_subcommand(sim_cmd)) return run_simulate(sim_opts);
    if (app.got_subcommand(image_cmd)) return run_image(image_opts);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
