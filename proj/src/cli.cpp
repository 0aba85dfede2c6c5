#include "ulearn/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "ulearn/config.hpp"
#include "ulearn/csv.hpp"
#include "ulearn/experiments.hpp"
#include "ulearn/netgraph.hpp"
#include "ulearn/rng.hpp"
#include "ulearn/version.hpp"

namespace ulearn {

namespace {

namespace fs = std::filesystem;

bool write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.flush();
  return static_cast<bool>(out);
}

ProbabilityVector parse_distribution_flag(const std::string& text,
                                          const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size())
      throw std::invalid_argument(flag + ": '" + item + "' is not a number");
    values.push_back(v);
  }
  if (values.size() < 2)
    throw std::invalid_argument(flag + ": need at least two probabilities");
  return ProbabilityVector(
      Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size())));
}

}  // namespace

int cmd_run(const std::string& config_path, const std::string& out_dir,
            std::optional<std::uint64_t> seed_override, std::ostream& out,
            std::ostream& err) {
  ExperimentConfig config;
  try {
    config = load_config(config_path);
    if (seed_override) config.seed = *seed_override;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) {
    err << "error: cannot create output directory '" << out_dir << "'\n";
    return kExitIo;
  }

  const auto start = std::chrono::steady_clock::now();
  const CampaignResult campaign = run_campaign(config);
  const double duration =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  std::ostringstream curves, table;
  write_curves_csv(campaign, curves);
  write_table_csv(config, campaign, table);

  const fs::path dir(out_dir);
  nlohmann::json manifest;
  manifest["version"] = kVersion;
  manifest["config"] = config_to_json(config);
  manifest["seed"] = config.seed;
  auto trial_seeds = nlohmann::json::array();
  for (int t = 0; t < config.trials; ++t)
    trial_seeds.push_back(stream_seed(config.seed, "trial", static_cast<std::uint64_t>(t)));
  manifest["trial_seeds"] = std::move(trial_seeds);
  manifest["artifacts"] = {{"curves", (dir / "curves.csv").string()},
                           {"table", (dir / "table.csv").string()}};
  manifest["duration_seconds"] = duration;

  if (!write_file(dir / "curves.csv", curves.str()) ||
      !write_file(dir / "table.csv", table.str()) ||
      !write_file(dir / "manifest.json", manifest.dump(2) + "\n")) {
    err << "error: cannot write artifacts under '" << out_dir << "'\n";
    return kExitIo;
  }

  out << "wrote " << (dir / "curves.csv").string() << ", "
      << (dir / "table.csv").string() << ", "
      << (dir / "manifest.json").string() << '\n';
  for (int t = 0; t < config.hypothesis_count(); ++t)
    out << "hypothesis " << t << ": mean final point "
        << format_double(campaign.mean_final[t]) << " (stderr "
        << format_double(campaign.stderr_final[t]) << ")\n";
  return kExitOk;
}

int cmd_check(const std::string& config_path, std::ostream& out,
              std::ostream& err) {
  ExperimentConfig config;
  try {
    config = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  std::optional<GraphSequence> seq_slot;
  try {
    seq_slot = config.graph.build(config.agents, stream_seed(config.seed, "graph"));
  } catch (const std::exception& e) {
    err << "error: graph: " << e.what() << '\n';
    return kExitInvalid;
  }
  const GraphSequence& seq = *seq_slot;

  const long b = seq.window();
  const long horizon = std::max<long>(20 * b - 1, 99);
  const bool connected = check_b_strong_connectivity(seq, horizon);
  out << "graph " << config.graph.label() << ", m=" << config.agents
      << ", B=" << b << ": "
      << (connected ? "B-strongly connected" : "NOT B-strongly connected")
      << " on horizon " << horizon << '\n';
  if (!connected) return kExitInvalid;

  const double delta = delta_diagnostic(seq, std::min<long>(horizon, 200));
  out << "delta = " << format_double(delta)
      << " (lower bound " << format_double(delta_lower_bound(config.agents, seq.window()))
      << ")\n";
  return kExitOk;
}

int cmd_prop1(const Prop1Args& args, std::ostream& out, std::ostream& err) {
  if (args.trials < 1) {
    err << "error: --trials must be >= 1\n";
    return kExitInvalid;
  }
  try {
    const ProbabilityVector p_star = parse_distribution_flag(args.p_star, "--p-star");
    const ProbabilityVector p_alt = parse_distribution_flag(args.p_alt, "--p-alt");
    const Prop1Result r = proposition1_demo(p_star, p_alt, args.r1, args.r2,
                                            args.trials, args.seed);
    out << "flip probability: " << format_double(r.flip_probability) << " ("
        << r.flipped << "/" << r.trials << " draws)\n";
    out << "classical update failure rate among flipped draws: "
        << format_double(r.classical_failure_rate) << '\n';
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace ulearn
