#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ulearn {

// exit codes shared by all subcommands
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // config/flag validation failure
inline constexpr int kExitIo = 2;       // unwritable or unreadable artifacts

/// `run`: execute the configured campaign and write curves.csv, table.csv
/// and manifest.json under out_dir.
int cmd_run(const std::string& config_path, const std::string& out_dir,
            std::optional<std::uint64_t> seed_override, std::ostream& out,
            std::ostream& err);

/// `check`: verify the configured graph sequence is B-strongly connected on
/// a sampled horizon and report the delta diagnostic.
int cmd_check(const std::string& config_path, std::ostream& out,
              std::ostream& err);

struct Prop1Args {
  std::string p_star;  // comma-separated probabilities
  std::string p_alt;
  std::int64_t r1 = 100;
  std::int64_t r2 = 0;
  int trials = 500;
  std::uint64_t seed = 0;
};

/// `prop1`: empirical flip probability of the KL ordering under finite
/// evidence, plus the classical update's failure rate on flipped draws.
int cmd_prop1(const Prop1Args& args, std::ostream& out, std::ostream& err);

}  // namespace ulearn
