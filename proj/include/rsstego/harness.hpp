#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "rsstego/channel.hpp"
#include "rsstego/rs_codec.hpp"
#include "rsstego/stego.hpp"

namespace rsstego {

struct ExperimentConfig {
  explicit ExperimentConfig(CodeParams p) : params(std::move(p)) {}

  CodeParams params;
  int stego_count = 2;
  Placement placement = Placement::parity;
  ChannelSpec channel;
  int trials = 100;
  std::uint64_t master_seed = 0;
};

struct TrialRecord {
  std::uint64_t trial_index = 0;
  bool data_ok = false;
  bool decode_failure = false;
  int message_symbols_ok = 0;
  std::vector<int> stego_positions;
  std::vector<int> error_positions;
};

struct ExperimentReport {
  int n = 0;
  int trials = 0;
  int stego_count = 0;
  int decode_failures = 0;
  double pct_decoded_info = 0.0;              // %D_i, trials with every data symbol exact
  double pct_decoded_secret = 0.0;            // %DS_M, message symbols exact over all trials
  double pct_decoded_secret_per_trial = 0.0;  // trials with the whole message exact
  std::vector<std::uint64_t> error_location_hist;
  std::vector<std::uint64_t> stego_location_hist;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Throws BudgetExceeded when stego_count plus the channel's worst case
/// exceeds t, InvalidArgument on negative counts.
void validate(const ExperimentConfig& config);

/// Random data and message, per-trial key, encode -> embed -> noise ->
/// decode -> extract, then compare with what was sent.
TrialRecord run_trial(const ReedSolomon& codec, const ExperimentConfig& config, std::uint64_t trial_index);
TrialRecord run_trial(const ExperimentConfig& config, std::uint64_t trial_index);

ExperimentReport run_experiment(const ExperimentConfig& config);

/// Writes report.csv, error_hist.csv and stego_hist.csv into `dir`,
/// creating it if needed. Throws IoError.
void export_report(const ExperimentReport& report, const std::filesystem::path& dir);

/// Shortest round-trip decimal, always with a fractional part ("100.0").
std::string format_decimal(double v);

/// Pearson chi-square of a histogram against the uniform distribution.
double chi_square_uniform(const std::vector<std::uint64_t>& hist);

}  // namespace rsstego
