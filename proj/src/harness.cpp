#include "rsstego/harness.hpp"

#include <charconv>
#include <fstream>
#include <numeric>

#include "rsstego/rng.hpp"

namespace rsstego {

void validate(const ExperimentConfig& config) {
  if (config.trials < 0) throw Error(Errc::invalid_argument, "trials must be non-negative");
  const int channel = max_affected_symbols(config.channel, config.params.m());
  if (config.stego_count < 0) throw Error(Errc::invalid_argument, "stego_count must be non-negative");
  if (config.stego_count + channel > config.params.t()) {
    throw Error(Errc::budget_exceeded, "stego_count " + std::to_string(config.stego_count) + " + channel " +
                                           std::to_string(channel) + " > t = " + std::to_string(config.params.t()));
  }
}

TrialRecord run_trial(const ReedSolomon& codec, const ExperimentConfig& config, std::uint64_t trial_index) {
  const CodeParams& params = codec.params();
  const GaloisField& f = params.field();

  SplitMix64 data_rng = derive_stream(config.master_seed, trial_index, StreamDomain::data);
  std::vector<Element> data(static_cast<std::size_t>(params.k()));
  for (auto& d : data) d = Element(data_rng.below(f.size()));

  SplitMix64 msg_rng = derive_stream(config.master_seed, trial_index, StreamDomain::message);
  SecretMessage message;
  message.symbols.resize(static_cast<std::size_t>(config.stego_count));
  for (auto& s : message.symbols) s = Element(msg_rng.below(f.size()));

  const StegoKey key =
      key_for_codeword(params, config.master_seed, trial_index, config.stego_count, config.placement);

  const Codeword clean = codec.encode(data);
  const StegoCodeword stego = embed(params, clean, key, message);
  const NoisyWord received = apply_noise(f, stego.word, config.channel, trial_index);
  const ExtractResult got = extract(codec, received.noisy, key);

  TrialRecord rec;
  rec.trial_index = trial_index;
  rec.decode_failure = got.diagnostics.failure;
  rec.data_ok = !got.diagnostics.failure && got.data == data;
  for (std::size_t l = 0; l < message.symbols.size(); ++l) {
    if (got.message.symbols[l] == message.symbols[l]) ++rec.message_symbols_ok;
  }
  rec.stego_positions = key.positions;
  rec.error_positions = received.event.affected_positions;
  return rec;
}

TrialRecord run_trial(const ExperimentConfig& config, std::uint64_t trial_index) {
  validate(config);
  return run_trial(ReedSolomon(config.params), config, trial_index);
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  validate(config);
  const ReedSolomon codec(config.params);
  const int n = config.params.n();

  ExperimentReport rep;
  rep.n = n;
  rep.trials = config.trials;
  rep.stego_count = config.stego_count;
  rep.error_location_hist.assign(static_cast<std::size_t>(n), 0);
  rep.stego_location_hist.assign(static_cast<std::size_t>(n), 0);

  std::uint64_t data_ok = 0;
  std::uint64_t symbols_ok = 0;
  std::uint64_t messages_ok = 0;
  for (int i = 0; i < config.trials; ++i) {
    const TrialRecord rec = run_trial(codec, config, static_cast<std::uint64_t>(i));
    data_ok += rec.data_ok ? 1 : 0;
    symbols_ok += static_cast<std::uint64_t>(rec.message_symbols_ok);
    messages_ok += rec.message_symbols_ok == config.stego_count ? 1 : 0;
    rep.decode_failures += rec.decode_failure ? 1 : 0;
    for (int p : rec.error_positions) ++rep.error_location_hist[static_cast<std::size_t>(p)];
    for (int p : rec.stego_positions) ++rep.stego_location_hist[static_cast<std::size_t>(p)];
  }

  if (config.trials > 0) {
    const double trials = config.trials;
    rep.pct_decoded_info = 100.0 * static_cast<double>(data_ok) / trials;
    rep.pct_decoded_secret_per_trial = 100.0 * static_cast<double>(messages_ok) / trials;
    const double total_symbols = trials * config.stego_count;
    rep.pct_decoded_secret = total_symbols > 0 ? 100.0 * static_cast<double>(symbols_ok) / total_symbols : 100.0;
  }
  return rep;
}

std::string format_decimal(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

double chi_square_uniform(const std::vector<std::uint64_t>& hist) {
  if (hist.empty()) return 0.0;
  const double total = static_cast<double>(std::accumulate(hist.begin(), hist.end(), std::uint64_t{0}));
  if (total == 0.0) return 0.0;
  const double expected = total / static_cast<double>(hist.size());
  double chi = 0.0;
  for (auto c : hist) {
    const double d = static_cast<double>(c) - expected;
    chi += d * d / expected;
  }
  return chi;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  out << body;
  if (!out.flush()) throw Error(Errc::io_error, "write failed: " + path.string());
}

std::string histogram_csv(const std::vector<std::uint64_t>& hist) {
  std::string s = "position,count\n";
  for (std::size_t i = 0; i < hist.size(); ++i) s += std::to_string(i) + "," + std::to_string(hist[i]) + "\n";
  return s;
}

}  // namespace

void export_report(const ExperimentReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(Errc::io_error, "cannot create " + dir.string() + ": " + ec.message());

  std::string metrics = "metric,value\n";
  metrics += "trials," + std::to_string(report.trials) + "\n";
  metrics += "stego_count," + std::to_string(report.stego_count) + "\n";
  metrics += "pct_decoded_info," + format_decimal(report.pct_decoded_info) + "\n";
  metrics += "pct_decoded_secret," + format_decimal(report.pct_decoded_secret) + "\n";
  metrics += "pct_decoded_secret_per_trial," + format_decimal(report.pct_decoded_secret_per_trial) + "\n";
  metrics += "decode_failures," + std::to_string(report.decode_failures) + "\n";

  write_file(dir / "report.csv", metrics);
  write_file(dir / "error_hist.csv", histogram_csv(report.error_location_hist));
  write_file(dir / "stego_hist.csv", histogram_csv(report.stego_location_hist));
}

}  // namespace rsstego
