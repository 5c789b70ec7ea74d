// rsstego: hide a message in the error-correction budget of Reed-Solomon
// codewords, recover it, and run the noisy-channel experiments.
//
// Exit codes: 0 success, 1 usage / IO / format error, 2 decode failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsstego/container.hpp"
#include "rsstego/harness.hpp"
#include "rsstego/rs_codec.hpp"
#include "rsstego/stego.hpp"

namespace {

using namespace rsstego;

constexpr int kExitError = 1;
constexpr int kExitDecodeFailure = 2;

struct CodeOptions {
  int m = 5;
  std::optional<int> n;
  int k = 19;

  CodeParams params() const {
    CodeParams p = CodeParams::make(m, k);
    if (n && *n != p.n()) {
      throw Error(Errc::invalid_argument, "--n must be 2^m - 1 = " + std::to_string(p.n()));
    }
    return p;
  }
};

void add_code_options(CLI::App* cmd, CodeOptions& opt) {
  cmd->add_option("--m", opt.m, "Symbol width in bits")->check(CLI::Range(2, 16));
  cmd->add_option("--n", opt.n, "Codeword length, must equal 2^m - 1");
  cmd->add_option("--k", opt.k, "Data symbols per codeword");
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) throw Error(Errc::io_error, "write failed: " + path);
}

// --- embed ---

struct EmbedOptions {
  CodeOptions code;
  std::string cover;
  std::string message;
  std::string out;
  std::uint64_t seed = 0;
  int stego = 2;
};

int cmd_embed(const EmbedOptions& opt) {
  const CodeParams params = opt.code.params();
  const auto cover = read_file(opt.cover);
  const auto message = opt.message.empty() ? std::vector<std::uint8_t>{} : read_file(opt.message);
  const EmbedSummary s = embed_payload(params, cover, message, opt.seed, opt.stego);
  write_file(opt.out, serialize(s.container));
  std::cout << "codewords=" << s.container.codewords.size() << "\n"
            << "message_symbols=" << s.message_symbols << "\n"
            << "residual_capacity=" << s.capacity_symbols - s.message_symbols << "\n";
  return 0;
}

// --- extract ---

struct ExtractOptions {
  std::string in;
  std::optional<std::uint64_t> seed;
  std::string data_out;
  std::string message_out;
};

int cmd_extract(const ExtractOptions& opt) {
  const Container c = parse_container(read_file(opt.in));
  const ExtractedPayload p = extract_payload(c, opt.seed.value_or(c.header.seed));
  if (!opt.data_out.empty()) write_file(opt.data_out, p.data);
  if (!opt.message_out.empty()) write_file(opt.message_out, p.message);
  std::cout << "codewords=" << c.codewords.size() << "\n"
            << "corrected_symbols=" << p.corrected_symbols << "\n"
            << "decode_failures=" << p.decode_failures << "\n";
  return p.decode_failures == 0 ? 0 : kExitDecodeFailure;
}

// --- simulate ---

struct SimulateOptions {
  CodeOptions code;
  int stego = 2;
  std::string mode = "single";
  int burst_bits = 6;
  int trials = 100;
  std::uint64_t seed = 0;
  bool anywhere = false;
  std::string out;
};

int cmd_simulate(const SimulateOptions& opt) {
  ExperimentConfig cfg{opt.code.params()};
  cfg.stego_count = opt.stego;
  cfg.placement = opt.anywhere ? Placement::any : Placement::parity;
  cfg.channel.mode = parse_noise_mode(opt.mode);
  cfg.channel.burst_bits = opt.burst_bits;
  cfg.channel.rng_seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.master_seed = opt.seed;

  const ExperimentReport rep = run_experiment(cfg);
  if (!opt.out.empty()) export_report(rep, opt.out);
  std::cout << "pct_decoded_info=" << format_decimal(rep.pct_decoded_info) << "\n"
            << "pct_decoded_secret=" << format_decimal(rep.pct_decoded_secret) << "\n";
  return rep.decode_failures == 0 ? 0 : kExitDecodeFailure;
}

// --- selftest ---

bool check(const char* name, bool ok) {
  std::cout << "selftest " << name << ": " << (ok ? "ok" : "FAILED") << "\n";
  return ok;
}

int cmd_selftest() {
  bool ok = true;

  {
    const ReedSolomon rs(CodeParams::make(3, 3));
    bool all = true;
    for (std::uint32_t w = 0; w < 512; ++w) {
      const std::vector<Element> d{Element(w >> 6), Element((w >> 3) & 7), Element(w & 7)};
      Codeword cw = rs.encode(d);
      const Codeword clean = cw;
      cw[w % 7] += Element(1 + w % 7);
      cw[(w + 3) % 7] += Element(1 + (w / 7) % 7);
      const DecodeResult r = rs.decode(cw);
      all = all && !r.failure && r.corrected == clean;
    }
    ok &= check("rs(7,3) two-error round trip", all);
  }

  {
    const CodeParams params = CodeParams::make(5, 19);
    const ReedSolomon rs(params);
    std::vector<Element> d(19);
    for (int i = 0; i < 19; ++i) d[i] = Element(static_cast<std::uint32_t>(i * 7 % 32));
    const StegoKey key = derive_positions(params, 1, 2);
    const SecretMessage msg{{Element(17), Element(4)}};
    const ExtractResult r = extract(rs, embed(params, rs.encode(d), key, msg).word, key);
    ok &= check("rs(31,19) stego round trip", !r.diagnostics.failure && r.data == d && r.message.symbols == msg.symbols);
  }

  {
    ExperimentConfig cfg{CodeParams::make(5, 19)};
    cfg.channel.mode = NoiseMode::single_symbol;
    const ExperimentReport rep = run_experiment(cfg);
    ok &= check("single-error experiment %D_i = 100", rep.pct_decoded_info == 100.0);
  }

  return ok ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reed-Solomon steganography codec and channel experiments"};
  app.require_subcommand(1);

  EmbedOptions embed_opt;
  auto* embed = app.add_subcommand("embed", "Encode a cover file and hide a message in it");
  add_code_options(embed, embed_opt.code);
  embed->add_option("--cover", embed_opt.cover, "Carrier data file")->required();
  embed->add_option("--message", embed_opt.message, "Secret message file (omit for none)");
  embed->add_option("--out", embed_opt.out, "Container file to write")->required();
  embed->add_option("--seed", embed_opt.seed, "Key seed");
  embed->add_option("--stego", embed_opt.stego, "Hidden symbols per codeword at most");

  ExtractOptions extract_opt;
  auto* extract = app.add_subcommand("extract", "Recover carrier data and message from a container");
  extract->add_option("--in", extract_opt.in, "Container file")->required();
  extract->add_option("--seed", extract_opt.seed, "Key seed (defaults to the header seed)");
  extract->add_option("--data-out", extract_opt.data_out, "Where to write the carrier data");
  extract->add_option("--message-out", extract_opt.message_out, "Where to write the message");

  SimulateOptions sim_opt;
  auto* simulate = app.add_subcommand("simulate", "Run the noisy-channel experiment");
  add_code_options(simulate, sim_opt.code);
  simulate->add_option("--stego", sim_opt.stego, "Hidden symbols per codeword");
  simulate->add_option("--mode", sim_opt.mode, "Channel model")
      ->check(CLI::IsMember({"none", "single", "single-bit", "burst"}));
  simulate->add_option("--burst-bits", sim_opt.burst_bits, "Burst length in bits");
  simulate->add_option("--trials", sim_opt.trials, "Number of trials")->check(CLI::NonNegativeNumber);
  simulate->add_option("--seed", sim_opt.seed, "Master seed");
  simulate->add_flag("--anywhere", sim_opt.anywhere, "Allow hidden symbols in the data block too");
  simulate->add_option("--out", sim_opt.out, "Directory for report.csv and histogram CSVs");

  auto* selftest = app.add_subcommand("selftest", "Quick internal consistency checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (embed->parsed()) return cmd_embed(embed_opt);
    if (extract->parsed()) return cmd_extract(extract_opt);
    if (simulate->parsed()) return cmd_simulate(sim_opt);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
