#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsstego/rs_codec.hpp"

namespace rsstego {

enum class NoiseMode {
  none,
  single_symbol,  // one uniform position, uniform nonzero delta
  single_bit,     // one uniform bit of the n*m bit stream
  burst,          // burst_bits contiguous bits, random nonzero fill
};

struct ChannelSpec {
  NoiseMode mode = NoiseMode::none;
  int burst_bits = 6;
  std::uint64_t rng_seed = 0;
};

/// Realized noise e(x) for one codeword.
struct ErrorEvent {
  std::vector<int> affected_positions;  // ascending, only symbols with nonzero delta
  int bit_offset = -1;                  // first bit of the burst / flipped bit, -1 otherwise
  std::vector<Element> deltas;          // parallel to affected_positions
};

struct NoisyWord {
  Codeword noisy;
  ErrorEvent event;
};

/// Bits are numbered across the codeword, symbol i covering bits
/// [i*m, (i+1)*m), MSB first. Deterministic in (spec.rng_seed, trial_index).
NoisyWord apply_noise(const GaloisField& field, const Codeword& word, const ChannelSpec& spec,
                      std::uint64_t trial_index);

/// Worst-case number of symbols one event can touch.
int max_affected_symbols(const ChannelSpec& spec, int m);

NoiseMode parse_noise_mode(const std::string& name);
const char* to_string(NoiseMode mode);

}  // namespace rsstego
