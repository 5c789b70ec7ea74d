#include "rsstego/channel.hpp"

#include <map>
#include <string>

#include "rsstego/rng.hpp"

namespace rsstego {

namespace {

void flip_bit(Codeword& word, std::map<int, std::uint32_t>& deltas, int m, int bit) {
  const int pos = bit / m;
  const auto mask = static_cast<std::uint32_t>(1u << (m - 1 - bit % m));
  word[static_cast<std::size_t>(pos)] += Element(mask);
  deltas[pos] ^= mask;
}

ErrorEvent collect(const std::map<int, std::uint32_t>& deltas, int bit_offset) {
  ErrorEvent ev;
  ev.bit_offset = bit_offset;
  for (const auto& [pos, d] : deltas) {
    if (d == 0) continue;
    ev.affected_positions.push_back(pos);
    ev.deltas.emplace_back(d);
  }
  return ev;
}

}  // namespace

NoisyWord apply_noise(const GaloisField& field, const Codeword& word, const ChannelSpec& spec,
                      std::uint64_t trial_index) {
  NoisyWord out{word, {}};
  if (spec.mode == NoiseMode::none) return out;

  const int m = field.m();
  const int n = static_cast<int>(word.size());
  const int total_bits = n * m;
  SplitMix64 rng = derive_stream(spec.rng_seed, trial_index, StreamDomain::channel);

  switch (spec.mode) {
    case NoiseMode::single_symbol: {
      const int pos = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      const Element delta(1 + rng.below(field.order()));
      out.noisy[static_cast<std::size_t>(pos)] += delta;
      out.event.affected_positions = {pos};
      out.event.deltas = {delta};
      break;
    }
    case NoiseMode::single_bit: {
      const int bit = static_cast<int>(rng.below(static_cast<std::uint64_t>(total_bits)));
      std::map<int, std::uint32_t> deltas;
      flip_bit(out.noisy, deltas, m, bit);
      out.event = collect(deltas, bit);
      break;
    }
    case NoiseMode::burst: {
      const int len = spec.burst_bits;
      if (len < 1 || len > 63 || len > total_bits) {
        throw Error(Errc::invalid_argument, "burst_bits must be in [1, min(63, n*m)]");
      }
      const int offset = static_cast<int>(rng.below(static_cast<std::uint64_t>(total_bits - len + 1)));
      // An all-zero fill changes nothing; resample until at least one bit flips.
      std::uint64_t fill = 0;
      while (fill == 0) fill = rng.below(std::uint64_t{1} << len);
      std::map<int, std::uint32_t> deltas;
      for (int i = 0; i < len; ++i) {
        if ((fill >> (len - 1 - i)) & 1u) flip_bit(out.noisy, deltas, m, offset + i);
      }
      out.event = collect(deltas, offset);
      break;
    }
    case NoiseMode::none:
      break;
  }
  return out;
}

int max_affected_symbols(const ChannelSpec& spec, int m) {
  switch (spec.mode) {
    case NoiseMode::none: return 0;
    case NoiseMode::single_symbol:
    case NoiseMode::single_bit: return 1;
    case NoiseMode::burst: return spec.burst_bits < 1 ? 0 : (spec.burst_bits + m - 2) / m + 1;
  }
  return 0;
}

NoiseMode parse_noise_mode(const std::string& name) {
  if (name == "none") return NoiseMode::none;
  if (name == "single") return NoiseMode::single_symbol;
  if (name == "single-bit") return NoiseMode::single_bit;
  if (name == "burst") return NoiseMode::burst;
  throw Error(Errc::invalid_argument, "unknown noise mode '" + name + "'");
}

const char* to_string(NoiseMode mode) {
  switch (mode) {
    case NoiseMode::none: return "none";
    case NoiseMode::single_symbol: return "single";
    case NoiseMode::single_bit: return "single-bit";
    case NoiseMode::burst: return "burst";
  }
  return "none";
}

}  // namespace rsstego
