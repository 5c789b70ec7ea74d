#include "rsstego/stego.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rsstego/rng.hpp"

namespace rsstego {

namespace {

void check_key(const CodeParams& params, const StegoKey& key) {
  std::vector<int> sorted = key.positions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::invalid_argument, "key positions must be distinct");
  }
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= params.n())) {
    throw Error(Errc::invalid_argument, "key position outside [0, n)");
  }
}

void check_budget(const CodeParams& params, int count, int reserved) {
  if (count < 0 || reserved < 0) throw Error(Errc::invalid_argument, "negative count or budget");
  if (count + reserved > params.t()) {
    throw Error(Errc::budget_exceeded, std::to_string(count) + " stego + " + std::to_string(reserved) +
                                           " channel symbols exceed t = " + std::to_string(params.t()));
  }
}

}  // namespace

StegoKey derive_positions(const CodeParams& params, std::uint64_t seed, int count, Placement placement,
                          int reserved_budget) {
  check_budget(params, count, reserved_budget);
  const IndexRange pool = placement == Placement::parity ? params.parity_range() : IndexRange{0, params.n()};
  if (count > pool.size()) throw Error(Errc::budget_exceeded, "more positions requested than the pool holds");

  std::vector<int> candidates(static_cast<std::size_t>(pool.size()));
  std::iota(candidates.begin(), candidates.end(), pool.begin);

  // Partial Fisher-Yates: the first `count` slots end up a uniform sample.
  SplitMix64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(pool.size() - i)));
    std::swap(candidates[i], candidates[j]);
  }
  candidates.resize(static_cast<std::size_t>(count));
  return StegoKey{std::move(candidates), seed};
}

std::uint64_t codeword_key_seed(std::uint64_t seed, std::uint64_t index) {
  return derive_seed(seed, index, StreamDomain::positions);
}

StegoKey key_for_codeword(const CodeParams& params, std::uint64_t seed, std::uint64_t index, int count,
                          Placement placement) {
  StegoKey key = derive_positions(params, codeword_key_seed(seed, index), count, placement);
  key.seed = seed;
  return key;
}

StegoCodeword embed(const CodeParams& params, const Codeword& clean, const StegoKey& key,
                    const SecretMessage& message, int channel_budget) {
  if (static_cast<int>(clean.size()) != params.n()) throw Error(Errc::length_mismatch, "codeword length != n");
  if (message.symbols.size() != key.positions.size()) {
    throw Error(Errc::length_mismatch, "message length must equal the number of key positions");
  }
  check_budget(params, static_cast<int>(key.positions.size()), channel_budget);
  check_key(params, key);

  StegoCodeword out{clean};
  for (std::size_t l = 0; l < key.positions.size(); ++l) {
    if (!params.field().contains(message.symbols[l])) {
      throw Error(Errc::invalid_argument, "message symbol outside the field");
    }
    out.word[static_cast<std::size_t>(key.positions[l])] = message.symbols[l];
  }
  return out;
}

ExtractResult extract(const ReedSolomon& codec, const Codeword& received, const StegoKey& key) {
  const CodeParams& params = codec.params();
  check_key(params, key);

  ExtractResult out;
  out.diagnostics = codec.decode(received);
  out.data = data_symbols(params, out.diagnostics.corrected);
  out.message.symbols.reserve(key.positions.size());
  for (int pos : key.positions) out.message.symbols.push_back(received[static_cast<std::size_t>(pos)]);
  return out;
}

ExtractResult extract(const Codeword& received, const StegoKey& key, const CodeParams& params) {
  return extract(ReedSolomon(params), received, key);
}

}  // namespace rsstego
