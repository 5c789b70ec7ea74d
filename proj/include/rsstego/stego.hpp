#pragma once

#include <cstdint>
#include <vector>

#include "rsstego/rs_codec.hpp"

namespace rsstego {

/// Where hidden symbols may go. The default keeps them in the parity block,
/// so the carrier data symbols are never touched on the wire.
enum class Placement { parity, any };

/// Shared secret between sender and receiver.
struct StegoKey {
  std::vector<int> positions;  // distinct symbol indices in [0, n)
  std::uint64_t seed = 0;
};

struct SecretMessage {
  std::vector<Element> symbols;
};

/// A codeword whose key positions carry message symbols.
struct StegoCodeword {
  Codeword word;
};

struct ExtractResult {
  std::vector<Element> data;
  SecretMessage message;
  DecodeResult diagnostics;
};

/// Draw `count` distinct positions from the placement pool, deterministically
/// from `seed`. Throws BudgetExceeded when count + reserved_budget > t or the
/// pool is too small.
StegoKey derive_positions(const CodeParams& params, std::uint64_t seed, int count,
                          Placement placement = Placement::parity, int reserved_budget = 0);

/// Seed for codeword `index` of a multi-codeword message.
std::uint64_t codeword_key_seed(std::uint64_t seed, std::uint64_t index);

StegoKey key_for_codeword(const CodeParams& params, std::uint64_t seed, std::uint64_t index, int count,
                          Placement placement = Placement::parity);

/// Overwrite the symbols at key.positions with the message symbols.
/// `channel_budget` is the number of channel symbol errors the caller
/// expects; embed refuses keys that would push the total past t.
StegoCodeword embed(const CodeParams& params, const Codeword& clean, const StegoKey& key,
                    const SecretMessage& message, int channel_budget = 0);

/// RS-decode for the carrier data, and read the message straight from the
/// received (pre-correction) values at the key positions. A channel error on
/// a key position therefore corrupts that message symbol.
ExtractResult extract(const ReedSolomon& codec, const Codeword& received, const StegoKey& key);
ExtractResult extract(const Codeword& received, const StegoKey& key, const CodeParams& params);

}  // namespace rsstego
