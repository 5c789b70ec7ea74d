#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rsstego/rs_codec.hpp"

namespace rsstego {

/// RSSTEG01 container layout, all integers big-endian:
///
///   offset  size  field
///   0       8     magic "RSSTEG01"
///   8       1     m
///   9       2     n
///   11      2     k
///   13      4     message length in bytes
///   17      8     key seed
///   25      ...   codeword symbols, m bits each, MSB first, packed
///                 continuously across codewords, last byte zero-padded
///
/// The codeword count follows from the payload size.
inline constexpr std::array<char, 8> kContainerMagic = {'R', 'S', 'S', 'T', 'E', 'G', '0', '1'};
inline constexpr std::size_t kContainerHeaderSize = 25;

struct ContainerHeader {
  int m = 0;
  int n = 0;
  int k = 0;
  std::uint32_t message_length = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const ContainerHeader&, const ContainerHeader&) = default;
};

struct Container {
  ContainerHeader header;
  std::vector<Codeword> codewords;

  friend bool operator==(const Container&, const Container&) = default;
};

std::vector<std::uint8_t> serialize(const Container& c);
/// Throws BadMagic, or CorruptHeader for truncated input, bad geometry or a
/// payload size that is not a whole number of codewords.
Container parse_container(std::span<const std::uint8_t> bytes);

/// Pack bytes into m-bit symbols, MSB first; the last symbol is zero-padded.
std::vector<Element> bytes_to_symbols(std::span<const std::uint8_t> bytes, int m);
/// Inverse of bytes_to_symbols: the first byte_count bytes of the bit stream.
std::vector<std::uint8_t> symbols_to_bytes(std::span<const Element> symbols, int m, std::size_t byte_count);

/// Index range [begin, end) of the message symbols carried by codeword c when
/// `total` symbols are spread evenly over `codewords` codewords.
struct SymbolSlice {
  std::size_t begin = 0;
  std::size_t end = 0;
};
SymbolSlice message_slice(std::size_t total, std::size_t codewords, std::size_t c);

struct EmbedSummary {
  Container container;
  std::size_t message_symbols = 0;
  std::size_t capacity_symbols = 0;  // codewords * stego_per_codeword
};

/// Encode the cover bytes into codewords and hide the message in them.
/// The cover is terminated with 0x80 and zero-padded to whole codewords;
/// the codeword count is set by the cover alone. Throws MessageTooLarge
/// when the message needs more than stego_per_codeword symbols per codeword.
EmbedSummary embed_payload(const CodeParams& params, std::span<const std::uint8_t> cover,
                           std::span<const std::uint8_t> message, std::uint64_t seed, int stego_per_codeword);

struct ExtractedPayload {
  std::vector<std::uint8_t> data;
  std::vector<std::uint8_t> message;
  int decode_failures = 0;
  int corrected_symbols = 0;
};

/// Decode every codeword, strip the cover terminator and read the message
/// from the key positions derived from `seed`. Throws CorruptPayload when the
/// terminator is missing and no codeword failed to decode.
ExtractedPayload extract_payload(const Container& container, std::uint64_t seed);

}  // namespace rsstego
