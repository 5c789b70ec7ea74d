#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <ranges>
#include <span>
#include <vector>

#include "rsstego/error.hpp"
#include "rsstego/gf.hpp"

namespace rsstego {

/// Number of non-default entries (nonzero bits, nonzero symbols).
template <std::ranges::input_range R>
std::size_t hamming_weight(const R& x) {
  using T = std::ranges::range_value_t<R>;
  std::size_t w = 0;
  for (const auto& v : x) w += (v != T{}) ? 1 : 0;
  return w;
}

/// Number of positions at which two equal-length strings differ. Works for
/// bit strings and for symbol strings alike.
template <std::ranges::sized_range R1, std::ranges::sized_range R2>
std::size_t hamming_distance(const R1& x, const R2& y) {
  if (std::ranges::size(x) != std::ranges::size(y)) {
    throw Error(Errc::length_mismatch, "hamming_distance needs equal lengths");
  }
  std::size_t d = 0;
  auto yi = std::ranges::begin(y);
  for (const auto& xv : x) {
    d += (xv != *yi) ? 1 : 0;
    ++yi;
  }
  return d;
}

/// Position-wise XOR of two equal-length strings.
template <class T>
std::vector<T> xor_strings(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw Error(Errc::length_mismatch, "xor_strings needs equal lengths");
  std::vector<T> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<T>(x[i] ^ y[i]);
  return out;
}

/// Expand symbols to bits, MSB first within each m-bit symbol.
inline std::vector<std::uint8_t> symbols_to_bits(std::span<const Element> symbols, int m) {
  std::vector<std::uint8_t> bits;
  bits.reserve(symbols.size() * static_cast<std::size_t>(m));
  for (Element s : symbols) {
    for (int b = m - 1; b >= 0; --b) bits.push_back(static_cast<std::uint8_t>((s.value >> b) & 1u));
  }
  return bits;
}

}  // namespace rsstego
