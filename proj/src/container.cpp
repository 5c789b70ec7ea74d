#include "rsstego/container.hpp"

#include <algorithm>
#include <string>

#include "rsstego/stego.hpp"

namespace rsstego {

namespace {

constexpr std::uint8_t kCoverTerminator = 0x80;

class BitWriter {
 public:
  void put(std::uint32_t value, int bits) {
    for (int b = bits - 1; b >= 0; --b) {
      if (fill_ == 0) bytes_.push_back(0);
      if ((value >> b) & 1u) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> fill_);
      fill_ = (fill_ + 1) % 8;
    }
  }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  int fill_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint32_t get(int bits) {
    std::uint32_t v = 0;
    for (int b = 0; b < bits; ++b, ++pos_) {
      const std::uint32_t bit = pos_ < bytes_.size() * 8 ? (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u : 0u;
      v = (v << 1) | bit;
    }
    return v;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void put_be(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_be(std::span<const std::uint8_t> in, std::size_t offset, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v = (v << 8) | in[offset + static_cast<std::size_t>(i)];
  return v;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

std::vector<Element> bytes_to_symbols(std::span<const std::uint8_t> bytes, int m) {
  const std::size_t count = ceil_div(bytes.size() * 8, static_cast<std::size_t>(m));
  BitReader r(bytes);
  std::vector<Element> out(count);
  for (auto& s : out) s = Element(r.get(m));
  return out;
}

std::vector<std::uint8_t> symbols_to_bytes(std::span<const Element> symbols, int m, std::size_t byte_count) {
  BitWriter w;
  for (Element s : symbols) w.put(s.value, m);
  std::vector<std::uint8_t> out = w.take();
  out.resize(byte_count, 0);
  return out;
}

SymbolSlice message_slice(std::size_t total, std::size_t codewords, std::size_t c) {
  if (codewords == 0) return {};
  return {c * total / codewords, (c + 1) * total / codewords};
}

std::vector<std::uint8_t> serialize(const Container& c) {
  const ContainerHeader& h = c.header;
  std::vector<std::uint8_t> out(kContainerMagic.begin(), kContainerMagic.end());
  put_be(out, static_cast<std::uint64_t>(h.m), 1);
  put_be(out, static_cast<std::uint64_t>(h.n), 2);
  put_be(out, static_cast<std::uint64_t>(h.k), 2);
  put_be(out, h.message_length, 4);
  put_be(out, h.seed, 8);

  BitWriter w;
  for (const Codeword& cw : c.codewords) {
    if (static_cast<int>(cw.size()) != h.n) throw Error(Errc::length_mismatch, "codeword length != n");
    for (Element s : cw.symbols) w.put(s.value, h.m);
  }
  const std::vector<std::uint8_t> payload = w.take();
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Container parse_container(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kContainerMagic.size() ||
      !std::equal(kContainerMagic.begin(), kContainerMagic.end(), bytes.begin(),
                  [](char a, std::uint8_t b) { return static_cast<std::uint8_t>(a) == b; })) {
    throw Error(Errc::bad_magic, "not an RSSTEG01 container");
  }
  if (bytes.size() < kContainerHeaderSize) throw Error(Errc::corrupt_header, "truncated header");

  Container c;
  ContainerHeader& h = c.header;
  h.m = static_cast<int>(get_be(bytes, 8, 1));
  h.n = static_cast<int>(get_be(bytes, 9, 2));
  h.k = static_cast<int>(get_be(bytes, 11, 2));
  h.message_length = static_cast<std::uint32_t>(get_be(bytes, 13, 4));
  h.seed = get_be(bytes, 17, 8);

  if (h.m < 2 || h.m > 16 || h.n != (1 << h.m) - 1 || h.k <= 0 || h.n - h.k < 2) {
    throw Error(Errc::corrupt_header, "invalid code geometry m=" + std::to_string(h.m) +
                                          " n=" + std::to_string(h.n) + " k=" + std::to_string(h.k));
  }

  const auto payload = bytes.subspan(kContainerHeaderSize);
  const std::size_t bits_per_word = static_cast<std::size_t>(h.n) * static_cast<std::size_t>(h.m);
  const std::size_t count = payload.size() * 8 / bits_per_word;
  if (count == 0 || ceil_div(count * bits_per_word, 8) != payload.size()) {
    throw Error(Errc::corrupt_header, "payload is not a whole number of codewords");
  }

  BitReader r(payload);
  c.codewords.resize(count);
  for (Codeword& cw : c.codewords) {
    cw.symbols.resize(static_cast<std::size_t>(h.n));
    for (Element& s : cw.symbols) s = Element(r.get(h.m));
  }
  return c;
}

EmbedSummary embed_payload(const CodeParams& params, std::span<const std::uint8_t> cover,
                           std::span<const std::uint8_t> message, std::uint64_t seed, int stego_per_codeword) {
  const int m = params.m();
  const auto k = static_cast<std::size_t>(params.k());
  if (stego_per_codeword < 0 || stego_per_codeword > params.t()) {
    throw Error(Errc::budget_exceeded, "stego symbols per codeword must be in [0, t]");
  }

  std::vector<std::uint8_t> framed(cover.begin(), cover.end());
  framed.push_back(kCoverTerminator);
  std::vector<Element> data = bytes_to_symbols(framed, m);
  const std::size_t codewords = ceil_div(data.size(), k);
  data.resize(codewords * k);

  const std::vector<Element> msg = bytes_to_symbols(message, m);
  const std::size_t capacity = codewords * static_cast<std::size_t>(stego_per_codeword);
  if (msg.size() > capacity) {
    throw Error(Errc::message_too_large, std::to_string(msg.size()) + " message symbols exceed capacity " +
                                             std::to_string(capacity) + " of " + std::to_string(codewords) +
                                             " codewords");
  }
  if (message.size() > UINT32_MAX) throw Error(Errc::message_too_large, "message longer than 4 GiB");

  const ReedSolomon codec(params);
  EmbedSummary out;
  out.message_symbols = msg.size();
  out.capacity_symbols = capacity;
  out.container.header = {m, params.n(), params.k(), static_cast<std::uint32_t>(message.size()), seed};
  out.container.codewords.reserve(codewords);
  for (std::size_t c = 0; c < codewords; ++c) {
    const Codeword clean = codec.encode(std::span<const Element>(data).subspan(c * k, k));
    const SymbolSlice slice = message_slice(msg.size(), codewords, c);
    const StegoKey key = key_for_codeword(params, seed, c, static_cast<int>(slice.end - slice.begin));
    const SecretMessage part{std::vector<Element>(msg.begin() + static_cast<std::ptrdiff_t>(slice.begin),
                                                  msg.begin() + static_cast<std::ptrdiff_t>(slice.end))};
    out.container.codewords.push_back(embed(params, clean, key, part).word);
  }
  return out;
}

ExtractedPayload extract_payload(const Container& container, std::uint64_t seed) {
  const ContainerHeader& h = container.header;
  const ReedSolomon codec(CodeParams::make(h.m, h.k));
  const CodeParams& params = codec.params();
  if (params.n() != h.n) throw Error(Errc::corrupt_header, "n does not match m");

  const std::size_t msg_symbols = ceil_div(std::size_t{h.message_length} * 8, static_cast<std::size_t>(h.m));
  const std::size_t codewords = container.codewords.size();
  if (msg_symbols > codewords * static_cast<std::size_t>(params.t())) {
    throw Error(Errc::corrupt_header, "message length exceeds the container's capacity");
  }

  ExtractedPayload out;
  std::vector<Element> data;
  std::vector<Element> msg;
  data.reserve(codewords * static_cast<std::size_t>(h.k));
  msg.reserve(msg_symbols);
  for (std::size_t c = 0; c < codewords; ++c) {
    const SymbolSlice slice = message_slice(msg_symbols, codewords, c);
    const StegoKey key = key_for_codeword(params, seed, c, static_cast<int>(slice.end - slice.begin));
    const ExtractResult r = extract(codec, container.codewords[c], key);
    if (r.diagnostics.failure) ++out.decode_failures;
    out.corrected_symbols += r.diagnostics.error_count();
    data.insert(data.end(), r.data.begin(), r.data.end());
    msg.insert(msg.end(), r.message.symbols.begin(), r.message.symbols.end());
  }

  out.message = symbols_to_bytes(msg, h.m, h.message_length);

  const std::size_t data_bytes = data.size() * static_cast<std::size_t>(h.m) / 8;
  out.data = symbols_to_bytes(data, h.m, data_bytes);
  while (!out.data.empty() && out.data.back() == 0) out.data.pop_back();
  if (!out.data.empty() && out.data.back() == kCoverTerminator) {
    out.data.pop_back();
  } else if (out.decode_failures == 0) {
    throw Error(Errc::corrupt_payload, "cover terminator missing");
  }
  return out;
}

}  // namespace rsstego
