#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <string>

#include "rsstego/container.hpp"
#include "rsstego/rng.hpp"
#include "rsstego/stego.hpp"

using namespace rsstego;

namespace {

std::vector<std::uint8_t> bytes(const std::string& s) { return {s.begin(), s.end()}; }

std::vector<std::uint8_t> random_bytes(SplitMix64& rng, std::size_t n) {
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng.below(256));
  return v;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("bit packing") {
  // 0xA5 0x0F -> 101 001 010 000 111 1(00)
  const auto s = bytes_to_symbols(std::vector<std::uint8_t>{0xA5, 0x0F}, 3);
  REQUIRE(s.size() == 6);
  CHECK(s[0] == Element(5));
  CHECK(s[1] == Element(1));
  CHECK(s[2] == Element(2));
  CHECK(s[3] == Element(0));
  CHECK(s[4] == Element(7));
  CHECK(s[5] == Element(4));
  CHECK(symbols_to_bytes(s, 3, 2) == std::vector<std::uint8_t>{0xA5, 0x0F});

  // one byte over 3-bit symbols is ceil(8/3) = 3 symbols
  CHECK(bytes_to_symbols(std::vector<std::uint8_t>{0xFF}, 3).size() == 3);
  CHECK(bytes_to_symbols(std::vector<std::uint8_t>{}, 5).empty());

  SplitMix64 rng(1);
  for (int m = 2; m <= 16; ++m) {
    const auto b = random_bytes(rng, 1 + rng.below(40));
    REQUIRE(symbols_to_bytes(bytes_to_symbols(b, m), m, b.size()) == b);
  }
}

TEST_CASE("message slices cover everything without exceeding the per-codeword share") {
  for (std::size_t total : {0u, 1u, 5u, 17u, 40u}) {
    for (std::size_t cws : {1u, 3u, 8u, 20u}) {
      std::size_t next = 0;
      for (std::size_t c = 0; c < cws; ++c) {
        const SymbolSlice s = message_slice(total, cws, c);
        REQUIRE(s.begin == next);
        REQUIRE(s.end - s.begin <= (total + cws - 1) / cws);
        next = s.end;
      }
      REQUIRE(next == total);
    }
  }
}

TEST_CASE("header layout is bit exact") {
  Container c;
  c.header = {3, 7, 3, 0x01020304u, 0x1122334455667788ULL};
  c.codewords.push_back(Codeword{{Element(1), Element(2), Element(3), Element(4), Element(5), Element(6), Element(7)}});
  const auto out = serialize(c);
  const std::vector<std::uint8_t> expect_header{'R', 'S', 'S', 'T', 'E', 'G', '0', '1', 3,    0,    7,    0,    3,
                                                1,   2,   3,   4,   0x11, 0x22, 0x33, 0x44, 0x55, 0x66, 0x77, 0x88};
  REQUIRE(out.size() == 25 + 3);  // 21 bits -> 3 bytes
  CHECK(std::vector<std::uint8_t>(out.begin(), out.begin() + 25) == expect_header);
  // 001 010 011 100 101 110 111 000
  CHECK(out[25] == 0b00101001);
  CHECK(out[26] == 0b11001011);
  CHECK(out[27] == 0b10111000);
  CHECK(parse_container(out) == c);
}

TEST_CASE("parse errors") {
  const CodeParams p = CodeParams::make(5, 19);
  const auto good = serialize(embed_payload(p, bytes(std::string(40, 'c')), bytes("hi"), 1, 2).container);

  CHECK(code_of([&] { parse_container(bytes("NOTSTEG1rest")); }) == Errc::bad_magic);
  CHECK(code_of([&] { parse_container(bytes("RSS")); }) == Errc::bad_magic);
  CHECK(code_of([&] { parse_container(std::span(good).first(20)); }) == Errc::corrupt_header);
  CHECK(code_of([&] { parse_container(std::span(good).first(good.size() - 1)); }) == Errc::corrupt_header);
  CHECK(code_of([&] { parse_container(std::span(good).first(25)); }) == Errc::corrupt_header);

  auto bad_geometry = good;
  bad_geometry[10] = 30;  // n = 30
  CHECK(code_of([&] { parse_container(bad_geometry); }) == Errc::corrupt_header);

  auto too_long = good;
  too_long[13] = 0x7F;  // message length far beyond capacity
  const Container c = parse_container(too_long);
  CHECK(code_of([&] { extract_payload(c, 1); }) == Errc::corrupt_header);
}

TEST_CASE("embed/extract payload round trip") {
  const CodeParams p = CodeParams::make(5, 19);
  SplitMix64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto cover = random_bytes(rng, rng.below(200));
    const std::size_t cws = (cover.size() * 8 + 8 + 94) / 95;
    const auto message = random_bytes(rng, rng.below(cws * 2 * 5 / 8 + 1));
    const std::uint64_t seed = rng.next();
    const EmbedSummary s = embed_payload(p, cover, message, seed, 2);
    CHECK(s.container.codewords.size() == cws);
    const Container back = parse_container(serialize(s.container));
    REQUIRE(back == s.container);
    const ExtractedPayload got = extract_payload(back, seed);
    REQUIRE(got.decode_failures == 0);
    REQUIRE(got.data == cover);
    REQUIRE(got.message == message);
  }
}

TEST_CASE("payload edge cases") {
  SUBCASE("empty message keeps codewords clean") {
    const CodeParams p = CodeParams::make(5, 19);
    const EmbedSummary s = embed_payload(p, bytes("carrier"), {}, 4, 2);
    CHECK(s.message_symbols == 0);
    const ExtractedPayload got = extract_payload(s.container, 4);
    CHECK(got.message.empty());
    CHECK(got.corrected_symbols == 0);
    CHECK(got.data == bytes("carrier"));
  }
  SUBCASE("empty cover") {
    const CodeParams p = CodeParams::make(5, 19);
    const EmbedSummary s = embed_payload(p, {}, bytes("x"), 4, 2);
    CHECK(s.container.codewords.size() == 1);
    CHECK(extract_payload(s.container, 4).data.empty());
  }
  SUBCASE("one byte in RS(7,3): three 3-bit symbols over the required codewords") {
    const CodeParams p = CodeParams::make(3, 3);
    // 9 data bits per codeword: 2 cover bytes + terminator = 24 bits -> 3 codewords
    const EmbedSummary s = embed_payload(p, bytes("ab"), std::vector<std::uint8_t>{0xC3}, 7, 2);
    CHECK(s.message_symbols == 3);
    CHECK(s.container.codewords.size() == 3);
    CHECK(s.capacity_symbols == 6);
    CHECK(extract_payload(s.container, 7).message == std::vector<std::uint8_t>{0xC3});
  }
  SUBCASE("message too large") {
    const CodeParams p = CodeParams::make(3, 3);
    CHECK(code_of([&] { embed_payload(p, {}, bytes("abc"), 1, 2); }) == Errc::message_too_large);
    CHECK(code_of([&] { embed_payload(p, bytes("abc"), {}, 1, 3); }) == Errc::budget_exceeded);
  }
  SUBCASE("wrong seed: data still exact") {
    const CodeParams p = CodeParams::make(5, 19);
    const auto msg = bytes("secret!");
    const EmbedSummary s = embed_payload(p, std::vector<std::uint8_t>(64, 0x55), msg, 1000, 2);
    const ExtractedPayload got = extract_payload(s.container, 1001);
    CHECK(got.decode_failures == 0);
    CHECK(got.data == std::vector<std::uint8_t>(64, 0x55));
    CHECK(got.message != msg);
  }
  SUBCASE("one symbol flipped off the key positions") {
    const CodeParams p = CodeParams::make(5, 19);
    const auto msg = bytes("ok");
    EmbedSummary s = embed_payload(p, bytes("the carrier text"), msg, 3, 2);
    // data block symbols are never key positions under parity placement
    s.container.codewords[0][p.data_position(4)] += Element(9);
    const ExtractedPayload got = extract_payload(parse_container(serialize(s.container)), 3);
    CHECK(got.decode_failures == 0);
    CHECK(got.corrected_symbols > 0);
    CHECK(got.data == bytes("the carrier text"));
    CHECK(got.message == msg);
  }
  SUBCASE("beyond t in one codeword reports a failure") {
    const CodeParams p = CodeParams::make(3, 3);
    EmbedSummary s = embed_payload(p, bytes("abcd"), {}, 3, 2);
    for (int i = 0; i < 4; ++i) s.container.codewords[1][i] += Element(1 + i);
    // 4 errors in RS(7,3): a reported failure, or a miscorrection that
    // visibly damages the carrier
    bool flagged = false;
    try {
      const ExtractedPayload got = extract_payload(s.container, 3);
      flagged = got.decode_failures > 0 || got.data != bytes("abcd");
    } catch (const Error& e) {
      flagged = e.code() == Errc::corrupt_payload;
    }
    CHECK(flagged);
  }
}
