#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "rsstego/channel.hpp"
#include "rsstego/rng.hpp"
#include "rsstego/stego.hpp"

using namespace rsstego;

namespace {

std::vector<Element> random_symbols(SplitMix64& rng, const GaloisField& f, int count) {
  std::vector<Element> v(static_cast<std::size_t>(count));
  for (auto& e : v) e = Element(rng.below(f.size()));
  return v;
}

}  // namespace

TEST_CASE("splitmix64 reference outputs") {
  SplitMix64 rng(1);
  CHECK(rng.next() == 0x910A2DEC89025CC1ULL);
  CHECK(rng.next() == 0xBEEB8DA1658EEC67ULL);
  CHECK(rng.next() == 0xF893A2EEFB32555EULL);
}

TEST_CASE("derive_positions") {
  const CodeParams p = CodeParams::make(5, 19);

  SUBCASE("count 0 gives an empty key") { CHECK(derive_positions(p, 5, 0).positions.empty()); }

  SUBCASE("deterministic in the seed") {
    CHECK(derive_positions(p, 77, 4).positions == derive_positions(p, 77, 4).positions);
    CHECK(derive_positions(p, 77, 4, Placement::any).positions == derive_positions(p, 77, 4, Placement::any).positions);
  }

  SUBCASE("golden values for seed 1, n 31, count 2") {
    CHECK(derive_positions(p, 1, 2).positions == std::vector<int>{5, 9});
    CHECK(derive_positions(p, 1, 2, Placement::any).positions == std::vector<int>{20, 0});
  }

  SUBCASE("distinct and inside the pool") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      for (auto placement : {Placement::parity, Placement::any}) {
        const auto key = derive_positions(p, seed, 6, placement);
        const std::set<int> uniq(key.positions.begin(), key.positions.end());
        REQUIRE(uniq.size() == 6);
        const IndexRange pool = placement == Placement::parity ? p.parity_range() : IndexRange{0, 31};
        for (int pos : key.positions) REQUIRE(pool.contains(pos));
      }
    }
  }

  SUBCASE("budget") {
    CHECK_THROWS_AS(derive_positions(p, 1, 7), Error);
    CHECK_THROWS_AS(derive_positions(p, 1, 5, Placement::parity, 2), Error);
    CHECK_NOTHROW(derive_positions(p, 1, 5, Placement::parity, 1));
    try {
      derive_positions(p, 1, 7);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::budget_exceeded);
    }
    // RS(7,5) has t = 1 and a two-symbol parity block.
    const CodeParams small = CodeParams::make(3, 5);
    CHECK(derive_positions(small, 3, 1).positions.size() == 1);
  }

  SUBCASE("uniform over the parity block") {
    std::vector<int> hist(31, 0);
    const int draws = 12000;
    for (int s = 0; s < draws; ++s) ++hist[derive_positions(p, static_cast<std::uint64_t>(s) * 7919, 1).positions[0]];
    for (int i = 0; i < 12; ++i) CHECK(std::abs(hist[i] - draws / 12) < 150);  // ~5 sigma
    for (int i = 12; i < 31; ++i) CHECK(hist[i] == 0);
  }
}

TEST_CASE("embed") {
  const CodeParams p = CodeParams::make(5, 19);
  const ReedSolomon rs(p);
  SplitMix64 rng(4);
  const Codeword clean = rs.encode(random_symbols(rng, p.field(), 19));
  const StegoKey key = derive_positions(p, 9, 2);

  SUBCASE("only key positions change") {
    const SecretMessage msg{{Element(3), Element(30)}};
    const Codeword stego = embed(p, clean, key, msg).word;
    for (int i = 0; i < 31; ++i) {
      if (std::find(key.positions.begin(), key.positions.end(), i) != key.positions.end()) continue;
      CHECK(stego[i] == clean[i]);
    }
    CHECK(stego[key.positions[0]] == Element(3));
    CHECK(stego[key.positions[1]] == Element(30));
  }

  SUBCASE("message equal to the clean symbol leaves the word unchanged and still extracts") {
    const SecretMessage msg{{clean[key.positions[0]], clean[key.positions[1]]}};
    const Codeword stego = embed(p, clean, key, msg).word;
    CHECK(stego == clean);
    const ExtractResult r = extract(stego, key, p);
    CHECK(r.message.symbols == msg.symbols);
    CHECK(r.diagnostics.error_count() == 0);
  }

  SUBCASE("decoding the stego word recovers the clean codeword, errors only at key positions") {
    const SecretMessage msg{{clean[key.positions[0]] + Element(1), clean[key.positions[1]] + Element(2)}};
    const DecodeResult r = rs.decode(embed(p, clean, key, msg).word);
    REQUIRE_FALSE(r.failure);
    CHECK(r.corrected == clean);
    std::vector<int> sorted = key.positions;
    std::sort(sorted.begin(), sorted.end());
    CHECK(r.error_positions == sorted);
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(embed(p, clean, key, SecretMessage{{Element(1)}}), Error);
    CHECK_THROWS_AS(embed(p, clean, key, SecretMessage{{Element(1), Element(2)}}, 5), Error);
    CHECK_THROWS_AS(embed(p, clean, StegoKey{{3, 3}, 0}, SecretMessage{{Element(1), Element(2)}}), Error);
    CHECK_THROWS_AS(embed(p, clean, StegoKey{{31}, 0}, SecretMessage{{Element(1)}}), Error);
    CHECK_THROWS_AS(embed(p, clean, StegoKey{{1}, 0}, SecretMessage{{Element(32)}}), Error);
    CHECK_THROWS_AS(embed(p, Codeword{std::vector<Element>(30)}, key, SecretMessage{{Element(1), Element(2)}}), Error);
    CHECK_THROWS_AS(embed(p, clean, derive_positions(p, 1, 6, Placement::any),
                          SecretMessage{std::vector<Element>(6)}, 1),
                    Error);
  }
}

TEST_CASE("RS(31,19) two-symbol message, noiseless end to end") {
  const CodeParams p = CodeParams::make(5, 19);
  const ReedSolomon rs(p);
  SplitMix64 rng(2);
  const auto data = random_symbols(rng, p.field(), 19);
  const StegoKey key = derive_positions(p, 1, 2);
  const SecretMessage msg{{Element(21), Element(8)}};
  const ExtractResult r = extract(rs, embed(p, rs.encode(data), key, msg).word, key);
  CHECK_FALSE(r.diagnostics.failure);
  CHECK(r.data == data);
  CHECK(r.message.symbols == msg.symbols);
}

TEST_CASE("one channel error") {
  const CodeParams p = CodeParams::make(5, 19);
  const ReedSolomon rs(p);
  SplitMix64 rng(12);

  SUBCASE("off the key positions: data and message exact") {
    for (int trial = 0; trial < 500; ++trial) {
      const auto data = random_symbols(rng, p.field(), 19);
      const StegoKey key = derive_positions(p, rng.next(), 2);
      const SecretMessage msg{random_symbols(rng, p.field(), 2)};
      Codeword w = embed(p, rs.encode(data), key, msg).word;
      int pos = static_cast<int>(rng.below(31));
      while (std::find(key.positions.begin(), key.positions.end(), pos) != key.positions.end()) pos = (pos + 1) % 31;
      w[pos] += Element(1 + rng.below(31));
      const ExtractResult r = extract(rs, w, key);
      REQUIRE(r.data == data);
      REQUIRE(r.message.symbols == msg.symbols);
    }
  }

  SUBCASE("on a key position: data exact, that message symbol always corrupted") {
    // A nonzero delta on a value-read position always changes the value.
    int corrupted = 0;
    const int trials = 3000;
    for (int trial = 0; trial < trials; ++trial) {
      const auto data = random_symbols(rng, p.field(), 19);
      const StegoKey key = derive_positions(p, rng.next(), 2);
      const SecretMessage msg{random_symbols(rng, p.field(), 2)};
      Codeword w = embed(p, rs.encode(data), key, msg).word;
      w[key.positions[0]] += Element(1 + rng.below(31));
      const ExtractResult r = extract(rs, w, key);
      REQUIRE(r.data == data);
      REQUIRE(r.message.symbols[1] == msg.symbols[1]);
      corrupted += r.message.symbols[0] != msg.symbols[0] ? 1 : 0;
    }
    CHECK(corrupted == trials);
  }
}

TEST_CASE("transparency and composition across random keys and budgets") {
  for (auto [m, k] : {std::pair{3, 3}, std::pair{4, 7}, std::pair{5, 19}, std::pair{6, 51}}) {
    const CodeParams p = CodeParams::make(m, k);
    const ReedSolomon rs(p);
    SplitMix64 rng(static_cast<std::uint64_t>(100 + m));
    for (int trial = 0; trial < 500; ++trial) {
      const auto data = random_symbols(rng, p.field(), k);
      const int count = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.t()) + 1));
      const auto placement = rng.below(2) ? Placement::any : Placement::parity;
      const StegoKey key = derive_positions(p, rng.next(), count, placement);
      const SecretMessage msg{random_symbols(rng, p.field(), count)};
      const ExtractResult r = extract(rs, embed(p, rs.encode(data), key, msg).word, key);
      REQUIRE_FALSE(r.diagnostics.failure);
      REQUIRE(r.data == data);
      REQUIRE(r.message.symbols == msg.symbols);
    }
  }
}

TEST_CASE("extraction reads only key positions") {
  const CodeParams p = CodeParams::make(5, 19);
  SplitMix64 rng(55);
  const StegoKey key = derive_positions(p, 3, 2);
  Codeword w{random_symbols(rng, p.field(), 31)};
  const auto before = extract(w, key, p).message.symbols;
  for (int i = 0; i < 31; ++i) {
    if (std::find(key.positions.begin(), key.positions.end(), i) != key.positions.end()) continue;
    w[i] += Element(1 + rng.below(31));
  }
  CHECK(extract(w, key, p).message.symbols == before);
}

TEST_CASE("per-codeword keys differ and are reproducible") {
  const CodeParams p = CodeParams::make(5, 19);
  CHECK(key_for_codeword(p, 10, 0, 2).positions == key_for_codeword(p, 10, 0, 2).positions);
  int differing = 0;
  for (std::uint64_t c = 1; c < 50; ++c) {
    differing += key_for_codeword(p, 10, c, 2).positions != key_for_codeword(p, 10, 0, 2).positions;
  }
  CHECK(differing > 40);
  CHECK(key_for_codeword(p, 10, 3, 2).seed == 10);
}
