#include "oracle/reference_ciphers.hpp"

#include <array>
#include <cassert>

namespace sbe::oracle {
namespace {

// ---- Trivium, one clock at a time ------------------------------------------
//
// State s[1..288] (index 0 unused to keep the textbook numbering). Key and IV
// use the historical byte convention: bit m of the 80-bit value is bit
// 7-(m%8) of byte 9-(m/8). Keystream bits fill output bytes LSB first.

struct TriviumSerial {
  std::array<std::uint8_t, 289> s{};

  TriviumSerial(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) {
    assert(key.size() == 10 && iv.size() == 10);
    for (int m = 0; m < 80; ++m) {
      s[1 + m] = (key[9 - m / 8] >> (7 - m % 8)) & 1;
      s[94 + m] = (iv[9 - m / 8] >> (7 - m % 8)) & 1;
    }
    s[286] = s[287] = s[288] = 1;
    for (int i = 0; i < 4 * 288; ++i) clock();
  }

  std::uint8_t clock() {
    const std::uint8_t t1 = s[66] ^ s[93];
    const std::uint8_t t2 = s[162] ^ s[177];
    const std::uint8_t t3 = s[243] ^ s[288];
    const std::uint8_t z = t1 ^ t2 ^ t3;
    const std::uint8_t a_in = t3 ^ (s[286] & s[287]) ^ s[69];
    const std::uint8_t b_in = t1 ^ (s[91] & s[92]) ^ s[171];
    const std::uint8_t c_in = t2 ^ (s[175] & s[176]) ^ s[264];
    for (int i = 288; i > 1; --i) s[i] = s[i - 1];
    s[1] = a_in;
    s[94] = b_in;
    s[178] = c_in;
    return z;
  }
};

// ---- Grain-128a, one clock at a time ---------------------------------------
//
// NLFSR b[0..127] holds the key, LFSR s[0..127] holds IV || 1^31 || 0. Bit i
// of a value is bit i%8 of byte i/8. During the 256 warm-up clocks the
// pre-output y is folded into both feedback bits.

struct GrainSerial {
  std::array<std::uint8_t, 128> b{};
  std::array<std::uint8_t, 128> s{};

  GrainSerial(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) {
    assert(key.size() == 16 && iv.size() == 12);
    for (int i = 0; i < 128; ++i) b[i] = (key[i / 8] >> (i % 8)) & 1;
    for (int i = 0; i < 96; ++i) s[i] = (iv[i / 8] >> (i % 8)) & 1;
    for (int i = 96; i < 127; ++i) s[i] = 1;
    s[127] = 0;
    for (int i = 0; i < 256; ++i) clock(true);
  }

  std::uint8_t clock(bool warmup) {
    const std::uint8_t h = (b[12] & s[8]) ^ (s[13] & s[20]) ^ (b[95] & s[42]) ^
                           (s[60] & s[79]) ^ (b[12] & b[95] & s[94]);
    const std::uint8_t y =
        h ^ s[93] ^ b[2] ^ b[15] ^ b[36] ^ b[45] ^ b[64] ^ b[73] ^ b[89];
    std::uint8_t f = s[0] ^ s[7] ^ s[38] ^ s[70] ^ s[81] ^ s[96];
    std::uint8_t g = s[0] ^ b[0] ^ b[26] ^ b[56] ^ b[91] ^ b[96] ^ (b[3] & b[67]) ^
                     (b[11] & b[13]) ^ (b[17] & b[18]) ^ (b[27] & b[59]) ^
                     (b[40] & b[48]) ^ (b[61] & b[65]) ^ (b[68] & b[84]) ^
                     (b[88] & b[92] & b[93] & b[95]) ^ (b[22] & b[24] & b[25]) ^
                     (b[70] & b[78] & b[82]);
    if (warmup) {
      f ^= y;
      g ^= y;
    }
    for (int i = 0; i < 127; ++i) {
      b[i] = b[i + 1];
      s[i] = s[i + 1];
    }
    b[127] = g;
    s[127] = f;
    return y;
  }
};

}  // namespace

std::vector<std::uint8_t> trivium_keystream(std::span<const std::uint8_t> key,
                                            std::span<const std::uint8_t> iv,
                                            std::uint64_t skip_bits, std::size_t nbytes) {
  TriviumSerial c(key, iv);
  for (std::uint64_t i = 0; i < skip_bits; ++i) c.clock();
  std::vector<std::uint8_t> out(nbytes, 0);
  for (std::size_t i = 0; i < 8 * nbytes; ++i)
    out[i / 8] |= static_cast<std::uint8_t>(c.clock() << (i % 8));
  return out;
}

std::vector<std::uint8_t> grain128a_keystream(std::span<const std::uint8_t> key,
                                              std::span<const std::uint8_t> iv,
                                              std::uint64_t skip_bits, std::size_t nbytes) {
  GrainSerial c(key, iv);
  for (std::uint64_t i = 0; i < skip_bits; ++i) c.clock(false);
  std::vector<std::uint8_t> out(nbytes, 0);
  for (std::size_t i = 0; i < 8 * nbytes; ++i)
    out[i / 8] |= static_cast<std::uint8_t>(c.clock(false) << (i % 8));
  return out;
}

GrainAuthResult grain128a_auth(std::span<const std::uint8_t> key,
                               std::span<const std::uint8_t> iv,
                               std::span<const std::uint8_t> message, unsigned tag_bits) {
  assert(tag_bits >= 1 && tag_bits <= 32);
  GrainSerial c(key, iv);

  // First 64 pre-output bits seed the accumulator and the MAC window
  // r_0..r_31; afterwards even bits are keystream, odd bits extend r.
  std::uint32_t acc = 0, window = 0;
  for (int i = 0; i < 32; ++i) acc |= std::uint32_t{c.clock(false)} << i;
  for (int i = 0; i < 32; ++i) window |= std::uint32_t{c.clock(false)} << i;

  const std::size_t nbits = 8 * message.size();
  GrainAuthResult res;
  res.keystream.assign(message.size(), 0);
  for (std::size_t i = 0; i < nbits; ++i) {
    res.keystream[i / 8] |= static_cast<std::uint8_t>(c.clock(false) << (i % 8));
    const std::uint8_t m = (message[i / 8] >> (i % 8)) & 1;
    if (m) acc ^= window;
    window = (window >> 1) | (std::uint32_t{c.clock(false)} << 31);
  }
  acc ^= window;  // padding bit, always 1

  const std::uint32_t tag = acc >> (32 - tag_bits);
  res.tag.assign((tag_bits + 7) / 8, 0);
  for (unsigned i = 0; i < tag_bits; ++i)
    res.tag[i / 8] |= static_cast<std::uint8_t>(((tag >> i) & 1) << (i % 8));
  return res;
}

}  // namespace sbe::oracle
