#include "cipher/grain128a.hpp"

#include <string>

#include "core/error.hpp"

namespace sbe {

Grain128a::Grain128a(unsigned tag_bits) : tag_bits_(tag_bits) {
  if (tag_bits > 32) fail(Err::ParamSize, "Grain-128a tag length must satisfy 0 < w <= 32");
}

void Grain128a::load(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) {
  if (key.size() != kParams.key_bits / 8)
    fail(Err::ParamSize, "Grain-128a key must be 16 bytes, got " + std::to_string(key.size()));
  if (iv.size() != kParams.iv_bits / 8)
    fail(Err::ParamSize, "Grain-128a IV must be 12 bytes, got " + std::to_string(iv.size()));

  nfsr_.clear();
  lfsr_.clear();

  for (unsigned i = 0; i < 128; ++i) nfsr_.set_bit(i, (key[i / 8] >> (i % 8)) & 1);
  for (unsigned i = 0; i < 96; ++i) lfsr_.set_bit(i, (iv[i / 8] >> (i % 8)) & 1);
  for (unsigned i = 96; i < 127; ++i) lfsr_.set_bit(i, true);
  lfsr_.set_bit(127, false);

  acc_ = 0;
  sreg_ = 0;
  macq_ = 0;
  macq_n_ = 0;
  clocks_done_ = 0;
  ks_bits_ = 0;
  loaded_ = true;
  mac_preloaded_ = false;
  finalized_ = false;
}

unsigned Grain128a::init(Radix radix) {
  if (!loaded_ || clocks_done_ != 0)
    fail(Err::Sequence, "Grain-128a init requires a freshly loaded state");
  const unsigned r = radix_bits(radix);
  const unsigned steps = kInitClocks / r;
  for (unsigned i = 0; i < steps; ++i) preout_chunk(r, true);
  return steps;
}

std::uint32_t Grain128a::step(Radix radix) {
  if (!ready()) fail(Err::Sequence, "Grain-128a keystream requested before the 256 warm-up clocks");
  if (finalized_) fail(Err::Sequence, "Grain-128a state already finalized");
  const unsigned r = radix_bits(radix);

  if (!authenticated()) {
    check_budget(r);
    return preout_chunk(r, false);
  }

  if (macq_n_ + r > 64)
    fail(Err::Sequence, "too many MAC bits queued; absorb message bits before stepping further");
  ensure_mac_preload(r);
  check_budget(r);

  // 2r pre-output bits: even positions are keystream, odd positions MAC bits.
  std::uint64_t y = preout_chunk(r, false);
  y |= std::uint64_t{preout_chunk(r, false)} << r;
  std::uint32_t ks = 0;
  for (unsigned i = 0; i < r; ++i) {
    ks |= static_cast<std::uint32_t>((y >> (2 * i)) & 1) << i;
    macq_ |= ((y >> (2 * i + 1)) & 1) << (macq_n_ + i);
  }
  macq_n_ += r;
  return ks;
}

void Grain128a::absorb(std::uint32_t message_bits, unsigned nbits) {
  if (!authenticated()) fail(Err::Mode, "absorb requires authenticated mode");
  if (nbits > macq_n_)
    fail(Err::Sequence, "absorb of more message bits than MAC bits queued");
  for (unsigned i = 0; i < nbits; ++i) {
    if ((message_bits >> i) & 1) acc_ ^= sreg_;
    sreg_ = (sreg_ >> 1) | (static_cast<std::uint32_t>(macq_ & 1) << 31);
    macq_ >>= 1;
  }
  macq_n_ -= nbits;
}

std::vector<std::uint8_t> Grain128a::mac_finalize() {
  if (!authenticated()) fail(Err::Mode, "mac_finalize requires authenticated mode");
  if (!ready()) fail(Err::Sequence, "mac_finalize before initialization");
  if (finalized_) fail(Err::Sequence, "mac_finalize called twice");
  ensure_mac_preload(32);

  // Scheduled MAC bits past the end of the message are never shifted in.
  macq_ = 0;
  macq_n_ = 0;
  acc_ ^= sreg_;  // padding bit m_L = 1
  finalized_ = true;

  const std::uint32_t tag = acc_ >> (32 - tag_bits_);
  std::vector<std::uint8_t> out((tag_bits_ + 7) / 8);
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(tag >> (8 * i));
  return out;
}

void Grain128a::ensure_mac_preload(unsigned r) {
  if (mac_preloaded_) return;
  for (unsigned filled = 0; filled < 32; filled += r)
    acc_ |= preout_chunk(r, false) << filled;
  for (unsigned filled = 0; filled < 32; filled += r)
    sreg_ |= preout_chunk(r, false) << filled;
  mac_preloaded_ = true;
}

// The cap counts keystream bits handed to the caller; in authenticated mode
// the MAC preload and the interleaved MAC bits draw extra pre-output clocks
// but do not count against it.
void Grain128a::check_budget(unsigned bits) {
  if (ks_bits_ + bits > kKeystreamBitCap)
    fail(Err::Exhausted, "Grain-128a keystream budget for this (key, IV) is exhausted");
  ks_bits_ += bits;
}

std::uint32_t Grain128a::preout_chunk(unsigned r, bool init_phase) {
  const auto s = [&](unsigned i) { return lfsr_.window(i, r); };
  const auto b = [&](unsigned i) { return nfsr_.window(i, r); };

  const std::uint32_t b12 = b(12);
  const std::uint32_t b95 = b(95);
  const std::uint32_t h = (b12 & s(8)) ^ (s(13) & s(20)) ^ (b95 & s(42)) ^ (s(60) & s(79)) ^
                          (b12 & b95 & s(94));
  const std::uint32_t y =
      h ^ s(93) ^ b(2) ^ b(15) ^ b(36) ^ b(45) ^ b(64) ^ b(73) ^ b(89);

  std::uint32_t fl = s(0) ^ s(7) ^ s(38) ^ s(70) ^ s(81) ^ s(96);
  std::uint32_t fn = s(0) ^ b(0) ^ b(26) ^ b(56) ^ b(91) ^ b(96) ^ (b(3) & b(67)) ^
                     (b(11) & b(13)) ^ (b(17) & b(18)) ^ (b(27) & b(59)) ^ (b(40) & b(48)) ^
                     (b(61) & b(65)) ^ (b(68) & b(84)) ^ (b(88) & b(92) & b(93) & b95) ^
                     (b(22) & b(24) & b(25)) ^ (b(70) & b(78) & b(82));
  if (init_phase) {
    fl ^= y;
    fn ^= y;
  }

  lfsr_.step(fl, r);
  nfsr_.step(fn, r);
  clocks_done_ += r;
  return y;
}

}  // namespace sbe
