#include "cipher/trivium.hpp"

#include <string>

#include "core/error.hpp"

namespace sbe {

// Register positions are counted from the drop end: state bit s_i of the
// specification sits at position 93-i (register A), 177-i (B), 288-i (C).
// Over r consecutive clocks a tap at position p reads the ascending window
// [p, p+r-1], valid for r <= 64 given the smallest tap position is 27.

void Trivium::load(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) {
  if (key.size() != kParams.key_bits / 8)
    fail(Err::ParamSize, "Trivium key must be 10 bytes, got " + std::to_string(key.size()));
  if (iv.size() != kParams.iv_bits / 8)
    fail(Err::ParamSize, "Trivium IV must be 10 bytes, got " + std::to_string(iv.size()));

  a_.clear();
  b_.clear();
  c_.clear();

  // Key bit m (0-based) = bit 7-(m%8) of byte 9-(m/8); it lands in register A
  // at position 92-m. Same byte mapping for the IV into register B at 83-m.
  for (unsigned m = 0; m < 80; ++m) {
    const bool kb = (key[9 - m / 8] >> (7 - m % 8)) & 1;
    const bool vb = (iv[9 - m / 8] >> (7 - m % 8)) & 1;
    a_.set_bit(92 - m, kb);
    b_.set_bit(83 - m, vb);
  }
  // Register C starts all zero except its last three bits.
  c_.set_bit(0, true);
  c_.set_bit(1, true);
  c_.set_bit(2, true);

  clocks_done_ = 0;
  ks_bits_ = 0;
  loaded_ = true;
}

unsigned Trivium::init(Radix radix) {
  if (!loaded_ || clocks_done_ != 0) fail(Err::Sequence, "Trivium init requires a freshly loaded state");
  const unsigned r = radix_bits(radix);
  const unsigned steps = kInitClocks / r;
  for (unsigned i = 0; i < steps; ++i) clock_chunk(r);
  return steps;
}

std::uint32_t Trivium::step(Radix radix) {
  if (!ready()) fail(Err::Sequence, "Trivium keystream requested before the 1152 warm-up clocks");
  const unsigned r = radix_bits(radix);
  if (ks_bits_ + r > kKeystreamBitCap)
    fail(Err::Exhausted, "Trivium keystream budget for this (key, IV) is exhausted");
  ks_bits_ += r;
  return clock_chunk(r);
}

std::uint32_t Trivium::clock_chunk(unsigned r) {
  const std::uint32_t t1 = a_.window(27, r) ^ a_.window(0, r);
  const std::uint32_t t2 = b_.window(15, r) ^ b_.window(0, r);
  const std::uint32_t t3 = c_.window(45, r) ^ c_.window(0, r);
  const std::uint32_t z = t1 ^ t2 ^ t3;

  const std::uint32_t fb = t1 ^ (a_.window(2, r) & a_.window(1, r)) ^ b_.window(6, r);
  const std::uint32_t fc = t2 ^ (b_.window(2, r) & b_.window(1, r)) ^ c_.window(24, r);
  const std::uint32_t fa = t3 ^ (c_.window(2, r) & c_.window(1, r)) ^ a_.window(24, r);

  a_.step(fa, r);
  b_.step(fb, r);
  c_.step(fc, r);
  clocks_done_ += r;
  return z;
}

}  // namespace sbe
