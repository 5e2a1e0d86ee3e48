#pragma once

#include <cstdint>
#include <span>

#include "cipher/params.hpp"
#include "core/bits.hpp"

namespace sbe {

// Trivium keystream generator with a radix-r datapath (r in {1, 8, 16, 32}):
// each step computes r feedback bits per register at once, the software
// analogue of an r-wide hardware unrolling.
//
// Byte convention (matches the eSTREAM reference implementation, verified
// against the published test vectors): key and IV bytes are given most
// significant byte first as printed in the vectors; bit 1 of the cipher is
// the most significant bit of the *last* byte. Keystream bits fill output
// bytes least significant bit first.
class Trivium {
public:
  static constexpr CipherParams kParams = params_for(CipherKind::Trivium);
  static constexpr unsigned kInitClocks = 1152;

  // Loads an 80-bit key and 80-bit IV (10 bytes each).
  void load(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv);

  // Runs the 1152 warm-up clocks in radix-wide steps; returns the step count
  // 1152 / r. Only valid directly after load().
  unsigned init(Radix radix);

  // Produces the next r keystream bits (LSB of the result = earliest bit).
  // Requires init() to have completed.
  std::uint32_t step(Radix radix);

  std::uint64_t clocks_done() const { return clocks_done_; }
  std::uint64_t keystream_bits_done() const { return ks_bits_; }
  bool ready() const { return loaded_ && clocks_done_ >= kInitClocks; }

  // State inspection for tests: total number of set state bits.
  unsigned state_popcount() const { return a_.popcount() + b_.popcount() + c_.popcount(); }

  bool same_state(const Trivium& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }

private:
  std::uint32_t clock_chunk(unsigned r);

  ShiftReg<93> a_;
  ShiftReg<84> b_;
  ShiftReg<111> c_;
  std::uint64_t clocks_done_ = 0;
  std::uint64_t ks_bits_ = 0;
  bool loaded_ = false;
};

}  // namespace sbe
