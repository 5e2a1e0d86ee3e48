#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cipher/params.hpp"
#include "core/bits.hpp"

namespace sbe {

// Grain-128a keystream generator with optional message authentication and a
// radix-r datapath (r in {1, 8, 16, 32}; 32 is the structural maximum, the
// smallest gap between a feedback tap and the register end).
//
// Byte convention: key, IV, keystream and tag bytes all map bits least
// significant bit first (bit j of byte i is cipher bit 8*i+j), the
// convention of the designers' eSTREAM-era reference code.
//
// In authenticated mode the pre-output stream is scheduled per the cipher's
// definition: after initialization the first 64 bits preload the MAC
// accumulator and shift register, then even bits are keystream and odd bits
// feed the shift register. step() returns r keystream bits (consuming 2r
// pre-output bits) and queues r MAC bits; absorb() pairs queued MAC bits
// with message bits in arrival order. MAC bits still queued at
// mac_finalize() belong to keystream padding past the message end and are
// discarded.
class Grain128a {
public:
  static constexpr CipherParams kParams = params_for(CipherKind::Grain128a);
  static constexpr unsigned kInitClocks = 256;

  // w = tag length in bits (0 < w <= 32) engages authenticated mode; w = 0
  // selects plain keystream mode.
  explicit Grain128a(unsigned tag_bits = 0);

  // Loads a 128-bit key and 96-bit IV (16 and 12 bytes).
  void load(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv);

  // Runs the 256 warm-up clocks (pre-output fed back into both registers) in
  // radix-wide steps; returns the step count 256 / r.
  unsigned init(Radix radix);

  // Next r keystream bits, LSB first.
  std::uint32_t step(Radix radix);

  // Authenticated mode: pairs the r message bits produced alongside the last
  // step() with the queued MAC bits. Message bits are absorbed LSB first.
  void absorb(std::uint32_t message_bits, unsigned nbits);

  // Authenticated mode: absorbs the padding bit and returns the final w bits
  // of the accumulator, packed LSB first into ceil(w/8) bytes.
  std::vector<std::uint8_t> mac_finalize();

  bool authenticated() const { return tag_bits_ > 0; }
  unsigned tag_bits() const { return tag_bits_; }
  std::uint64_t clocks_done() const { return clocks_done_; }
  bool ready() const { return loaded_ && clocks_done_ >= kInitClocks; }
  unsigned pending_mac_bits() const { return macq_n_; }

  unsigned state_popcount() const { return nfsr_.popcount() + lfsr_.popcount(); }
  bool same_state(const Grain128a& o) const { return nfsr_ == o.nfsr_ && lfsr_ == o.lfsr_; }

private:
  std::uint32_t preout_chunk(unsigned r, bool init_phase);
  void ensure_mac_preload(unsigned r);
  void check_budget(unsigned bits);

  ShiftReg<128> nfsr_;
  ShiftReg<128> lfsr_;
  std::uint32_t acc_ = 0;      // MAC accumulator, bit j = a^j
  std::uint32_t sreg_ = 0;     // MAC shift register, bit j = r_{i+j}
  std::uint64_t macq_ = 0;     // MAC bits queued by step(), oldest at bit 0
  unsigned macq_n_ = 0;
  unsigned tag_bits_ = 0;
  std::uint64_t clocks_done_ = 0;
  std::uint64_t ks_bits_ = 0;  // keystream bits produced since init
  bool loaded_ = false;
  bool mac_preloaded_ = false;
  bool finalized_ = false;
};

}  // namespace sbe
