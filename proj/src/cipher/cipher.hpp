#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cipher/grain128a.hpp"
#include "cipher/params.hpp"
#include "cipher/trivium.hpp"

namespace sbe {

// Bitwise XOR of a keystream chunk over data; applying it twice with the same
// chunk restores the input. Lengths must match.
void keystream_xor(std::span<const std::uint8_t> stream, std::span<const std::uint8_t> in,
                   std::span<std::uint8_t> out);

// One cipher instance bound to a kind and radix: load, init, then produce
// keystream bytes or encrypt/decrypt byte spans. Keystream content depends
// only on (kind, key, IV); the radix picks the datapath width.
class StreamCipher {
public:
  StreamCipher(CipherKind kind, Radix radix, std::optional<unsigned> tag_bits = std::nullopt);

  void load(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv);

  // Warm-up; returns the number of radix-wide steps (1152/r or 256/r).
  unsigned init();

  // Fills `out` with keystream bytes. In authenticated mode this absorbs an
  // all-zero message (use encrypt()/decrypt() for real traffic).
  void keystream(std::span<std::uint8_t> out);

  // out = in XOR keystream. encrypt() absorbs the plaintext (= in) into the
  // MAC, decrypt() absorbs the recovered plaintext (= out).
  void encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);
  void decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);

  // Authenticated mode only: final tag bytes (LSB-first packing).
  std::vector<std::uint8_t> mac_finalize();

  CipherKind kind() const { return kind_; }
  Radix radix() const { return radix_; }
  CipherParams params() const { return params_for(kind_); }
  unsigned tag_bits() const;
  unsigned init_steps() const { return init_steps_; }
  std::uint64_t clocks_done() const;

  // Raw step access for tests and step-level consumers: next r keystream
  // bits, LSB first. In authenticated mode pairs with absorb().
  std::uint32_t step();
  void absorb(std::uint32_t message_bits, unsigned nbits);

  unsigned state_popcount() const;

private:
  void fill_bitbuf();

  CipherKind kind_;
  Radix radix_;
  std::variant<Trivium, Grain128a> impl_;
  std::uint64_t bitbuf_ = 0;  // keystream bits awaiting byte assembly, LSB oldest
  unsigned bitbuf_n_ = 0;
  unsigned init_steps_ = 0;
};

}  // namespace sbe
