#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>

namespace sbe {

// Feedback shift register of Len <= 128 bits, packed little-endian into two
// 64-bit words: register bit i lives at word i/64, bit i%64. Bit 0 is the
// oldest bit (next to drop), bit Len-1 the most recently inserted. Stepping
// by n clocks shifts everything down n positions and appends n fresh bits at
// the top, which matches a hardware shift register unrolled n-wide.
template <unsigned Len>
class ShiftReg {
  static_assert(Len > 0 && Len <= 128);

public:
  ShiftReg() = default;

  bool bit(unsigned i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set_bit(unsigned i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }

  // n consecutive bits starting at position pos, LSB of the result = bit pos.
  // Requires n <= 32 and pos + n <= Len.
  std::uint32_t window(unsigned pos, unsigned n) const {
    const unsigned word = pos >> 6;
    const unsigned off = pos & 63;
    std::uint64_t v = w_[word] >> off;
    if (off + n > 64) v |= w_[word + 1] << (64 - off);
    return static_cast<std::uint32_t>(v) & mask32(n);
  }

  // Shift down by n and insert the low n bits of `in` at positions
  // Len-n .. Len-1. Requires 1 <= n <= 32.
  void step(std::uint32_t in, unsigned n) {
    const std::uint64_t v = std::uint64_t{in & mask32(n)};
    w_[0] = (w_[0] >> n) | (w_[1] << (64 - n));
    w_[1] >>= n;
    const unsigned p = Len - n;
    w_[p >> 6] |= v << (p & 63);
    if ((p & 63) + n > 64) w_[(p >> 6) + 1] |= v >> (64 - (p & 63));
  }

  void clear() { w_ = {0, 0}; }

  unsigned popcount() const {
    return static_cast<unsigned>(std::popcount(w_[0]) + std::popcount(w_[1]));
  }

  bool operator==(const ShiftReg&) const = default;

  const std::array<std::uint64_t, 2>& words() const { return w_; }

private:
  static constexpr std::uint32_t mask32(unsigned n) {
    return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  }

  std::array<std::uint64_t, 2> w_{0, 0};
};

}  // namespace sbe
