#pragma once

#include <cstdint>
#include <string>

#include "core/error.hpp"

namespace sbe {

enum class CipherKind : std::uint8_t {
  Trivium = 0,
  Grain128a = 1,
  Grain128aAuth = 2,
};

// Bits of keystream produced per datapath step. The simulated data path is
// 32 bits wide, so the usable rates are the divisors of 32 below.
enum class Radix : std::uint8_t { R1 = 1, R8 = 8, R16 = 16, R32 = 32 };

struct CipherParams {
  unsigned key_bits;
  unsigned iv_bits;
  unsigned state_bits;
};

constexpr CipherParams params_for(CipherKind kind) {
  switch (kind) {
    case CipherKind::Trivium:
      return {80, 80, 288};
    case CipherKind::Grain128a:
    case CipherKind::Grain128aAuth:
      return {128, 96, 256};
  }
  return {0, 0, 0};
}

constexpr unsigned init_clocks_for(CipherKind kind) {
  return kind == CipherKind::Trivium ? 1152u : 256u;
}

constexpr unsigned radix_bits(Radix r) { return static_cast<unsigned>(r); }

inline Radix radix_from_int(unsigned bits) {
  switch (bits) {
    case 1:
      return Radix::R1;
    case 8:
      return Radix::R8;
    case 16:
      return Radix::R16;
    case 32:
      return Radix::R32;
    default:
      fail(Err::ParamSize, "radix must be one of 1, 8, 16, 32 (got " + std::to_string(bits) + ")");
  }
}

inline std::string cipher_name(CipherKind kind) {
  switch (kind) {
    case CipherKind::Trivium:
      return "trivium";
    case CipherKind::Grain128a:
      return "grain128a";
    case CipherKind::Grain128aAuth:
      return "grain128a_auth";
  }
  return "?";
}

inline CipherKind cipher_from_name(const std::string& name) {
  if (name == "trivium") return CipherKind::Trivium;
  if (name == "grain128a") return CipherKind::Grain128a;
  if (name == "grain128a_auth") return CipherKind::Grain128aAuth;
  fail(Err::Parse, "unknown cipher name: " + name);
}

// Per-(key, IV) keystream budget in bits; exceeding it forces a re-IV.
constexpr std::uint64_t kKeystreamBitCap = std::uint64_t{1} << 32;

}  // namespace sbe
