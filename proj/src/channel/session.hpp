#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "channel/frame.hpp"
#include "cipher/params.hpp"

namespace sbe {

// Who a frame is travelling to. The software endpoint (crypto TA) seals
// ToIp frames; the hardware endpoint (crypto IP) seals ToTa frames.
enum class Direction : std::uint8_t { ToIp = 0, ToTa = 1 };

constexpr Direction opposite(Direction d) {
  return d == Direction::ToIp ? Direction::ToTa : Direction::ToIp;
}

struct SessionConfig {
  std::uint16_t session_id = 0;
  CipherKind cipher = CipherKind::Trivium;
  Radix radix = Radix::R32;
  std::optional<unsigned> tag_bits;  // Grain128aAuth only; defaults to 32 there
};

// One endpoint of an encrypted channel. Both endpoints are constructed from
// the same pre-shared key and config but with opposite roles; each seals
// with its own send counter and checks received counters for replay.
//
// Every frame uses a fresh cipher instance: the IV is derived from the
// frame's counter and direction, and the full warm-up runs per frame.
class ChannelSession {
public:
  // `role` is the direction this endpoint seals toward.
  ChannelSession(const SessionConfig& config, std::span<const std::uint8_t> key, Direction role);
  ~ChannelSession();

  ChannelSession(const ChannelSession&) = delete;
  ChannelSession& operator=(const ChannelSession&) = delete;
  ChannelSession(ChannelSession&&) = default;
  ChannelSession& operator=(ChannelSession&&) = default;

  // IV layout: bytes 0..7 hold the big-endian value (direction << 63) |
  // counter, remaining IV bytes are zero. Injective for counter < 2^63.
  std::vector<std::uint8_t> derive_iv(std::uint64_t counter, Direction dir) const;

  // Encrypts plaintext into a frame and consumes one send counter value.
  // Payloads are capped at 2^28 bytes to stay inside the keystream budget.
  Frame seal(std::span<const std::uint8_t> plaintext);

  // Verifies and decrypts. In authenticated mode the tag is checked before
  // any plaintext leaves this call. Accepts counters >= the watermark (gaps
  // from lost frames are allowed), rejects reuse as replay.
  std::vector<std::uint8_t> open_frame(const Frame& frame);

  // Fresh key, counters back to zero; the old key bytes are overwritten.
  void rekey(std::span<const std::uint8_t> new_key);

  std::uint16_t session_id() const { return config_.session_id; }
  CipherKind cipher() const { return config_.cipher; }
  Radix radix() const { return config_.radix; }
  Direction role() const { return role_; }
  bool authenticated() const { return config_.cipher == CipherKind::Grain128aAuth; }
  unsigned tag_bits() const { return authenticated() ? *config_.tag_bits : 0; }
  std::size_t tag_bytes() const { return (tag_bits() + 7) / 8; }
  std::uint64_t send_counter() const { return send_counter_; }
  std::uint64_t recv_counter() const { return recv_counter_; }
  // Cipher warm-up steps spent by the most recent seal or open_frame.
  unsigned last_init_steps() const { return last_init_steps_; }

  static constexpr std::size_t kMaxPayloadBytes = std::size_t{1} << 28;

private:
  void check_key_size(std::span<const std::uint8_t> key) const;

  SessionConfig config_;
  std::vector<std::uint8_t> key_;
  Direction role_;
  std::uint64_t send_counter_ = 0;
  std::uint64_t recv_counter_ = 0;
  unsigned last_init_steps_ = 0;
};

}  // namespace sbe
