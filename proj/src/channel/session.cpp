#include "channel/session.hpp"

#include <algorithm>
#include <string>

#include "cipher/cipher.hpp"
#include "core/error.hpp"

namespace sbe {

ChannelSession::ChannelSession(const SessionConfig& config, std::span<const std::uint8_t> key,
                               Direction role)
    : config_(config), role_(role) {
  if (config_.cipher == CipherKind::Grain128aAuth) {
    const unsigned w = config_.tag_bits.value_or(32);
    if (w == 0 || w > 32) fail(Err::ParamSize, "tag length must satisfy 0 < w <= 32");
    config_.tag_bits = w;
  } else if (config_.tag_bits) {
    fail(Err::Mode, "tag length configured but the cipher has no authenticated mode");
  }
  check_key_size(key);
  key_.assign(key.begin(), key.end());
}

ChannelSession::~ChannelSession() { std::fill(key_.begin(), key_.end(), std::uint8_t{0}); }

void ChannelSession::check_key_size(std::span<const std::uint8_t> key) const {
  const auto want = params_for(config_.cipher).key_bits / 8;
  if (key.size() != want)
    fail(Err::ParamSize, "session key must be " + std::to_string(want) + " bytes, got " +
                             std::to_string(key.size()));
}

std::vector<std::uint8_t> ChannelSession::derive_iv(std::uint64_t counter, Direction dir) const {
  if (counter >= (std::uint64_t{1} << 63))
    fail(Err::Exhausted, "message counter exhausted; re-key the session");
  const std::uint64_t v =
      (std::uint64_t{dir == Direction::ToTa ? 1u : 0u} << 63) | counter;
  std::vector<std::uint8_t> iv(params_for(config_.cipher).iv_bits / 8, 0);
  for (unsigned i = 0; i < 8; ++i) iv[i] = static_cast<std::uint8_t>(v >> (8 * (7 - i)));
  return iv;
}

Frame ChannelSession::seal(std::span<const std::uint8_t> plaintext) {
  if (plaintext.size() > kMaxPayloadBytes)
    fail(Err::Length, "payload exceeds the per-frame cap of 2^28 bytes");
  const auto iv = derive_iv(send_counter_, role_);

  StreamCipher cipher(config_.cipher, config_.radix, config_.tag_bits);
  cipher.load(key_, iv);
  last_init_steps_ = cipher.init();

  Frame f;
  f.session_id = config_.session_id;
  f.msg_counter = send_counter_;
  f.flags = static_cast<std::uint8_t>((authenticated() ? kFlagAuth : 0) |
                                      (role_ == Direction::ToTa ? kFlagDirection : 0));
  f.ciphertext.resize(plaintext.size());
  cipher.encrypt(plaintext, f.ciphertext);
  if (authenticated()) f.tag = cipher.mac_finalize();

  ++send_counter_;
  return f;
}

std::vector<std::uint8_t> ChannelSession::open_frame(const Frame& frame) {
  if (frame.session_id != config_.session_id)
    fail(Err::Routing, "frame addresses session " + std::to_string(frame.session_id) +
                           ", this endpoint serves " + std::to_string(config_.session_id));
  const Direction dir =
      (frame.flags & kFlagDirection) ? Direction::ToTa : Direction::ToIp;
  if (dir == role_)
    fail(Err::Routing, "frame direction matches this endpoint's own sending role");
  if (frame.has_tag() != authenticated())
    fail(Err::Mode, "frame auth flag does not match the session mode");
  if (frame.ciphertext.size() > kMaxPayloadBytes)
    fail(Err::Length, "payload exceeds the per-frame cap of 2^28 bytes");
  if (frame.msg_counter < recv_counter_)
    fail(Err::Replay, "frame counter " + std::to_string(frame.msg_counter) +
                          " below the replay watermark " + std::to_string(recv_counter_));
  const auto iv = derive_iv(frame.msg_counter, dir);

  StreamCipher cipher(config_.cipher, config_.radix, config_.tag_bits);
  cipher.load(key_, iv);
  last_init_steps_ = cipher.init();

  std::vector<std::uint8_t> plaintext(frame.ciphertext.size());
  cipher.decrypt(frame.ciphertext, plaintext);
  if (authenticated()) {
    const auto tag = cipher.mac_finalize();
    if (frame.tag.size() != tag.size())
      fail(Err::AuthFail, "tag length mismatch");
    std::uint8_t diff = 0;
    for (std::size_t i = 0; i < tag.size(); ++i) diff |= tag[i] ^ frame.tag[i];
    if (diff) fail(Err::AuthFail, "tag verification failed; frame discarded");
  }

  recv_counter_ = frame.msg_counter + 1;
  return plaintext;
}

void ChannelSession::rekey(std::span<const std::uint8_t> new_key) {
  check_key_size(new_key);
  std::fill(key_.begin(), key_.end(), std::uint8_t{0});
  key_.assign(new_key.begin(), new_key.end());
  send_counter_ = 0;
  recv_counter_ = 0;
  last_init_steps_ = 0;
}

}  // namespace sbe
