#include "cipher/cipher.hpp"

#include <string>

#include "core/error.hpp"

namespace sbe {

void keystream_xor(std::span<const std::uint8_t> stream, std::span<const std::uint8_t> in,
                   std::span<std::uint8_t> out) {
  if (stream.size() != in.size() || in.size() != out.size())
    fail(Err::Length, "keystream_xor requires equal-length spans");
  for (size_t i = 0; i < in.size(); ++i) out[i] = in[i] ^ stream[i];
}

StreamCipher::StreamCipher(CipherKind kind, Radix radix, std::optional<unsigned> tag_bits)
    : kind_(kind), radix_(radix) {
  switch (kind) {
    case CipherKind::Trivium:
      if (tag_bits)
        fail(Err::Mode, "Trivium has no authenticated mode");
      impl_ = Trivium{};
      break;
    case CipherKind::Grain128a:
      if (tag_bits)
        fail(Err::Mode, "tag length given but cipher kind is not Grain128aAuth");
      impl_ = Grain128a{0};
      break;
    case CipherKind::Grain128aAuth: {
      const unsigned w = tag_bits.value_or(32);
      if (w == 0 || w > 32)
        fail(Err::ParamSize, "Grain-128a tag length must satisfy 0 < w <= 32");
      impl_ = Grain128a{w};
      break;
    }
  }
}

void StreamCipher::load(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) {
  bitbuf_ = 0;
  bitbuf_n_ = 0;
  init_steps_ = 0;
  std::visit([&](auto& c) { c.load(key, iv); }, impl_);
}

unsigned StreamCipher::init() {
  init_steps_ = std::visit([&](auto& c) { return c.init(radix_); }, impl_);
  return init_steps_;
}

std::uint32_t StreamCipher::step() {
  return std::visit([&](auto& c) { return c.step(radix_); }, impl_);
}

void StreamCipher::absorb(std::uint32_t message_bits, unsigned nbits) {
  if (auto* g = std::get_if<Grain128a>(&impl_)) {
    g->absorb(message_bits, nbits);
    return;
  }
  fail(Err::Mode, "absorb requires Grain-128a in authenticated mode");
}

unsigned StreamCipher::tag_bits() const {
  if (const auto* g = std::get_if<Grain128a>(&impl_)) return g->tag_bits();
  return 0;
}

std::uint64_t StreamCipher::clocks_done() const {
  return std::visit([](const auto& c) { return c.clocks_done(); }, impl_);
}

unsigned StreamCipher::state_popcount() const {
  return std::visit([](const auto& c) { return c.state_popcount(); }, impl_);
}

void StreamCipher::fill_bitbuf() {
  const unsigned r = radix_bits(radix_);
  while (bitbuf_n_ < 8) {
    bitbuf_ |= std::uint64_t{step()} << bitbuf_n_;
    bitbuf_n_ += r;
  }
}

void StreamCipher::keystream(std::span<std::uint8_t> out) {
  const bool auth = tag_bits() > 0;
  for (auto& byte : out) {
    fill_bitbuf();
    byte = static_cast<std::uint8_t>(bitbuf_ & 0xFF);
    bitbuf_ >>= 8;
    bitbuf_n_ -= 8;
    if (auth) absorb(0, 8);
  }
}

void StreamCipher::encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  if (in.size() != out.size()) fail(Err::Length, "encrypt requires equal-length spans");
  const bool auth = tag_bits() > 0;
  for (size_t i = 0; i < in.size(); ++i) {
    fill_bitbuf();
    out[i] = in[i] ^ static_cast<std::uint8_t>(bitbuf_ & 0xFF);
    bitbuf_ >>= 8;
    bitbuf_n_ -= 8;
    if (auth) absorb(in[i], 8);
  }
}

void StreamCipher::decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  if (in.size() != out.size()) fail(Err::Length, "decrypt requires equal-length spans");
  const bool auth = tag_bits() > 0;
  for (size_t i = 0; i < in.size(); ++i) {
    fill_bitbuf();
    out[i] = in[i] ^ static_cast<std::uint8_t>(bitbuf_ & 0xFF);
    bitbuf_ >>= 8;
    bitbuf_n_ -= 8;
    if (auth) absorb(out[i], 8);
  }
}

std::vector<std::uint8_t> StreamCipher::mac_finalize() {
  if (auto* g = std::get_if<Grain128a>(&impl_)) return g->mac_finalize();
  fail(Err::Mode, "mac_finalize requires Grain-128a in authenticated mode");
}

}  // namespace sbe
