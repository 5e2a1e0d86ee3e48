#include "channel/frame.hpp"

#include <string>

#include "core/error.hpp"

namespace sbe {
namespace {

void put_be(std::vector<std::uint8_t>& out, std::uint64_t v, unsigned nbytes) {
  for (unsigned i = 0; i < nbytes; ++i)
    out.push_back(static_cast<std::uint8_t>(v >> (8 * (nbytes - 1 - i))));
}

std::uint64_t get_be(std::span<const std::uint8_t> in, std::size_t pos, unsigned nbytes) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < nbytes; ++i) v = (v << 8) | in[pos + i];
  return v;
}

}  // namespace

std::vector<std::uint8_t> encode_frame(const Frame& frame) {
  if (frame.has_tag() != !frame.tag.empty())
    fail(Err::Config, "frame auth flag disagrees with tag presence");
  if (frame.ciphertext.size() > 0xFFFFFFFFu)
    fail(Err::Length, "frame payload exceeds the 32-bit length field");

  std::vector<std::uint8_t> out;
  out.reserve(frame.wire_size());
  put_be(out, frame.session_id, 2);
  put_be(out, frame.msg_counter, 8);
  out.push_back(frame.flags);
  put_be(out, frame.ciphertext.size(), 4);
  out.insert(out.end(), frame.ciphertext.begin(), frame.ciphertext.end());
  out.insert(out.end(), frame.tag.begin(), frame.tag.end());
  return out;
}

Frame decode_frame(std::span<const std::uint8_t> wire, std::size_t tag_bytes) {
  if (wire.size() < kFrameHeaderBytes)
    fail(Err::Length, "frame shorter than the 15-byte header");

  Frame f;
  f.session_id = static_cast<std::uint16_t>(get_be(wire, 0, 2));
  f.msg_counter = get_be(wire, 2, 8);
  f.flags = wire[10];
  const auto payload_len = static_cast<std::uint32_t>(get_be(wire, 11, 4));

  const std::size_t want = kFrameHeaderBytes + payload_len + (f.has_tag() ? tag_bytes : 0);
  if (wire.size() != want)
    fail(Err::Length, "frame is " + std::to_string(wire.size()) + " bytes but the header implies " +
                          std::to_string(want));

  const auto* body = wire.data() + kFrameHeaderBytes;
  f.ciphertext.assign(body, body + payload_len);
  if (f.has_tag()) f.tag.assign(body + payload_len, body + payload_len + tag_bytes);
  return f;
}

std::uint32_t peek_payload_len(std::span<const std::uint8_t> header) {
  if (header.size() < kFrameHeaderBytes)
    fail(Err::Length, "need the full 15-byte header to read payload_len");
  return static_cast<std::uint32_t>(get_be(header, 11, 4));
}

std::uint8_t peek_flags(std::span<const std::uint8_t> header) {
  if (header.size() < kFrameHeaderBytes)
    fail(Err::Length, "need the full 15-byte header to read flags");
  return header[10];
}

}  // namespace sbe
