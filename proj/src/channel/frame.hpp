#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sbe {

// One wire unit between the two channel endpoints. The byte layout is fixed
// (it is the contract the bus simulator transports and taps observe):
//
//   offset 0   2 bytes  session_id, big endian
//   offset 2   8 bytes  msg_counter, big endian
//   offset 10  1 byte   flags
//   offset 11  4 bytes  payload_len, big endian
//   offset 15  payload_len bytes of ciphertext
//   then       ceil(w/8) tag bytes when the auth flag is set
//
// The tag length is session configuration, not part of the header, so
// decoding needs the expected tag size.

constexpr std::size_t kFrameHeaderBytes = 15;
constexpr std::uint8_t kFlagAuth = 0x01;       // tag bytes follow the payload
constexpr std::uint8_t kFlagDirection = 0x02;  // set on hardware-to-software frames

struct Frame {
  std::uint16_t session_id = 0;
  std::uint64_t msg_counter = 0;
  std::uint8_t flags = 0;
  std::vector<std::uint8_t> ciphertext;
  std::vector<std::uint8_t> tag;

  bool has_tag() const { return flags & kFlagAuth; }
  std::size_t wire_size() const { return kFrameHeaderBytes + ciphertext.size() + tag.size(); }
};

// Serializes header + ciphertext + tag. The flags must agree with the tag
// field (auth flag set iff tag bytes present).
std::vector<std::uint8_t> encode_frame(const Frame& frame);

// Parses an exact-length wire image; `tag_bytes` is the tag size the session
// is configured for (ignored unless the auth flag is set). Length
// inconsistencies raise a length error.
Frame decode_frame(std::span<const std::uint8_t> wire, std::size_t tag_bytes);

// Payload length a partial header announces, for consumers that reassemble
// frames from a word stream. Requires at least kFrameHeaderBytes bytes.
std::uint32_t peek_payload_len(std::span<const std::uint8_t> header);
std::uint8_t peek_flags(std::span<const std::uint8_t> header);

}  // namespace sbe
