#include "sim/soc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "core/error.hpp"

namespace sbe {
namespace {

constexpr std::size_t round_up_word(std::size_t n) { return (n + 3) & ~std::size_t{3}; }

// Words carry bytes little-endian: byte 0 of the stream is the low byte of
// the first word. Short tails are zero-padded.
std::uint32_t pack_word(std::span<const std::uint8_t> bytes) {
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < bytes.size() && i < 4; ++i)
    w |= std::uint32_t{bytes[i]} << (8 * i);
  return w;
}

void unpack_word(std::uint32_t w, std::vector<std::uint8_t>& out) {
  for (unsigned i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(w >> (8 * i)));
}

}  // namespace

WorldPartition default_partition() {
  WorldPartition p;
  p.secure_ranges = {kTaMailboxRange, kCryptoSlaveRange, kTargetRange};
  p.nonsecure_ranges = {kNsIpRange};
  return p;
}

std::vector<std::uint8_t> derive_session_key(std::uint64_t seed, CipherKind kind) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(kind) + 1);
  std::vector<std::uint8_t> key(params_for(kind).key_bits / 8);
  for (auto& b : key) b = static_cast<std::uint8_t>(rng());
  return key;
}

Simulator::Simulator(SocConfig config) : config_(std::move(config)) {
  config_.partition.validate();
  make_sessions();
}

void Simulator::make_sessions() {
  const auto key = derive_session_key(config_.seed, config_.session.cipher);
  ta_.session.emplace(config_.session, key, Direction::ToIp);
  crypto_.session.emplace(config_.session, key, Direction::ToTa);
  ta_.rx.clear();
  crypto_.rx.clear();
}

void Simulator::set_cipher(CipherKind kind, Radix radix, std::optional<unsigned> tag_bits) {
  config_.session.cipher = kind;
  config_.session.radix = radix;
  config_.session.tag_bits = tag_bits;
  make_sessions();
}

void Simulator::set_encryption(bool on) { config_.encryption_on = on; }

unsigned Simulator::session_tag_bytes() const {
  return static_cast<unsigned>(ta_.session->tag_bytes());
}

std::size_t Simulator::attach_tap(TapKind kind, Link link) {
  taps_.push_back(TrojanTap{kind, link, {}});
  return taps_.size() - 1;
}

const TrojanTap& Simulator::tap(std::size_t id) const {
  if (id >= taps_.size()) fail(Err::Routing, "no tap with id " + std::to_string(id));
  return taps_[id];
}

bool Simulator::is_secure_range(std::uint32_t addr) const {
  for (const auto& r : config_.partition.secure_ranges)
    if (r.contains(addr)) return true;
  return false;
}

bool Simulator::is_mapped(std::uint32_t addr) const {
  if (is_secure_range(addr)) return true;
  for (const auto& r : config_.partition.nonsecure_ranges)
    if (r.contains(addr)) return true;
  return false;
}

// One word, one cycle. Taps on the route see the transaction in order; an
// NS-bit-flip tap rewrites the NS attribute before anything downstream of it
// (including the slave check) sees the transaction.
bool Simulator::transfer(BusTransaction txn, std::initializer_list<Link> route) {
  const std::uint64_t cycle = cycle_++;
  for (Link l : route) {
    for (auto& tap : taps_) {
      if (tap.link != l) continue;
      if (tap.kind == TapKind::NsBitFlip && txn.ns_attr) txn.ns_attr = false;
      tap.log.push_back({cycle, l, txn});
    }
    if (config_.trace_enabled) trace_.push_back({cycle, l, txn});
  }
  return deliver(cycle, txn);
}

// Slave-side TrustZone check and state effect. A secure range refuses both
// NS-attributed accesses and accesses whose originator lives in the
// non-secure world — so an in-flight NS-bit flip still fails the check.
bool Simulator::deliver(std::uint64_t cycle, const BusTransaction& txn) {
  if (!is_mapped(txn.address)) {
    rejections_.push_back({cycle, txn, RejectReason::Unmapped});
    return false;
  }
  if (is_secure_range(txn.address)) {
    if (txn.ns_attr) {
      rejections_.push_back({cycle, txn, RejectReason::NsAttrSecureRange});
      return false;
    }
    if (config_.partition.world_of(txn.originator) != World::Secure) {
      rejections_.push_back({cycle, txn, RejectReason::WorldMismatch});
      return false;
    }
  }

  if (txn.kind == TxnKind::Write) {
    if (kCryptoSlaveRange.contains(txn.address))
      unpack_word(txn.data, crypto_.rx);
    else if (kTaMailboxRange.contains(txn.address))
      unpack_word(txn.data, ta_.rx);
    // Target-memory bytes are applied by the writing master so partial tail
    // words stay byte-exact; the word stream above is what taps observe.
  }
  return true;
}

bool Simulator::send_words(std::span<const std::uint8_t> bytes, std::uint32_t port, Endpoint from,
                           bool ns_attr, std::initializer_list<Link> route) {
  for (std::size_t off = 0; off < bytes.size(); off += 4) {
    const auto chunk = bytes.subspan(off, std::min<std::size_t>(4, bytes.size() - off));
    BusTransaction txn{port, pack_word(chunk), TxnKind::Write, ns_attr, from};
    if (!transfer(txn, route)) return false;
  }
  return true;
}

bool Simulator::master_write_target(std::span<const std::uint8_t> bytes, std::uint32_t address,
                                    Endpoint from, std::initializer_list<Link> route) {
  if (!kTargetRange.contains(address, bytes.size()))
    fail(Err::Length, "write of " + std::to_string(bytes.size()) +
                          " bytes does not fit the target IP memory");
  for (std::size_t off = 0; off < bytes.size(); off += 4) {
    const auto chunk = bytes.subspan(off, std::min<std::size_t>(4, bytes.size() - off));
    BusTransaction txn{static_cast<std::uint32_t>(address + off), pack_word(chunk),
                       TxnKind::Write, false, from};
    if (!transfer(txn, route)) return false;
    const std::size_t pos = address - kTargetRange.base + off;
    if (target_mem_.size() < pos + chunk.size()) target_mem_.resize(pos + chunk.size());
    std::copy(chunk.begin(), chunk.end(), target_mem_.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return true;
}

std::vector<std::uint8_t> Simulator::master_read_target(std::uint32_t address, std::size_t len,
                                                        Endpoint from,
                                                        std::initializer_list<Link> route) {
  std::vector<std::uint8_t> out;
  out.reserve(round_up_word(len));
  for (std::size_t off = 0; off < len; off += 4) {
    std::uint8_t chunk[4] = {0, 0, 0, 0};
    for (unsigned i = 0; i < 4; ++i) {
      const std::size_t pos = address - kTargetRange.base + off + i;
      if (pos < target_mem_.size()) chunk[i] = target_mem_[pos];
    }
    BusTransaction txn{static_cast<std::uint32_t>(address + off), pack_word(chunk),
                       TxnKind::Read, false, from};
    if (!transfer(txn, route))
      fail(Err::Routing, "secure read rejected at " + std::to_string(address + off));
    unpack_word(txn.data, out);
  }
  out.resize(len);
  return out;
}

// Controller-side reassembly: returns a frame once the buffer holds all of
// its word-padded wire image, consuming those bytes. Frames start word
// aligned; the 0-3 padding bytes after each frame are dropped here.
std::optional<Frame> Simulator::take_frame(std::vector<std::uint8_t>& rx,
                                           unsigned tag_bytes) const {
  if (rx.size() < kFrameHeaderBytes) return std::nullopt;
  const std::uint32_t payload_len = peek_payload_len(rx);
  if (payload_len > ChannelSession::kMaxPayloadBytes)
    fail(Err::Length, "frame header announces an oversize payload");
  const bool tagged = peek_flags(rx) & kFlagAuth;
  const std::size_t total = kFrameHeaderBytes + payload_len + (tagged ? tag_bytes : 0);
  const std::size_t padded = round_up_word(total);
  if (rx.size() < padded) return std::nullopt;

  Frame f = decode_frame({rx.data(), total}, tag_bytes);
  rx.erase(rx.begin(), rx.begin() + static_cast<std::ptrdiff_t>(padded));
  return f;
}

DeliveryReport Simulator::ta_send(std::span<const std::uint8_t> payload) {
  DeliveryReport report;
  report.payload_bytes = payload.size();
  if (payload.size() > kTargetRange.size)
    fail(Err::Length, "payload exceeds the target IP memory size");
  const std::uint64_t start_cycle = cycle_;

  if (!config_.encryption_on) {
    report.delivered =
        master_write_target(payload, kTargetRange.base, Endpoint::Ta, {Link::TaIc, Link::IcTarget});
    if (!report.delivered) report.error = "target IP rejected a plaintext write";
    report.transfer_cycles = cycle_ - start_cycle;
    return report;
  }

  try {
    const Frame frame = ta_.session->seal(payload);
    const auto wire = encode_frame(frame);
    report.frame_bytes = wire.size();
    report.init_steps = ta_.session->last_init_steps();
    report.cipher_uses = 1;

    if (!send_words(wire, kCryptoSlaveRange.base, Endpoint::Ta, false,
                    {Link::TaIc, Link::IcCrypto})) {
      crypto_.rx.clear();
      report.error = "crypto IP slave rejected a frame word";
    } else if (auto received = take_frame(crypto_.rx, session_tag_bytes()); !received) {
      crypto_.rx.clear();
      report.error = "crypto IP received an incomplete frame";
    } else {
      const auto plaintext = crypto_.session->open_frame(*received);
      report.cipher_uses = 2;
      report.delivered = master_write_target(plaintext, kTargetRange.base, Endpoint::CryptoIp,
                                             {Link::CryptoTarget});
      if (!report.delivered) report.error = "target IP rejected the decrypted payload";
    }
  } catch (const Error& e) {
    crypto_.rx.clear();
    report.error = e.what();
  }
  report.transfer_cycles = cycle_ - start_cycle;
  return report;
}

ReadResult Simulator::ta_read(std::uint32_t address, std::size_t len) {
  if (!kTargetRange.contains(address, len) || !is_secure_range(address))
    fail(Err::Routing, "partition violation: the secure read path only addresses the target IP");

  ReadResult result;
  result.report.payload_bytes = len;
  const std::uint64_t start_cycle = cycle_;

  if (!config_.encryption_on) {
    result.data = master_read_target(address, len, Endpoint::Ta, {Link::TaIc, Link::IcTarget});
    result.report.delivered = true;
    result.report.transfer_cycles = cycle_ - start_cycle;
    return result;
  }

  try {
    const auto plaintext =
        master_read_target(address, len, Endpoint::CryptoIp, {Link::CryptoTarget});
    const Frame frame = crypto_.session->seal(plaintext);
    const auto wire = encode_frame(frame);
    result.report.frame_bytes = wire.size();
    result.report.init_steps = crypto_.session->last_init_steps();
    result.report.cipher_uses = 1;

    if (!send_words(wire, kTaMailboxRange.base, Endpoint::CryptoIp, false,
                    {Link::IcCrypto, Link::TaIc})) {
      ta_.rx.clear();
      result.report.error = "TA mailbox rejected a frame word";
    } else if (auto received = take_frame(ta_.rx, session_tag_bytes()); !received) {
      ta_.rx.clear();
      result.report.error = "TA received an incomplete frame";
    } else {
      result.data = ta_.session->open_frame(*received);
      result.report.cipher_uses = 2;
      result.report.delivered = true;
    }
  } catch (const Error& e) {
    ta_.rx.clear();
    result.data.clear();
    result.report.error = e.what();
  }
  result.report.transfer_cycles = cycle_ - start_cycle;
  return result;
}

ProbeReport Simulator::ns_probe(std::uint32_t address, std::size_t len) {
  ProbeReport report;
  const Link second = kTargetRange.contains(address)      ? Link::IcTarget
                      : kCryptoSlaveRange.contains(address) ? Link::IcCrypto
                      : kTaMailboxRange.contains(address)   ? Link::TaIc
                                                            : Link::IcNs;
  for (std::size_t off = 0; off < len; off += 4) {
    BusTransaction txn{static_cast<std::uint32_t>(address + off), 0, TxnKind::Read, true,
                       Endpoint::NsIp};
    ++report.attempts;
    if (!transfer(txn, {Link::IcNs, second})) ++report.rejected;
  }
  return report;
}

LeakageReport Simulator::leakage_report(std::size_t tap_id,
                                        std::span<const std::uint8_t> known_plaintext) const {
  const TrojanTap& t = tap(tap_id);
  if (t.kind != TapKind::EavesdropFifo)
    fail(Err::Mode, "leakage analysis needs an eavesdrop_fifo tap");
  if (t.log.empty()) fail(Err::Sequence, "tap log is empty; run some traffic first");

  // Rebuild the payload stream the tap saw: words written to a frame port
  // are deframed (header in the clear, payload extracted, tag skipped);
  // words written to the target are payload as-is.
  std::vector<std::uint8_t> observed;
  std::vector<std::uint8_t> framed;
  const unsigned tag_bytes = session_tag_bytes();
  for (const TapEntry& e : t.log) {
    if (e.txn.kind != TxnKind::Write) continue;
    if (kCryptoSlaveRange.contains(e.txn.address) || kTaMailboxRange.contains(e.txn.address)) {
      unpack_word(e.txn.data, framed);
      try {
        while (auto f = take_frame(framed, tag_bytes))
          observed.insert(observed.end(), f->ciphertext.begin(), f->ciphertext.end());
      } catch (const Error&) {
        break;  // stream not parseable as frames; stop extracting
      }
    } else if (kTargetRange.contains(e.txn.address)) {
      unpack_word(e.txn.data, observed);
    }
  }

  LeakageReport report;
  report.observed_payload_bytes = observed.size();

  // The raw path pads the last word with zeros, so "equal" means: the
  // plaintext is a prefix, nothing but zero padding follows, and the padding
  // stays within one word.
  const std::size_t n = known_plaintext.size();
  report.exact_match = observed.size() >= n && observed.size() <= round_up_word(n) &&
                       std::equal(known_plaintext.begin(), known_plaintext.end(),
                                  observed.begin()) &&
                       std::all_of(observed.begin() + static_cast<std::ptrdiff_t>(n),
                                   observed.end(), [](std::uint8_t b) { return b == 0; });

  if (n > 0) {
    std::size_t matches = 0;
    for (std::size_t i = 0; i < std::min(n, observed.size()); ++i)
      if (observed[i] == known_plaintext[i]) ++matches;
    report.matching_byte_fraction = static_cast<double>(matches) / static_cast<double>(n);
  }

  if (!observed.empty()) {
    std::size_t ones = 0;
    for (std::uint8_t b : observed) ones += static_cast<std::size_t>(std::popcount(unsigned{b}));
    report.monobit_statistic =
        std::abs(static_cast<double>(ones) / (8.0 * static_cast<double>(observed.size())) - 0.5);
  }
  return report;
}

}  // namespace sbe
