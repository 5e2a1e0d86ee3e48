#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "channel/session.hpp"
#include "sim/bus.hpp"

namespace sbe {

// Fixed memory map. The partition controls security attributes; routing
// (which endpoint owns an address) follows these constants.
constexpr AddrRange kTaMailboxRange{0x00000000u, 0x00010000u};    // TA frame mailbox
constexpr AddrRange kNsIpRange{0x10000000u, 0x00010000u};         // non-secure IP
constexpr AddrRange kCryptoSlaveRange{0x40000000u, 0x00010000u};  // crypto IP slave port
constexpr AddrRange kTargetRange{0x80000000u, 0x00400000u};       // target secure IP, 4 MB

// TA mailbox + crypto slave + target secure; the NS IP range non-secure.
WorldPartition default_partition();

struct SocConfig {
  WorldPartition partition = default_partition();
  SessionConfig session;       // cipher, radix, tag configuration
  std::uint64_t seed = 0;      // derives the pre-shared session key
  bool encryption_on = true;   // off = TA writes plaintext straight to the target
  bool trace_enabled = true;   // record every link crossing
};

// Outcome of one ta_send / ta_read. Channel-level failures (bad tag, bad
// frame) are reported here rather than thrown: the transfer happened, the
// payload did not get through.
struct DeliveryReport {
  bool delivered = false;
  std::size_t payload_bytes = 0;
  std::size_t frame_bytes = 0;       // bytes on the wire; 0 with encryption off
  std::uint64_t transfer_cycles = 0; // one per bus word moved
  unsigned init_steps = 0;           // cipher warm-up steps per use (1152/r or 256/r)
  unsigned cipher_uses = 0;          // seal + open count for this operation
  std::string error;                 // empty on success
};

struct ReadResult {
  std::vector<std::uint8_t> data;
  DeliveryReport report;
};

struct ProbeReport {
  unsigned attempts = 0;
  unsigned rejected = 0;
};

// What an eavesdropping tap's log gives away about a known payload.
struct LeakageReport {
  bool exact_match = false;          // observed payload stream reproduces the plaintext
  double matching_byte_fraction = 0; // fraction of plaintext bytes read correctly
  double monobit_statistic = 0;      // |ones fraction - 1/2| over the observed payload bits
  std::size_t observed_payload_bytes = 0;
};

// Deterministic transaction-level model of the SoC communication layer.
//
// Topology: the TA and the NS IP are masters on the shared interconnect;
// the crypto IP's slave port and the target IP are slaves on it. The crypto
// IP additionally owns a private link to the target (its master interface),
// which never crosses the shared interconnect.
//
// Encrypted path:   TA --ta_ic--> IC --ic_crypto--> crypto IP slave
//                   crypto IP master --crypto_target--> target IP
// Unencrypted path: TA --ta_ic--> IC --ic_target--> target IP
//
// Each word transfer consumes one cycle. Cipher work is accounted in steps
// (reported per operation), not in bus cycles.
class Simulator {
public:
  explicit Simulator(SocConfig config);

  // Swaps the session cipher; counters restart and a fresh key is derived
  // from the seed. Any partly reassembled frame is dropped.
  void set_cipher(CipherKind kind, Radix radix, std::optional<unsigned> tag_bits);
  void set_encryption(bool on);
  bool encryption_on() const { return config_.encryption_on; }

  std::size_t attach_tap(TapKind kind, Link link);
  const TrojanTap& tap(std::size_t id) const;
  std::size_t tap_count() const { return taps_.size(); }

  // Seals `payload` at the TA, carries the frame over the interconnect to
  // the crypto IP, decrypts there, and writes the plaintext to the start of
  // the target IP's memory. With encryption off the TA writes the payload
  // words directly to the target.
  DeliveryReport ta_send(std::span<const std::uint8_t> payload);

  // Reverse path: the crypto IP reads [address, address+len) from the
  // target, seals it, and returns it to the TA, which opens the frame.
  // Addresses outside the secure target range are a partition violation.
  ReadResult ta_read(std::uint32_t address, std::size_t len);

  // The NS IP issues non-secure reads against `address` (word-granular).
  // Counts how many were refused by the addressed slave.
  ProbeReport ns_probe(std::uint32_t address, std::size_t len);

  // Reconstructs the payload byte-stream tap `tap_id` observed (deframing
  // frame words, passing raw words through) and scores it against the known
  // plaintext. Requires an eavesdrop tap with a non-empty log.
  LeakageReport leakage_report(std::size_t tap_id,
                               std::span<const std::uint8_t> known_plaintext) const;

  std::uint64_t cycles() const { return cycle_; }
  const std::vector<TapEntry>& trace() const { return trace_; }
  const std::vector<Rejection>& rejections() const { return rejections_; }
  std::span<const std::uint8_t> target_memory() const { return target_mem_; }
  const SocConfig& config() const { return config_; }
  unsigned session_tag_bytes() const;

private:
  // The crypto IP's four blocks: rx is the slave interface buffer, the
  // session object is the cipher block plus controller bookkeeping, and
  // crypto_process / master_write act as controller and master interface.
  struct CryptoIp {
    std::vector<std::uint8_t> rx;
    std::optional<ChannelSession> session;
  };
  struct TaModel {
    std::vector<std::uint8_t> rx;  // mailbox for frames coming back
    std::optional<ChannelSession> session;
  };

  void make_sessions();
  bool transfer(BusTransaction txn, std::initializer_list<Link> route);
  bool deliver(std::uint64_t cycle, const BusTransaction& txn);
  bool is_secure_range(std::uint32_t addr) const;
  bool is_mapped(std::uint32_t addr) const;

  // Sends `bytes` as write words to a FIFO port address; returns true if
  // every word was accepted.
  bool send_words(std::span<const std::uint8_t> bytes, std::uint32_t port, Endpoint from,
                  bool ns_attr, std::initializer_list<Link> route);
  // Master-interface write of plaintext into target memory (byte-exact).
  bool master_write_target(std::span<const std::uint8_t> bytes, std::uint32_t address,
                           Endpoint from, std::initializer_list<Link> route);
  std::vector<std::uint8_t> master_read_target(std::uint32_t address, std::size_t len,
                                               Endpoint from,
                                               std::initializer_list<Link> route);
  // Controller side: pull one complete frame off a word buffer, or nothing.
  std::optional<Frame> take_frame(std::vector<std::uint8_t>& rx, unsigned tag_bytes) const;

  SocConfig config_;
  TaModel ta_;
  CryptoIp crypto_;
  std::vector<std::uint8_t> target_mem_;
  std::vector<TrojanTap> taps_;
  std::vector<TapEntry> trace_;
  std::vector<Rejection> rejections_;
  std::uint64_t cycle_ = 0;
};

// Pre-shared key both endpoints hold, derived deterministically from the
// simulator seed and cipher kind.
std::vector<std::uint8_t> derive_session_key(std::uint64_t seed, CipherKind kind);

}  // namespace sbe
