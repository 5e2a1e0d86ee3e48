#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sbe {

// Endpoints of the modeled SoC. The TA is the trusted-software master, the
// crypto IP terminates the encrypted channel in hardware, the target IP is
// the secure slave the plaintext is destined for, and the NS IP is a
// non-secure master/slave used to exercise the TrustZone checks.
enum class Endpoint : std::uint8_t { Ta, CryptoIp, TargetIp, NsIp };

enum class World : std::uint8_t { Secure, NonSecure };

// Point-to-point links a transaction can cross, named from the component on
// each side (ic = the shared interconnect). crypto_target is the private
// connection between the crypto IP's master interface and the target IP; it
// does not cross the shared interconnect.
enum class Link : std::uint8_t { TaIc, IcCrypto, IcTarget, IcNs, CryptoTarget };

enum class TxnKind : std::uint8_t { Read, Write };

// One single-beat transfer: exactly one 32-bit data word.
struct BusTransaction {
  std::uint32_t address = 0;
  std::uint32_t data = 0;
  TxnKind kind = TxnKind::Write;
  bool ns_attr = false;  // true = issued as (or tampered into) non-secure
  Endpoint originator = Endpoint::Ta;
};

struct AddrRange {
  std::uint32_t base = 0;
  std::uint32_t size = 0;

  bool contains(std::uint32_t addr) const { return addr - base < size; }
  bool contains(std::uint32_t addr, std::size_t len) const {
    return len <= size && addr >= base && addr - base <= size - len;
  }
  bool overlaps(const AddrRange& o) const {
    return base < o.base + o.size && o.base < base + size;
  }
};

// Address map plus world assignment per endpoint. validate() enforces the
// structural invariants; build_soc refuses an invalid partition.
struct WorldPartition {
  std::vector<AddrRange> secure_ranges;
  std::vector<AddrRange> nonsecure_ranges;
  World ta_world = World::Secure;
  World crypto_ip_world = World::Secure;
  World target_ip_world = World::Secure;
  World ns_ip_world = World::NonSecure;

  World world_of(Endpoint e) const;
  // Throws a configuration error on overlapping ranges.
  void validate() const;
};

enum class TapKind : std::uint8_t { EavesdropFifo, NsBitFlip };

// One observation: a transaction crossing a link at a cycle. Shared between
// tap logs and the global trace.
struct TapEntry {
  std::uint64_t cycle = 0;
  Link link = Link::TaIc;
  BusTransaction txn;
};

using TapLog = std::vector<TapEntry>;

// Trojan attached to one link. The eavesdrop FIFO copies every crossing
// transaction into its log; the NS-bit-flip gadget additionally clears the
// NS attribute of non-secure-originated transactions so they masquerade as
// secure ones downstream.
struct TrojanTap {
  TapKind kind = TapKind::EavesdropFifo;
  Link link = Link::TaIc;
  TapLog log;
};

// A slave-side denial: why a transaction was refused.
enum class RejectReason : std::uint8_t {
  NsAttrSecureRange,  // NS-attributed access to a secure range
  WorldMismatch,      // attribute claims secure but the originator is not
  Unmapped,           // address outside every configured range
};

struct Rejection {
  std::uint64_t cycle = 0;
  BusTransaction txn;
  RejectReason reason = RejectReason::NsAttrSecureRange;
};

// Stable names used by scripts, traces, and the C API.
std::string endpoint_name(Endpoint e);
std::string link_name(Link l);
Link link_from_name(const std::string& name);
std::string tap_kind_name(TapKind k);
TapKind tap_kind_from_name(const std::string& name);

}  // namespace sbe
