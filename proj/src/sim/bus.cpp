#include "sim/bus.hpp"

#include "core/error.hpp"

namespace sbe {

World WorldPartition::world_of(Endpoint e) const {
  switch (e) {
    case Endpoint::Ta:
      return ta_world;
    case Endpoint::CryptoIp:
      return crypto_ip_world;
    case Endpoint::TargetIp:
      return target_ip_world;
    case Endpoint::NsIp:
      return ns_ip_world;
  }
  return World::NonSecure;
}

void WorldPartition::validate() const {
  std::vector<AddrRange> all = secure_ranges;
  all.insert(all.end(), nonsecure_ranges.begin(), nonsecure_ranges.end());
  for (const auto& r : all)
    if (r.size == 0) fail(Err::Config, "address range with zero size");
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i].overlaps(all[j]))
        fail(Err::Config, "address ranges overlap; the partition must be disjoint");
}

std::string endpoint_name(Endpoint e) {
  switch (e) {
    case Endpoint::Ta:
      return "ta";
    case Endpoint::CryptoIp:
      return "crypto_ip";
    case Endpoint::TargetIp:
      return "target_ip";
    case Endpoint::NsIp:
      return "ns_ip";
  }
  return "?";
}

std::string link_name(Link l) {
  switch (l) {
    case Link::TaIc:
      return "ta_ic";
    case Link::IcCrypto:
      return "ic_crypto";
    case Link::IcTarget:
      return "ic_target";
    case Link::IcNs:
      return "ic_ns";
    case Link::CryptoTarget:
      return "crypto_target";
  }
  return "?";
}

Link link_from_name(const std::string& name) {
  if (name == "ta_ic") return Link::TaIc;
  if (name == "ic_crypto") return Link::IcCrypto;
  if (name == "ic_target") return Link::IcTarget;
  if (name == "ic_ns") return Link::IcNs;
  if (name == "crypto_target") return Link::CryptoTarget;
  fail(Err::Routing, "unknown link: " + name);
}

std::string tap_kind_name(TapKind k) {
  return k == TapKind::EavesdropFifo ? "eavesdrop_fifo" : "ns_bit_flip";
}

TapKind tap_kind_from_name(const std::string& name) {
  if (name == "eavesdrop_fifo") return TapKind::EavesdropFifo;
  if (name == "ns_bit_flip") return TapKind::NsBitFlip;
  fail(Err::Parse, "unknown tap kind: " + name);
}

}  // namespace sbe
