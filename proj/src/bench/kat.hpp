#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cipher/params.hpp"

namespace sbe {

// One known-answer vector. File format: one vector per line,
//
//   cipher=<name> radix=<r> key=<hex> iv=<hex> offset=<bit index> keystream=<hex>
//
// '#' comments and blank lines are skipped. `offset` counts keystream bits
// to discard before comparing. Hex uses each cipher's documented byte
// convention (see the cipher headers).
struct KatVector {
  int line = 0;
  CipherKind cipher = CipherKind::Trivium;
  Radix radix = Radix::R32;
  std::vector<std::uint8_t> key;
  std::vector<std::uint8_t> iv;
  std::uint64_t offset_bits = 0;
  std::vector<std::uint8_t> keystream;
};

struct KatOutcome {
  KatVector vector;
  bool pass = false;
  std::string got_hex;  // what the cipher actually produced
};

struct KatReport {
  std::vector<KatOutcome> outcomes;
  std::size_t failures = 0;

  bool all_passed() const { return failures == 0; }
};

// Throws a parse error naming the offending line.
std::vector<KatVector> parse_kat_stream(std::istream& in);
std::vector<KatVector> parse_kat_file(const std::string& path);

KatReport kat_check(const std::vector<KatVector>& vectors);
KatReport kat_check_file(const std::string& path);

// One line per vector plus a summary, as printed by the CLI.
std::string render_kat_report(const KatReport& report);

}  // namespace sbe
