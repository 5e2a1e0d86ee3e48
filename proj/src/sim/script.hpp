#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sim/soc.hpp"

namespace sbe {

// One executed stimulus command and what it did.
struct ScriptStep {
  int line = 0;
  std::string command;
  std::string summary;
};

struct ScriptResult {
  std::vector<ScriptStep> steps;
};

// Runs a stimulus script against the simulator. One command per line; blank
// lines and '#' comments are skipped. Grammar:
//
//   send <hex payload>
//   read <addr> <len>
//   nsprobe <addr> <len>
//   attach <eavesdrop_fifo|ns_bit_flip> <link>
//   set cipher <trivium|grain128a|grain128a_auth> radix <1|8|16|32> [auth <w>]
//   set encryption <on|off>
//
// Addresses and lengths are decimal or 0x-prefixed hex. nsprobe drives the
// non-secure IP against the given address range, which is how the
// ns_bit_flip tap gets traffic to tamper with. Parse and execution errors
// carry the line number.
ScriptResult run_script(Simulator& sim, std::istream& in);
ScriptResult run_script_file(Simulator& sim, const std::string& path);

// Global trace as CSV: cycle, link, address, data, ns_attr, originator.
void write_trace_csv(const Simulator& sim, std::ostream& out);

}  // namespace sbe
