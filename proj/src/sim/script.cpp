#include "sim/script.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "core/error.hpp"
#include "core/hex.hpp"

namespace sbe {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

std::uint64_t parse_number(const std::string& tok) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(tok, &used, 0);  // base 0: decimal or 0x hex
    if (used != tok.size()) fail(Err::Parse, "trailing characters in number: " + tok);
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::Parse, "not a number: " + tok);
  }
}

void expect_args(const std::vector<std::string>& tokens, std::size_t n) {
  if (tokens.size() != n)
    fail(Err::Parse, "command '" + tokens[0] + "' takes " + std::to_string(n - 1) +
                         " argument(s), got " + std::to_string(tokens.size() - 1));
}

std::string describe_delivery(const DeliveryReport& r) {
  if (!r.error.empty()) return "failed: " + r.error;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%zu payload bytes, %zu frame bytes, %llu transfer cycles, %u init steps",
                r.payload_bytes, r.frame_bytes,
                static_cast<unsigned long long>(r.transfer_cycles), r.init_steps);
  return buf;
}

std::string execute(Simulator& sim, const std::vector<std::string>& t) {
  const std::string& cmd = t[0];
  if (cmd == "send") {
    expect_args(t, 2);
    const auto payload = from_hex(t[1]);
    const DeliveryReport r = sim.ta_send(payload);
    return std::string("send ") + (r.delivered ? "delivered: " : "") + describe_delivery(r);
  }
  if (cmd == "read") {
    expect_args(t, 3);
    const auto addr = static_cast<std::uint32_t>(parse_number(t[1]));
    const auto len = static_cast<std::size_t>(parse_number(t[2]));
    const ReadResult r = sim.ta_read(addr, len);
    if (!r.report.error.empty()) return "read failed: " + r.report.error;
    return "read " + std::to_string(r.data.size()) + " bytes: " + to_hex(r.data);
  }
  if (cmd == "nsprobe") {
    expect_args(t, 3);
    const auto addr = static_cast<std::uint32_t>(parse_number(t[1]));
    const auto len = static_cast<std::size_t>(parse_number(t[2]));
    const ProbeReport r = sim.ns_probe(addr, len);
    return "nsprobe: " + std::to_string(r.attempts) + " attempts, " +
           std::to_string(r.rejected) + " rejected";
  }
  if (cmd == "attach") {
    expect_args(t, 3);
    const auto id = sim.attach_tap(tap_kind_from_name(t[1]), link_from_name(t[2]));
    return "attached tap " + std::to_string(id) + " (" + t[1] + ") on " + t[2];
  }
  if (cmd == "set") {
    if (t.size() >= 2 && t[1] == "encryption") {
      expect_args(t, 3);
      if (t[2] != "on" && t[2] != "off") fail(Err::Parse, "set encryption takes on|off");
      sim.set_encryption(t[2] == "on");
      return "encryption " + t[2];
    }
    if (t.size() >= 2 && t[1] == "cipher") {
      // set cipher <name> radix <r> [auth <w>]
      if (t.size() != 5 && t.size() != 7)
        fail(Err::Parse, "usage: set cipher <name> radix <r> [auth <w>]");
      if (t[3] != "radix") fail(Err::Parse, "expected 'radix', got '" + t[3] + "'");
      const CipherKind kind = cipher_from_name(t[2]);
      const Radix radix = radix_from_int(static_cast<unsigned>(parse_number(t[4])));
      std::optional<unsigned> tag_bits;
      if (t.size() == 7) {
        if (t[5] != "auth") fail(Err::Parse, "expected 'auth', got '" + t[5] + "'");
        tag_bits = static_cast<unsigned>(parse_number(t[6]));
      }
      sim.set_cipher(kind, radix, tag_bits);
      return "cipher " + t[2] + " radix " + t[4] + (tag_bits ? " auth " + t[6] : "");
    }
    fail(Err::Parse, "unknown 'set' target; expected cipher or encryption");
  }
  fail(Err::Parse, "unknown command: " + cmd);
}

}  // namespace

ScriptResult run_script(Simulator& sim, std::istream& in) {
  ScriptResult result;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    try {
      ScriptStep step;
      step.line = lineno;
      step.command = line;
      step.summary = execute(sim, tokens);
      result.steps.push_back(std::move(step));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return result;
}

ScriptResult run_script_file(Simulator& sim, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Io, "cannot open script file: " + path);
  return run_script(sim, in);
}

void write_trace_csv(const Simulator& sim, std::ostream& out) {
  out << "cycle,link,address,data,ns_attr,originator\n";
  char buf[64];
  for (const TapEntry& e : sim.trace()) {
    std::snprintf(buf, sizeof(buf), "0x%08x,0x%08x", e.txn.address, e.txn.data);
    out << e.cycle << ',' << link_name(e.link) << ',' << buf << ','
        << (e.txn.ns_attr ? 1 : 0) << ',' << endpoint_name(e.txn.originator) << '\n';
  }
}

}  // namespace sbe
