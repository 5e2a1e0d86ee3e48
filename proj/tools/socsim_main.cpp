// SoC bus-simulator front end. Links only the C API.
//
//   socsim script.txt --cipher trivium --radix 32 --seed 7 --trace trace.csv
//
// The script drives the simulated SoC (send/read/nsprobe/attach/set; see
// --help-grammar). Per-command results go to stdout; --trace writes the
// full bus trace as CSV afterwards.
//
// Exit codes: 0 success, 1 script or simulation failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "socbusenc.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

const char* kGrammar =
    "Script grammar (one command per line, '#' starts a comment):\n"
    "  send <hex payload>                encrypt at the TA, deliver to the target IP\n"
    "  read <addr> <len>                 fetch target memory back through the channel\n"
    "  nsprobe <addr> <len>              non-secure reads against an address range\n"
    "  attach <kind> <link>              kind: eavesdrop_fifo | ns_bit_flip\n"
    "                                    link: ta_ic | ic_crypto | ic_target | ic_ns |\n"
    "                                          crypto_target\n"
    "  set cipher <name> radix <r> [auth <w>]\n"
    "                                    name: trivium | grain128a | grain128a_auth\n"
    "  set encryption on|off             toggle the encrypted path\n"
    "Addresses and lengths are decimal or 0x hex. The target IP memory\n"
    "starts at 0x80000000; the non-secure IP range starts at 0x10000000.\n";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic SoC bus simulator with Trojan taps"};
  app.set_version_flag("--version", sbe_version());

  std::string script;
  std::string cipher = "trivium";
  unsigned radix = 32;
  unsigned auth_bits = 0;
  std::uint64_t seed = 0;
  bool plaintext = false;
  bool grammar = false;
  std::string trace_path;

  app.add_option("script", script, "stimulus script file, or '-' for stdin");
  app.add_option("--cipher", cipher, "initial cipher: trivium, grain128a, grain128a_auth")
      ->capture_default_str();
  app.add_option("--radix", radix, "initial radix: 1, 8, 16, 32")->capture_default_str();
  app.add_option("--auth", auth_bits, "tag bits for grain128a_auth (default 32)");
  app.add_option("--seed", seed, "session key derivation seed")->capture_default_str();
  app.add_flag("--plaintext", plaintext, "start with encryption off");
  app.add_option("--trace", trace_path, "write the bus trace CSV here");
  app.add_flag("--help-grammar", grammar, "print the script grammar and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (grammar) {
    std::fputs(kGrammar, stdout);
    return 0;
  }
  if (script.empty()) {
    std::fprintf(stderr, "socsim: no script given (use '-' for stdin, --help for usage)\n");
    return kExitUsage;
  }

  sbe_sim* sim = nullptr;
  sbe_status status =
      sbe_sim_new(cipher.c_str(), radix, auth_bits, seed, plaintext ? 0 : 1, &sim);
  if (status != SBE_OK) {
    std::fprintf(stderr, "socsim: %s (%s)\n", sbe_last_error(), sbe_status_name(status));
    return kExitUsage;
  }

  char* summary = nullptr;
  if (script == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    const std::string text = buffer.str();
    status = sbe_sim_run_script_text(sim, text.c_str(), &summary);
  } else {
    status = sbe_sim_run_script_file(sim, script.c_str(), &summary);
  }
  if (status != SBE_OK) {
    std::fprintf(stderr, "socsim: %s (%s)\n", sbe_last_error(), sbe_status_name(status));
    sbe_sim_free(sim);
    return kExitFailure;
  }
  std::fputs(summary, stdout);
  sbe_string_free(summary);

  if (!trace_path.empty()) {
    status = sbe_sim_write_trace_csv(sim, trace_path.c_str());
    if (status != SBE_OK) {
      std::fprintf(stderr, "socsim: %s (%s)\n", sbe_last_error(), sbe_status_name(status));
      sbe_sim_free(sim);
      return kExitFailure;
    }
    std::printf("trace written to %s\n", trace_path.c_str());
  }

  sbe_sim_free(sim);
  return 0;
}
