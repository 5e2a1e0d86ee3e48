#include <doctest.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/hex.hpp"
#include "sim/script.hpp"
#include "sim/soc.hpp"

using namespace sbe;

namespace {

SocConfig default_config() {
  SocConfig cfg;
  cfg.session.cipher = CipherKind::Trivium;
  cfg.session.radix = Radix::R32;
  cfg.seed = 42;
  return cfg;
}

template <typename F>
Err thrown_code(F&& f, std::string* msg = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (msg) *msg = e.what();
    return e.code();
  }
  return Err::Ok;
}

}  // namespace

TEST_CASE("script drives a full stimulus sequence") {
  const std::string script =
      "# exercise every command\n"
      "set cipher grain128a_auth radix 16 auth 32\n"
      "send 00112233445566778899aabb\n"
      "read 0x80000000 12\n"
      "\n"
      "attach eavesdrop_fifo ic_crypto\n"
      "attach ns_bit_flip ic_target\n"
      "nsprobe 0x80000000 64\n"
      "send ff00ff00\n"
      "set encryption off\n"
      "send deadbeef\n";

  Simulator sim(default_config());
  std::istringstream in(script);
  const ScriptResult result = run_script(sim, in);

  REQUIRE(result.steps.size() == 9);  // comment and blank line are skipped
  CHECK(result.steps[0].line == 2);
  CHECK(result.steps[0].summary == "cipher grain128a_auth radix 16 auth 32");
  CHECK(result.steps[1].summary.find("send delivered:") == 0);
  CHECK(result.steps[1].summary.find("12 payload bytes") != std::string::npos);
  CHECK(result.steps[2].summary == "read 12 bytes: 00112233445566778899aabb");
  CHECK(result.steps[3].summary == "attached tap 0 (eavesdrop_fifo) on ic_crypto");
  CHECK(result.steps[5].summary == "nsprobe: 16 attempts, 16 rejected");
  CHECK(result.steps[7].summary == "encryption off");
  CHECK(result.steps[8].summary.find("send delivered:") == 0);

  // Last (unencrypted) send overwrote the front of target memory.
  const auto mem = sim.target_memory();
  REQUIRE(mem.size() >= 4);
  CHECK(to_hex({mem.data(), 4}) == "deadbeef");
  CHECK(sim.tap_count() == 2);
  CHECK(!sim.encryption_on());
}

TEST_CASE("script errors carry the line number and original code") {
  Simulator sim(default_config());

  std::string msg;
  std::istringstream bad_cmd("send 00\nfrobnicate\n");
  CHECK(thrown_code([&] { run_script(sim, bad_cmd); }, &msg) == Err::Parse);
  CHECK(msg.find("line 2:") == 0);

  std::istringstream bad_argc("send\n");
  CHECK(thrown_code([&] { run_script(sim, bad_argc); }, &msg) == Err::Parse);
  CHECK(msg.find("line 1:") == 0);

  std::istringstream bad_hex("send 0g\n");
  CHECK(thrown_code([&] { run_script(sim, bad_hex); }) == Err::Parse);

  std::istringstream bad_num("read 0x80000000 banana\n");
  CHECK(thrown_code([&] { run_script(sim, bad_num); }) == Err::Parse);

  std::istringstream bad_radix("set cipher trivium radix 7\n");
  CHECK(thrown_code([&] { run_script(sim, bad_radix); }, &msg) == Err::ParamSize);
  CHECK(msg.find("line 1:") == 0);

  std::istringstream bad_link("attach eavesdrop_fifo nowhere\n");
  CHECK(thrown_code([&] { run_script(sim, bad_link); }) == Err::Routing);

  std::istringstream bad_tap("attach wiretap ic_crypto\n");
  CHECK(thrown_code([&] { run_script(sim, bad_tap); }) == Err::Parse);

  std::istringstream bad_onoff("set encryption maybe\n");
  CHECK(thrown_code([&] { run_script(sim, bad_onoff); }) == Err::Parse);

  std::istringstream bad_set("set volume 11\n");
  CHECK(thrown_code([&] { run_script(sim, bad_set); }) == Err::Parse);

  // Execution errors surface the same way: reading outside the partition.
  std::istringstream bad_read("read 0x10000000 4\n");
  CHECK(thrown_code([&] { run_script(sim, bad_read); }, &msg) == Err::Routing);
  CHECK(msg.find("line 1:") == 0);
}

TEST_CASE("trace CSV matches the golden layout") {
  SocConfig cfg = default_config();
  cfg.encryption_on = false;
  Simulator sim(std::move(cfg));

  std::istringstream in("send aabbccdd55\n");
  run_script(sim, in);

  std::ostringstream out;
  write_trace_csv(sim, out);
  const std::string expected =
      "cycle,link,address,data,ns_attr,originator\n"
      "0,ta_ic,0x80000000,0xddccbbaa,0,ta\n"
      "0,ic_target,0x80000000,0xddccbbaa,0,ta\n"
      "1,ta_ic,0x80000004,0x00000055,0,ta\n"
      "1,ic_target,0x80000004,0x00000055,0,ta\n";
  CHECK(out.str() == expected);
}

TEST_CASE("trace CSV records NS probes with the attribute set") {
  Simulator sim(default_config());
  std::istringstream in("nsprobe 0x10000000 4\n");
  run_script(sim, in);

  std::ostringstream out;
  write_trace_csv(sim, out);
  const std::string expected =
      "cycle,link,address,data,ns_attr,originator\n"
      "0,ic_ns,0x10000000,0x00000000,1,ns_ip\n"
      "0,ic_ns,0x10000000,0x00000000,1,ns_ip\n";
  CHECK(out.str() == expected);
}

TEST_CASE("script file round trip") {
  const std::string path = "script_roundtrip_tmp.txt";
  {
    std::ofstream f(path);
    f << "send 0102\n";
  }
  Simulator sim(default_config());
  const ScriptResult result = run_script_file(sim, path);
  REQUIRE(result.steps.size() == 1);
  CHECK(result.steps[0].summary.find("send delivered:") == 0);
  std::remove(path.c_str());

  Simulator sim2(default_config());
  CHECK(thrown_code([&] { run_script_file(sim2, "no_such_script.txt"); }) == Err::Io);
}
