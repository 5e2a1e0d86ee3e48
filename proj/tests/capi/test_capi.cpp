// Exercises the shared library through the C header only — no internal
// headers — the way the CLI tools and external consumers see it.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "socbusenc.h"

namespace {

std::string hex(const uint8_t* data, size_t len) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (size_t i = 0; i < len; ++i) {
    out += digits[data[i] >> 4];
    out += digits[data[i] & 0xf];
  }
  return out;
}

const std::vector<uint8_t> kTriviumKey = {0x80, 0, 0, 0, 0, 0, 0, 0, 0, 0};
const std::vector<uint8_t> kTriviumIv(10, 0);

}  // namespace

TEST_CASE("version and status names are stable") {
  CHECK(std::string(sbe_version()) == "1.0.0");
  CHECK(std::string(sbe_status_name(SBE_OK)) == "ok");
  CHECK(std::string(sbe_status_name(SBE_E_AUTH_FAIL)) == "auth_fail");
  CHECK(std::string(sbe_status_name(SBE_E_COVERAGE)) == "coverage");
}

TEST_CASE("cipher handle produces the known keystream") {
  sbe_cipher* c = nullptr;
  REQUIRE(sbe_cipher_new("trivium", 32, 0, &c) == SBE_OK);
  REQUIRE(c != nullptr);

  unsigned steps = 0;
  REQUIRE(sbe_cipher_load(c, kTriviumKey.data(), kTriviumKey.size(), kTriviumIv.data(),
                          kTriviumIv.size()) == SBE_OK);
  REQUIRE(sbe_cipher_init(c, &steps) == SBE_OK);
  CHECK(steps == 36);

  uint8_t ks[16];
  REQUIRE(sbe_cipher_keystream(c, ks, sizeof ks) == SBE_OK);
  CHECK(hex(ks, sizeof ks) == "38eb86ff730d7a9caf8df13a4420540d");
  CHECK(std::string(sbe_last_error()).empty());
  sbe_cipher_free(c);
}

TEST_CASE("cipher handle reports ordered errors") {
  sbe_cipher* c = nullptr;
  CHECK(sbe_cipher_new("rc4", 32, 0, &c) == SBE_E_PARSE);
  CHECK(sbe_cipher_new("trivium", 7, 0, &c) == SBE_E_PARAM_SIZE);
  CHECK(sbe_cipher_new("trivium", 32, 8, &c) == SBE_E_MODE);  // tag on unauthenticated cipher
  CHECK(sbe_cipher_new(nullptr, 32, 0, &c) == SBE_E_CONFIG);
  CHECK(sbe_cipher_new("trivium", 32, 0, nullptr) == SBE_E_CONFIG);

  REQUIRE(sbe_cipher_new("trivium", 32, 0, &c) == SBE_OK);
  uint8_t buf[4];
  CHECK(sbe_cipher_keystream(c, buf, sizeof buf) == SBE_E_SEQUENCE);
  CHECK(std::strlen(sbe_last_error()) > 0);

  const uint8_t short_key[2] = {0, 0};
  CHECK(sbe_cipher_load(c, short_key, sizeof short_key, kTriviumIv.data(), kTriviumIv.size()) ==
        SBE_E_PARAM_SIZE);
  sbe_cipher_free(c);
}

TEST_CASE("authenticated cipher round trip with tag through the C API") {
  std::vector<uint8_t> key(16, 0x5a), iv(12, 0xc3);
  const std::vector<uint8_t> msg = {'b', 'u', 's', ' ', 'd', 'a', 't', 'a'};

  sbe_cipher* enc = nullptr;
  REQUIRE(sbe_cipher_new("grain128a_auth", 16, 0, &enc) == SBE_OK);
  REQUIRE(sbe_cipher_load(enc, key.data(), key.size(), iv.data(), iv.size()) == SBE_OK);
  REQUIRE(sbe_cipher_init(enc, nullptr) == SBE_OK);
  std::vector<uint8_t> ct(msg.size());
  REQUIRE(sbe_cipher_encrypt(enc, msg.data(), ct.data(), ct.size()) == SBE_OK);
  uint8_t tag[8];
  size_t tag_len = 0;
  REQUIRE(sbe_cipher_mac_final(enc, tag, sizeof tag, &tag_len) == SBE_OK);
  CHECK(tag_len == 4);
  sbe_cipher_free(enc);

  sbe_cipher* dec = nullptr;
  REQUIRE(sbe_cipher_new("grain128a_auth", 16, 0, &dec) == SBE_OK);
  REQUIRE(sbe_cipher_load(dec, key.data(), key.size(), iv.data(), iv.size()) == SBE_OK);
  REQUIRE(sbe_cipher_init(dec, nullptr) == SBE_OK);
  std::vector<uint8_t> pt(ct.size());
  REQUIRE(sbe_cipher_decrypt(dec, ct.data(), pt.data(), pt.size()) == SBE_OK);
  CHECK(pt == msg);

  // A short tag buffer is refused without consuming the MAC...
  uint8_t tiny[1];
  CHECK(sbe_cipher_mac_final(dec, tiny, sizeof tiny, nullptr) == SBE_E_LENGTH);

  // ...so the real finalize afterwards still works and matches.
  uint8_t tag2[8];
  size_t tag2_len = 0;
  REQUIRE(sbe_cipher_mac_final(dec, tag2, sizeof tag2, &tag2_len) == SBE_OK);
  REQUIRE(tag2_len == tag_len);
  CHECK(std::memcmp(tag, tag2, tag_len) == 0);
  sbe_cipher_free(dec);

  sbe_cipher* plain = nullptr;
  REQUIRE(sbe_cipher_new("trivium", 32, 0, &plain) == SBE_OK);
  CHECK(sbe_cipher_mac_final(plain, tag, sizeof tag, &tag_len) == SBE_E_MODE);
  sbe_cipher_free(plain);
}

TEST_CASE("session seal and open across two endpoints") {
  std::vector<uint8_t> key(16, 0x42);
  sbe_session* sw = nullptr;
  sbe_session* hw = nullptr;
  REQUIRE(sbe_session_open(0xbeef, "grain128a_auth", 32, 0, key.data(), key.size(), 0, &sw) ==
          SBE_OK);
  REQUIRE(sbe_session_open(0xbeef, "grain128a_auth", 32, 0, key.data(), key.size(), 1, &hw) ==
          SBE_OK);

  const std::vector<uint8_t> payload = {1, 2, 3, 4, 5, 6, 7};
  uint8_t* wire = nullptr;
  size_t wire_len = 0;
  REQUIRE(sbe_session_seal(sw, payload.data(), payload.size(), &wire, &wire_len) == SBE_OK);
  CHECK(wire_len == 15 + payload.size() + 4);

  uint8_t* opened = nullptr;
  size_t opened_len = 0;
  REQUIRE(sbe_session_open_frame(hw, wire, wire_len, &opened, &opened_len) == SBE_OK);
  REQUIRE(opened_len == payload.size());
  CHECK(std::memcmp(opened, payload.data(), opened_len) == 0);
  sbe_buffer_free(opened);

  // Replaying the same frame is refused and no buffer comes back.
  opened = nullptr;
  CHECK(sbe_session_open_frame(hw, wire, wire_len, &opened, &opened_len) == SBE_E_REPLAY);
  CHECK(opened == nullptr);

  // A flipped ciphertext bit fails authentication.
  uint64_t send0 = 0, recv0 = 0;
  REQUIRE(sbe_session_counters(hw, &send0, &recv0) == SBE_OK);
  uint8_t* wire2 = nullptr;
  size_t wire2_len = 0;
  REQUIRE(sbe_session_seal(sw, payload.data(), payload.size(), &wire2, &wire2_len) == SBE_OK);
  wire2[15] ^= 0x01;
  CHECK(sbe_session_open_frame(hw, wire2, wire2_len, &opened, &opened_len) == SBE_E_AUTH_FAIL);
  uint64_t recv_after = 0;
  REQUIRE(sbe_session_counters(hw, nullptr, &recv_after) == SBE_OK);
  CHECK(recv_after == recv0);  // a failed frame must not advance the watermark
  sbe_buffer_free(wire2);

  uint64_t send = 0, recv = 0;
  REQUIRE(sbe_session_counters(sw, &send, &recv) == SBE_OK);
  CHECK(send == 2);
  CHECK(recv == 0);

  // Rekey resets the counters.
  std::vector<uint8_t> key2(16, 0x77);
  REQUIRE(sbe_session_rekey(sw, key2.data(), key2.size()) == SBE_OK);
  REQUIRE(sbe_session_counters(sw, &send, &recv) == SBE_OK);
  CHECK(send == 0);

  sbe_buffer_free(wire);
  sbe_session_free(sw);
  sbe_session_free(hw);
}

TEST_CASE("empty payloads still produce a freeable buffer") {
  std::vector<uint8_t> key(10, 0x11);
  sbe_session* sw = nullptr;
  sbe_session* hw = nullptr;
  REQUIRE(sbe_session_open(1, "trivium", 8, 0, key.data(), key.size(), 0, &sw) == SBE_OK);
  REQUIRE(sbe_session_open(1, "trivium", 8, 0, key.data(), key.size(), 1, &hw) == SBE_OK);

  uint8_t* wire = nullptr;
  size_t wire_len = 0;
  REQUIRE(sbe_session_seal(sw, nullptr, 0, &wire, &wire_len) == SBE_OK);
  CHECK(wire_len == 15);

  uint8_t* opened = nullptr;
  size_t opened_len = 99;
  REQUIRE(sbe_session_open_frame(hw, wire, wire_len, &opened, &opened_len) == SBE_OK);
  CHECK(opened_len == 0);
  sbe_buffer_free(opened);
  sbe_buffer_free(wire);
  sbe_session_free(sw);
  sbe_session_free(hw);
}

TEST_CASE("simulator runs scripts and writes traces through the C API") {
  sbe_sim* sim = nullptr;
  REQUIRE(sbe_sim_new("trivium", 32, 0, 12345, 1, &sim) == SBE_OK);

  char* summary = nullptr;
  REQUIRE(sbe_sim_run_script_text(sim,
                                  "send a1b2c3d4\n"
                                  "read 0x80000000 4\n",
                                  &summary) == SBE_OK);
  REQUIRE(summary != nullptr);
  const std::string text = summary;
  sbe_string_free(summary);
  CHECK(text.find("send delivered:") != std::string::npos);
  CHECK(text.find("read 4 bytes: a1b2c3d4") != std::string::npos);

  const char* path = "capi_trace_tmp.csv";
  REQUIRE(sbe_sim_write_trace_csv(sim, path) == SBE_OK);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "cycle,link,address,data,ns_attr,originator");
  in.close();
  std::remove(path);

  // Script errors carry the line number and a parse status.
  CHECK(sbe_sim_run_script_text(sim, "send 00\nnope\n", nullptr) == SBE_E_PARSE);
  CHECK(std::string(sbe_last_error()).find("line 2:") == 0);

  sbe_sim_free(sim);
}

TEST_CASE("known-answer checks through the C API") {
  const char* path = "capi_kat_tmp.txt";
  {
    std::ofstream f(path);
    f << "cipher=trivium radix=32 key=80000000000000000000 iv=00000000000000000000 offset=0 "
         "keystream=38eb86ff730d7a9caf8df13a4420540d\n";
    f << "cipher=trivium radix=32 key=80000000000000000000 iv=00000000000000000000 offset=0 "
         "keystream=00eb86ff730d7a9caf8df13a4420540d\n";
  }
  size_t total = 0, failures = 0;
  char* report = nullptr;
  REQUIRE(sbe_kat_check_file(path, &total, &failures, &report) == SBE_OK);
  CHECK(total == 2);
  CHECK(failures == 1);
  REQUIRE(report != nullptr);
  CHECK(std::string(report).find("FAIL") != std::string::npos);
  sbe_string_free(report);
  std::remove(path);

  CHECK(sbe_kat_check_file("missing_vectors.txt", nullptr, nullptr, nullptr) == SBE_E_IO);
}

TEST_CASE("bench run and compare through the C API") {
  const char* csv = "capi_bench_tmp.csv";
  char* report = nullptr;
  REQUIRE(sbe_bench_run("both", "8,32", 8192, 3, 0, csv, &report) == SBE_OK);
  REQUIRE(report != nullptr);
  CHECK(std::string(report).find("trivium") != std::string::npos);
  sbe_string_free(report);

  int holds = -1;
  report = nullptr;
  REQUIRE(sbe_bench_compare_file(csv, &holds, &report) == SBE_OK);
  CHECK((holds == 0 || holds == 1));  // tiny payload: assert mechanics, not the ordering
  REQUIRE(report != nullptr);
  CHECK(std::string(report).find("radix  8") != std::string::npos);
  sbe_string_free(report);
  std::remove(csv);

  CHECK(sbe_bench_run("both", "8", 1024, 2, 0, nullptr, nullptr) == SBE_E_CONFIG);
  CHECK(sbe_bench_run("des", "8", 1024, 3, 0, nullptr, nullptr) == SBE_E_PARSE);
  CHECK(sbe_bench_run("both", "9", 1024, 3, 0, nullptr, nullptr) == SBE_E_PARAM_SIZE);
  CHECK(sbe_bench_compare_file("missing.csv", nullptr, nullptr) == SBE_E_IO);
}
