#include <doctest.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bench/kat.hpp"
#include "core/error.hpp"
#include "core/hex.hpp"
#include "oracle/reference_ciphers.hpp"

using namespace sbe;

namespace {

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

// Frozen anchors, independently reproduced by the serial references in the
// oracle tests.
const char* kGoodVectors =
    "# two known-good vectors\n"
    "cipher=trivium radix=32 key=80000000000000000000 iv=00000000000000000000 offset=0 "
    "keystream=38eb86ff730d7a9caf8df13a4420540d\n"
    "\n"
    "cipher=grain128a radix=8 key=00000000000000000000000000000000 "
    "iv=000000000000000000000000 offset=0 keystream=0304fe446806a6d056a95447a661c8f6\n";

}  // namespace

TEST_CASE("known-good vectors pass and render cleanly") {
  std::istringstream in(kGoodVectors);
  const auto vectors = parse_kat_stream(in);
  REQUIRE(vectors.size() == 2);
  CHECK(vectors[0].line == 2);
  CHECK(vectors[0].cipher == CipherKind::Trivium);
  CHECK(vectors[1].radix == Radix::R8);

  const KatReport report = kat_check(vectors);
  CHECK(report.all_passed());
  CHECK(report.failures == 0);

  const std::string rendered = render_kat_report(report);
  CHECK(rendered.find("PASS line 2 trivium radix 32 offset 0") != std::string::npos);
  CHECK(rendered.find("2/2 vectors passed") != std::string::npos);
  CHECK(rendered.find("FAIL") == std::string::npos);
}

TEST_CASE("a single flipped digit fails the vector and reports what was produced") {
  // Same Trivium anchor with its last hex digit changed (d -> e).
  std::istringstream in(
      "cipher=trivium radix=32 key=80000000000000000000 iv=00000000000000000000 offset=0 "
      "keystream=38eb86ff730d7a9caf8df13a4420540e\n");
  const KatReport report = kat_check(parse_kat_stream(in));
  REQUIRE(report.outcomes.size() == 1);
  CHECK(!report.all_passed());
  CHECK(report.failures == 1);
  CHECK(!report.outcomes[0].pass);
  CHECK(report.outcomes[0].got_hex == "38eb86ff730d7a9caf8df13a4420540d");

  const std::string rendered = render_kat_report(report);
  CHECK(rendered.find("FAIL line 1") != std::string::npos);
  CHECK(rendered.find("expected 38eb86ff730d7a9caf8df13a4420540e") != std::string::npos);
  CHECK(rendered.find("got      38eb86ff730d7a9caf8df13a4420540d") != std::string::npos);
  CHECK(rendered.find("0/1 vectors passed") != std::string::npos);
}

TEST_CASE("bit offsets need not be byte aligned") {
  std::mt19937_64 rng(2024);
  std::vector<std::uint8_t> key(10), iv(10);
  for (auto& b : key) b = static_cast<std::uint8_t>(rng());
  for (auto& b : iv) b = static_cast<std::uint8_t>(rng());

  KatVector v;
  v.cipher = CipherKind::Trivium;
  v.radix = Radix::R16;
  v.key = key;
  v.iv = iv;
  v.offset_bits = 13;
  v.keystream = oracle::trivium_keystream(key, iv, 13, 24);

  const KatReport report = kat_check({v});
  REQUIRE(report.outcomes.size() == 1);
  CHECK(report.outcomes[0].pass);
}

TEST_CASE("parse errors name the offending line") {
  std::string msg;

  std::istringstream missing("cipher=trivium radix=32 key=00 iv=00 offset=0\n");
  CHECK(thrown_code([&] { parse_kat_stream(missing); }, &msg) == Err::Parse);
  CHECK(msg.find("line 1:") == 0);
  CHECK(msg.find("incomplete") != std::string::npos);

  std::istringstream unknown(
      "# fine\n"
      "cipher=trivium radix=32 key=00 iv=00 offset=0 keystream=aa tweak=1\n");
  CHECK(thrown_code([&] { parse_kat_stream(unknown); }, &msg) == Err::Parse);
  CHECK(msg.find("line 2:") == 0);
  CHECK(msg.find("unknown field 'tweak'") != std::string::npos);

  std::istringstream bad_hex("cipher=trivium radix=32 key=0g iv=00 offset=0 keystream=aa\n");
  CHECK(thrown_code([&] { parse_kat_stream(bad_hex); }) == Err::Parse);

  std::istringstream bad_radix("cipher=trivium radix=3 key=00 iv=00 offset=0 keystream=aa\n");
  CHECK(thrown_code([&] { parse_kat_stream(bad_radix); }) == Err::Parse);

  std::istringstream bad_cipher("cipher=rc4 radix=32 key=00 iv=00 offset=0 keystream=aa\n");
  CHECK(thrown_code([&] { parse_kat_stream(bad_cipher); }) == Err::Parse);

  std::istringstream no_eq("cipher trivium\n");
  CHECK(thrown_code([&] { parse_kat_stream(no_eq); }, &msg) == Err::Parse);
  CHECK(msg.find("expected key=value") != std::string::npos);

  std::istringstream empty_ks(
      "cipher=trivium radix=32 key=00 iv=00 offset=0 keystream=\n");
  CHECK(thrown_code([&] { parse_kat_stream(empty_ks); }) == Err::Parse);
}

TEST_CASE("wrong key or IV sizes surface when the vector is checked") {
  std::istringstream in(
      "cipher=trivium radix=32 key=0011 iv=00000000000000000000 offset=0 keystream=aa\n");
  const auto vectors = parse_kat_stream(in);  // sizes are a cipher concern, not a parse concern
  CHECK(thrown_code([&] { kat_check(vectors); }) == Err::ParamSize);
}

TEST_CASE("empty vector file is a vacuous pass with a warning") {
  std::istringstream in("# nothing here\n\n");
  const auto vectors = parse_kat_stream(in);
  CHECK(vectors.empty());
  const KatReport report = kat_check(vectors);
  CHECK(report.all_passed());
  const std::string rendered = render_kat_report(report);
  CHECK(rendered.find("warning: no vectors found (vacuous pass)") != std::string::npos);
}

TEST_CASE("vector files load from disk") {
  const std::string path = "kat_tmp_vectors.txt";
  {
    std::ofstream f(path);
    f << kGoodVectors;
  }
  const KatReport report = kat_check_file(path);
  CHECK(report.all_passed());
  CHECK(report.outcomes.size() == 2);
  std::remove(path.c_str());

  CHECK(thrown_code([] { kat_check_file("no_such_vectors.txt"); }) == Err::Io);
}
