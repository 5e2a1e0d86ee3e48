#include "socbusenc.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bench/bench.hpp"
#include "bench/kat.hpp"
#include "channel/session.hpp"
#include "cipher/cipher.hpp"
#include "core/error.hpp"
#include "sim/script.hpp"
#include "sim/soc.hpp"

using namespace sbe;

// Handle types are thin wrappers so the C side only ever sees incomplete
// struct pointers.
struct sbe_cipher {
  StreamCipher impl;
};
struct sbe_session {
  ChannelSession impl;
};
struct sbe_sim {
  Simulator impl;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
sbe_status guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return SBE_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<sbe_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SBE_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return SBE_E_INTERNAL;
  }
}

void require_arg(const void* p, const char* name) {
  if (!p) fail(Err::Config, std::string("null argument: ") + name);
}

// len == 0 tolerates a null data pointer; any positive length needs one.
void require_data(const void* p, size_t len, const char* name) {
  if (len > 0) require_arg(p, name);
}

std::optional<unsigned> opt_tag_bits(unsigned tag_bits) {
  return tag_bits == 0 ? std::nullopt : std::optional<unsigned>{tag_bits};
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) fail(Err::Io, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

uint8_t* dup_bytes(const std::vector<std::uint8_t>& v) {
  // malloc(0) may return null; always allocate at least one byte so empty
  // payloads still yield a free-able pointer.
  uint8_t* out = static_cast<uint8_t*>(std::malloc(v.empty() ? 1 : v.size()));
  if (!out) fail(Err::Io, "out of memory");
  std::memcpy(out, v.data(), v.size());
  return out;
}

std::string join_summaries(const ScriptResult& result) {
  std::string out;
  for (const auto& step : result.steps) {
    out += step.summary;
    out += '\n';
  }
  return out;
}

std::vector<CipherKind> parse_cipher_list(const std::string& spec) {
  if (spec == "both") return {CipherKind::Trivium, CipherKind::Grain128a};
  std::vector<CipherKind> kinds;
  std::istringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) fail(Err::Parse, "empty entry in cipher list");
    kinds.push_back(cipher_from_name(tok));
  }
  if (kinds.empty()) fail(Err::Parse, "empty cipher list");
  return kinds;
}

std::vector<Radix> parse_radix_list(const std::string& spec) {
  std::vector<Radix> radices;
  std::istringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size()) fail(Err::Parse, "bad radix entry: " + tok);
      radices.push_back(radix_from_int(static_cast<unsigned>(v)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Err::Parse, "bad radix entry: " + tok);
    }
  }
  if (radices.empty()) fail(Err::Parse, "empty radix list");
  return radices;
}

}  // namespace

extern "C" {

const char* sbe_status_name(sbe_status status) {
  switch (status) {
    case SBE_OK: return "ok";
    case SBE_E_PARAM_SIZE: return "param_size";
    case SBE_E_SEQUENCE: return "sequence";
    case SBE_E_MODE: return "mode";
    case SBE_E_LENGTH: return "length";
    case SBE_E_EXHAUSTED: return "exhausted";
    case SBE_E_REPLAY: return "replay";
    case SBE_E_AUTH_FAIL: return "auth_fail";
    case SBE_E_ROUTING: return "routing";
    case SBE_E_CONFIG: return "config";
    case SBE_E_PARSE: return "parse";
    case SBE_E_IO: return "io";
    case SBE_E_COVERAGE: return "coverage";
    case SBE_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sbe_last_error(void) { return g_last_error.c_str(); }

const char* sbe_version(void) { return "1.0.0"; }

void sbe_buffer_free(uint8_t* buffer) { std::free(buffer); }
void sbe_string_free(char* string) { std::free(string); }

/* ------------------------------------------------------------------ */

sbe_status sbe_cipher_new(const char* cipher, unsigned radix, unsigned tag_bits,
                          sbe_cipher** out) {
  return guard([&] {
    require_arg(cipher, "cipher");
    require_arg(out, "out");
    *out = new sbe_cipher{
        StreamCipher(cipher_from_name(cipher), radix_from_int(radix), opt_tag_bits(tag_bits))};
  });
}

void sbe_cipher_free(sbe_cipher* cipher) { delete cipher; }

sbe_status sbe_cipher_load(sbe_cipher* cipher, const uint8_t* key, size_t key_len,
                           const uint8_t* iv, size_t iv_len) {
  return guard([&] {
    require_arg(cipher, "cipher");
    require_data(key, key_len, "key");
    require_data(iv, iv_len, "iv");
    cipher->impl.load({key, key_len}, {iv, iv_len});
  });
}

sbe_status sbe_cipher_init(sbe_cipher* cipher, unsigned* steps_out) {
  return guard([&] {
    require_arg(cipher, "cipher");
    const unsigned steps = cipher->impl.init();
    if (steps_out) *steps_out = steps;
  });
}

sbe_status sbe_cipher_keystream(sbe_cipher* cipher, uint8_t* out, size_t len) {
  return guard([&] {
    require_arg(cipher, "cipher");
    require_data(out, len, "out");
    cipher->impl.keystream({out, len});
  });
}

sbe_status sbe_cipher_encrypt(sbe_cipher* cipher, const uint8_t* in, uint8_t* out, size_t len) {
  return guard([&] {
    require_arg(cipher, "cipher");
    require_data(in, len, "in");
    require_data(out, len, "out");
    cipher->impl.encrypt({in, len}, {out, len});
  });
}

sbe_status sbe_cipher_decrypt(sbe_cipher* cipher, const uint8_t* in, uint8_t* out, size_t len) {
  return guard([&] {
    require_arg(cipher, "cipher");
    require_data(in, len, "in");
    require_data(out, len, "out");
    cipher->impl.decrypt({in, len}, {out, len});
  });
}

sbe_status sbe_cipher_mac_final(sbe_cipher* cipher, uint8_t* tag_out, size_t cap,
                                size_t* tag_len_out) {
  return guard([&] {
    require_arg(cipher, "cipher");
    require_arg(tag_out, "tag_out");
    // Check the buffer before finalizing so a short buffer is recoverable.
    const size_t need = (cipher->impl.tag_bits() + 7) / 8;
    if (need > cap)
      fail(Err::Length, "tag needs " + std::to_string(need) + " bytes, buffer holds " +
                            std::to_string(cap));
    const auto tag = cipher->impl.mac_finalize();
    std::memcpy(tag_out, tag.data(), tag.size());
    if (tag_len_out) *tag_len_out = tag.size();
  });
}

/* ------------------------------------------------------------------ */

sbe_status sbe_session_open(uint16_t session_id, const char* cipher, unsigned radix,
                            unsigned tag_bits, const uint8_t* key, size_t key_len,
                            int hardware_side, sbe_session** out) {
  return guard([&] {
    require_arg(cipher, "cipher");
    require_data(key, key_len, "key");
    require_arg(out, "out");
    SessionConfig cfg;
    cfg.session_id = session_id;
    cfg.cipher = cipher_from_name(cipher);
    cfg.radix = radix_from_int(radix);
    cfg.tag_bits = opt_tag_bits(tag_bits);
    *out = new sbe_session{ChannelSession(cfg, {key, key_len},
                                          hardware_side ? Direction::ToTa : Direction::ToIp)};
  });
}

void sbe_session_free(sbe_session* session) { delete session; }

sbe_status sbe_session_seal(sbe_session* session, const uint8_t* payload, size_t payload_len,
                            uint8_t** wire_out, size_t* wire_len_out) {
  return guard([&] {
    require_arg(session, "session");
    require_data(payload, payload_len, "payload");
    require_arg(wire_out, "wire_out");
    require_arg(wire_len_out, "wire_len_out");
    const Frame frame = session->impl.seal({payload, payload_len});
    const auto wire = encode_frame(frame);
    *wire_out = dup_bytes(wire);
    *wire_len_out = wire.size();
  });
}

sbe_status sbe_session_open_frame(sbe_session* session, const uint8_t* wire, size_t wire_len,
                                  uint8_t** payload_out, size_t* payload_len_out) {
  return guard([&] {
    require_arg(session, "session");
    require_data(wire, wire_len, "wire");
    require_arg(payload_out, "payload_out");
    require_arg(payload_len_out, "payload_len_out");
    const Frame frame = decode_frame({wire, wire_len}, session->impl.tag_bytes());
    const auto payload = session->impl.open_frame(frame);
    *payload_out = dup_bytes(payload);
    *payload_len_out = payload.size();
  });
}

sbe_status sbe_session_rekey(sbe_session* session, const uint8_t* key, size_t key_len) {
  return guard([&] {
    require_arg(session, "session");
    require_data(key, key_len, "key");
    session->impl.rekey({key, key_len});
  });
}

sbe_status sbe_session_counters(sbe_session* session, uint64_t* send_out, uint64_t* recv_out) {
  return guard([&] {
    require_arg(session, "session");
    if (send_out) *send_out = session->impl.send_counter();
    if (recv_out) *recv_out = session->impl.recv_counter();
  });
}

/* ------------------------------------------------------------------ */

sbe_status sbe_sim_new(const char* cipher, unsigned radix, unsigned tag_bits, uint64_t seed,
                       int encryption_on, sbe_sim** out) {
  return guard([&] {
    require_arg(cipher, "cipher");
    require_arg(out, "out");
    SocConfig cfg;
    cfg.session.cipher = cipher_from_name(cipher);
    cfg.session.radix = radix_from_int(radix);
    cfg.session.tag_bits = opt_tag_bits(tag_bits);
    cfg.seed = seed;
    cfg.encryption_on = encryption_on != 0;
    *out = new sbe_sim{Simulator(std::move(cfg))};
  });
}

void sbe_sim_free(sbe_sim* sim) { delete sim; }

sbe_status sbe_sim_run_script_text(sbe_sim* sim, const char* text, char** summary_out) {
  return guard([&] {
    require_arg(sim, "sim");
    require_arg(text, "text");
    std::istringstream in{std::string(text)};
    const ScriptResult result = run_script(sim->impl, in);
    if (summary_out) *summary_out = dup_string(join_summaries(result));
  });
}

sbe_status sbe_sim_run_script_file(sbe_sim* sim, const char* path, char** summary_out) {
  return guard([&] {
    require_arg(sim, "sim");
    require_arg(path, "path");
    const ScriptResult result = run_script_file(sim->impl, path);
    if (summary_out) *summary_out = dup_string(join_summaries(result));
  });
}

sbe_status sbe_sim_write_trace_csv(sbe_sim* sim, const char* path) {
  return guard([&] {
    require_arg(sim, "sim");
    require_arg(path, "path");
    std::ofstream out(path);
    if (!out) fail(Err::Io, std::string("cannot open trace file for writing: ") + path);
    write_trace_csv(sim->impl, out);
    if (!out.good()) fail(Err::Io, std::string("failed writing trace file: ") + path);
  });
}

/* ------------------------------------------------------------------ */

sbe_status sbe_kat_check_file(const char* path, size_t* total_out, size_t* failures_out,
                              char** report_out) {
  return guard([&] {
    require_arg(path, "path");
    const KatReport report = kat_check_file(path);
    if (total_out) *total_out = report.outcomes.size();
    if (failures_out) *failures_out = report.failures;
    if (report_out) *report_out = dup_string(render_kat_report(report));
  });
}

sbe_status sbe_bench_run(const char* ciphers, const char* radices, size_t payload_bytes,
                         unsigned reps, int parallel, const char* out_csv_path,
                         char** report_out) {
  return guard([&] {
    require_arg(ciphers, "ciphers");
    require_arg(radices, "radices");
    BenchConfig cfg;
    cfg.ciphers = parse_cipher_list(ciphers);
    cfg.radices = parse_radix_list(radices);
    cfg.payload_bytes = payload_bytes;
    cfg.reps = reps;
    cfg.parallel = parallel != 0;
    const auto results = run_bench(cfg);
    if (out_csv_path) {
      std::ofstream out(out_csv_path);
      if (!out) fail(Err::Io, std::string("cannot open results file for writing: ") + out_csv_path);
      write_bench_csv(results, out);
      if (!out.good()) fail(Err::Io, std::string("failed writing results file: ") + out_csv_path);
    }
    if (report_out) *report_out = dup_string(render_bench_results(results));
  });
}

sbe_status sbe_bench_compare_file(const char* csv_path, int* ordering_holds_out,
                                  char** report_out) {
  return guard([&] {
    require_arg(csv_path, "csv_path");
    const CompareReport report = compare_report(read_bench_csv_file(csv_path));
    if (ordering_holds_out) *ordering_holds_out = report.trivium_at_least_as_fast ? 1 : 0;
    if (report_out) *report_out = dup_string(render_compare(report));
  });
}

}  // extern "C"
