#ifndef SOCBUSENC_H
#define SOCBUSENC_H

/* C interface to the bus-encryption library: stream ciphers (Trivium and
 * Grain-128a with optional authentication), the counter-IV secure channel,
 * the SoC bus simulator with Trojan taps, and the benchmark / known-answer
 * machinery. All state lives behind opaque handles; every fallible call
 * returns a status code and leaves a detail message in thread-local storage
 * readable via sbe_last_error().
 *
 * Cipher names: "trivium", "grain128a", "grain128a_auth".
 * Radix (keystream bits per datapath step): 1, 8, 16 or 32.
 * tag_bits: 0 picks the default (none; 32 for grain128a_auth); otherwise
 * 1..32, meaningful only for grain128a_auth.
 *
 * Buffers and strings the library hands out are malloc'd; release them with
 * sbe_buffer_free / sbe_string_free (plain free() also works). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sbe_status {
  SBE_OK = 0,
  SBE_E_PARAM_SIZE = 1, /* wrong-sized key, IV, tag width, or radix */
  SBE_E_SEQUENCE = 2,   /* operation out of order (e.g. keystream before init) */
  SBE_E_MODE = 3,       /* operation not available in this cipher mode */
  SBE_E_LENGTH = 4,     /* buffer or payload length violates a bound */
  SBE_E_EXHAUSTED = 5,  /* per-(key, IV) keystream budget or counter space spent */
  SBE_E_REPLAY = 6,     /* frame counter was already accepted */
  SBE_E_AUTH_FAIL = 7,  /* tag mismatch; no plaintext was released */
  SBE_E_ROUTING = 8,    /* frame or access does not belong to this endpoint */
  SBE_E_CONFIG = 9,     /* invalid configuration or null argument */
  SBE_E_PARSE = 10,     /* malformed text input (script, CSV, vector file) */
  SBE_E_IO = 11,        /* file could not be read or written */
  SBE_E_COVERAGE = 12,  /* comparison input misses a required (cipher, radix) cell */
  SBE_E_INTERNAL = 100  /* unexpected failure; see sbe_last_error() */
} sbe_status;

/* Human-readable name of a status code (static storage, do not free). */
const char* sbe_status_name(sbe_status status);

/* Detail message of the most recent failure on this thread; empty string if
 * the last call succeeded. The pointer stays valid until the next library
 * call on the same thread. */
const char* sbe_last_error(void);

/* Library version, "major.minor.patch" (static storage, do not free). */
const char* sbe_version(void);

void sbe_buffer_free(uint8_t* buffer);
void sbe_string_free(char* string);

/* ------------------------------------------------------------------ */
/* Stream cipher                                                       */

typedef struct sbe_cipher sbe_cipher;

/* Creates a cipher instance. Call sequence: load, init, then keystream /
 * encrypt / decrypt in any order and length. */
sbe_status sbe_cipher_new(const char* cipher, unsigned radix, unsigned tag_bits,
                          sbe_cipher** out);
void sbe_cipher_free(sbe_cipher* cipher);

/* Key and IV sizes are fixed per cipher: Trivium 10 + 10 bytes, Grain-128a
 * 16 + 12 bytes. Loading again rewinds to a fresh (key, IV). */
sbe_status sbe_cipher_load(sbe_cipher* cipher, const uint8_t* key, size_t key_len,
                           const uint8_t* iv, size_t iv_len);

/* Runs the warm-up phase. If steps_out is non-null it receives the number
 * of radix-wide steps consumed (1152/radix for Trivium, 256/radix for
 * Grain-128a). */
sbe_status sbe_cipher_init(sbe_cipher* cipher, unsigned* steps_out);

/* Raw keystream bytes. In authenticated mode this advances the MAC over an
 * all-zero message; use encrypt/decrypt for real traffic. */
sbe_status sbe_cipher_keystream(sbe_cipher* cipher, uint8_t* out, size_t len);

/* out = in XOR keystream; in and out may alias. Authenticated mode absorbs
 * the plaintext into the MAC (the input when encrypting, the output when
 * decrypting). */
sbe_status sbe_cipher_encrypt(sbe_cipher* cipher, const uint8_t* in, uint8_t* out, size_t len);
sbe_status sbe_cipher_decrypt(sbe_cipher* cipher, const uint8_t* in, uint8_t* out, size_t len);

/* Finalizes the MAC (grain128a_auth only) and writes ceil(tag_bits/8) tag
 * bytes. cap is the size of tag_out; tag_len_out (non-null) receives the
 * length written. The cipher must be re-loaded afterwards. */
sbe_status sbe_cipher_mac_final(sbe_cipher* cipher, uint8_t* tag_out, size_t cap,
                                size_t* tag_len_out);

/* ------------------------------------------------------------------ */
/* Secure channel session                                              */

typedef struct sbe_session sbe_session;

/* One endpoint of a channel. Both endpoints share session_id, cipher
 * settings and key; hardware_side selects the role (0 = software endpoint,
 * seals frames toward the hardware IP; 1 = hardware endpoint, seals frames
 * toward the software side). Each seal burns one counter value; the IV is
 * derived from counter and direction, so no (key, IV) pair repeats. */
sbe_status sbe_session_open(uint16_t session_id, const char* cipher, unsigned radix,
                            unsigned tag_bits, const uint8_t* key, size_t key_len,
                            int hardware_side, sbe_session** out);
void sbe_session_free(sbe_session* session);

/* Encrypts payload into a self-contained wire frame (malloc'd; release with
 * sbe_buffer_free). Payloads are capped at 2^28 bytes. */
sbe_status sbe_session_seal(sbe_session* session, const uint8_t* payload, size_t payload_len,
                            uint8_t** wire_out, size_t* wire_len_out);

/* Verifies and decrypts a received wire frame. On SBE_E_AUTH_FAIL, REPLAY,
 * ROUTING etc. no plaintext is produced. */
sbe_status sbe_session_open_frame(sbe_session* session, const uint8_t* wire, size_t wire_len,
                                  uint8_t** payload_out, size_t* payload_len_out);

/* Replaces the key and resets both counters to zero. */
sbe_status sbe_session_rekey(sbe_session* session, const uint8_t* key, size_t key_len);

/* Next counter this endpoint will seal with, and the lowest counter it will
 * still accept. Either pointer may be null. */
sbe_status sbe_session_counters(sbe_session* session, uint64_t* send_out, uint64_t* recv_out);

/* ------------------------------------------------------------------ */
/* SoC bus simulator                                                   */

typedef struct sbe_sim sbe_sim;

/* Deterministic SoC model: trusted application and crypto IP endpoints, a
 * word-granular interconnect with TrustZone checks, and attachable Trojan
 * taps. The session key is derived from seed. encryption_on = 0 starts with
 * the channel bypassed (scripts can toggle it). */
sbe_status sbe_sim_new(const char* cipher, unsigned radix, unsigned tag_bits, uint64_t seed,
                       int encryption_on, sbe_sim** out);
void sbe_sim_free(sbe_sim* sim);

/* Runs a stimulus script (one command per line; see the tool help or the
 * scripts under data/ for the grammar). summary_out (optional) receives one
 * result line per executed command. Errors carry the script line number. */
sbe_status sbe_sim_run_script_text(sbe_sim* sim, const char* text, char** summary_out);
sbe_status sbe_sim_run_script_file(sbe_sim* sim, const char* path, char** summary_out);

/* Writes the accumulated bus trace as CSV:
 * cycle,link,address,data,ns_attr,originator */
sbe_status sbe_sim_write_trace_csv(sbe_sim* sim, const char* path);

/* ------------------------------------------------------------------ */
/* Known-answer tests and benchmarks                                   */

/* Checks every vector in a known-answer file (lines of
 * cipher=... radix=... key=... iv=... offset=... keystream=...).
 * total_out / failures_out (optional) receive the counts; report_out
 * (optional) receives the per-vector PASS/FAIL text. Returns SBE_OK even
 * when vectors fail — inspect failures_out; non-OK means the file itself
 * was unreadable or malformed. */
sbe_status sbe_kat_check_file(const char* path, size_t* total_out, size_t* failures_out,
                              char** report_out);

/* Times keystream encryption per (cipher, radix) cell and reports the
 * median of `reps` runs. ciphers is "trivium", "grain128a",
 * "grain128a_auth", "both" (= trivium + grain128a) or a comma list;
 * radices is a comma list out of 1,8,16,32. parallel != 0 runs the cells
 * concurrently. If out_csv_path is non-null the results are also written
 * there; report_out (optional) receives a readable summary. */
sbe_status sbe_bench_run(const char* ciphers, const char* radices, size_t payload_bytes,
                         unsigned reps, int parallel, const char* out_csv_path,
                         char** report_out);

/* Reads a results CSV produced by sbe_bench_run and compares Trivium
 * against Grain-128a radix by radix. ordering_holds_out (optional) is set
 * to 1 when Trivium's throughput is at least Grain-128a's at every radix,
 * else 0. Requires both ciphers at matching radices (SBE_E_COVERAGE). */
sbe_status sbe_bench_compare_file(const char* csv_path, int* ordering_holds_out,
                                  char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SOCBUSENC_H */
