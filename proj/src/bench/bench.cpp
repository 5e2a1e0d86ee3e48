#include "bench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "cipher/cipher.hpp"
#include "core/error.hpp"

namespace sbe {
namespace {

std::vector<std::uint8_t> bench_payload(std::size_t n) {
  std::mt19937_64 rng(0xb3c4a11u);  // fixed seed: same payload every run
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng());
  return v;
}

double time_one_run(CipherKind kind, Radix radix, const std::vector<std::uint8_t>& payload,
                    std::vector<std::uint8_t>& out, unsigned* init_steps) {
  const auto params = params_for(kind);
  const std::vector<std::uint8_t> key(params.key_bits / 8, 0x42);
  const std::vector<std::uint8_t> iv(params.iv_bits / 8, 0x17);

  const auto start = std::chrono::steady_clock::now();
  StreamCipher cipher(kind, radix);
  cipher.load(key, iv);
  *init_steps = cipher.init();
  cipher.encrypt(payload, out);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

std::vector<BenchResult> run_bench(const BenchConfig& config) {
  if (config.reps < 3) fail(Err::Config, "need at least 3 repetitions for a median");
  if (config.payload_bytes < 1) fail(Err::Config, "payload must be at least 1 byte");
  if (config.ciphers.empty() || config.radices.empty())
    fail(Err::Config, "empty cipher or radix set");

  const auto payload = bench_payload(config.payload_bytes);

  const auto run_cell = [&config, &payload](CipherKind kind, Radix radix) {
    BenchResult r;
    r.cipher = kind;
    r.radix = radix;
    r.payload_bytes = config.payload_bytes;
    r.reps = config.reps;

    std::vector<std::uint8_t> out(payload.size());
    std::vector<double> times(config.reps);
    for (auto& t : times) t = time_one_run(kind, radix, payload, out, &r.init_steps);
    std::sort(times.begin(), times.end());
    r.median_seconds = times[times.size() / 2];
    r.bytes_per_second = static_cast<double>(config.payload_bytes) / r.median_seconds;
    r.steps_per_byte = 8.0 / radix_bits(radix) +
                       static_cast<double>(r.init_steps) / static_cast<double>(r.payload_bytes);
    return r;
  };

  std::vector<std::pair<CipherKind, Radix>> cells;
  for (CipherKind kind : config.ciphers)
    for (Radix radix : config.radices) cells.emplace_back(kind, radix);

  std::vector<BenchResult> results;
  if (config.parallel) {
    std::vector<std::future<BenchResult>> futures;
    futures.reserve(cells.size());
    for (const auto& [kind, radix] : cells)
      futures.push_back(std::async(std::launch::async, run_cell, kind, radix));
    for (auto& f : futures) results.push_back(f.get());
  } else {
    for (const auto& [kind, radix] : cells) results.push_back(run_cell(kind, radix));
  }
  return results;
}

void write_bench_csv(const std::vector<BenchResult>& results, std::ostream& out) {
  out << "cipher,radix,init_steps,payload_bytes,reps,median_seconds,bytes_per_second,"
         "steps_per_byte\n";
  char buf[128];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g", r.median_seconds, r.bytes_per_second,
                  r.steps_per_byte);
    out << cipher_name(r.cipher) << ',' << radix_bits(r.radix) << ',' << r.init_steps << ','
        << r.payload_bytes << ',' << r.reps << ',' << buf << '\n';
  }
}

std::vector<BenchResult> read_bench_csv(std::istream& in) {
  std::vector<BenchResult> results;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line.rfind("cipher,radix,", 0) != 0)
        fail(Err::Parse, "line 1: missing bench CSV header");
      continue;
    }
    std::istringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 8)
      fail(Err::Parse, "line " + std::to_string(lineno) + ": expected 8 fields, got " +
                           std::to_string(fields.size()));
    try {
      BenchResult r;
      r.cipher = cipher_from_name(fields[0]);
      r.radix = radix_from_int(static_cast<unsigned>(std::stoul(fields[1])));
      r.init_steps = static_cast<unsigned>(std::stoul(fields[2]));
      r.payload_bytes = std::stoull(fields[3]);
      r.reps = static_cast<unsigned>(std::stoul(fields[4]));
      r.median_seconds = std::stod(fields[5]);
      r.bytes_per_second = std::stod(fields[6]);
      r.steps_per_byte = std::stod(fields[7]);
      results.push_back(r);
    } catch (const Error& e) {
      fail(Err::Parse, "line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::exception&) {
      fail(Err::Parse, "line " + std::to_string(lineno) + ": malformed numeric field");
    }
  }
  return results;
}

std::vector<BenchResult> read_bench_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Io, "cannot open results file: " + path);
  return read_bench_csv(in);
}

CompareReport compare_report(const std::vector<BenchResult>& results) {
  std::map<unsigned, const BenchResult*> trivium, grain;
  for (const auto& r : results) {
    if (r.cipher == CipherKind::Trivium)
      trivium[radix_bits(r.radix)] = &r;
    else if (r.cipher == CipherKind::Grain128a || r.cipher == CipherKind::Grain128aAuth)
      grain[radix_bits(r.radix)] = &r;
  }
  if (trivium.empty() || grain.empty())
    fail(Err::Coverage, "comparison needs results for both ciphers");
  for (const auto& [radix, _] : trivium)
    if (!grain.count(radix))
      fail(Err::Coverage, "no Grain-128a result at radix " + std::to_string(radix));
  for (const auto& [radix, _] : grain)
    if (!trivium.count(radix))
      fail(Err::Coverage, "no Trivium result at radix " + std::to_string(radix));

  CompareReport report;
  for (const auto& [radix, t] : trivium) {
    const BenchResult* g = grain.at(radix);
    CompareRow row;
    row.radix = radix_from_int(radix);
    row.trivium_bps = t->bytes_per_second;
    row.grain_bps = g->bytes_per_second;
    row.ratio = row.trivium_bps / row.grain_bps;
    row.order = row.trivium_bps > row.grain_bps  ? SpeedOrder::TriviumFaster
                : row.trivium_bps < row.grain_bps ? SpeedOrder::GrainFaster
                                                  : SpeedOrder::Tie;
    if (row.order == SpeedOrder::GrainFaster) report.trivium_at_least_as_fast = false;
    report.rows.push_back(row);
  }
  return report;
}

std::string render_bench_results(const std::vector<BenchResult>& results) {
  std::ostringstream out;
  char buf[160];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof(buf),
                  "%-14s radix %2u: %8.3f ms median, %9.2f MB/s, %5u init steps, %.4f steps/byte",
                  cipher_name(r.cipher).c_str(), radix_bits(r.radix), r.median_seconds * 1e3,
                  r.bytes_per_second / 1e6, r.init_steps, r.steps_per_byte);
    out << buf << '\n';
  }
  return out.str();
}

std::string render_compare(const CompareReport& report) {
  std::ostringstream out;
  char buf[160];
  for (const auto& row : report.rows) {
    const char* order = row.order == SpeedOrder::TriviumFaster ? "trivium faster"
                        : row.order == SpeedOrder::GrainFaster ? "grain128a faster"
                                                               : "tie";
    std::snprintf(buf, sizeof(buf),
                  "radix %2u: trivium %9.2f MB/s, grain128a %9.2f MB/s, ratio %.3f (%s)",
                  radix_bits(row.radix), row.trivium_bps / 1e6, row.grain_bps / 1e6, row.ratio,
                  order);
    out << buf << '\n';
  }
  out << (report.trivium_at_least_as_fast
              ? "ordering holds: Trivium is at least as fast at every radix\n"
              : "ordering violated: Grain-128a is faster at some radix\n");
  return out.str();
}

}  // namespace sbe
