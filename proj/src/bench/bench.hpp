#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cipher/params.hpp"

namespace sbe {

struct BenchConfig {
  std::vector<CipherKind> ciphers{CipherKind::Trivium, CipherKind::Grain128a};
  std::vector<Radix> radices{Radix::R1, Radix::R8, Radix::R16, Radix::R32};
  std::size_t payload_bytes = std::size_t{1} << 20;  // 1 MB reference workload
  unsigned reps = 5;                                 // median of this many runs
  bool parallel = false;  // opt-in: time the (cipher, radix) cells concurrently
};

struct BenchResult {
  CipherKind cipher = CipherKind::Trivium;
  Radix radix = Radix::R32;
  unsigned init_steps = 0;      // exact count, not timed
  std::size_t payload_bytes = 0;
  unsigned reps = 0;
  double median_seconds = 0;    // load + init + encrypt of the payload
  double bytes_per_second = 0;  // host-relative
  double steps_per_byte = 0;    // 8/radix keystream steps + amortized init
};

// Encrypts a deterministic pseudo-random payload under each (cipher, radix)
// and reports the median of `reps` timed runs. Requires reps >= 3 and
// payload_bytes >= 1.
std::vector<BenchResult> run_bench(const BenchConfig& config);

// CSV, one row per (cipher, radix):
// cipher,radix,init_steps,payload_bytes,reps,median_seconds,bytes_per_second,steps_per_byte
void write_bench_csv(const std::vector<BenchResult>& results, std::ostream& out);
std::vector<BenchResult> read_bench_csv(std::istream& in);
std::vector<BenchResult> read_bench_csv_file(const std::string& path);

enum class SpeedOrder { TriviumFaster, Tie, GrainFaster };

struct CompareRow {
  Radix radix = Radix::R32;
  double trivium_bps = 0;
  double grain_bps = 0;
  double ratio = 0;  // trivium / grain throughput
  SpeedOrder order = SpeedOrder::Tie;
};

struct CompareReport {
  std::vector<CompareRow> rows;        // ascending radix
  bool trivium_at_least_as_fast = true;  // no row where Grain-128a wins
};

// Pairs Trivium and Grain-128a rows radix by radix. Every radix present for
// one cipher must be present for the other (coverage error otherwise), and
// at least one radix is required.
CompareReport compare_report(const std::vector<BenchResult>& results);

std::string render_bench_results(const std::vector<BenchResult>& results);
std::string render_compare(const CompareReport& report);

}  // namespace sbe
