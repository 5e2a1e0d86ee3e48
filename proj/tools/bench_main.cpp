// Benchmark front end. Links only the C API.
//
//   bench run --cipher both --radix 1,8,16,32 --size 1048576 --reps 5 --out results.csv
//   bench kat --file vectors.txt
//   bench compare --in results.csv
//
// Exit codes: 0 success, 1 assertion failure (failing vector, ordering
// violation), 2 usage error or unusable input.

#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "socbusenc.h"

namespace {

constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

int report_status(const char* what, sbe_status status) {
  std::fprintf(stderr, "bench %s: %s (%s)\n", what, sbe_last_error(), sbe_status_name(status));
  return kExitUsage;
}

struct RunOptions {
  std::string cipher = "both";
  std::string radix = "1,8,16,32";
  std::size_t size = std::size_t{1} << 20;
  unsigned reps = 5;
  bool parallel = false;
  std::string out;
};

int cmd_run(const RunOptions& opt) {
  char* report = nullptr;
  const sbe_status status =
      sbe_bench_run(opt.cipher.c_str(), opt.radix.c_str(), opt.size, opt.reps,
                    opt.parallel ? 1 : 0, opt.out.empty() ? nullptr : opt.out.c_str(), &report);
  if (status != SBE_OK) return report_status("run", status);
  std::fputs(report, stdout);
  sbe_string_free(report);
  if (!opt.out.empty()) std::printf("results written to %s\n", opt.out.c_str());
  return 0;
}

int cmd_kat(const std::string& file) {
  size_t total = 0, failures = 0;
  char* report = nullptr;
  const sbe_status status = sbe_kat_check_file(file.c_str(), &total, &failures, &report);
  if (status != SBE_OK) return report_status("kat", status);
  std::fputs(report, stdout);
  sbe_string_free(report);
  return failures == 0 ? 0 : kExitAssertion;
}

int cmd_compare(const std::string& in) {
  int ordering_holds = 0;
  char* report = nullptr;
  const sbe_status status = sbe_bench_compare_file(in.c_str(), &ordering_holds, &report);
  if (status != SBE_OK) return report_status("compare", status);
  std::fputs(report, stdout);
  sbe_string_free(report);
  return ordering_holds ? 0 : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stream-cipher benchmark and known-answer harness"};
  app.set_version_flag("--version", sbe_version());
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "Time keystream encryption per (cipher, radix)");
  run->add_option("--cipher", run_opt.cipher,
                  "trivium, grain128a, grain128a_auth, both, or a comma list")
      ->capture_default_str();
  run->add_option("--radix", run_opt.radix, "comma list out of 1,8,16,32")
      ->capture_default_str();
  run->add_option("--size", run_opt.size, "payload bytes per run")->capture_default_str();
  run->add_option("--reps", run_opt.reps, "runs per cell; the median is reported")
      ->capture_default_str();
  run->add_flag("--parallel", run_opt.parallel, "time the (cipher, radix) cells concurrently");
  run->add_option("--out", run_opt.out, "also write the results as CSV");

  std::string kat_file;
  CLI::App* kat = app.add_subcommand("kat", "Check keystreams against a known-answer file");
  kat->add_option("--file", kat_file, "vector file")->required();

  std::string compare_in;
  CLI::App* compare =
      app.add_subcommand("compare", "Compare Trivium vs Grain-128a throughput from a results CSV");
  compare->add_option("--in", compare_in, "results CSV from 'bench run --out'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (run->parsed()) return cmd_run(run_opt);
  if (kat->parsed()) return cmd_kat(kat_file);
  if (compare->parsed()) return cmd_compare(compare_in);
  return kExitUsage;
}
