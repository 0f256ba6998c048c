// Prints one line per acceptance criterion, exits nonzero if any fails.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "cryptobench/acceptance.hpp"

namespace acc = cryptobench::acceptance;
using cryptobench::Report;

namespace {

void print(const acc::CriterionResult& r) {
  const char* status = r.status == Report::Status::pass ? "PASS" : r.status == Report::Status::fail ? "FAIL" : "SKIP";
  std::printf("%-4s %-32s %8.2fs  %s\n", status, r.name.c_str(), r.seconds, r.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria 1-14"};
  acc::Options opts;
  bool no_determinism = false;
  app.add_option("--seed", opts.seed, "master seed");
  app.add_option("--workers", opts.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--long", opts.long_mode, "also run the long criteria");
  app.add_flag("--no-determinism", no_determinism, "skip criterion 14 (it reruns the default suite twice)");
  CLI11_PARSE(app, argc, argv);

  const acc::Run run = acc::run_all_acceptance(opts, print);
  bool ok = run.report.passed();
  if (no_determinism) {
    print({14, "c14_determinism", Report::Status::skip, "disabled by flag", 0});
  } else {
    const acc::CriterionResult d = acc::determinism_check(&run);
    print(d);
    ok = ok && d.status == Report::Status::pass;
  }
  std::printf("%s\n", ok ? "acceptance: PASS" : "acceptance: FAIL");
  return ok ? 0 : 1;
}
