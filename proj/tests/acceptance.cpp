// One line per acceptance criterion, each timed against its limit.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "cli_harness.hpp"
#include "darkc/acceptance.hpp"

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome determinism() {
  std::ostringstream first, second;
  darkc::acceptance::run_selftest(first);
  darkc::acceptance::run_selftest(second);
  if (first.str() != second.str()) return {false, "in-process selftest logs differ"};
  const auto a = harness::run_cli("selftest");
  const auto b = harness::run_cli("selftest");
  if (a.status != 0 || b.status != 0) return {false, "darkc selftest exited nonzero"};
  if (a.out != b.out) return {false, "darkc selftest logs differ between runs"};
  if (a.out != first.str()) return {false, "darkc selftest log differs from the in-process log"};
  std::size_t goldens = 0;
  for (const auto& g : harness::golden_cases()) {
    const auto r1 = harness::run_cli(g.args);
    const auto r2 = harness::run_cli(g.args);
    if (r1.out != r2.out) return {false, g.file + ": output not stable"};
    if (r1.out != harness::read_file(harness::golden_path(g.file))) return {false, g.file + ": differs from golden"};
    ++goldens;
  }
  return {true, "selftest logs byte-identical (" + std::to_string(a.out.size()) + " bytes), " +
                    std::to_string(goldens) + " golden files stable"};
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const double limits[] = {30, 10, 5, 10, 60, 5, 120, 30, 30, 120};
  const auto criteria = darkc::acceptance::criteria();
  bool all = true;
  auto report = [&](int id, const std::string& title, const Outcome& o, double secs) {
    const double limit = limits[id - 1];
    const bool ok = o.pass && secs < limit;
    all = all && ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, limit);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << " (" << title << ", " << timing << "): " << o.detail
              << (o.pass && !ok ? " [over time limit]" : "") << std::endl;
  };
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = clock::now();
    const auto r = criteria[k]();
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    report(r.id, r.title, {r.pass, r.detail}, secs);
  }
  const auto start = clock::now();
  const auto d = determinism();
  report(10, "determinism", d, std::chrono::duration<double>(clock::now() - start).count());
  std::cout << (all ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
  return all ? 0 : 1;
}
