// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance_tests [path-to-mfill-binary]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "mfill/io.hpp"
#include "mfill/report.hpp"
#include "mfill/verify.hpp"

using namespace mfill;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<void(Report&)>& body) {
  VerifyOptions opts;
  Report rep("acceptance", Json::object());
  auto t0 = std::chrono::steady_clock::now();
  bool threw = false;
  std::string what;
  try {
    body(rep);
  } catch (const std::exception& e) {
    threw = true;
    what = e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = !threw && rep.all_passed() && secs <= budget_seconds;
  if (!pass) ++failures;
  std::printf("CRITERION %2d %-4s %6.2fs/%.0fs  %s\n", number, pass ? "PASS" : "FAIL",
              secs, budget_seconds, title.c_str());
  if (threw) std::printf("             exception: %s\n", what.c_str());
  for (const auto& item : rep.items())
    if (item.verdict == "FAIL")
      std::printf("             FAIL item %s = %s (%s)\n", item.name.c_str(),
                  item.value.c_str(), item.details.c_str());
}

std::string run_and_capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions opts;  // seed 7, scale 1, sweep 200

  run_criterion(1, "Golab bounds: 6 <= perimeter <= 8, square 8, hexagon 6", 10,
                [&](Report& r) { verify_golab(r, opts); });
  run_criterion(2, "Jung and alpha constants", 120,
                [&](Report& r) { verify_jung_alpha(r, opts); });
  run_criterion(3, "area density inequalities", 30,
                [&](Report& r) { verify_density_inequalities(r, opts); });
  run_criterion(4, "isoperimetrix ratios", 30,
                [&](Report& r) { verify_isoperimetrix(r, opts); });
  run_criterion(5, "Katz filling radius, two routes", 60,
                [&](Report& r) { verify_katz(r, opts); });
  run_criterion(6, "sharp-constant profile: flat vs order-7", 300,
                [&](Report& r) { verify_profile(r, opts); });
  run_criterion(7, "H_lambda dichotomy", 120,
                [&](Report& r) { verify_hlambda(r, opts); });
  run_criterion(8, "hyperbolicity calculators", 30,
                [&](Report& r) { verify_hyperbolicity(r, opts); });
  run_criterion(9, "structural suites", 120,
                [&](Report& r) { verify_structural(r, opts); });

  // Criterion 10: byte-identical `verify all --seed 7` reports through the
  // real binary when its path is provided; in-process probe otherwise.
  if (argc > 1) {
    std::string binary = argv[1];
    auto t0 = std::chrono::steady_clock::now();
    std::string base = "\"" + binary + "\" verify all --seed 7 --format json 2>/dev/null";
    std::string first = run_and_capture(base);
    std::string second = run_and_capture(base);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = !first.empty() && first == second;
    if (!pass) ++failures;
    std::printf("CRITERION 10 %-4s %6.2fs       verify all --seed 7 is byte-identical\n",
                pass ? "PASS" : "FAIL", secs);
  } else {
    run_criterion(10, "determinism (in-process probe)", 120,
                  [&](Report& r) { verify_determinism(r, opts); });
  }

  std::printf("%s (%d failing)\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
              failures);
  return failures == 0 ? 0 : 1;
}
