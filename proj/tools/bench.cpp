// Times the verification runner in serial and OpenMP-parallel mode (the
// reports must agree), plus the heavier individual kernels.

#include "g1n/flagpush.hpp"
#include "g1n/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
  const auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool reports_equal(const std::vector<g1n::VerificationReport>& a,
                   const std::vector<g1n::VerificationReport>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (g1n::report_to_json(a[i]) != g1n::report_to_json(b[i])) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = 12, max_d = 5;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--max-n" && i + 1 < argc)
      max_n = std::atoi(argv[++i]);
    else if (arg == "--max-d" && i + 1 < argc)
      max_d = std::atoi(argv[++i]);
  }

  std::vector<g1n::VerificationReport> serial, parallel;
  const double t_serial =
      time_ms([&] { serial = g1n::run_all({max_n, max_d, false}); });
  const double t_parallel =
      time_ms([&] { parallel = g1n::run_all({max_n, max_d, true}); });

  std::cout << "run_all grid max_n=" << max_n << " max_d=" << max_d << " ("
            << serial.size() << " checks)\n";
  std::cout << "  serial   " << t_serial << " ms\n";
  std::cout << "  parallel " << t_parallel << " ms"
#if defined(G1N_HAVE_OPENMP)
            << " (OpenMP)"
#else
            << " (OpenMP unavailable: serial fallback)"
#endif
            << "\n";
  if (!reports_equal(serial, parallel)) {
    std::cout << "MISMATCH: serial and parallel reports differ\n";
    return 1;
  }
  std::cout << "  reports identical across modes\n";

  for (int d = 6; d <= 8; ++d) {
    const double t =
        time_ms([&] { (void)g1n::build_z_class(d); });
    std::cout << "build_z_class(" << d << ")  " << t << " ms\n";
  }
  const double t_mprime = time_ms([&] {
    for (int d = 1; d <= 8; ++d) (void)g1n::verify_mprime_identity(d);
  });
  std::cout << "mprime-identity d=1..8  " << t_mprime << " ms\n";
  return 0;
}
