#pragma once

#include "g1n/json_io.hpp"

#include <string>
#include <vector>

namespace g1n {

// Three-valued outcome: fail means a stated identity or sign condition was
// contradicted; inconclusive means the scenario's hypotheses do not decide
// the question at these parameters (an honest "this case is open here").
enum class CheckStatus { kPass, kFail, kInconclusive };

std::string to_string(CheckStatus s);

struct VerificationReport {
  std::string check_id;
  Json inputs;
  CheckStatus status = CheckStatus::kInconclusive;
  Json witness;  // classes, coefficients, partitions backing the outcome
  double elapsed_ms = 0.0;
};

// Timing is excluded by default so that serialized reports are
// byte-deterministic; pass include_timing to add "elapsedMs".
Json report_to_json(const VerificationReport& rep, bool include_timing = false);

// The full effective-cone pipeline at (n, d): push the incidence class down
// to G(1,n), cross-check its pure-l coefficient against the alpha and beta
// routes, and test the sign. Pass = negative pure-l coefficient together
// with a big Q-class; the report then certifies the hypotheses under which
// the restricted class is big ON the variety of lines F, and explicitly not
// bigness of that class on F itself, which stays undecided here.
// Fail = positive pure-l coefficient or a broken cross-check.
// Inconclusive = zero coefficient, or n - d - 1 < 2 where Q is undefined.
VerificationReport verify_leok_pipeline(int n, int d);

// The cycle of lines through a point in a fixed subspace pairs to zero
// against the point-class construction in exactly one Schubert direction:
// (n-1, big_d-1), where big_d is the total degree. Also checks that c2
// kills that Schubert class. Requires 2 <= big_d < n.
VerificationReport verify_exceptional_schubert(int n, int big_d);

// (d!)^2 c2^d M'(x, y) = prod_{i=1}^{d} c_{i+1}(Sym^i E), exactly.
VerificationReport verify_mprime_identity(int d);

// The top Chern class of Sym^m E factors as m^2 c2 Q(m) and not as
// (m+1)^2 c2 Q(m); with m = n - big_d - 1, requires n - big_d >= 3.
VerificationReport verify_factorization_erratum(int n, int big_d);

// c_(n-d-1)(Sym^(n-d-2) E) is divisible by c2, hence proportional to no
// power of l and never big. Requires n - d >= 3.
VerificationReport verify_remark_not_big(int n, int d);

// betas(d) should climb strictly into the middle of its palindromic
// coefficient list. Odd-degree lists have a mirror-forced equal middle
// pair, so strictness there is unverifiable: inconclusive. Lists of degree
// <= 1 have no interior content at all: pass (middle trivial). Requires
// d >= 2.
VerificationReport verify_beta_shape(int d);

struct RunAllOptions {
  int max_n = 12;
  int max_d = 5;
  // Fan the independent scenarios out across OpenMP threads. Reports come
  // back in the same deterministic order either way.
  bool parallel = false;
};

// Every scenario over the grid implied by the options, in a fixed order,
// plus the classical degree anchors (27, 2875, 45) whenever the grid is
// large enough to contain them. The pipeline scenario runs at its
// degree-matched parameter pairs only (see verify_leok_pipeline); the other
// scenarios sweep the full rectangle they are defined on. An empty grid
// yields an empty list.
std::vector<VerificationReport> run_all(const RunAllOptions& opts);

// True when no report failed (inconclusive reports do not count against).
bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace g1n
