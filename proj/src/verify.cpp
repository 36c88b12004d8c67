#include "g1n/verify.hpp"

#include "g1n/cones.hpp"
#include "g1n/flagpush.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

namespace g1n {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kInconclusive:
      return "inconclusive";
  }
  throw std::logic_error("to_string(CheckStatus): bad value");
}

Json report_to_json(const VerificationReport& rep, bool include_timing) {
  Json j{{"checkId", rep.check_id},
         {"inputs", rep.inputs},
         {"status", to_string(rep.status)},
         {"witness", rep.witness}};
  if (include_timing) j["elapsedMs"] = rep.elapsed_ms;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string id1(const char* name, const char* k, int v) {
  return std::string(name) + "(" + k + "=" + std::to_string(v) + ")";
}

std::string id2(const char* name, const char* k1, int v1, const char* k2,
                int v2) {
  return std::string(name) + "(" + k1 + "=" + std::to_string(v1) + "," + k2 +
         "=" + std::to_string(v2) + ")";
}

Json partition_json(const Partition2& p) {
  return Json{{"a", p.a}, {"b", p.b}};
}

// Top Chern class of Sym^m E.
LC2Poly top_chern_sym(int m) {
  return chern_class_lc2(sym_power_roots(m), m + 1);
}

}  // namespace

VerificationReport verify_leok_pipeline(int n, int d) {
  if (n < 3)
    throw std::invalid_argument("verify_leok_pipeline: n must be >= 3");
  if (d < 1)
    throw std::invalid_argument("verify_leok_pipeline: d must be >= 1");

  VerificationReport rep;
  rep.check_id = id2("leok-pipeline", "n", n, "d", d);
  rep.inputs = Json{{"n", n}, {"d", d}};
  const auto t0 = Clock::now();

  const ZPrimeResult zp = z_prime_class(n, d);
  const Rat pure_l = zp.cls.pure_l_coefficient();

  // Same number along two independent shortcut routes.
  const AlphaDiffResult ad = alpha_diff(n, d);
  const std::vector<Rat> beta = betas(d);
  const auto beta_at = [&](int i) {
    return (i >= 0 && i < static_cast<int>(beta.size())) ? beta[i] : Rat(0);
  };
  const Rat beta_route =
      factorial(d) * (beta_at(n - d - 2) - beta_at(n - d - 1));

  LC2Poly remainder = zp.cls;
  if (!zp.cls.is_zero())
    remainder -= LC2Poly::monomial(zp.cls.weighted_degree(), 0, pure_l);

  Json w{{"pureL", rat_to_string(pure_l)},
         {"alphaDiff", rat_to_string(ad.value)},
         {"betaRoute", rat_to_string(beta_route)},
         {"degenerate", zp.degenerate},
         {"remainderDivisibleByC2", remainder.divisible_by_c2()}};

  if (pure_l != ad.value || pure_l != beta_route) {
    rep.status = CheckStatus::kFail;
    w["detail"] = "pure-l coefficient disagrees between the three routes";
    rep.witness = std::move(w);
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }

  const int m = n - d - 1;
  if (m < 2) {
    rep.status = CheckStatus::kInconclusive;
    w["detail"] = "q-class undefined at n-d-1 = " + std::to_string(m);
  } else {
    const GrassmannContext ctx(n);
    const ConeCertificate cert = analyze(from_lc2(q_class(m), ctx));
    w["qVerdict"] = to_string(cert.verdict);
    w["qEpsilonMargin"] = rat_to_string(cert.epsilon);
    const bool q_big = cert.verdict == ConeVerdict::kBig;

    if (pure_l < 0 && q_big) {
      rep.status = CheckStatus::kPass;
      w["note"] =
          "pass certifies the hypotheses for bigness of the restricted class "
          "on the variety of lines (negative pure-l coefficient, c2-divisible "
          "remainder, big q-class); bigness on that variety itself is not "
          "decided here";
    } else if (pure_l == 0) {
      rep.status = CheckStatus::kInconclusive;
      w["detail"] = "pure-l coefficient vanishes; the sign criterion is silent";
    } else if (pure_l > 0) {
      rep.status = CheckStatus::kFail;
      w["detail"] = "pure-l coefficient is positive";
    } else {
      rep.status = CheckStatus::kFail;
      w["detail"] = "q-class certificate is not big";
    }
  }
  rep.witness = std::move(w);
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_exceptional_schubert(int n, int big_d) {
  if (big_d < 2 || big_d >= n)
    throw std::invalid_argument(
        "verify_exceptional_schubert: need 2 <= total degree < n");

  VerificationReport rep;
  rep.check_id = id2("exceptional-schubert", "n", n, "D", big_d);
  rep.inputs = Json{{"n", n}, {"D", big_d}};
  const auto t0 = Clock::now();

  const GrassmannContext ctx(n);
  const SchurClass u = from_lc2(top_chern_sym(n - big_d - 1), ctx);
  const Partition2 expected(n - 1, big_d - 1);

  Json pairings = Json::array();
  Json zeros = Json::array();
  bool negative = false;
  bool zero_elsewhere = false;
  bool zero_at_expected = false;
  for (const auto& [q, v] : pairing_vector(u, n - big_d)) {
    pairings.push_back(Json{{"a", q.a}, {"b", q.b}, {"value", rat_to_string(v)}});
    if (v < 0) negative = true;
    if (v == 0) {
      zeros.push_back(partition_json(q));
      (q == expected ? zero_at_expected : zero_elsewhere) = true;
    }
  }

  const bool c2_kills =
      mul(SchurClass::schubert(ctx, Partition2(1, 1)),
          SchurClass::schubert(ctx, expected))
          .is_zero();

  rep.status = (zero_at_expected && !zero_elsewhere && !negative && c2_kills)
                   ? CheckStatus::kPass
                   : CheckStatus::kFail;
  rep.witness = Json{{"expectedZero", partition_json(expected)},
                     {"zeros", std::move(zeros)},
                     {"pairings", std::move(pairings)},
                     {"c2KillsExceptionalClass", c2_kills}};
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_mprime_identity(int d) {
  if (d < 1)
    throw std::invalid_argument("verify_mprime_identity: d must be >= 1");

  VerificationReport rep;
  rep.check_id = id1("mprime-identity", "d", d);
  rep.inputs = Json{{"d", d}};
  const auto t0 = Clock::now();

  // Left side: (d!)^2 c2^d M'(x, y), with M' read as a polynomial in its
  // two variables and rewritten through l and c2.
  const BivarPoly mp = m_prime_poly(d);
  XYHPoly subst;
  for (int i = 0; i <= mp.degree(); ++i)
    subst += XYHPoly::monomial(i, mp.degree() - i, 0, mp.coeff(i));

  LC2Poly lhs;
  try {
    lhs = symmetrize(subst).to_lc2();
  } catch (const std::domain_error& e) {
    rep.status = CheckStatus::kFail;
    rep.witness = Json{{"detail", e.what()}};
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }
  const Rat dfac = factorial(d);
  lhs = (dfac * dfac) * (LC2Poly::c2(d) * lhs);

  LC2Poly rhs = LC2Poly::constant(1);
  for (int i = 1; i <= d; ++i) rhs = rhs * top_chern_sym(i);

  if (lhs == rhs) {
    rep.status = CheckStatus::kPass;
    int deg = 0;
    lhs.is_homogeneous(&deg);
    rep.witness = Json{{"weightedDegree", deg},
                       {"terms", static_cast<int>(lhs.terms().size())}};
  } else {
    rep.status = CheckStatus::kFail;
    rep.witness = Json{{"lhs", to_json(lhs)},
                       {"rhs", to_json(rhs)},
                       {"difference", to_json(lhs - rhs)}};
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_factorization_erratum(int n, int big_d) {
  if (big_d < 1)
    throw std::invalid_argument(
        "verify_factorization_erratum: total degree must be >= 1");
  if (n - big_d < 3)
    throw std::invalid_argument(
        "verify_factorization_erratum: requires n - total degree >= 3");

  VerificationReport rep;
  rep.check_id = id2("factorization-erratum", "n", n, "D", big_d);
  rep.inputs = Json{{"n", n}, {"D", big_d}};
  const auto t0 = Clock::now();

  const int m = n - big_d - 1;
  const LC2Poly cls = top_chern_sym(m);
  const LC2Poly c2q = LC2Poly::c2() * q_class(m);
  const LC2Poly correct = Rat(m) * Rat(m) * c2q;
  const LC2Poly wrong = Rat(m + 1) * Rat(m + 1) * c2q;

  const bool matches = cls == correct;
  const bool rejects = cls != wrong;
  rep.status = (matches && rejects) ? CheckStatus::kPass : CheckStatus::kFail;
  rep.witness = Json{{"m", m},
                     {"matchesSquaredFactor", matches},
                     {"rejectsOffByOneFactor", rejects},
                     {"class", to_json(cls)}};
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_remark_not_big(int n, int d) {
  if (d < 1)
    throw std::invalid_argument("verify_remark_not_big: d must be >= 1");
  if (n - d < 3)
    throw std::invalid_argument("verify_remark_not_big: requires n - d >= 3");

  VerificationReport rep;
  rep.check_id = id2("remark-not-big", "n", n, "d", d);
  rep.inputs = Json{{"n", n}, {"d", d}};
  const auto t0 = Clock::now();

  const LC2Poly cls = top_chern_sym(n - d - 2);
  const bool divisible = cls.divisible_by_c2();
  rep.status = divisible ? CheckStatus::kPass : CheckStatus::kFail;
  Json w{{"divisibleByC2", divisible}, {"class", to_json(cls)}};
  if (divisible) w["quotient"] = to_json(cls.div_c2());
  rep.witness = std::move(w);
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_beta_shape(int d) {
  if (d < 2) throw std::invalid_argument("verify_beta_shape: d must be >= 2");

  VerificationReport rep;
  rep.check_id = id1("beta-shape", "d", d);
  rep.inputs = Json{{"d", d}};
  const auto t0 = Clock::now();

  const std::vector<Rat> beta = betas(d);
  const int deg = static_cast<int>(beta.size()) - 1;
  Json coeffs = Json::array();
  for (const auto& b : beta) coeffs.push_back(rat_to_string(b));
  Json w{{"deg", deg}, {"betas", std::move(coeffs)}};

  for (int i = 0, j = deg; i < j; ++i, --j)
    if (beta[i] != beta[j]) {
      rep.status = CheckStatus::kFail;
      w["detail"] = "coefficient list is not palindromic";
      w["pair"] = Json{i, j};
      rep.witness = std::move(w);
      rep.elapsed_ms = ms_since(t0);
      return rep;
    }

  // Climb through the first half. For odd deg the central adjacent pair is
  // mirror-forced to be equal, so strictness there cannot be observed.
  const int half = deg / 2;
  rep.status = CheckStatus::kPass;
  for (int i = 0; i < half; ++i) {
    if (beta[i] > beta[i + 1]) {
      rep.status = CheckStatus::kFail;
      w["detail"] = "coefficients decrease before the middle";
      w["pair"] = Json{i, i + 1};
      break;
    }
    if (beta[i] == beta[i + 1]) {
      rep.status = CheckStatus::kInconclusive;
      w["detail"] = "tie before the middle; strict increase unverifiable";
      w["pair"] = Json{i, i + 1};
      break;
    }
  }
  if (rep.status == CheckStatus::kPass) {
    if (deg >= 2 && deg % 2 == 1) {
      rep.status = CheckStatus::kInconclusive;
      w["detail"] = "central pair is mirror-forced equal; strictness at the "
                    "middle is unverifiable";
      w["pair"] = Json{half, half + 1};
    } else if (deg <= 1) {
      w["detail"] = "middle trivial";
    } else {
      w["detail"] = "strictly increasing into the middle";
    }
  }
  rep.witness = std::move(w);
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

namespace {

VerificationReport anchor_check(const std::string& name, const MultiDegree& md,
                                const LC2Poly& g, const Rat& expected) {
  VerificationReport rep;
  rep.check_id = "anchor(" + name + ")";
  rep.inputs = Json{{"n", md.n()},
                    {"degrees", md.degrees()},
                    {"expected", rat_to_string(expected)}};
  const auto t0 = Clock::now();
  const Rat value = integrate_on_f(g, md);
  rep.status = value == expected ? CheckStatus::kPass : CheckStatus::kFail;
  rep.witness = Json{{"value", rat_to_string(value)}};
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

struct Job {
  std::string id;
  std::function<VerificationReport()> fn;
};

VerificationReport run_guarded(const Job& job) {
  try {
    return job.fn();
  } catch (const std::exception& e) {
    VerificationReport rep;
    rep.check_id = job.id;
    rep.status = CheckStatus::kFail;
    rep.witness = Json{{"exception", e.what()}};
    return rep;
  }
}

}  // namespace

std::vector<VerificationReport> run_all(const RunAllOptions& opts) {
  std::vector<Job> jobs;
  const int max_n = opts.max_n;
  const int max_d = opts.max_d;

  if (max_d >= 1 && max_n >= 3) {
    for (int d = 1; d <= max_d; ++d)
      jobs.push_back({id1("mprime-identity", "d", d),
                      [d] { return verify_mprime_identity(d); }});
    for (int d = 2; d <= max_d; ++d)
      jobs.push_back(
          {id1("beta-shape", "d", d), [d] { return verify_beta_shape(d); }});
    for (int D = 2; D <= max_d; ++D)
      for (int n = D + 3; n <= max_n; ++n)
        jobs.push_back({id2("factorization-erratum", "n", n, "D", D),
                        [n, D] { return verify_factorization_erratum(n, D); }});
    for (int d = 1; d <= max_d; ++d)
      for (int n = d + 3; n <= max_n; ++n)
        jobs.push_back({id2("remark-not-big", "n", n, "d", d),
                        [n, d] { return verify_remark_not_big(n, d); }});
    for (int D = 2; D <= max_d; ++D)
      for (int n = D + 2; n <= max_n; ++n)
        jobs.push_back({id2("exceptional-schubert", "n", n, "D", D),
                        [n, D] { return verify_exceptional_schubert(n, D); }});
    // The incidence-class pipeline is a degree-matched certificate: the
    // pushed-down class has the codimension of the point-class construction
    // exactly when 2n = 1 + (d+1)(d+2)/2. Sweep those pairs only.
    for (int d = 1; d <= max_d; ++d)
      if (const auto n = equality_case_n(d); n && *n >= d + 3 && *n <= max_n)
        jobs.push_back({id2("leok-pipeline", "n", *n, "d", d), [n, d] {
                          return verify_leok_pipeline(*n, d);
                        }});

    if (max_n >= 3 && max_d >= 3)
      jobs.push_back({"anchor(lines-on-cubic-surface)", [] {
                        return anchor_check("lines-on-cubic-surface",
                                            MultiDegree(3, {3}),
                                            LC2Poly::constant(1), Rat(27));
                      }});
    if (max_n >= 4 && max_d >= 5)
      jobs.push_back({"anchor(lines-on-quintic-threefold)", [] {
                        return anchor_check("lines-on-quintic-threefold",
                                            MultiDegree(4, {5}),
                                            LC2Poly::constant(1), Rat(2875));
                      }});
    if (max_n >= 4 && max_d >= 3)
      jobs.push_back({"anchor(cubic-threefold-fano-degree)", [] {
                        return anchor_check("cubic-threefold-fano-degree",
                                            MultiDegree(4, {3}), LC2Poly::l(2),
                                            Rat(45));
                      }});
  }

  std::vector<VerificationReport> out(jobs.size());
  if (opts.parallel) {
#if defined(G1N_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(jobs.size()); ++i)
      out[i] = run_guarded(jobs[i]);
  } else {
    for (size_t i = 0; i < jobs.size(); ++i) out[i] = run_guarded(jobs[i]);
  }

  std::set<std::string> ids;
  for (const auto& rep : out)
    if (!ids.insert(rep.check_id).second)
      throw std::logic_error("run_all: duplicate check id " + rep.check_id);
  return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& rep : reports)
    if (rep.status == CheckStatus::kFail) return false;
  return true;
}

}  // namespace g1n
