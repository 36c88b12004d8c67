#include "g1n/cones.hpp"

#include <stdexcept>

namespace g1n {

std::string to_string(ConeVerdict v) {
  switch (v) {
    case ConeVerdict::kBig:
      return "big";
    case ConeVerdict::kEffectiveBoundary:
      return "effective-boundary";
    case ConeVerdict::kNotEffective:
      return "not-effective";
  }
  throw std::logic_error("to_string(ConeVerdict): bad value");
}

namespace {

int resolve_codim(const SchurClass& u, int expected_codim, const char* who) {
  int k = 0;
  if (!u.is_homogeneous(&k))
    throw std::invalid_argument(std::string(who) +
                                ": class is not homogeneous");
  if (u.is_zero()) {
    if (expected_codim < 0)
      throw std::invalid_argument(
          std::string(who) +
          ": the zero class needs an explicit codimension");
    return expected_codim;
  }
  if (expected_codim >= 0 && expected_codim != k)
    throw std::invalid_argument(std::string(who) + ": class has codimension " +
                                std::to_string(k) + ", expected " +
                                std::to_string(expected_codim));
  return k;
}

}  // namespace

std::map<Partition2, Rat> pairing_vector(const SchurClass& u,
                                         int expected_codim) {
  const int k = resolve_codim(u, expected_codim, "pairing_vector");
  const GrassmannContext& ctx = u.context();
  std::map<Partition2, Rat> out;
  for (const auto& q : schubert_basis(ctx.dim() - k, ctx))
    out[q] = integrate(mul(u, SchurClass::schubert(ctx, q)));
  return out;
}

Rat epsilon_margin(const SchurClass& u) {
  int k = 0;
  if (!u.is_homogeneous(&k))
    throw std::invalid_argument("epsilon_margin: class is not homogeneous");
  if (u.is_zero()) return Rat(0);

  const SchurClass lk = l_power(k, u.context());
  bool seen = false;
  Rat margin(0);
  // In each basis coordinate, u - eps * l^k stays effective while
  // eps <= coef_u / coef_l whenever l^k points into that coordinate.
  // Coordinates missed by l^k constrain nothing unless u needs them too,
  // which on G(1,n) cannot happen: l^k has full support in its graded piece.
  for (const auto& p : schubert_basis(k, u.context())) {
    const Rat cu = u.coefficient(p);
    const Rat cl = lk.coefficient(p);
    Rat candidate;
    if (cl != 0)
      candidate = cu / cl;
    else if (cu == 0)
      candidate = 0;
    else
      continue;
    if (!seen || candidate < margin) {
      margin = candidate;
      seen = true;
    }
  }
  if (!seen || margin < 0) return Rat(0);
  return margin;
}

ConeCertificate analyze(const SchurClass& u, int expected_codim) {
  const int k = resolve_codim(u, expected_codim, "analyze");
  const GrassmannContext& ctx = u.context();

  ConeCertificate cert{u, k, {}, {}, ConeVerdict::kEffectiveBoundary, {}, Rat(0)};

  bool any_zero = false, any_negative = false;
  for (const auto& p : schubert_basis(k, ctx)) {
    const Rat c = u.coefficient(p);
    cert.coefficients.emplace_back(p, c);
    if (c == 0) any_zero = true;
    if (c < 0) any_negative = true;
    if (c <= 0) cert.witnesses.push_back(p);
  }

  for (const auto& [q, value] : pairing_vector(u, k)) {
    cert.pairings.emplace_back(q, value);
    // Poincare duality cross-check: pairing against s_q reads off the
    // coefficient at the dual partition.
    if (value != u.coefficient(dual(q, ctx)))
      throw std::logic_error("analyze: pairing at " + g1n::to_string(q) +
                             " disagrees with the dual coefficient");
  }

  cert.verdict = any_negative ? ConeVerdict::kNotEffective
                 : any_zero   ? ConeVerdict::kEffectiveBoundary
                              : ConeVerdict::kBig;
  cert.epsilon = epsilon_margin(u);

  const bool eps_positive = cert.epsilon > 0;
  if (eps_positive != (cert.verdict == ConeVerdict::kBig))
    throw std::logic_error(
        "analyze: epsilon margin and coefficient verdict disagree");
  return cert;
}

Rat integrate_on_f(const LC2Poly& g, const MultiDegree& md) {
  const GrassmannContext ctx(md.n());
  const LC2Poly total = g * class_f(md);
  int deg = 0;
  if (!total.is_homogeneous(&deg))
    throw std::invalid_argument("integrate_on_f: inhomogeneous integrand");
  if (!total.is_zero() && deg != ctx.dim())
    throw std::invalid_argument(
        "integrate_on_f: integrand has weighted degree " +
        std::to_string(deg) + ", expected " + std::to_string(ctx.dim()) +
        " on G(1," + std::to_string(ctx.n) + ")");
  return integrate(from_lc2(total, ctx));
}

}  // namespace g1n
