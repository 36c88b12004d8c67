#include "g1n/cones.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace g1n;

namespace {

const GrassmannContext g8(8);

SchurClass q3_on_g8() { return from_lc2(q_class(3), g8); }

SchurClass c4s3_on_g8() {
  return from_lc2(chern_class_lc2(sym_power_roots(3), 4), g8);
}

}  // namespace

TEST_CASE("interior of the cone") {
  const ConeCertificate cert = analyze(q3_on_g8());
  CHECK(cert.verdict == ConeVerdict::kBig);
  CHECK(cert.codim == 2);
  CHECK(cert.witnesses.empty());
  CHECK(cert.epsilon == 2);
  // 2 l^2 + c2 = 2 s_(2,0) + 3 s_(1,1).
  CHECK(cert.coefficients ==
        std::vector<std::pair<Partition2, Rat>>{{Partition2(2, 0), Rat(2)},
                                                {Partition2(1, 1), Rat(3)}});
}

TEST_CASE("boundary of the cone") {
  const ConeCertificate cert = analyze(c4s3_on_g8());
  CHECK(cert.verdict == ConeVerdict::kEffectiveBoundary);
  CHECK(cert.codim == 4);
  CHECK(cert.witnesses == std::vector<Partition2>{Partition2(4, 0)});
  CHECK(cert.epsilon == 0);
  CHECK(cert.coefficients ==
        std::vector<std::pair<Partition2, Rat>>{{Partition2(4, 0), Rat(0)},
                                                {Partition2(3, 1), Rat(18)},
                                                {Partition2(2, 2), Rat(27)}});
}

TEST_CASE("outside the cone") {
  const SchurClass neg = Rat(-1) * from_lc2(LC2Poly::c2(), g8);
  const ConeCertificate cert = analyze(neg);
  CHECK(cert.verdict == ConeVerdict::kNotEffective);
  // Witnesses list every non-positive coordinate: the vanishing (2,0) and
  // the negative (1,1) that decides the verdict.
  CHECK(cert.witnesses ==
        std::vector<Partition2>{Partition2(2, 0), Partition2(1, 1)});
  CHECK(cert.epsilon == 0);
}

TEST_CASE("zero class and degenerate inputs") {
  const ConeCertificate cert = analyze(SchurClass::zero(g8), 3);
  CHECK(cert.verdict == ConeVerdict::kEffectiveBoundary);
  CHECK(cert.witnesses.size() == 2);  // all of codim 3: (3,0), (2,1)
  CHECK(cert.epsilon == 0);

  CHECK_THROWS_AS((void)analyze(SchurClass::zero(g8)), std::invalid_argument);
  CHECK_THROWS_AS(
      (void)analyze(SchurClass::one(g8) + from_lc2(LC2Poly::l(), g8)),
      std::invalid_argument);
  CHECK_THROWS_AS((void)analyze(q3_on_g8(), 3), std::invalid_argument);
}

TEST_CASE("pairing vectors") {
  const auto pv = pairing_vector(c4s3_on_g8());
  REQUIRE(pv.size() == 3);
  CHECK(pv.at(Partition2(7, 3)) == 0);
  CHECK(pv.at(Partition2(6, 4)) == 18);
  CHECK(pv.at(Partition2(5, 5)) == 27);

  // Pairing reads off dual coefficients on random classes.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int n = 2; n <= 6; ++n) {
    const GrassmannContext ctx(n);
    for (int k = 0; k <= ctx.dim(); ++k) {
      SchurClass::TermMap terms;
      for (const auto& p : schubert_basis(k, ctx)) {
        const int c = coef(rng);
        if (c != 0) terms.emplace(p, Rat(c));
      }
      const SchurClass u(ctx, std::move(terms));
      for (const auto& [q, v] : pairing_vector(u, k))
        CHECK(v == u.coefficient(dual(q, ctx)));
    }
  }
}

TEST_CASE("epsilon margins") {
  CHECK(epsilon_margin(q3_on_g8()) == 2);
  CHECK(epsilon_margin(c4s3_on_g8()) == 0);
  CHECK(epsilon_margin(SchurClass::zero(g8)) == 0);

  // l^4 = s_(4,0) + 3 s_(3,1) + 2 s_(2,2) on a box that holds it.
  const SchurClass l4 = l_power(4, g8);
  CHECK(l4.coefficient(Partition2(4, 0)) == 1);
  CHECK(l4.coefficient(Partition2(3, 1)) == 3);
  CHECK(l4.coefficient(Partition2(2, 2)) == 2);
  CHECK(epsilon_margin(l4) == 1);

  // Every power of l is big.
  for (int n = 2; n <= 7; ++n) {
    const GrassmannContext ctx(n);
    for (int k = 0; k <= ctx.dim(); ++k)
      CHECK(analyze(l_power(k, ctx)).verdict == ConeVerdict::kBig);
  }
}

TEST_CASE("degrees against the family of lines") {
  CHECK(integrate_on_f(LC2Poly::constant(1), MultiDegree(3, {3})) == 27);
  CHECK(integrate_on_f(LC2Poly::constant(1), MultiDegree(4, {5})) == 2875);
  CHECK(integrate_on_f(LC2Poly::l(2), MultiDegree(4, {3})) == 45);

  CHECK_THROWS_AS(
      (void)integrate_on_f(LC2Poly::constant(1), MultiDegree(4, {3})),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)integrate_on_f(LC2Poly::l() + LC2Poly::constant(1),
                           MultiDegree(4, {3})),
      std::invalid_argument);
  CHECK(integrate_on_f(LC2Poly(), MultiDegree(4, {3})) == 0);
}
