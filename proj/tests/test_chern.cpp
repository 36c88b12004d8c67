#include "g1n/chern.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace g1n;

namespace {

// Exhaustive low-degree grid equality: two exact evaluations agreeing on a
// (deg+1)^3 integer grid pin down polynomials of degree <= deg in each
// variable.
void check_chern_on_grid(const RootBundle& bundle, int k) {
  const HC2Poly cls = chern_class(bundle, k);
  const int deg = k;
  for (int x = 0; x <= deg; ++x)
    for (int y = 0; y <= deg; ++y)
      for (int h = 0; h <= deg; ++h) {
        const Rat expected =
            oracle::eval_elementary(bundle, k, Rat(x), Rat(y), Rat(h));
        CHECK(oracle::eval_hc2(cls, Rat(x), Rat(y), Rat(h)) == expected);
      }
}

}  // namespace

TEST_CASE("symmetric power roots") {
  const RootBundle b = sym_power_roots(3);
  CHECK(b.rank() == 4);
  CHECK(b.roots() == std::vector<RootForm>{{0, 3, 0}, {1, 2, 0}, {2, 1, 0},
                                           {3, 0, 0}});
  CHECK(sym_power_roots(0).roots() == std::vector<RootForm>{{0, 0, 0}});
  CHECK_THROWS_AS((void)sym_power_roots(-1), std::invalid_argument);

  const RootBundle t = twist_by_h(b, 2);
  CHECK(t.roots() == std::vector<RootForm>{{0, 3, 2}, {1, 2, 2}, {2, 1, 2},
                                           {3, 0, 2}});
}

TEST_CASE("chern classes of low symmetric powers") {
  // c1(S^2 E) = 3l, c3(S^2 E) = 4 l c2, c4(S^3 E) = 18 l^2 c2 + 9 c2^2.
  CHECK(chern_class_lc2(sym_power_roots(2), 1) == Rat(3) * LC2Poly::l());
  CHECK(chern_class_lc2(sym_power_roots(2), 3) ==
        Rat(4) * LC2Poly::monomial(1, 1));
  CHECK(chern_class_lc2(sym_power_roots(3), 4) ==
        Rat(18) * LC2Poly::monomial(2, 1) + Rat(9) * LC2Poly::c2(2));
  CHECK(chern_class_lc2(sym_power_roots(2), 0) == LC2Poly::constant(1));

  CHECK_THROWS_AS((void)chern_class(sym_power_roots(2), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)chern_class(sym_power_roots(2), -1),
                  std::invalid_argument);
}

TEST_CASE("asymmetric root multisets are rejected with a witness") {
  const RootBundle lone(std::vector<RootForm>{{2, 0, 0}});  // just 2x
  try {
    (void)chern_class(lone, 1);
    FAIL("expected a symmetry error");
  } catch (const std::domain_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("witness") != std::string::npos);
    CHECK(msg.find("x^1 y^0") != std::string::npos);
  }

  // Twisting by h never breaks symmetry.
  CHECK_NOTHROW((void)chern_class(twist_by_h(sym_power_roots(2), 5), 2));
}

TEST_CASE("chern classes match direct evaluation on grids") {
  for (int m = 0; m <= 4; ++m)
    for (int k = 0; k <= m + 1; ++k) check_chern_on_grid(sym_power_roots(m), k);
  for (int t : {1, 3})
    for (int k = 0; k <= 4; ++k)
      check_chern_on_grid(twist_by_h(sym_power_roots(3), t), k);
}

TEST_CASE("line classes for complete intersections") {
  // Lines through a point of a quartic fivefold-like setup: top Chern class
  // of S^3 E.
  CHECK(class_fg(MultiDegree(8, {4})) ==
        Rat(18) * LC2Poly::monomial(2, 1) + Rat(9) * LC2Poly::c2(2));
  // Two quadrics: c3(S^2 E)^2 = 16 l^2 c2^2.
  CHECK(class_f(MultiDegree(8, {2, 2})) ==
        Rat(16) * LC2Poly::monomial(2, 2));
  // class_fg needs a Fano-positive gap.
  CHECK_THROWS_AS((void)class_fg(MultiDegree(4, {4})), std::invalid_argument);
  CHECK_NOTHROW((void)class_fg(MultiDegree(5, {4})));

  int deg = 0;
  const LC2Poly f = class_f(MultiDegree(5, {3}));
  CHECK(f.is_homogeneous(&deg));
  CHECK(deg == 4);
}

TEST_CASE("q class") {
  CHECK(q_class(2) == LC2Poly::l());
  CHECK(q_class(3) == Rat(2) * LC2Poly::l(2) + LC2Poly::c2());
  CHECK_THROWS_AS((void)q_class(1), std::invalid_argument);

  // m^2 c2 Q(m) is the top Chern class of S^m E.
  for (int m = 2; m <= 9; ++m) {
    const LC2Poly top = chern_class_lc2(sym_power_roots(m), m + 1);
    CHECK(top == Rat(m) * Rat(m) * (LC2Poly::c2() * q_class(m)));
  }
}

TEST_CASE("hc2 containers") {
  const HC2Poly z = chern_class(twist_by_h(sym_power_roots(1), 1), 2);
  CHECK(z.max_h_power() == 2);
  CHECK_THROWS_AS((void)z.to_lc2(), std::domain_error);
  CHECK(z.coefficient(99).is_zero());

  const HC2Poly flat = chern_class(sym_power_roots(3), 4);
  CHECK(flat.max_h_power() == 0);
  CHECK_NOTHROW((void)flat.to_lc2());
  CHECK(HC2Poly().is_zero());
  CHECK(HC2Poly().max_h_power() == -1);
}
