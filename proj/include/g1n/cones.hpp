#pragma once

#include "g1n/chern.hpp"
#include "g1n/coniveau.hpp"
#include "g1n/schur.hpp"

#include <map>
#include <string>
#include <vector>

namespace g1n {

// Where a homogeneous class sits relative to the cone spanned by the
// Schubert basis of its codimension. The cone is simplicial, so membership
// is read off coefficientwise: interior (big), boundary (effective with a
// vanishing coordinate), or outside (a negative coordinate).
enum class ConeVerdict { kBig, kEffectiveBoundary, kNotEffective };

std::string to_string(ConeVerdict v);

struct ConeCertificate {
  SchurClass cls;  // class under test
  int codim = 0;

  // Expansion coefficients against every basis partition of the
  // codimension, in schubert_basis order (zeros included).
  std::vector<std::pair<Partition2, Rat>> coefficients;
  // integrate(cls * s_q) for every q of complementary codimension.
  std::vector<std::pair<Partition2, Rat>> pairings;

  ConeVerdict verdict = ConeVerdict::kEffectiveBoundary;
  // Basis partitions with zero or negative coefficient.
  std::vector<Partition2> witnesses;
  // Largest epsilon with cls - epsilon * l^codim still effective; positive
  // exactly when the verdict is big.
  Rat epsilon;
};

// Requires u homogeneous. The zero class needs expected_codim to say which
// graded piece it is being tested in; for nonzero classes expected_codim,
// when given, must match the inferred codimension.
ConeCertificate analyze(const SchurClass& u, int expected_codim = -1);

// integrate(u * s_q) keyed by the partitions q of complementary
// codimension. Requires u homogeneous and nonzero unless expected_codim
// says which piece the zero class sits in.
std::map<Partition2, Rat> pairing_vector(const SchurClass& u,
                                         int expected_codim = -1);

// sup { epsilon >= 0 : u - epsilon * l^k effective }, computed
// coefficientwise against the expansion of l^k. Zero class gives 0.
Rat epsilon_margin(const SchurClass& u);

// integrate(from_lc2(g * class_f(md))) on G(1, n): the degree of g against
// the variety of lines in a general complete intersection. The weighted
// degree of g * class_f(md) must equal dim G(1,n) = 2(n-1).
Rat integrate_on_f(const LC2Poly& g, const MultiDegree& md);

}  // namespace g1n
