#pragma once

// Independent reference implementations used only by tests. The Schur
// arithmetic here goes through explicit bialternant expansions in the two
// Chern roots, and polynomial identities are checked by exact evaluation on
// integer grids, so none of the engine's reduction code is shared.

#include "g1n/chern.hpp"
#include "g1n/lc2.hpp"
#include "g1n/schur.hpp"

#include <map>
#include <utility>

namespace oracle {

using g1n::Rat;

// Sparse polynomial in Q[x, y], keyed by (x power, y power).
using XY = std::map<std::pair<int, int>, Rat>;

// s_(a,b)(x, y) = sum_{k=b}^{a} x^k y^(a+b-k).
XY bialternant(const g1n::Partition2& p);

XY mul(const XY& f, const XY& g);
void add_scaled(XY& f, const XY& g, const Rat& c);

// Expands a class coefficientwise through bialternant(), with no box
// truncation.
XY expand(const g1n::SchurClass& u);

// Greedy reconversion of a symmetric polynomial into Schur coordinates.
// Throws if the input is not a Z-combination of two-row bialternants.
std::map<g1n::Partition2, Rat> to_schur(XY f);

// Product computed entirely on the bialternant side, then reduced into the
// box of u's context by dropping first rows beyond n-1.
g1n::SchurClass product(const g1n::SchurClass& u, const g1n::SchurClass& v);

// Exact evaluation at l = x + y, c2 = x*y.
Rat eval_lc2(const g1n::LC2Poly& p, const Rat& x, const Rat& y);
Rat eval_hc2(const g1n::HC2Poly& p, const Rat& x, const Rat& y, const Rat& h);
Rat eval_root(const g1n::RootForm& r, const Rat& x, const Rat& y,
              const Rat& h);

// e_k of the evaluated roots: the scalar the k-th Chern class must equal at
// the same point.
Rat eval_elementary(const g1n::RootBundle& bundle, int k, const Rat& x,
                    const Rat& y, const Rat& h);

}  // namespace oracle
