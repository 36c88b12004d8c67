#pragma once

#include <string>
#include <vector>

namespace g1n {

// Ambient data for G(1,n), the Grassmannian of lines in P^n. Schubert
// classes live in a 2 x (n-1) box, so the largest admissible first row is
// n-1 and dim G(1,n) = 2(n-1).
struct GrassmannContext {
  int n;

  explicit GrassmannContext(int n_);

  int max_row() const { return n - 1; }
  int dim() const { return 2 * (n - 1); }

  friend bool operator==(const GrassmannContext&,
                         const GrassmannContext&) = default;
};

// Two-row partition (a, b) with a >= b >= 0, indexing the Schubert class of
// codimension a + b.
//
// Incidence dictionary: for a flag A c B of linear subspaces of P^n, the
// cycle of lines meeting A and contained in B carries
//   (a, b) = (n - 1 - dim A, n - dim B).
// Lines through a fixed point inside a fixed subspace of dimension D' get
// (a, b) = (n - 1, n - D').
struct Partition2 {
  int a = 0;
  int b = 0;

  Partition2() = default;
  Partition2(int a_, int b_);

  int codim() const { return a + b; }
  bool fits(const GrassmannContext& ctx) const { return a <= ctx.max_row(); }

  friend bool operator==(const Partition2&, const Partition2&) = default;
};

// Orders by codimension, then by first row descending. Within one graded
// piece this is exactly the schubert_basis enumeration order.
bool operator<(const Partition2& lhs, const Partition2& rhs);

std::string to_string(const Partition2& p);

// Poincare dual partition (n-1-b, n-1-a). Requires p to fit the box.
Partition2 dual(const Partition2& p, const GrassmannContext& ctx);

// All box partitions of the given codimension, first row descending:
// codim 10 on G(1,8) gives (7,3), (6,4), (5,5). Errors when codim is
// negative or exceeds dim G.
std::vector<Partition2> schubert_basis(int codim, const GrassmannContext& ctx);

}  // namespace g1n
