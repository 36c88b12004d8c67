#pragma once

#include <optional>
#include <string>
#include <vector>

namespace g1n {

// A complete intersection X of r hypersurfaces of degrees d_1 <= ... <= d_r
// in P^n. Degrees are stored sorted ascending; every degree is >= 1 and
// r >= 1. Degree-1 factors are legal but worth flagging, since they just cut
// down the ambient projective space.
class MultiDegree {
 public:
  MultiDegree(int n, std::vector<int> degrees);

  int n() const { return n_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int r() const { return static_cast<int>(degrees_.size()); }
  int degree_sum() const;
  int max_degree() const { return degrees_.back(); }
  bool has_degree_one() const { return degrees_.front() == 1; }

  std::string to_string() const;  // "(8;[4])", "(7;[2,3])"

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;

 private:
  int n_;
  std::vector<int> degrees_;
};

// Dimension and bound bookkeeping for one multidegree.
struct NumerologyReport {
  int n = 0;
  std::vector<int> degrees;

  int dim_x = 0;   // n - r
  int dim_f = 0;   // dim of the variety of lines in X: 2n - 2 - sum d - r
  int dim_fg = 0;  // dim of lines in X through a general point: n - r - 2

  int max_coniveau_bound = 0;
  bool coniveau2 = false;
  int fano_index2_degree = 0;  // n - sum d - 1

  bool plane_bound_holds = false;
  int plane_bound_slack = 0;
  bool equality_case = false;  // slack == 0

  bool has_degree_one = false;        // informational
  bool has_negative_dimension = false;
};

// The coniveau criterion: geometric coniveau >= c follows from
//   n >= sum d_i + (c - 1) d_r.
// Requires c >= 1.
bool coniveau_at_least(const MultiDegree& md, int c);

// Largest c >= 1 for which coniveau_at_least holds, 0 if none (non-Fano
// range sum d > n).
int max_coniveau(const MultiDegree& md);

struct PlaneBoundResult {
  bool holds = false;
  // dim(planes in X) lower bound minus dim_fg; the bound holds iff >= 0.
  int slack = 0;
};

// Compares the expected dimension 3n - 4 - sum (d_i+1)(d_i+2)/2 of the
// variety of 2-planes in X against dim_fg = n - r - 2.
PlaneBoundResult plane_bound(const MultiDegree& md);

// For a single hypersurface of degree d, the n making the plane bound an
// equality: 2n = 1 + (d+1)(d+2)/2. Integral iff d = 0 or 1 mod 4.
std::optional<int> equality_case_n(int d);

NumerologyReport dimensions(const MultiDegree& md);

}  // namespace g1n
