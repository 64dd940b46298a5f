#pragma once

#include <compare>
#include <vector>

#include "nagell/ikern.hpp"
#include "nagell/pell.hpp"

namespace nagell {

// A point u + v*sqrt(d) on u^2 - d*v^2 = N. Ordered by (v, u).
struct GpellPoint {
  Int u;
  Int v;

  friend bool operator==(const GpellPoint&, const GpellPoint&) = default;
  friend std::strong_ordering operator<=>(const GpellPoint& a, const GpellPoint& b) {
    if (a.v != b.v) return a.v < b.v ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.u != b.u) return a.u < b.u ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

// Search box for class fundamental solutions of u^2 - d*v^2 = N:
// v_min <= v <= v_max and |u| <= u_max.
struct NagellBounds {
  Int v_min;
  Int v_max;
  Int u_max;

  friend bool operator==(const NagellBounds&, const NagellBounds&) = default;
};

// Fundamental solution of one class: v is minimal over the class, and for an
// ambiguous class (one closed under u -> -u) the representative has u >= 0.
struct ClassRep {
  Int d;
  Int N;
  Int u;
  Int v;
  bool ambiguous = false;
};

struct ClassSet {
  Int d;
  Int N;
  PellFundamental unit;
  std::vector<ClassRep> reps;  // empty iff u^2 - d*v^2 = N has no solution
};

// Nagell's bounds. For N > 0:
//   v <= y1*sqrt(N) / sqrt(2(x1+1)),   |u| <= sqrt((x1+1) N / 2);
// for N < 0 (v >= 1):
//   v <= y1*sqrt(|N|) / sqrt(2(x1-1)), |u| <= sqrt((x1-1) |N| / 2).
// The floors are exact: each is the largest integer whose square satisfies the
// squared inequality. Throws std::invalid_argument for N = 0.
NagellBounds nagell_bounds(const Int& d, const Int& N, const PellFundamental& fund);

// One representative per solution class, in (v, u) order.
ClassSet class_reps(const Int& d, const Int& N);

// Association test: s1 ~ s2 iff s1 * conj(s2) is divisible by N in Z[sqrt d].
// Throws std::invalid_argument if either point is off the curve.
bool same_class(const GpellPoint& s1, const GpellPoint& s2, const Int& d, const Int& N);

// Every solution with u, v >= 0 and v <= v_limit that lies in the class of
// `rep`, sorted by (v, u). Walks rep * unit^j for j in both directions.
std::vector<GpellPoint> class_solutions(const ClassRep& rep, const PellFundamental& fund,
                                        const Int& v_limit);

// All (u, v) with u, v >= 0, v <= v_limit and u^2 - d*v^2 = N, sorted by (v, u).
std::vector<GpellPoint> solve_gpell(const Int& d, const Int& N, const Int& v_limit);

// Solutions of a class set, merged and sorted by (v, u).
std::vector<GpellPoint> solve_gpell(const ClassSet& classes, const Int& v_limit);

}  // namespace nagell
