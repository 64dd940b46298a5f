#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nagell/ikern.hpp"

namespace nagell {

// Least positive solution of x^2 - d*y^2 = 1.
struct PellFundamental {
  Int d;
  Int x1;
  Int y1;

  friend bool operator==(const PellFundamental&, const PellFundamental&) = default;
};

// One step of the continued-fraction expansion of sqrt(d):
// the complete quotient is (m + sqrt(d)) / q with partial quotient a.
struct SurdState {
  Int d;
  Int m;
  Int q;
  Int a;

  static SurdState start(const Int& d);
  SurdState next() const;
};

struct ContinuedFraction {
  Int a0;
  std::vector<Int> period;
};

// sqrt(d) = [a0; a1, ..., aL] with minimal period L.
// Throws std::invalid_argument for d < 2 or square d.
ContinuedFraction cf_expand(const Int& d);

// Fundamental solution. d = m^2 - 1 returns (m, 1) directly; every other d goes
// through the continued-fraction convergents.
PellFundamental pell_fundamental(const Int& d);

// Continued-fraction route only: the convergent at index L-1 solves +1 for
// even L and -1 for odd L, in which case it is squared.
PellFundamental pell_fundamental_cf(const Int& d);

// The first `count` positive solutions (x1, y1)^j, j = 1..count.
std::vector<std::pair<Int, Int>> pell_solutions(const PellFundamental& fund,
                                                std::size_t count);

}  // namespace nagell
