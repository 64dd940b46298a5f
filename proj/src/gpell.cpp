#include "nagell/gpell.hpp"

#include <algorithm>
#include <stdexcept>

namespace nagell {

namespace {

void require_gpell_instance(const Int& d, const Int& N) {
  if (N == 0) throw std::invalid_argument("gpell: N must be nonzero");
  if (d < 2 || as_square(d)) {
    throw std::invalid_argument("gpell: d = " + to_string(d) +
                                " must be a nonsquare integer >= 2");
  }
}

bool on_curve(const GpellPoint& s, const Int& d, const Int& N) {
  return s.u * s.u - d * s.v * s.v == N;
}

// Largest r >= 0 with scale * r^2 <= limit (scale > 0, limit >= 0).
Int floor_sqrt_ratio(const Int& limit, const Int& scale) {
  Int r = isqrt(limit / scale);
  while (scale * (r + 1) * (r + 1) <= limit) ++r;
  while (r > 0 && scale * r * r > limit) --r;
  return r;
}

GpellPoint times_unit(const GpellPoint& s, const Int& d, const Int& x, const Int& y) {
  return GpellPoint{s.u * x + s.v * y * d, s.v * x + s.u * y};
}

// Collects the points of the orbit s * (x + y sqrt d)^j, j >= 0, whose
// coordinates share a sign. |v| along the orbit is decreasing and then
// increasing, so the walk stops once |v| exceeds the limit while growing.
void walk_orbit(GpellPoint s, const Int& d, const Int& x, const Int& y,
                const Int& v_limit, std::vector<GpellPoint>& out) {
  Int prev_abs_v = abs(s.v);
  bool first = true;
  for (;;) {
    const Int abs_v = abs(s.v);
    if (!first && abs_v > v_limit && abs_v > prev_abs_v) break;
    if (abs_v <= v_limit) {
      if (s.u >= 0 && s.v >= 0) {
        out.push_back(s);
      } else if (s.u <= 0 && s.v <= 0) {
        out.push_back(GpellPoint{-s.u, -s.v});
      }
    }
    prev_abs_v = abs_v;
    first = false;
    s = times_unit(s, d, x, y);
  }
}

}  // namespace

NagellBounds nagell_bounds(const Int& d, const Int& N, const PellFundamental& fund) {
  require_gpell_instance(d, N);
  if (fund.d != d) throw std::invalid_argument("nagell_bounds: unit is for a different d");
  const Int y1_sq = fund.y1 * fund.y1;
  if (N > 0) {
    // 2(x1+1) v^2 <= y1^2 N and 2 u^2 <= (x1+1) N
    return NagellBounds{0, floor_sqrt_ratio(y1_sq * N, 2 * (fund.x1 + 1)),
                        floor_sqrt_ratio((fund.x1 + 1) * N, 2)};
  }
  const Int M = -N;
  return NagellBounds{1, floor_sqrt_ratio(y1_sq * M, 2 * (fund.x1 - 1)),
                      floor_sqrt_ratio((fund.x1 - 1) * M, 2)};
}

bool same_class(const GpellPoint& s1, const GpellPoint& s2, const Int& d, const Int& N) {
  if (N == 0) throw std::invalid_argument("same_class: N must be nonzero");
  if (!on_curve(s1, d, N) || !on_curve(s2, d, N)) {
    throw std::invalid_argument("same_class: point does not solve u^2 - d v^2 = N");
  }
  const Int modulus = abs(N);
  return (s1.u * s2.u - d * s1.v * s2.v) % modulus == 0 &&
         (s1.u * s2.v - s2.u * s1.v) % modulus == 0;
}

ClassSet class_reps(const Int& d, const Int& N) {
  require_gpell_instance(d, N);
  ClassSet set{d, N, pell_fundamental(d), {}};
  const NagellBounds bounds = nagell_bounds(d, N, set.unit);

  for (Int v = bounds.v_min; v <= bounds.v_max; ++v) {
    const auto root = as_square(N + d * v * v);
    if (!root || *root > bounds.u_max) continue;

    std::vector<GpellPoint> candidates{{*root, v}};
    if (*root != 0) candidates.push_back({-*root, v});
    for (const GpellPoint& c : candidates) {
      const bool known = std::any_of(set.reps.begin(), set.reps.end(), [&](const ClassRep& r) {
        return same_class(GpellPoint{r.u, r.v}, c, d, N);
      });
      if (known) continue;
      const bool ambiguous = same_class(c, GpellPoint{-c.u, c.v}, d, N);
      set.reps.push_back(ClassRep{d, N, ambiguous ? abs(c.u) : c.u, v, ambiguous});
    }
  }
  return set;
}

std::vector<GpellPoint> class_solutions(const ClassRep& rep, const PellFundamental& fund,
                                        const Int& v_limit) {
  if (rep.d != fund.d) throw std::invalid_argument("class_solutions: unit is for a different d");
  std::vector<GpellPoint> out;
  if (v_limit < 0) return out;
  const GpellPoint start{rep.u, rep.v};
  walk_orbit(start, rep.d, fund.x1, fund.y1, v_limit, out);
  walk_orbit(start, rep.d, fund.x1, -fund.y1, v_limit, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GpellPoint> solve_gpell(const ClassSet& classes, const Int& v_limit) {
  std::vector<GpellPoint> out;
  for (const ClassRep& rep : classes.reps) {
    auto part = class_solutions(rep, classes.unit, v_limit);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GpellPoint> solve_gpell(const Int& d, const Int& N, const Int& v_limit) {
  return solve_gpell(class_reps(d, N), v_limit);
}

}  // namespace nagell
