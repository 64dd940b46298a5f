#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nagell/gpell.hpp"
#include "nagell/ikern.hpp"

namespace nagell {

enum class Sign : int { plus = 1, minus = -1 };

// Accepts "+", "-", "plus", "minus".
Sign parse_sign(const std::string& text);
std::string to_string(Sign sign);

// x^2 - k*x*y + y^2 = sign * 2^n, with k >= 0.
struct FormInstance {
  Int k;
  unsigned n = 0;
  Sign sign = Sign::plus;

  Int rhs() const;
  Int value(const Int& x, const Int& y) const;
  bool solved_by(const Int& x, const Int& y) const { return value(x, y) == rhs(); }
};

enum class Parity { both_odd, both_even, mixed };
Parity parity_of(const Int& x, const Int& y);
std::string to_string(Parity parity);

// Positive solution of a FormInstance. Ordered by (y, x).
struct SolutionPair {
  Int x;
  Int y;
  Parity parity = Parity::mixed;

  static SolutionPair of(Int x, Int y);

  friend bool operator==(const SolutionPair& a, const SolutionPair& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend std::strong_ordering operator<=>(const SolutionPair& a, const SolutionPair& b) {
    if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

enum class SolveStatus { empty, finite, infinite };
std::string to_string(SolveStatus status);

// Classes of u^2 - d v^2 = sign * 2^(n - 2e), whose primitive solutions are
// scaled by 2^e.
struct DescentLevel {
  unsigned scale_exponent = 0;
  ClassSet classes;
};

struct Generators {
  std::vector<DescentLevel> pell_levels;    // even k >= 4
  std::vector<SolutionPair> vieta_bases;    // k >= 3
  std::optional<Int> shift;                 // k = 2: x = y +- shift
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::empty;
  std::vector<SolutionPair> solutions;  // max(x, y) <= bound, sorted by (y, x)
  std::optional<Generators> generators;
};

struct GpellInstance {
  Int d;
  Int N;
};

// d = (k/2)^2 - 1 and N = sign * 2^n under u = |x - (k/2) y|, v = y.
// Requires even k >= 4.
GpellInstance reduce_to_gpell(const FormInstance& inst);

// Inverts the substitution: x = (k/2) v +- u, y = v. Only positive pairs that
// re-verify against `inst` are returned.
std::vector<SolutionPair> recover_xy(const Int& u, const Int& v, const FormInstance& inst);

struct DescentSplit {
  Int x0;
  Int y0;
  unsigned e = 0;

  friend bool operator==(const DescentSplit&, const DescentSplit&) = default;
};

// x = 2^e x0, y = 2^e y0 with x0, y0 not both even.
DescentSplit descent_split(const Int& x, const Int& y);

// Replaces x by the other root of t^2 - k y t + (y^2 - N): returns (y, k*y - x).
std::pair<Int, Int> vieta_jump(const Int& x, const Int& y, const Int& k);
// Replaces y by k*x - y: returns (k*x - y, x).
std::pair<Int, Int> vieta_ascend(const Int& x, const Int& y, const Int& k);

// Positive base pairs (x >= y) of the jump chains, k >= 3. For sign + a base
// has x >= k*y (the jump leaves the quadrant); for sign - it has 2x <= k*y (the
// jump does not decrease).
std::vector<SolutionPair> vieta_base_solutions(const FormInstance& inst);

// All positive solutions with max(x, y) <= bound reached from the bases, k >= 3.
std::vector<SolutionPair> vieta_path(const FormInstance& inst, const Int& bound);

struct PellPathResult {
  std::vector<SolutionPair> solutions;
  std::vector<DescentLevel> levels;
};

// Generalized Pell reduction with parity descent, even k >= 4.
PellPathResult pell_path(const FormInstance& inst, const Int& bound);

SolveOutcome solve_all(const FormInstance& inst, const Int& bound);

// max(2^(n+2), k * 2^(n/2 + 2)).
Int adaptive_bound(unsigned n, const Int& k);

struct KRow {
  Int k;
  bool solvable = false;
  bool odd_solution = false;
  std::optional<SolutionPair> min_witness;
  std::optional<SolutionPair> min_odd_witness;
};

// One row per k in [1, k_max], each solved up to adaptive_bound * bound_scale.
// Rows are computed on up to `threads` workers and returned in k order.
std::vector<KRow> scan_k_range(unsigned n, Sign sign, const Int& k_max,
                               unsigned bound_scale = 1, unsigned threads = 1);

struct SolvableKSet {
  std::vector<Int> solvable;
  std::vector<Int> odd_solution;
};

SolvableKSet solvable_k_set(unsigned n, Sign sign, const Int& k_max, unsigned threads = 1);

}  // namespace nagell
