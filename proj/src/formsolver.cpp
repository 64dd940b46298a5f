#include "nagell/formsolver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace nagell {

namespace {

bool is_odd(const Int& v) { return (v & 1) != 0; }

void require_form(const FormInstance& inst) {
  if (inst.k < 0) {
    throw std::invalid_argument("form: k = " + to_string(inst.k) + " must be non-negative");
  }
}

void sort_unique(std::vector<SolutionPair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

void add_symmetric(std::vector<SolutionPair>& out, const Int& x, const Int& y) {
  out.push_back(SolutionPair::of(x, y));
  if (x != y) out.push_back(SolutionPair::of(y, x));
}

// k = 0: x^2 + y^2 = 2^n.
std::vector<SolutionPair> solve_sum_of_squares(const FormInstance& inst) {
  std::vector<SolutionPair> out;
  if (inst.sign == Sign::minus) return out;
  const Int N = inst.rhs();
  const Int y_max = isqrt(N);
  for (Int y = 1; y <= y_max; ++y) {
    if (auto x = as_square(N - y * y); x && *x >= 1) out.push_back(SolutionPair::of(*x, y));
  }
  return out;
}

// k = 1: x^2 - xy + y^2 = 2^n, positive definite. As a quadratic in x the
// discriminant is 4N - 3y^2.
std::vector<SolutionPair> solve_eisenstein(const FormInstance& inst) {
  std::vector<SolutionPair> out;
  if (inst.sign == Sign::minus) return out;
  const Int N = inst.rhs();
  const Int y_max = isqrt(4 * N / 3);
  for (Int y = 1; y <= y_max; ++y) {
    auto r = as_square(4 * N - 3 * y * y);
    if (!r) continue;
    for (const Int& twice_x : {Int(y + *r), Int(y - *r)}) {
      if (twice_x >= 2 && !is_odd(twice_x)) out.push_back(SolutionPair::of(twice_x / 2, y));
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace

Sign parse_sign(const std::string& text) {
  if (text == "+" || text == "plus") return Sign::plus;
  if (text == "-" || text == "minus") return Sign::minus;
  throw std::invalid_argument("sign must be one of +, -, plus, minus (got '" + text + "')");
}

std::string to_string(Sign sign) { return sign == Sign::plus ? "+" : "-"; }

Int FormInstance::rhs() const {
  Int p = pow2(n);
  return sign == Sign::plus ? p : Int(-p);
}

Int FormInstance::value(const Int& x, const Int& y) const { return x * x - k * x * y + y * y; }

Parity parity_of(const Int& x, const Int& y) {
  const bool xo = is_odd(x);
  const bool yo = is_odd(y);
  if (xo && yo) return Parity::both_odd;
  if (!xo && !yo) return Parity::both_even;
  return Parity::mixed;
}

std::string to_string(Parity parity) {
  switch (parity) {
    case Parity::both_odd: return "both-odd";
    case Parity::both_even: return "both-even";
    case Parity::mixed: return "mixed";
  }
  return "mixed";
}

SolutionPair SolutionPair::of(Int x, Int y) {
  const Parity p = parity_of(x, y);
  return SolutionPair{std::move(x), std::move(y), p};
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::empty: return "empty";
    case SolveStatus::finite: return "finite";
    case SolveStatus::infinite: return "infinite";
  }
  return "empty";
}

GpellInstance reduce_to_gpell(const FormInstance& inst) {
  require_form(inst);
  if (is_odd(inst.k) || inst.k < 4) {
    throw std::invalid_argument("reduce_to_gpell: k = " + to_string(inst.k) +
                                " must be even and at least 4");
  }
  const Int half = inst.k / 2;
  return GpellInstance{half * half - 1, inst.rhs()};
}

std::vector<SolutionPair> recover_xy(const Int& u, const Int& v, const FormInstance& inst) {
  std::vector<SolutionPair> out;
  if (v < 1) return out;
  const Int centre = (inst.k / 2) * v;
  for (const Int& x : {Int(centre + u), Int(centre - u)}) {
    if (x >= 1 && inst.solved_by(x, v)) out.push_back(SolutionPair::of(x, v));
  }
  sort_unique(out);
  return out;
}

DescentSplit descent_split(const Int& x, const Int& y) {
  if (x < 1 || y < 1) throw std::invalid_argument("descent_split: x and y must be positive");
  const unsigned e = std::min(two_adic_valuation(x), two_adic_valuation(y));
  return DescentSplit{x >> e, y >> e, e};
}

std::pair<Int, Int> vieta_jump(const Int& x, const Int& y, const Int& k) {
  return {y, k * y - x};
}

std::pair<Int, Int> vieta_ascend(const Int& x, const Int& y, const Int& k) {
  return {k * x - y, x};
}

std::vector<SolutionPair> vieta_base_solutions(const FormInstance& inst) {
  require_form(inst);
  if (inst.k < 3) throw std::invalid_argument("vieta_base_solutions: k must be at least 3");
  const Int& k = inst.k;
  const Int magnitude = pow2(inst.n);
  const Int N = inst.rhs();
  std::vector<SolutionPair> bases;

  // For a fixed smaller coordinate y the larger one solves
  // x^2 - k y x + (y^2 - N) = 0, with discriminant (k^2 - 4) y^2 + 4N.
  const Int y_max = inst.sign == Sign::plus ? isqrt(magnitude)
                                            : isqrt(2 * magnitude / (k - 2));
  for (Int y = 1; y <= y_max; ++y) {
    auto r = as_square((k * k - 4) * y * y + 4 * N);
    if (!r) continue;
    const Int ky = k * y;
    // sign +: the larger root, x >= k y. sign -: the smaller root, 2x <= k y.
    const Int twice_x = inst.sign == Sign::plus ? Int(ky + *r) : Int(ky - *r);
    if (is_odd(twice_x)) continue;
    const Int x = twice_x / 2;
    if (x < y) continue;
    if (inst.sign == Sign::plus ? x < ky : 2 * x > ky) continue;
    if (inst.solved_by(x, y)) bases.push_back(SolutionPair::of(x, y));
  }
  std::sort(bases.begin(), bases.end());
  return bases;
}

std::vector<SolutionPair> vieta_path(const FormInstance& inst, const Int& bound) {
  const Int& k = inst.k;
  std::vector<SolutionPair> out;
  for (const SolutionPair& base : vieta_base_solutions(inst)) {
    // Consecutive terms of s[i+1] = k s[i] - s[i-1] through (y, x) are
    // solutions; the positive terms grow away from the base in both directions.
    auto walk = [&](Int lo, Int hi) {
      while (lo >= 1 && hi <= bound) {
        add_symmetric(out, hi, lo);
        Int next = k * hi - lo;
        lo = std::move(hi);
        hi = std::move(next);
      }
    };
    walk(base.y, base.x);
    const Int before = k * base.y - base.x;
    if (before >= 1) walk(base.y, before);
  }
  sort_unique(out);
  return out;
}

PellPathResult pell_path(const FormInstance& inst, const Int& bound) {
  const GpellInstance reduced = reduce_to_gpell(inst);
  PellPathResult result;
  for (unsigned e = 0; 2 * e <= inst.n; ++e) {
    const Int limit = bound >> e;
    const FormInstance level{inst.k, inst.n - 2 * e, inst.sign};
    DescentLevel descent{e, class_reps(reduced.d, level.rhs())};
    if (limit >= 1) {
      for (const GpellPoint& p : solve_gpell(descent.classes, limit)) {
        for (const SolutionPair& s : recover_xy(p.u, p.v, level)) {
          if (s.x > limit || s.parity == Parity::both_even) continue;
          result.solutions.push_back(SolutionPair::of(s.x << e, s.y << e));
        }
      }
    }
    result.levels.push_back(std::move(descent));
  }
  sort_unique(result.solutions);
  return result;
}

SolveOutcome solve_all(const FormInstance& inst, const Int& bound) {
  require_form(inst);
  SolveOutcome outcome;
  std::vector<SolutionPair> all;
  const Int& k = inst.k;

  if (k == 0 || k == 1) {
    all = k == 0 ? solve_sum_of_squares(inst) : solve_eisenstein(inst);
    outcome.status = all.empty() ? SolveStatus::empty : SolveStatus::finite;
  } else if (k == 2) {
    // (x - y)^2 = sign * 2^n
    if (inst.sign == Sign::plus && inst.n % 2 == 0) {
      const Int shift = pow2(inst.n / 2);
      for (Int y = 1; y + shift <= bound; ++y) add_symmetric(all, y + shift, y);
      outcome.status = SolveStatus::infinite;
      outcome.generators = Generators{{}, {}, shift};
    }
  } else {
    Generators gens;
    gens.vieta_bases = vieta_base_solutions(inst);
    all = vieta_path(inst, bound);
    bool infinite = !gens.vieta_bases.empty();
    if (!is_odd(k)) {
      PellPathResult pell = pell_path(inst, bound);
      if (pell.solutions != all) {
        throw std::logic_error("solve_all: Pell and Vieta paths disagree for k = " +
                               to_string(k) + ", n = " + std::to_string(inst.n));
      }
      const bool has_classes = std::any_of(pell.levels.begin(), pell.levels.end(),
                                           [](const DescentLevel& l) { return !l.classes.reps.empty(); });
      if (has_classes != infinite) {
        throw std::logic_error("solve_all: Pell and Vieta paths disagree on solvability");
      }
      gens.pell_levels = std::move(pell.levels);
    }
    if (infinite) {
      outcome.status = SolveStatus::infinite;
      outcome.generators = std::move(gens);
    }
  }

  for (SolutionPair& s : all) {
    if (s.x > bound || s.y > bound) continue;
    if (!inst.solved_by(s.x, s.y)) {
      throw std::logic_error("solve_all: produced a pair that does not solve the form");
    }
    outcome.solutions.push_back(std::move(s));
  }
  sort_unique(outcome.solutions);
  return outcome;
}

Int adaptive_bound(unsigned n, const Int& k) {
  return std::max(pow2(n + 2), Int(k * pow2(n / 2 + 2)));
}

std::vector<KRow> scan_k_range(unsigned n, Sign sign, const Int& k_max, unsigned bound_scale,
                               unsigned threads) {
  if (k_max < 1) return {};
  if (k_max > Int(std::numeric_limits<std::uint32_t>::max())) {
    throw std::invalid_argument("scan_k_range: k_max too large");
  }
  const auto count = static_cast<std::size_t>(k_max);
  std::vector<KRow> rows(count);

  auto solve_row = [&](std::size_t i) {
    const Int k = Int(i + 1);
    const FormInstance inst{k, n, sign};
    const SolveOutcome outcome = solve_all(inst, adaptive_bound(n, k) * bound_scale);
    KRow& row = rows[i];
    row.k = k;
    row.solvable = !outcome.solutions.empty();
    if (row.solvable != (outcome.status != SolveStatus::empty)) {
      throw std::logic_error("scan_k_range: search bound too small for k = " + to_string(k));
    }
    if (row.solvable) row.min_witness = outcome.solutions.front();
    for (const SolutionPair& s : outcome.solutions) {
      if (s.parity == Parity::both_odd) {
        row.odd_solution = true;
        row.min_odd_witness = s;
        break;
      }
    }
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) solve_row(i);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            solve_row(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

SolvableKSet solvable_k_set(unsigned n, Sign sign, const Int& k_max, unsigned threads) {
  SolvableKSet set;
  for (const KRow& row : scan_k_range(n, sign, k_max, 1, threads)) {
    if (row.solvable) set.solvable.push_back(row.k);
    if (row.odd_solution) set.odd_solution.push_back(row.k);
  }
  return set;
}

}  // namespace nagell
