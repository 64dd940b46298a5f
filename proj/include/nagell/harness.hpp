#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nagell/formsolver.hpp"

namespace nagell {

enum class TheoremId { T31i, T31ii, T32i, T32ii, T33i, T33ii, SHARP };
enum class Verdict { pass, fail, report_only };

std::string to_string(TheoremId id);
TheoremId parse_theorem_id(const std::string& text);
std::string to_string(Verdict verdict);
Verdict parse_verdict(const std::string& text);

struct Witness {
  unsigned n = 0;
  Int k;
  Sign sign = Sign::plus;
  SolutionPair pair;
};

struct Counterexample {
  unsigned n = 0;
  Int k;
  std::optional<std::uint64_t> p;
  Sign sign = Sign::plus;
  SolutionPair pair;
  std::string reason;
};

struct TheoremCheck {
  TheoremId id = TheoremId::T31i;
  std::vector<unsigned> n_values;  // the n actually checked
  unsigned k_margin = 0;
  Int k_max;                       // largest k scanned
  std::optional<std::uint64_t> p_max;
  Verdict verdict = Verdict::pass;
  std::vector<Witness> witnesses;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
};

// Worker count for grid scans: NAGELL_THREADS if set to a positive integer,
// otherwise the hardware concurrency.
unsigned default_threads();

// Memoized solvability rows keyed by (sign, n). A request for a smaller k_max
// than already computed is served from the cached prefix.
class SolvabilityGrid {
 public:
  explicit SolvabilityGrid(unsigned threads = default_threads(), unsigned bound_scale = 1)
      : threads_(threads), bound_scale_(bound_scale) {}

  std::vector<KRow> rows(unsigned n, Sign sign, const Int& k_max);

  // Every cached row, ordered by (sign +, sign -), n, k.
  std::vector<std::pair<std::pair<Sign, unsigned>, std::vector<KRow>>> snapshot() const;

 private:
  unsigned threads_;
  unsigned bound_scale_;
  std::map<std::pair<int, unsigned>, std::vector<KRow>> cache_;
};

inline constexpr unsigned kDefaultKMargin = 8;

// Upper bound on solvable k for x^2 - kxy + y^2 = 2^n. Returns {T31i, T31ii}.
std::vector<TheoremCheck> check_thm31(const std::vector<unsigned>& n_values,
                                      unsigned k_margin, SolvabilityGrid& grid);
// The -2^n analogue. Returns {T32i, T32ii}.
std::vector<TheoremCheck> check_thm32(const std::vector<unsigned>& n_values,
                                      unsigned k_margin, SolvabilityGrid& grid);
// Residue conditions on k/2. Returns {T33i, T33ii}; T33ii is report-only.
std::vector<TheoremCheck> check_thm33(const std::vector<unsigned>& n_values,
                                      std::uint64_t p_max, unsigned k_margin,
                                      SolvabilityGrid& grid);
// Attainment of k = 2^n - 2 (sign +) and k = 2^n + 2 (sign -).
TheoremCheck check_sharpness(const std::vector<unsigned>& n_values);

struct TableRow {
  unsigned n = 0;
  Int k_max;
  std::vector<KRow> rows;
  std::string note;

  std::vector<Int> solvable_ks() const;
  std::vector<Int> odd_solution_ks() const;
};

struct SolvabilityTable {
  Sign sign = Sign::plus;
  unsigned k_margin = kDefaultKMargin;
  std::vector<TableRow> rows;
};

// Rows for n = 0..n_max with k in [1, 2^n + 2 + k_margin].
SolvabilityTable build_tables(unsigned n_max, Sign sign, unsigned k_margin,
                              SolvabilityGrid& grid);

}  // namespace nagell
