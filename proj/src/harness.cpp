#include "nagell/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace nagell {

namespace {

std::vector<unsigned> normalized(std::vector<unsigned> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

TheoremCheck make_check(TheoremId id) {
  TheoremCheck check;
  check.id = id;
  return check;
}

void settle(TheoremCheck& check) {
  if (check.verdict == Verdict::report_only) return;
  check.verdict = check.counterexamples.empty() ? Verdict::pass : Verdict::fail;
}

std::string skip_note(unsigned n, const char* why) {
  return "n=" + std::to_string(n) + " skipped: " + why;
}

// Shared shape of the bound checks in 3.1 and 3.2: every k flagged by `pick`
// must satisfy k <= limit and the parity (or mod 4) condition.
struct BoundRule {
  Sign sign;
  bool odd_only;        // restrict to k admitting a both-odd solution
  bool two_exactly;     // require k = 2 mod 4 instead of k even
};

void apply_bound_rule(TheoremCheck& check, unsigned n, const Int& limit, const BoundRule& rule,
                      unsigned k_margin, SolvabilityGrid& grid) {
  const Int k_max = limit + k_margin;
  check.k_max = std::max(check.k_max, k_max);
  check.n_values.push_back(n);
  for (const KRow& row : grid.rows(n, rule.sign, k_max)) {
    const bool flagged = rule.odd_only ? row.odd_solution : row.solvable;
    if (!flagged) continue;
    const SolutionPair& pair = rule.odd_only ? *row.min_odd_witness : *row.min_witness;
    check.witnesses.push_back(Witness{n, row.k, rule.sign, pair});
    auto fail = [&](std::string reason) {
      check.counterexamples.push_back(
          Counterexample{n, row.k, std::nullopt, rule.sign, pair, std::move(reason)});
    };
    if (row.k > limit) fail("k exceeds " + to_string(limit));
    if (rule.two_exactly) {
      if (row.k % 4 != 2) fail("k is not 2 mod 4");
    } else if (row.k % 2 != 0) {
      fail("k is odd");
    }
  }
}

}  // namespace

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T31i: return "T31i";
    case TheoremId::T31ii: return "T31ii";
    case TheoremId::T32i: return "T32i";
    case TheoremId::T32ii: return "T32ii";
    case TheoremId::T33i: return "T33i";
    case TheoremId::T33ii: return "T33ii";
    case TheoremId::SHARP: return "SHARP";
  }
  return "SHARP";
}

TheoremId parse_theorem_id(const std::string& text) {
  for (TheoremId id : {TheoremId::T31i, TheoremId::T31ii, TheoremId::T32i, TheoremId::T32ii,
                       TheoremId::T33i, TheoremId::T33ii, TheoremId::SHARP}) {
    if (to_string(id) == text) return id;
  }
  throw std::invalid_argument("unknown theorem id '" + text + "'");
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::report_only: return "report-only";
  }
  return "fail";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "pass") return Verdict::pass;
  if (text == "fail") return Verdict::fail;
  if (text == "report-only") return Verdict::report_only;
  throw std::invalid_argument("unknown verdict '" + text + "'");
}

unsigned default_threads() {
  if (const char* env = std::getenv("NAGELL_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<KRow> SolvabilityGrid::rows(unsigned n, Sign sign, const Int& k_max) {
  if (k_max < 1) return {};
  auto& cached = cache_[{static_cast<int>(sign), n}];
  const auto wanted = static_cast<std::size_t>(k_max);
  if (cached.size() < wanted) cached = scan_k_range(n, sign, k_max, bound_scale_, threads_);
  return {cached.begin(), cached.begin() + static_cast<std::ptrdiff_t>(wanted)};
}

std::vector<std::pair<std::pair<Sign, unsigned>, std::vector<KRow>>> SolvabilityGrid::snapshot()
    const {
  std::vector<std::pair<std::pair<Sign, unsigned>, std::vector<KRow>>> out;
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (const auto& [key, rows] : cache_) {
      if (key.first == static_cast<int>(sign)) out.push_back({{sign, key.second}, rows});
    }
  }
  return out;
}

std::vector<TheoremCheck> check_thm31(const std::vector<unsigned>& n_values, unsigned k_margin,
                                      SolvabilityGrid& grid) {
  TheoremCheck bound = make_check(TheoremId::T31i);
  TheoremCheck odd = make_check(TheoremId::T31ii);
  bound.k_margin = odd.k_margin = k_margin;
  for (unsigned n : normalized(n_values)) {
    const Int limit = pow2(n) - 2;
    if (n % 2 == 1 && n > 2) {
      apply_bound_rule(bound, n, limit, {Sign::plus, false, false}, k_margin, grid);
    } else if (n % 2 == 0 && n >= 2) {
      apply_bound_rule(odd, n, limit, {Sign::plus, true, false}, k_margin, grid);
    } else {
      (n % 2 == 1 ? bound : odd).notes.push_back(skip_note(n, "outside the hypothesis"));
    }
  }
  settle(bound);
  settle(odd);
  return {bound, odd};
}

std::vector<TheoremCheck> check_thm32(const std::vector<unsigned>& n_values, unsigned k_margin,
                                      SolvabilityGrid& grid) {
  TheoremCheck bound = make_check(TheoremId::T32i);
  TheoremCheck odd = make_check(TheoremId::T32ii);
  bound.k_margin = odd.k_margin = k_margin;
  for (unsigned n : normalized(n_values)) {
    const Int limit = pow2(n) + 2;
    if (n % 2 == 1 && n > 2) {
      apply_bound_rule(bound, n, limit, {Sign::minus, false, false}, k_margin, grid);
      // The statement's first sentence can also be read with +2^n; that
      // reading is tabulated here without affecting the verdict.
      std::vector<std::string> above;
      for (const KRow& row : grid.rows(n, Sign::plus, limit + k_margin)) {
        if (row.solvable && row.k > limit) above.push_back(to_string(row.k));
      }
      std::string note = "n=" + std::to_string(n) + " +2^n reading: solvable k above " +
                         to_string(limit) + ":";
      if (above.empty()) note += " none";
      for (const auto& k : above) note += " " + k;
      bound.notes.push_back(note);
    } else if (n % 2 == 0 && n >= 2) {
      apply_bound_rule(odd, n, limit, {Sign::minus, true, true}, k_margin, grid);
    } else {
      (n % 2 == 1 ? bound : odd).notes.push_back(skip_note(n, "outside the hypothesis"));
    }
  }
  settle(bound);
  settle(odd);
  return {bound, odd};
}

std::vector<TheoremCheck> check_thm33(const std::vector<unsigned>& n_values, std::uint64_t p_max,
                                      unsigned k_margin, SolvabilityGrid& grid) {
  TheoremCheck plus = make_check(TheoremId::T33i);
  TheoremCheck minus = make_check(TheoremId::T33ii);
  minus.verdict = Verdict::report_only;
  plus.k_margin = minus.k_margin = k_margin;
  plus.p_max = minus.p_max = p_max;

  std::vector<std::uint64_t> nonresidue_primes;  // (2/p) = -1
  std::vector<std::uint64_t> residue_primes;     // (2/p) = +1
  for (std::uint64_t p : primes_up_to(p_max)) {
    if (p == 2) continue;
    (legendre(2, p) == -1 ? nonresidue_primes : residue_primes).push_back(p);
  }

  auto scan = [&](TheoremCheck& check, Sign sign, const Int& k_max,
                  const std::vector<std::uint64_t>& primes, bool require_three, unsigned n) {
    check.k_max = std::max(check.k_max, k_max);
    check.n_values.push_back(n);
    for (const KRow& row : grid.rows(n, sign, k_max)) {
      if (!row.solvable) continue;
      const SolutionPair& pair = *row.min_witness;
      check.witnesses.push_back(Witness{n, row.k, sign, pair});
      auto flag = [&](std::optional<std::uint64_t> p, std::string reason) {
        check.counterexamples.push_back(Counterexample{n, row.k, p, sign, pair, std::move(reason)});
      };
      if (row.k % 2 != 0) {
        flag(std::nullopt, "k is odd, k/2 undefined");
        continue;
      }
      const Int half = row.k / 2;
      for (std::uint64_t p : primes) {
        const Int r = half % p;
        if (r == 1 || r == p - 1) {
          flag(p, "k/2 = " + std::string(r == 1 ? "1" : "-1") + " mod " + std::to_string(p));
        }
      }
      if (require_three && row.k % 3 != 0) flag(std::nullopt, "3 does not divide k");
    }
  };

  for (unsigned n : normalized(n_values)) {
    if (n % 2 == 0 || n <= 2) {
      plus.notes.push_back(skip_note(n, "requires odd n > 2"));
      minus.notes.push_back(skip_note(n, "requires odd n > 2"));
      continue;
    }
    scan(plus, Sign::plus, pow2(n) - 2 + k_margin, nonresidue_primes, true, n);
    scan(minus, Sign::minus, pow2(n) + 2 + k_margin, residue_primes, false, n);
  }
  settle(plus);
  if (!minus.counterexamples.empty()) {
    minus.notes.push_back(std::to_string(minus.counterexamples.size()) +
                          " residue-condition violations recorded (report only)");
  }
  return {plus, minus};
}

TheoremCheck check_sharpness(const std::vector<unsigned>& n_values) {
  TheoremCheck check = make_check(TheoremId::SHARP);
  constexpr int kChainLength = 3;
  for (unsigned n : normalized(n_values)) {
    if (n < 2) {
      check.notes.push_back(skip_note(n, "the bounds apply from n = 2"));
      continue;
    }
    check.n_values.push_back(n);
    const std::pair<FormInstance, SolutionPair> extremes[] = {
        {FormInstance{pow2(n) - 2, n, Sign::plus}, SolutionPair::of(pow2(n) - 1, 1)},
        {FormInstance{pow2(n) + 2, n, Sign::minus}, SolutionPair::of(1, 1)},
    };
    for (const auto& [inst, start] : extremes) {
      check.k_max = std::max(check.k_max, inst.k);
      std::vector<SolutionPair> chain{start};
      while (static_cast<int>(chain.size()) < kChainLength) {
        auto [x, y] = vieta_ascend(chain.back().x, chain.back().y, inst.k);
        chain.push_back(SolutionPair::of(std::move(x), std::move(y)));
      }
      std::vector<SolutionPair> distinct = chain;
      std::sort(distinct.begin(), distinct.end());
      const bool all_distinct =
          std::adjacent_find(distinct.begin(), distinct.end()) == distinct.end();
      for (const SolutionPair& s : chain) {
        if (s.x < 1 || s.y < 1 || !inst.solved_by(s.x, s.y)) {
          check.counterexamples.push_back(
              Counterexample{n, inst.k, std::nullopt, inst.sign, s, "pair does not solve the form"});
        } else {
          check.witnesses.push_back(Witness{n, inst.k, inst.sign, s});
        }
      }
      if (!all_distinct) {
        check.counterexamples.push_back(Counterexample{n, inst.k, std::nullopt, inst.sign, start,
                                                       "ascending jumps repeat a solution"});
      }
    }
  }
  settle(check);
  return check;
}

std::vector<Int> TableRow::solvable_ks() const {
  std::vector<Int> out;
  for (const KRow& r : rows) {
    if (r.solvable) out.push_back(r.k);
  }
  return out;
}

std::vector<Int> TableRow::odd_solution_ks() const {
  std::vector<Int> out;
  for (const KRow& r : rows) {
    if (r.odd_solution) out.push_back(r.k);
  }
  return out;
}

SolvabilityTable build_tables(unsigned n_max, Sign sign, unsigned k_margin, SolvabilityGrid& grid) {
  SolvabilityTable table{sign, k_margin, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    TableRow row{n, pow2(n) + 2 + k_margin, {}, {}};
    row.rows = grid.rows(n, sign, row.k_max);
    if (n == 0) {
      row.note = std::string("N = ") + (sign == Sign::plus ? "1" : "-1") +
                 ": outside the theorems, tabulated only";
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace nagell
