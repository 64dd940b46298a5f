#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nagell/harness.hpp"
#include "nagell/report.hpp"

using nagell::Int;
using nagell::Sign;
using nagell::TheoremCheck;
using nagell::TheoremId;
using nagell::Verdict;

namespace {

bool has_witness(const TheoremCheck& c, unsigned n, int k, int x, int y) {
  return std::any_of(c.witnesses.begin(), c.witnesses.end(), [&](const nagell::Witness& w) {
    return w.n == n && w.k == k && w.pair.x == x && w.pair.y == y;
  });
}

std::vector<Int> witness_ks(const TheoremCheck& c, unsigned n) {
  std::vector<Int> out;
  for (const auto& w : c.witnesses) {
    if (w.n == n) out.push_back(w.k);
  }
  return out;
}

}  // namespace

TEST_CASE("check_thm31") {
  nagell::SolvabilityGrid grid(1);
  auto checks = nagell::check_thm31({3, 5, 7}, 8, grid);
  REQUIRE(checks.size() == 2);
  CHECK(checks[0].id == TheoremId::T31i);
  CHECK(checks[0].verdict == Verdict::pass);
  CHECK(has_witness(checks[0], 3, 6, 7, 1));
  CHECK(witness_ks(checks[0], 5) == std::vector<Int>{6, 30});

  checks = nagell::check_thm31({4}, 8, grid);
  CHECK(checks[1].verdict == Verdict::pass);
  for (const auto& w : checks[1].witnesses) {
    CHECK(w.k % 2 == 0);
    CHECK(w.k <= 14);
    CHECK(w.pair.parity == nagell::Parity::both_odd);
  }

  checks = nagell::check_thm31({2}, 8, grid);
  CHECK(checks[1].verdict == Verdict::pass);
  CHECK(witness_ks(checks[1], 2) == std::vector<Int>{2});

  checks = nagell::check_thm31({1}, 8, grid);
  CHECK(checks[0].n_values.empty());
  CHECK(checks[0].notes.size() == 1);
}

TEST_CASE("check_thm32") {
  nagell::SolvabilityGrid grid(1);
  auto checks = nagell::check_thm32({3, 4, 5}, 8, grid);
  REQUIRE(checks.size() == 2);
  CHECK(checks[0].verdict == Verdict::pass);
  CHECK(witness_ks(checks[0], 3) == std::vector<Int>{4, 6, 10});
  CHECK(checks[0].k_max == 42);
  for (const auto& w : checks[0].witnesses) CHECK(w.k <= nagell::pow2(w.n) + 2);
  CHECK(checks[1].verdict == Verdict::pass);
  for (const auto& w : checks[1].witnesses) CHECK(w.k % 4 == 2);
  // The +2^n reading is recorded for each odd n.
  CHECK(std::count_if(checks[0].notes.begin(), checks[0].notes.end(),
                      [](const std::string& s) { return s.find("+2^n reading") != std::string::npos; }) == 2);
}

TEST_CASE("check_thm33") {
  nagell::SolvabilityGrid grid(1);
  auto checks = nagell::check_thm33({3}, 50, 8, grid);
  REQUIRE(checks.size() == 2);
  CHECK(checks[0].verdict == Verdict::pass);
  CHECK(witness_ks(checks[0], 3) == std::vector<Int>{6});
  CHECK(checks[1].verdict == Verdict::report_only);
  CHECK(witness_ks(checks[1], 3) == std::vector<Int>{4, 6, 10});
  CHECK(checks[1].counterexamples.empty());

  checks = nagell::check_thm33({5}, 50, 8, grid);
  CHECK(checks[0].verdict == Verdict::pass);
  CHECK(witness_ks(checks[0], 5) == std::vector<Int>{6, 30});

  // n = 9, k = 66: 66/2 = 33 = -1 mod 17 and (2/17) = +1, with (9, 1) solving
  // x^2 - 66xy + y^2 = -512. Recorded, never failed.
  checks = nagell::check_thm33({9}, 50, 8, grid);
  CHECK(checks[1].verdict == Verdict::report_only);
  CHECK(std::any_of(checks[1].counterexamples.begin(), checks[1].counterexamples.end(),
                    [](const nagell::Counterexample& c) {
                      return c.n == 9 && c.k == 66 && c.p == 17u && c.pair.x == 9 && c.pair.y == 1;
                    }));
}

TEST_CASE("check_sharpness") {
  auto c = nagell::check_sharpness({3, 5, 10});
  CHECK(c.verdict == Verdict::pass);
  CHECK(has_witness(c, 3, 6, 7, 1));
  CHECK(has_witness(c, 3, 10, 1, 1));
  CHECK(has_witness(c, 5, 30, 31, 1));
  CHECK(has_witness(c, 10, 1022, 1023, 1));
  CHECK(c.witnesses.size() == 3 * 2 * 3);
  c = nagell::check_sharpness({0, 1});
  CHECK(c.witnesses.empty());
  CHECK(c.notes.size() == 2);
}

TEST_CASE("build_tables") {
  nagell::SolvabilityGrid grid(1);
  auto plus = nagell::build_tables(3, Sign::plus, 8, grid);
  REQUIRE(plus.rows.size() == 4);
  CHECK(plus.rows[3].solvable_ks() == std::vector<Int>{6});
  auto minus = nagell::build_tables(3, Sign::minus, 8, grid);
  CHECK(minus.rows[3].solvable_ks() == std::vector<Int>{4, 6, 10});
  auto zero = nagell::build_tables(0, Sign::minus, 8, grid);
  REQUIRE(zero.rows.size() == 1);
  CHECK_FALSE(zero.rows[0].note.empty());
  CHECK(zero.rows[0].rows.size() == 11);
}

TEST_CASE("conclusions are stable when the search bound doubles") {
  nagell::SolvabilityGrid base(1, 1);
  nagell::SolvabilityGrid doubled(1, 2);
  for (unsigned n : {2u, 3u, 5u, 6u, 8u}) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      const Int k_max = nagell::pow2(n) + 10;
      const auto a = base.rows(n, sign, k_max);
      const auto b = doubled.rows(n, sign, k_max);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].solvable == b[i].solvable);
        CHECK(a[i].odd_solution == b[i].odd_solution);
        CHECK(a[i].min_witness == b[i].min_witness);
        CHECK(a[i].min_odd_witness == b[i].min_odd_witness);
      }
    }
  }
  auto x = nagell::check_thm31({3, 4, 5, 6}, 8, base);
  auto y = nagell::check_thm31({3, 4, 5, 6}, 8, doubled);
  CHECK(nagell::render_reports_json(x) == nagell::render_reports_json(y));
}

TEST_CASE("reports are self-checking and deterministic") {
  nagell::SolvabilityGrid grid(1);
  std::vector<TheoremCheck> checks = nagell::check_thm31({3, 4, 5}, 8, grid);
  for (auto& c : nagell::check_thm33({3, 5, 9}, 60, 8, grid)) checks.push_back(c);
  checks.push_back(nagell::check_sharpness({2, 3, 20}));

  const std::string text = nagell::render_reports_json(checks);
  const auto loaded = nagell::load_reports(text);
  REQUIRE(loaded.size() == checks.size());
  for (const auto& c : loaded) CHECK(nagell::reverify(c).empty());
  CHECK(nagell::render_reports_json(loaded) == text);

  nagell::SolvabilityGrid fresh(3);
  std::vector<TheoremCheck> again = nagell::check_thm31({5, 4, 3}, 8, fresh);
  for (auto& c : nagell::check_thm33({9, 3, 5}, 60, 8, fresh)) again.push_back(c);
  again.push_back(nagell::check_sharpness({20, 3, 2}));
  CHECK(nagell::render_reports_json(again) == text);

  // A tampered witness is caught on load.
  auto j = nagell::Json::parse(text);
  j[0]["witnesses"][0]["x"] = "8";
  const auto tampered = nagell::load_reports(j.dump());
  CHECK_FALSE(nagell::reverify(tampered[0]).empty());
}

TEST_CASE("report schema") {
  nagell::SolvabilityGrid grid(1);
  const auto checks = nagell::check_thm33({3}, 20, 8, grid);
  const auto j = nagell::to_json(checks[0]);
  CHECK(j["theorem"] == "T33i");
  CHECK(j["verdict"] == "pass");
  CHECK(j["config"]["p_max"] == 20);
  CHECK(j["witnesses"][0]["n"] == 3);
  CHECK(j["witnesses"][0]["k"] == 6);
  CHECK(j["witnesses"][0]["x"] == "7");
  CHECK(j["witnesses"][0]["y"] == "1");
  CHECK(j["counterexamples"].is_array());

  const auto table = nagell::build_tables(1, Sign::minus, 2, grid);
  CHECK(nagell::render_table_csv(table) ==
        "n,k,sign,solvable,odd_solution,min_witness_x,min_witness_y\n"
        "0,1,-,false,false,,\n0,2,-,false,false,,\n0,3,-,true,true,1,1\n0,4,-,false,false,,\n"
        "0,5,-,false,false,,\n"
        "1,1,-,false,false,,\n1,2,-,false,false,,\n1,3,-,false,false,,\n1,4,-,true,true,1,1\n"
        "1,5,-,false,false,,\n1,6,-,false,false,,\n");
}
