#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nagell/harness.hpp"

namespace nagell {

using Json = nlohmann::ordered_json;

// Report schema: {"theorem", "config", "verdict", "witnesses", "counterexamples",
// "notes"}. Integers that can grow without bound (x, y) are decimal strings.
Json to_json(const TheoremCheck& check);
TheoremCheck check_from_json(const Json& j);

std::string render_reports_json(const std::vector<TheoremCheck>& checks);
std::vector<TheoremCheck> load_reports(const std::string& text);

// Re-evaluates every stored witness and counterexample against its form.
// Returns an empty string when all entries verify, otherwise a description of
// the first failure.
std::string reverify(const TheoremCheck& check);

std::string render_reports_text(const std::vector<TheoremCheck>& checks);

inline constexpr const char* kCsvHeader = "n,k,sign,solvable,odd_solution,min_witness_x,min_witness_y";

// One CSV line per row (no header, trailing newline included).
std::string csv_rows(unsigned n, Sign sign, const std::vector<KRow>& rows);

Json to_json(const SolvabilityTable& table);
std::string render_table_csv(const SolvabilityTable& table);
std::string render_table_text(const SolvabilityTable& table);

}  // namespace nagell
