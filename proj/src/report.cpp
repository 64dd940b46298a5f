#include "nagell/report.hpp"

#include <sstream>
#include <stdexcept>

namespace nagell {

namespace {

Json int_json(const Int& value) {
  if (value >= 0 && value <= Int(std::numeric_limits<std::uint64_t>::max())) {
    return Json(static_cast<std::uint64_t>(value));
  }
  return Json(to_string(value));
}

Int int_from_json(const Json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  throw std::invalid_argument("report: expected an integer, got " + j.dump());
}

Json pair_fields(Json j, Sign sign, const SolutionPair& pair) {
  j["sign"] = to_string(sign);
  j["x"] = to_string(pair.x);
  j["y"] = to_string(pair.y);
  return j;
}

std::string join(const std::vector<Int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_string(values[i]);
  }
  return out + "}";
}

}  // namespace

Json to_json(const TheoremCheck& check) {
  Json config = Json::object();
  config["n_values"] = check.n_values;
  config["k_margin"] = check.k_margin;
  config["k_max"] = int_json(check.k_max);
  if (check.p_max) config["p_max"] = *check.p_max;

  Json witnesses = Json::array();
  for (const Witness& w : check.witnesses) {
    Json j;
    j["n"] = w.n;
    j["k"] = int_json(w.k);
    witnesses.push_back(pair_fields(std::move(j), w.sign, w.pair));
  }
  Json counterexamples = Json::array();
  for (const Counterexample& c : check.counterexamples) {
    Json j;
    j["n"] = c.n;
    j["k"] = int_json(c.k);
    if (c.p) j["p"] = *c.p;
    j = pair_fields(std::move(j), c.sign, c.pair);
    j["reason"] = c.reason;
    counterexamples.push_back(std::move(j));
  }

  Json out;
  out["theorem"] = to_string(check.id);
  out["config"] = std::move(config);
  out["verdict"] = to_string(check.verdict);
  out["witnesses"] = std::move(witnesses);
  out["counterexamples"] = std::move(counterexamples);
  out["notes"] = check.notes;
  return out;
}

TheoremCheck check_from_json(const Json& j) {
  TheoremCheck check;
  check.id = parse_theorem_id(j.at("theorem").get<std::string>());
  const Json& config = j.at("config");
  check.n_values = config.at("n_values").get<std::vector<unsigned>>();
  check.k_margin = config.at("k_margin").get<unsigned>();
  check.k_max = int_from_json(config.at("k_max"));
  if (config.contains("p_max")) check.p_max = config.at("p_max").get<std::uint64_t>();
  check.verdict = parse_verdict(j.at("verdict").get<std::string>());
  for (const Json& w : j.at("witnesses")) {
    check.witnesses.push_back(Witness{
        w.at("n").get<unsigned>(), int_from_json(w.at("k")),
        parse_sign(w.at("sign").get<std::string>()),
        SolutionPair::of(int_from_json(w.at("x")), int_from_json(w.at("y")))});
  }
  for (const Json& c : j.at("counterexamples")) {
    Counterexample ce{c.at("n").get<unsigned>(), int_from_json(c.at("k")), std::nullopt,
                      parse_sign(c.at("sign").get<std::string>()),
                      SolutionPair::of(int_from_json(c.at("x")), int_from_json(c.at("y"))),
                      c.value("reason", std::string{})};
    if (c.contains("p")) ce.p = c.at("p").get<std::uint64_t>();
    check.counterexamples.push_back(std::move(ce));
  }
  if (j.contains("notes")) check.notes = j.at("notes").get<std::vector<std::string>>();
  return check;
}

std::string render_reports_json(const std::vector<TheoremCheck>& checks) {
  Json out = Json::array();
  for (const TheoremCheck& c : checks) out.push_back(to_json(c));
  return out.dump(2) + "\n";
}

std::vector<TheoremCheck> load_reports(const std::string& text) {
  const Json parsed = Json::parse(text);
  std::vector<TheoremCheck> out;
  if (parsed.is_array()) {
    for (const Json& j : parsed) out.push_back(check_from_json(j));
  } else {
    out.push_back(check_from_json(parsed));
  }
  return out;
}

std::string reverify(const TheoremCheck& check) {
  auto verify = [](unsigned n, const Int& k, Sign sign, const SolutionPair& s) {
    return s.x >= 1 && s.y >= 1 && FormInstance{k, n, sign}.solved_by(s.x, s.y);
  };
  for (const Witness& w : check.witnesses) {
    if (!verify(w.n, w.k, w.sign, w.pair)) {
      return to_string(check.id) + ": witness (" + to_string(w.pair.x) + ", " +
             to_string(w.pair.y) + ") fails for n=" + std::to_string(w.n) +
             " k=" + to_string(w.k);
    }
  }
  for (const Counterexample& c : check.counterexamples) {
    // A counterexample is a genuine solution that violates the claim; the
    // pair itself must still solve its form.
    if (!verify(c.n, c.k, c.sign, c.pair)) {
      return to_string(check.id) + ": counterexample (" + to_string(c.pair.x) + ", " +
             to_string(c.pair.y) + ") fails for n=" + std::to_string(c.n) +
             " k=" + to_string(c.k);
    }
  }
  return {};
}

std::string render_reports_text(const std::vector<TheoremCheck>& checks) {
  std::ostringstream out;
  for (const TheoremCheck& c : checks) {
    out << to_string(c.id) << ": " << to_string(c.verdict) << " (n checked: "
        << c.n_values.size() << ", witnesses: " << c.witnesses.size()
        << ", counterexamples: " << c.counterexamples.size() << ")\n";
    for (const Counterexample& ce : c.counterexamples) {
      out << "  n=" << ce.n << " k=" << ce.k;
      if (ce.p) out << " p=" << *ce.p;
      out << " (" << ce.pair.x << ", " << ce.pair.y << "): " << ce.reason << "\n";
    }
    for (const std::string& note : c.notes) out << "  note: " << note << "\n";
  }
  return out.str();
}

std::string csv_rows(unsigned n, Sign sign, const std::vector<KRow>& rows) {
  std::ostringstream out;
  for (const KRow& r : rows) {
    out << n << ',' << r.k << ',' << to_string(sign) << ',' << (r.solvable ? "true" : "false")
        << ',' << (r.odd_solution ? "true" : "false") << ',';
    if (r.min_witness) out << r.min_witness->x << ',' << r.min_witness->y;
    else out << ',';
    out << '\n';
  }
  return out.str();
}

Json to_json(const SolvabilityTable& table) {
  Json rows = Json::array();
  for (const TableRow& row : table.rows) {
    Json solvable = Json::array();
    for (const Int& k : row.solvable_ks()) solvable.push_back(int_json(k));
    Json odd = Json::array();
    for (const Int& k : row.odd_solution_ks()) odd.push_back(int_json(k));
    Json j;
    j["n"] = row.n;
    j["k_max"] = int_json(row.k_max);
    j["solvable"] = std::move(solvable);
    j["odd_solution"] = std::move(odd);
    if (!row.note.empty()) j["note"] = row.note;
    rows.push_back(std::move(j));
  }
  Json out;
  out["sign"] = to_string(table.sign);
  out["k_margin"] = table.k_margin;
  out["rows"] = std::move(rows);
  return out;
}

std::string render_table_csv(const SolvabilityTable& table) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const TableRow& row : table.rows) out += csv_rows(row.n, table.sign, row.rows);
  return out;
}

std::string render_table_text(const SolvabilityTable& table) {
  std::ostringstream out;
  out << "x^2 - kxy + y^2 = " << (table.sign == Sign::plus ? "" : "-") << "2^n\n";
  for (const TableRow& row : table.rows) {
    out << "n=" << row.n << " (k <= " << row.k_max << "): solvable " << join(row.solvable_ks())
        << ", odd solution " << join(row.odd_solution_ks());
    if (!row.note.empty()) out << "  [" << row.note << "]";
    out << "\n";
  }
  return out.str();
}

}  // namespace nagell
