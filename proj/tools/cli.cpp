#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hkdet/binomial.hpp"
#include "hkdet/closed_forms.hpp"
#include "hkdet/counting.hpp"
#include "hkdet/groebner.hpp"
#include "hkdet/oracles.hpp"
#include "hkdet/poly_fit.hpp"

namespace hkdet::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(std::size_t v) { return std::to_string(v); }

json rational_json(const Rational& r) {
  return json::array({r.get_num().get_str(), r.get_den().get_str()});
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) out << ",";
    out << csv_field(fields[k]);
  }
  out << "\r\n";
}

void emit_json(std::ostream& out, const std::string& command, json inputs, json result) {
  json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["result"] = std::move(result);
  out << doc.dump(2) << "\n";
}

std::uint64_t enumeration_budget() {
  const char* raw = std::getenv("HK_ENUM_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationBudget;
  std::string_view text(raw);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0)
    throw UsageError("HK_ENUM_BUDGET must be a positive integer, got '" + std::string(text) + "'");
  return v;
}

std::vector<Bound> parse_bounds(const std::optional<std::string>& text, std::int64_t expected,
                                const char* what) {
  if (!text) return std::vector<Bound>(static_cast<std::size_t>(expected));
  std::vector<Bound> out;
  std::stringstream in(*text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = Bound::parse(item);
    if (!b || b->is_negative())
      throw UsageError(std::string("malformed ") + what + " bound '" + item +
                       "' (expected a nonnegative integer or 'inf')");
    out.push_back(*b);
  }
  if (!text->empty() && text->back() == ',')
    throw UsageError(std::string("trailing comma in ") + what + " bounds");
  if (static_cast<std::int64_t>(out.size()) != expected)
    throw UsageError(std::string("expected ") + str(expected) + " " + what + " bounds, got " +
                     str(out.size()));
  return out;
}

json bounds_json(const std::vector<Bound>& bounds) {
  json arr = json::array();
  for (const auto& b : bounds) arr.push_back(b.to_string());
  return arr;
}

std::string join_bounds(const std::vector<Bound>& bounds) {
  std::string out;
  for (std::size_t k = 0; k < bounds.size(); ++k) out += (k ? "," : "") + bounds[k].to_string();
  return out;
}

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw UsageError(std::string(what) + " must be at least 1, got " + str(v));
}

// ------------------------------------------------------------ commands

int cmd_count(std::int64_t m, std::int64_t n, std::int64_t q, const std::optional<std::string>& rows_text,
              const std::optional<std::string>& cols_text, const std::string& format, std::ostream& out) {
  if (m < 0 || n < 0) throw UsageError("matrix dimensions must be nonnegative");
  require_positive(q, "q");
  CountQuery query{static_cast<int>(m), static_cast<int>(n), q, parse_bounds(rows_text, m, "row"),
                   parse_bounds(cols_text, n, "column")};
  const Natural value = count(query);
  if (format == "json") {
    emit_json(out, "count",
              {{"m", str(m)}, {"n", str(n)}, {"q", str(q)}, {"rows", bounds_json(query.rows)},
               {"cols", bounds_json(query.cols)}},
              {{"count", value.get_str()}});
  } else if (format == "csv") {
    csv_row(out, {"m", "n", "q", "rows", "cols", "count"});
    csv_row(out, {str(m), str(n), str(q), join_bounds(query.rows), join_bounds(query.cols), value.get_str()});
  } else {
    out << value.get_str() << "\n";
  }
  return kOk;
}

int cmd_poly(std::int64_t m, std::int64_t n, const std::string& format, std::ostream& out) {
  require_positive(m, "m");
  require_positive(n, "n");
  const RationalPolynomial poly = hk_polynomial(static_cast<int>(m), static_cast<int>(n));
  const Rational mult = poly.coefficient(static_cast<std::size_t>(m + n - 1));
  const auto degree = static_cast<std::size_t>(poly.degree());
  if (format == "json") {
    json coeffs = json::array();
    for (std::size_t k = 0; k <= degree; ++k) coeffs.push_back(rational_json(poly.coefficient(k)));
    emit_json(out, "poly", {{"m", str(m)}, {"n", str(n)}},
              {{"coefficients", coeffs},
               {"degree", str(degree)},
               {"polynomial", poly.to_string()},
               {"multiplicity", rational_json(mult)}});
  } else if (format == "csv") {
    csv_row(out, {"degree", "coefficient"});
    for (std::size_t k = 0; k <= degree; ++k) csv_row(out, {str(k), poly.coefficient(k).get_str()});
  } else {
    out << "coefficients: [";
    for (std::size_t k = 0; k <= degree; ++k) out << (k ? ", " : "") << poly.coefficient(k).get_str();
    out << "]\n";
    out << "HK(q) = " << poly.to_string() << "\n";
    out << "multiplicity: " << mult.get_str() << "\n";
  }
  return kOk;
}

int cmd_mult(std::int64_t m, std::int64_t n, const std::string& format, std::ostream& out) {
  require_positive(m, "m");
  require_positive(n, "n");
  const Rational mult = multiplicity(static_cast<int>(m), static_cast<int>(n));
  const Rational stirling = ey_multiplicity(static_cast<int>(m), static_cast<int>(n));
  const bool agrees = mult == stirling;
  if (format == "json") {
    emit_json(out, "mult", {{"m", str(m)}, {"n", str(n)}},
              {{"multiplicity", rational_json(mult)},
               {"stirling_formula", rational_json(stirling)},
               {"agrees", agrees}});
  } else if (format == "csv") {
    csv_row(out, {"m", "n", "multiplicity", "stirling_formula", "agrees"});
    csv_row(out, {str(m), str(n), mult.get_str(), stirling.get_str(), agrees ? "true" : "false"});
  } else {
    out << "multiplicity: " << mult.get_str() << "\n";
    out << "stirling formula: " << stirling.get_str() << (agrees ? " (agrees)" : " (differs)") << "\n";
  }
  return kOk;
}

int cmd_table(std::int64_t m, std::int64_t n, std::int64_t q_max, const std::string& format,
              std::ostream& out) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(q_max, "q_max");
  std::vector<std::pair<std::int64_t, Natural>> rows;
  for (std::int64_t q = 1; q <= q_max; ++q)
    rows.emplace_back(q, hilbert_kunz(static_cast<int>(m), static_cast<int>(n), q));
  if (format == "json") {
    json arr = json::array();
    for (const auto& [q, v] : rows) arr.push_back({{"q", str(q)}, {"value", v.get_str()}});
    emit_json(out, "table", {{"m", str(m)}, {"n", str(n)}, {"q_max", str(q_max)}}, {{"rows", arr}});
  } else if (format == "csv") {
    csv_row(out, {"q", "value"});
    for (const auto& [q, v] : rows) csv_row(out, {str(q), v.get_str()});
  } else {
    for (const auto& [q, v] : rows) out << q << "\t" << v.get_str() << "\n";
  }
  return kOk;
}

int cmd_oracle_check(std::int64_t max_mn, std::int64_t max_q, std::uint64_t seed, const std::string& format,
                     std::ostream& out) {
  require_positive(max_mn, "max_mn");
  require_positive(max_q, "max_q");
  const std::vector<BatteryReport> reports = {
      run_brute_battery(static_cast<int>(max_mn), max_q, seed, enumeration_budget()),
      run_segre_battery(static_cast<int>(max_mn), max_q)};
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports)
      arr.push_back({{"name", r.name},
                     {"passed", r.passed},
                     {"checks", str(r.checks)},
                     {"first_mismatch", r.first_mismatch ? json(*r.first_mismatch) : json(nullptr)}});
    emit_json(out, "oracle-check",
              {{"max_mn", str(max_mn)}, {"max_q", str(max_q)}, {"seed", std::to_string(seed)}},
              {{"batteries", arr}, {"passed", all}});
  } else if (format == "csv") {
    csv_row(out, {"battery", "passed", "checks", "first_mismatch"});
    for (const auto& r : reports)
      csv_row(out, {r.name, r.passed ? "true" : "false", str(r.checks), r.first_mismatch.value_or("")});
  } else {
    for (const auto& r : reports) {
      out << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checks << " checks)";
      if (r.first_mismatch) out << " first mismatch: " << *r.first_mismatch;
      out << "\n";
    }
  }
  return all ? kOk : kVerificationFailed;
}

int cmd_gb_verify(std::int64_t m, std::int64_t n, std::int64_t q, const std::string& format,
                  std::ostream& out) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(q, "q");
  const int mi = static_cast<int>(m);
  const int ni = static_cast<int>(n);
  const std::uint64_t budget = enumeration_budget();
  // The enumeration budget check is cheap, so it runs before the S-pairs.
  const Natural standard = standard_monomial_count(mi, ni, q, budget);
  const GroebnerReport report = verify_groebner(mi, ni, q, std::min<std::uint64_t>(budget, kDefaultStairBudget));
  const Natural hk = hilbert_kunz(mi, ni, q);
  const bool match = standard == hk;
  if (format == "json") {
    json failure = nullptr;
    if (report.first_failure)
      failure = json::array({str(report.first_failure->first), str(report.first_failure->second)});
    emit_json(out, "gb-verify", {{"m", str(m)}, {"n", str(n)}, {"q", str(q)}},
              {{"passed", report.passed()},
               {"s_pairs_ok", report.s_pairs_ok},
               {"minimal", report.minimal},
               {"reduced", report.reduced},
               {"q_stairs", str(report.q_stairs)},
               {"redundant_stairs", str(report.redundant_stairs)},
               {"basis_stairs", str(report.basis_stairs)},
               {"minors", str(report.minor_count)},
               {"pairs_checked", str(report.pairs_checked)},
               {"pairs_coprime", str(report.pairs_coprime)},
               {"first_failure", failure},
               {"detail", report.detail},
               {"standard_monomials", standard.get_str()},
               {"hilbert_kunz", hk.get_str()},
               {"match", match}});
  } else if (format == "csv") {
    csv_row(out, {"m", "n", "q", "passed", "s_pairs_ok", "minimal", "reduced", "basis_stairs", "minors",
                  "standard_monomials", "hilbert_kunz", "match"});
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    csv_row(out, {str(m), str(n), str(q), b(report.passed()), b(report.s_pairs_ok), b(report.minimal),
                  b(report.reduced), str(report.basis_stairs), str(report.minor_count), standard.get_str(),
                  hk.get_str(), b(match)});
  } else {
    out << "groebner basis: " << (report.passed() ? "pass" : "FAIL") << "\n";
    out << "  s-pairs reduced to zero: " << (report.s_pairs_ok ? "yes" : "no") << " (" << report.pairs_checked
        << " checked, " << report.pairs_coprime << " coprime skipped)\n";
    out << "  minimal: " << (report.minimal ? "yes" : "no") << "\n";
    out << "  reduced: " << (report.reduced ? "yes" : "no") << "\n";
    out << "  q-stair monomials: " << report.q_stairs << " (" << report.redundant_stairs
        << " multiples of a pure power dropped)\n";
    out << "  minors: " << report.minor_count << "\n";
    if (!report.detail.empty()) out << "  detail: " << report.detail << "\n";
    out << "standard monomials: " << standard.get_str() << "\n";
    out << "hilbert-kunz: " << hk.get_str() << "\n";
    out << "match: " << (match ? "true" : "false") << "\n";
  }
  return report.passed() && match ? kOk : kVerificationFailed;
}

int cmd_lemmas(std::int64_t q_max, std::int64_t n_max, const std::string& format, std::ostream& out) {
  if (q_max < 0) throw UsageError("q_max must be nonnegative");
  require_positive(n_max, "n_max");
  const LemmaGridReport report = run_lemma_grid(q_max, n_max);
  if (format == "json") {
    emit_json(out, "lemmas", {{"q_max", str(q_max)}, {"n_max", str(n_max)}},
              {{"passed", report.all_passed},
               {"checks", str(report.checks)},
               {"failures", str(report.failures)},
               {"first_failure", report.all_passed ? json(nullptr) : json(report.first_failure)}});
  } else if (format == "csv") {
    csv_row(out, {"passed", "checks", "failures", "first_failure"});
    csv_row(out, {report.all_passed ? "true" : "false", str(report.checks), str(report.failures),
                  report.first_failure});
  } else {
    out << "binomial identities: " << (report.all_passed ? "pass" : "FAIL") << " (" << report.checks
        << " checks, " << report.failures << " failures)\n";
    if (!report.all_passed) out << "first failure: " << report.first_failure << "\n";
  }
  return report.all_passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-Kunz functions of 2x2 determinantal rings", "hkdet"};
  app.require_subcommand(1);

  std::string format = "plain";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  };

  std::int64_t m = 0, n = 0, q = 0, q_max = 0, max_mn = 0, max_q = 0;
  std::int64_t lemma_q = 30, lemma_n = 6;
  std::uint64_t seed = 7;
  std::optional<std::string> rows_text, cols_text;

  auto* count_cmd = app.add_subcommand("count", "Exact bounded staircase count N_q");
  count_cmd->add_option("m", m, "Rows")->required();
  count_cmd->add_option("n", n, "Columns")->required();
  count_cmd->add_option("q", q, "Frobenius parameter")->required();
  count_cmd->add_option("--rows", rows_text, "Comma-separated row bounds (integer or inf)");
  count_cmd->add_option("--cols", cols_text, "Comma-separated column bounds (integer or inf)");
  add_format(count_cmd);

  auto* poly_cmd = app.add_subcommand("poly", "Hilbert-Kunz polynomial in q");
  poly_cmd->add_option("m", m, "Rows")->required();
  poly_cmd->add_option("n", n, "Columns")->required();
  add_format(poly_cmd);

  auto* mult_cmd = app.add_subcommand("mult", "Hilbert-Kunz multiplicity");
  mult_cmd->add_option("m", m, "Rows")->required();
  mult_cmd->add_option("n", n, "Columns")->required();
  add_format(mult_cmd);

  auto* table_cmd = app.add_subcommand("table", "Hilbert-Kunz values for q = 1..q_max");
  table_cmd->add_option("m", m, "Rows")->required();
  table_cmd->add_option("n", n, "Columns")->required();
  table_cmd->add_option("q_max", q_max, "Largest q")->required();
  add_format(table_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare the recursion against both oracles");
  oracle_cmd->add_option("max_mn", max_mn, "Largest m and n")->required();
  oracle_cmd->add_option("max_q", max_q, "Largest q")->required();
  oracle_cmd->add_option("--seed", seed, "Seed for the random bound vectors");
  add_format(oracle_cmd);

  auto* gb_cmd = app.add_subcommand("gb-verify", "Check the predicted Groebner basis");
  gb_cmd->add_option("m", m, "Rows")->required();
  gb_cmd->add_option("n", n, "Columns")->required();
  gb_cmd->add_option("q", q, "Frobenius parameter")->required();
  add_format(gb_cmd);

  auto* lemma_cmd = app.add_subcommand("lemmas", "Check the binomial-sum identities on a grid");
  lemma_cmd->add_option("q_max", lemma_q, "Largest q (default 30)");
  lemma_cmd->add_option("n_max", lemma_n, "Largest n (default 6)");
  add_format(lemma_cmd);

  // CLI11 expects the arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(m, n, q, rows_text, cols_text, format, out);
    if (poly_cmd->parsed()) return cmd_poly(m, n, format, out);
    if (mult_cmd->parsed()) return cmd_mult(m, n, format, out);
    if (table_cmd->parsed()) return cmd_table(m, n, q_max, format, out);
    if (oracle_cmd->parsed()) return cmd_oracle_check(max_mn, max_q, seed, format, out);
    if (gb_cmd->parsed()) return cmd_gb_verify(m, n, q, format, out);
    if (lemma_cmd->parsed()) return cmd_lemmas(lemma_q, lemma_n, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace hkdet::cli
