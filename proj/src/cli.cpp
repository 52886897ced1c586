#include "dgf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dgf::cli {

namespace {

using catalog::Family;

bool skip_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

BigInt parse_count(const std::string& token, int line_no) {
  BigInt value;
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || value.set_str(token, 10) != 0)
    throw CustomFamilyError(line_no, "expected a nonnegative integer count, got '" + token + "'");
  return value;
}

std::ostream& open_output(const RunConfig& cfg, std::ostream& fallback, std::ofstream& file) {
  if (!cfg.out) return fallback;
  file.open(*cfg.out);
  return file;
}

int write_output(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream& os = open_output(cfg, out, file);
  if (cfg.out && !file) {
    err << "error: cannot open output file " << *cfg.out << '\n';
    return kInputFile;
  }
  os << text;
  os.flush();
  return os ? kOk : kInputFile;
}

Series lift_series(const Series& s, const CoeffMode& mode) {
  std::vector<CoeffPoly> c;
  c.reserve(s.order() + 1);
  for (const auto& x : s.coeffs()) c.push_back(mode.lift(x));
  return Series(s.kind(), mode, std::move(c));
}

}  // namespace

Series parse_custom_family(std::istream& in, std::size_t order) {
  std::vector<CoeffPoly> coeffs(order + 1);
  std::set<long> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw CustomFamilyError(line_no, "expected 'n: c_0 c_1 ...'");
    std::string head = line.substr(0, colon);
    head.erase(0, head.find_first_not_of(" \t"));
    head.erase(head.find_last_not_of(" \t\r") + 1);
    if (head.empty() || head.find_first_not_of("0123456789") != std::string::npos || head.size() > 9)
      throw CustomFamilyError(line_no, "bad vertex count '" + head + "'");
    const long n = std::stol(head);
    if (!seen.insert(n).second) throw CustomFamilyError(line_no, "duplicate entry for n=" + head);

    std::istringstream tokens(line.substr(colon + 1));
    std::vector<Term> terms;
    std::string tok;
    std::uint32_t m = 0;
    while (tokens >> tok) terms.push_back(Term{m++, 0, parse_count(tok, line_no)});
    CoeffPoly poly = CoeffPoly::from_terms(std::move(terms));
    if (n == 0 && !poly.is_zero())
      throw CustomFamilyError(line_no, "an SCC family cannot contain the empty digraph (n=0 must be 0)");
    if (static_cast<std::size_t>(n) <= order) coeffs[n] = std::move(poly);
  }
  return Series(SeriesKind::Egf, CoeffMode::polynomial(), std::move(coeffs));
}

std::string format_csv(const FamilyTable& table) {
  std::ostringstream os;
  os << "n";
  if (table.tracks_edges) os << ",m";
  if (table.tracks_marker) os << ",p";
  os << ",count\n";
  for (const auto& r : table.rows) {
    os << r.n;
    if (table.tracks_edges) os << ',' << r.m;
    if (table.tracks_marker) os << ',' << r.p;
    os << ',' << r.count.get_str() << '\n';
  }
  return os.str();
}

std::string format_json(const FamilyTable& table, bool numeric) {
  nlohmann::ordered_json doc;
  doc["family"] = table.family;
  doc["mode"] = numeric ? "numeric" : "poly";
  doc["order"] = table.order;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    if (table.tracks_edges) row["m"] = r.m;
    if (table.tracks_marker) row["p"] = r.p;
    row["count"] = r.count.get_str();
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto family = catalog::parse_family(cfg.family);
  if (!family) {
    err << "error: unknown family '" << cfg.family << "'\n";
    return kUsage;
  }
  if (cfg.max_n < 0) {
    err << "error: --max-n must be nonnegative\n";
    return kUsage;
  }
  catalog::FamilyId id{*family, std::nullopt};
  if (catalog::family_needs_payload(*family)) {
    if (!cfg.custom_family) {
      err << "error: family '" << cfg.family << "' needs --custom-family\n";
      return kUsage;
    }
    std::ifstream in(*cfg.custom_family);
    if (!in) {
      err << "error: cannot read " << *cfg.custom_family << '\n';
      return kInputFile;
    }
    try {
      id.payload = lift_series(parse_custom_family(in, cfg.max_n), cfg.mode());
    } catch (const CustomFamilyError& e) {
      err << "error: " << *cfg.custom_family << ": " << e.what() << '\n';
      return kInputFile;
    }
  }

  try {
    const Series s = catalog::compute_family(id, cfg.max_n, cfg.mode());
    const FamilyTable table =
        catalog::extract_table(s, {cfg.family, catalog::family_has_marker(*family)});
    const std::string text = cfg.format == Format::Json ? format_json(table, cfg.numeric) : format_csv(table);
    return write_output(cfg, text, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                 const selftest::FamilyComputer& compute) {
  if (cfg.max_n < 0 || cfg.max_n > 5) {
    err << "error: selftest --max-n must be in [0, 5] (oracle cap)\n";
    return kUsage;
  }
  selftest::Options opt;
  opt.max_n = cfg.max_n;
  opt.compute = compute;
  const auto report = selftest::run(opt, out);
  if (report.passed()) {
    out << "all suites passed\n";
    return kOk;
  }
  for (const auto& s : report.suites) {
    if (!s.passed) {
      err << "first failure: " << s.name << ": " << s.detail << '\n';
      break;
    }
  }
  return kSelftestFailed;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_n < 0) {
    err << "error: --max-n must be nonnegative\n";
    return kUsage;
  }
  if (!cfg.numeric && cfg.max_n > 30) {
    err << "error: polynomial-mode bench is limited to --max-n 30\n";
    return kUsage;
  }
  const CoeffMode mode = cfg.mode();
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const Series scc = catalog::scc_egf(cfg.max_n, mode);
  const auto t1 = clock::now();
  const Series dag = catalog::dag_ggf(cfg.max_n, mode);
  const auto t2 = clock::now();

  const auto total = [](const CoeffPoly& c) { return poly_eval(c, 1, 1); };
  std::ostringstream os;
  os << "n,scc,dag\n";
  for (int n = 1; n <= cfg.max_n; ++n)
    os << n << ',' << total(scc[n]).get_str() << ',' << total(dag[n]).get_str() << '\n';
  const auto ms = [](auto d) { return std::chrono::duration<double, std::milli>(d).count(); };
  os << "# mode=" << mode.describe() << " max_n=" << cfg.max_n << '\n';
  os << "# scc_egf_ms=" << ms(t1 - t0) << '\n';
  os << "# dag_ggf_ms=" << ms(t2 - t1) << '\n';
  return write_output(cfg, os.str(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of labeled digraph families via graphic generating functions"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string mode_name;
  std::string format_name = "csv";
  std::optional<int> max_n;

  const auto add_options = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "Family name (dag, scc, initially-connected, ...)");
    sub->add_option("--max-n", max_n, "Largest vertex count");
    sub->add_option("--mode", mode_name, "Coefficient mode")->check(CLI::IsMember({"poly", "numeric"}));
    sub->add_option("--w", cfg.w_value, "Value of w in numeric mode");
    sub->add_option("--u", cfg.u_value, "Value of u in numeric mode");
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
    sub->add_option("--custom-family", cfg.custom_family, "EGF coefficient file for the SCC family payload");
  };
  CLI::App* table = app.add_subcommand("table", "Compute a family table");
  CLI::App* self = app.add_subcommand("selftest", "Check the catalog against the exhaustive oracle");
  CLI::App* bench = app.add_subcommand("bench", "Time SCC and DAG totals");
  for (auto* sub : {table, self, bench}) add_options(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  cfg.format = format_name == "json" ? Format::Json : Format::Csv;
  if (*table) {
    cfg.command = "table";
    cfg.numeric = mode_name == "numeric";
    cfg.max_n = max_n.value_or(10);
    if (cfg.family.empty()) {
      err << "error: table needs --family\n";
      return kUsage;
    }
    return cmd_table(cfg, out, err);
  }
  if (*self) {
    cfg.command = "selftest";
    cfg.max_n = max_n.value_or(4);
    return cmd_selftest(cfg, out, err);
  }
  cfg.command = "bench";
  cfg.numeric = mode_name != "poly";
  cfg.max_n = max_n.value_or(100);
  return cmd_bench(cfg, out, err);
}

}  // namespace dgf::cli
