#include "dgf/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "dgf/oracle.hpp"

namespace dgf::selftest {

using catalog::Family;
using catalog::FamilyId;

FamilyComputer default_computer() {
  return [](const FamilyId& id, std::size_t order, CoeffMode mode) {
    return catalog::compute_family(id, order, mode);
  };
}

bool Report::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::vector<BigInt> dag_counts_by_recurrence(int n_max) {
  std::vector<BigInt> a(n_max + 1);
  a[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt sum = 0;
    for (int k = 1; k <= n; ++k) {
      BigInt binom, pow2;
      mpz_bin_uiui(binom.get_mpz_t(), n, k);
      mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k) * (n - k));
      BigInt term = binom * pow2 * a[n - k];
      if (k % 2 == 1)
        sum += term;
      else
        sum -= term;
    }
    a[n] = sum;
  }
  return a;
}

namespace {

class SuiteRecorder {
 public:
  explicit SuiteRecorder(std::string name) { result_.name = std::move(name); }

  void fail(const std::string& detail) {
    if (result_.passed) result_.detail = detail;
    result_.passed = false;
  }

  void expect_equal(const std::string& label, const Series& expected, const Series& actual) {
    if (expected == actual) return;
    const std::size_t order = std::min(expected.order(), actual.order());
    for (std::size_t n = 0; n <= order; ++n) {
      if (!(expected[n] == actual[n])) {
        fail(label + " n=" + std::to_string(n) + " expected=" + to_string(expected[n]) +
             " actual=" + to_string(actual[n]));
        return;
      }
    }
    fail(label + " differs in kind, mode or order");
  }

  void expect_tables(const std::string& family, const FamilyTable& expected, const FamilyTable& actual) {
    if (auto mm = first_mismatch(expected, actual)) {
      std::ostringstream os;
      os << "family=" << family << " n=" << mm->n << " m=" << mm->m << " p=" << mm->p
         << " expected=" << mm->expected.get_str() << " actual=" << mm->actual.get_str();
      fail(os.str());
    }
  }

  SuiteResult done() && { return std::move(result_); }

 private:
  SuiteResult result_;
};

FamilyTable table_of(const Series& s, const std::string& name, bool marker) {
  return catalog::extract_table(s, {name, marker});
}

SuiteResult oracle_equivalence(const Options& opt) {
  SuiteRecorder rec("oracle-equivalence");
  const std::size_t n = opt.max_n;
  const auto poly = CoeffMode::polynomial();
  const auto compute = [&](Family f, std::optional<Series> payload = std::nullopt) {
    return opt.compute(FamilyId{f, std::move(payload)}, n, poly);
  };
  using oracle::Selector;
  const auto check = [&](const std::string& name, const Series& s, bool marker, Selector sel) {
    rec.expect_tables(name, oracle::oracle_table(opt.max_n, sel), table_of(s, name, marker));
  };

  const Series dag = compute(Family::Dag);
  check("dag", dag, false, Selector::Dag);
  const Series dag_sources = compute(Family::DagSources);
  check("dag-sources", dag_sources, true, Selector::DagBySources);
  const Series scc = compute(Family::SccEgf);
  check("scc", scc, false, Selector::Scc);
  const Series ic = compute(Family::InitiallyConnected);
  check("initially-connected", ic, false, Selector::InitiallyConnected);
  check("digraphs", compute(Family::AllDigraphs), false, Selector::AllDigraphs);
  check("source-like", compute(Family::RestrictedSccSources, catalog::scc_egf(n, poly)), true,
        Selector::SourceLikeMarked);
  check("no-trivial-scc",
        series_eval_u(compute(Family::MarkedSubfamily, catalog::single_vertex_egf(n, poly)), 0), false,
        Selector::NoSingletonScc);
  check("pointed-initially-connected", series_point(ic), false, Selector::UniqueSourceLikePointed);

  // sum_p p [u^p] a_n: derivative in u at u = 1
  std::map<FamilyTable::Key, BigInt> pointed;
  for (const auto& row : table_of(dag_sources, "dag-sources", true).rows)
    pointed[{row.n, row.m, 0}] += row.count * row.p;
  rec.expect_tables("dag-source-pointed", oracle::oracle_table(opt.max_n, Selector::DagSourcePointed),
                    FamilyTable::from_counts("dag-source-pointed", opt.max_n, true, false, pointed));
  return std::move(rec).done();
}

SuiteResult identities(const Options& opt, CoeffMode mode, std::size_t order) {
  SuiteRecorder rec("identities[" + mode.describe() + "]");
  const auto compute = [&](Family f, std::optional<Series> payload = std::nullopt, CoeffMode m = CoeffMode{}) {
    return opt.compute(FamilyId{f, std::move(payload)}, order, m);
  };
  const Series one_egf = Series::one(SeriesKind::Egf, order, mode);
  const Series one_ggf = Series::one(SeriesKind::Ggf, order, mode);

  const Series scc = compute(Family::SccEgf, std::nullopt, mode);
  rec.expect_equal("log(exp(scc))", scc, series_log(series_exp(scc)));
  const Series graphs = compute(Family::AllGraphs, std::nullopt, mode);
  rec.expect_equal("exp(log(G))", graphs, series_exp(series_log(graphs)));
  const Series scc_ggf = retag_egf_to_family_ggf(scc);
  rec.expect_equal("log(exp(scc)) ggf", scc_ggf, series_log(series_exp(scc_ggf)));

  const Series digraphs = compute(Family::AllDigraphs, std::nullopt, mode);
  rec.expect_equal("G*recip(G)", one_egf, series_mul(graphs, series_recip(graphs)));
  rec.expect_equal("D*recip(D)", one_ggf, series_mul(digraphs, series_recip(digraphs)));

  const Series dag = compute(Family::Dag, std::nullopt, mode);
  rec.expect_equal("family=dag restricted_scc(z)", dag,
                   catalog::restricted_scc_ggf(catalog::single_vertex_egf(order, mode), order));
  rec.expect_equal("family=digraphs restricted_scc(scc)", digraphs, catalog::restricted_scc_ggf(scc, order));

  if (mode.is_numeric()) {
    const auto at_u = [&](long u) { return CoeffMode::numeric(mode.w_value(), u); };
    rec.expect_equal("family=dag-sources u=1", compute(Family::Dag, std::nullopt, at_u(1)),
                     compute(Family::DagSources, std::nullopt, at_u(1)));
    rec.expect_equal("family=dag-sources u=0", Series::one(SeriesKind::Ggf, order, at_u(0)),
                     compute(Family::DagSources, std::nullopt, at_u(0)));
  } else {
    const Series dag_sources = compute(Family::DagSources, std::nullopt, mode);
    rec.expect_equal("family=dag-sources u=1", dag, series_eval_u(dag_sources, 1));
    rec.expect_equal("family=dag-sources u=0", one_ggf, series_eval_u(dag_sources, 0));
  }

  const Series pivot = series_mul(retag_egf_to_family_ggf(series_exp(series_negate(scc))), digraphs);
  rec.expect_equal("(Set . exp(-scc)) * D", one_ggf, pivot);
  return std::move(rec).done();
}

SuiteResult recurrence_golden(const Options& opt) {
  SuiteRecorder rec("dag-recurrence");
  constexpr int kOrder = 12;
  const auto expected = dag_counts_by_recurrence(kOrder);
  const Series dag = opt.compute(FamilyId{Family::Dag, std::nullopt}, kOrder, CoeffMode::numeric(1, 1));
  for (int n = 0; n <= kOrder; ++n) {
    if (dag[n].constant_term() != expected[n]) {
      rec.fail("family=dag n=" + std::to_string(n) + " expected=" + expected[n].get_str() +
               " actual=" + dag[n].constant_term().get_str());
      break;
    }
  }
  return std::move(rec).done();
}

SuiteResult mode_agreement(const Options& opt) {
  SuiteRecorder rec("mode-agreement");
  constexpr std::size_t kOrder = 8;
  const auto numeric = CoeffMode::numeric(1, 1);
  const std::vector<std::pair<Family, bool>> families = {
      {Family::Dag, false},      {Family::DagSources, true}, {Family::SccEgf, false},
      {Family::AllDigraphs, false}, {Family::InitiallyConnected, false},
  };
  for (auto [f, marker] : families) {
    const std::string name(catalog::family_name(f));
    const FamilyId id{f, std::nullopt};
    const FamilyTable poly = table_of(opt.compute(id, kOrder, CoeffMode::polynomial()), name, marker);
    const FamilyTable num = table_of(opt.compute(id, kOrder, numeric), name, false);
    rec.expect_tables(name, num, poly.drop_marker().drop_edges());
  }
  return std::move(rec).done();
}

}  // namespace

Report run(const Options& options, std::ostream& log) {
  if (options.max_n > oracle::kMaxVertices)
    throw Error(ErrorCode::LimitExceeded, "selftest max-n is capped at " + std::to_string(oracle::kMaxVertices));
  if (options.max_n < 0) throw Error(ErrorCode::InvalidArgument, "max-n must be nonnegative");
  Report report;
  report.suites.push_back(oracle_equivalence(options));
  report.suites.push_back(identities(options, CoeffMode::polynomial(), 12));
  report.suites.push_back(identities(options, CoeffMode::numeric(1, 1), 12));
  report.suites.push_back(recurrence_golden(options));
  report.suites.push_back(mode_agreement(options));
  for (const auto& s : report.suites) {
    log << (s.passed ? "PASS " : "FAIL ") << s.name;
    if (!s.passed) log << ": " << s.detail;
    log << '\n';
  }
  return report;
}

}  // namespace dgf::selftest
