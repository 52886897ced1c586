#include "dgf/catalog.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace dgf::catalog {

namespace {

std::uint64_t binom2(std::size_t n) { return std::uint64_t(n) * (n == 0 ? 0 : n - 1) / 2; }

template <class Fn>
Series generate(SeriesKind kind, std::size_t order, const CoeffMode& mode, Fn&& fn) {
  std::vector<CoeffPoly> c;
  c.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c.push_back(mode.lift(fn(n)));
  return Series(kind, mode, std::move(c));
}

void check_scc_family(const Series& a, const char* op, bool forbid_marker) {
  if (a.kind() != SeriesKind::Egf)
    throw Error(ErrorCode::KindMismatch, std::string(op) + ": SCC family must be given as an EGF");
  if (!a[0].is_zero())
    throw Error(ErrorCode::EmptyObjectInFamily,
                std::string(op) + ": the empty digraph is not strongly connected (c_0 must be 0)");
  if (forbid_marker) {
    for (const auto& c : a.coeffs()) {
      if (c.depends_on_u())
        throw Error(ErrorCode::MarkerCollision, std::string(op) + ": SCC family already uses u");
    }
  }
}

// Set ⊙ e^{x}, read as a GGF.
Series set_hadamard_exp(const Series& exponent) {
  return retag_egf_to_family_ggf(series_exp(exponent));
}

}  // namespace

Series base_graph_egf(std::size_t order, CoeffMode mode) {
  return generate(SeriesKind::Egf, order, mode, [](std::size_t n) { return one_plus_w_pow(binom2(n)); });
}

Series base_set_ggf(std::size_t order, CoeffMode mode) {
  return generate(SeriesKind::Ggf, order, mode, [](std::size_t) { return CoeffPoly(1); });
}

Series base_digraph_ggf(std::size_t order, CoeffMode mode) {
  return generate(SeriesKind::Ggf, order, mode,
                  [](std::size_t n) { return one_plus_w_pow(std::uint64_t(n) * (n == 0 ? 0 : n - 1)); });
}

Series dag_ggf(std::size_t order, CoeffMode mode) {
  return series_recip(series_scale_z(base_set_ggf(order, mode), CoeffPoly(-1)));
}

Series dag_sources_ggf(std::size_t order, CoeffMode mode) {
  const CoeffPoly u_minus_one = CoeffPoly::u() - CoeffPoly(1);
  return series_mul(series_scale_z(base_set_ggf(order, mode), u_minus_one), dag_ggf(order, mode));
}

Series scc_egf(std::size_t order, CoeffMode mode) {
  const Series graphs = base_graph_egf(order, mode);
  return series_negate(series_log(series_hadamard(graphs, series_recip(graphs))));
}

Series initially_connected_ggf(std::size_t order, CoeffMode mode) {
  return reinterpret_value_egf_as_ggf(series_log(base_graph_egf(order, mode)));
}

Series single_vertex_egf(std::size_t order, CoeffMode mode) {
  return Series::z(SeriesKind::Egf, order, mode);
}

Series scale_coeffs(const Series& a, const CoeffPoly& s) {
  const CoeffPoly factor = a.mode().lift(s);
  std::vector<CoeffPoly> c;
  c.reserve(a.order() + 1);
  for (const auto& x : a.coeffs()) c.push_back(x * factor);
  return Series(a.kind(), a.mode(), std::move(c));
}

Series restricted_scc_ggf(const Series& scc_family, std::size_t order) {
  check_scc_family(scc_family, "restricted_scc_ggf", false);
  const Series a = series_truncate(scc_family, order);
  return series_recip(set_hadamard_exp(series_negate(a)));
}

Series restricted_scc_sources_ggf(const Series& scc_family, std::size_t order) {
  check_scc_family(scc_family, "restricted_scc_sources_ggf", true);
  const Series a = series_truncate(scc_family, order);
  const CoeffPoly u_minus_one = CoeffPoly::u() - CoeffPoly(1);
  return series_mul(set_hadamard_exp(scale_coeffs(a, u_minus_one)), restricted_scc_ggf(a, order));
}

Series marked_subfamily_ggf(const Series& subfamily, std::size_t order) {
  check_scc_family(subfamily, "marked_subfamily_ggf", true);
  const Series b = series_truncate(subfamily, order);
  const CoeffPoly one_minus_u = CoeffPoly(1) - CoeffPoly::u();
  const Series exponent = series_sub(scale_coeffs(b, one_minus_u), scc_egf(b.order(), b.mode()));
  return series_recip(set_hadamard_exp(exponent));
}

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  bool needs_payload;
  bool has_marker;
};

constexpr std::array<FamilyInfo, 10> kFamilies{{
    {Family::AllGraphs, "graphs", false, false},
    {Family::AllDigraphs, "digraphs", false, false},
    {Family::SetFamily, "set", false, false},
    {Family::Dag, "dag", false, false},
    {Family::DagSources, "dag-sources", false, true},
    {Family::SccEgf, "scc", false, false},
    {Family::InitiallyConnected, "initially-connected", false, false},
    {Family::RestrictedScc, "restricted-scc", true, false},
    {Family::RestrictedSccSources, "restricted-scc-sources", true, true},
    {Family::MarkedSubfamily, "marked-subfamily", true, true},
}};

const FamilyInfo& info(Family f) {
  return *std::find_if(kFamilies.begin(), kFamilies.end(), [f](const FamilyInfo& i) { return i.family == f; });
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }
bool family_needs_payload(Family f) { return info(f).needs_payload; }
bool family_has_marker(Family f) { return info(f).has_marker; }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& i : kFamilies) {
    if (i.name == name) return i.family;
  }
  return std::nullopt;
}

Series compute_family(const FamilyId& id, std::size_t order, CoeffMode mode) {
  if (family_needs_payload(id.family) && !id.payload)
    throw Error(ErrorCode::InvalidArgument, std::string(family_name(id.family)) + " needs an SCC family payload");
  switch (id.family) {
    case Family::AllGraphs: return base_graph_egf(order, mode);
    case Family::AllDigraphs: return base_digraph_ggf(order, mode);
    case Family::SetFamily: return base_set_ggf(order, mode);
    case Family::Dag: return dag_ggf(order, mode);
    case Family::DagSources: return dag_sources_ggf(order, mode);
    case Family::SccEgf: return scc_egf(order, mode);
    case Family::InitiallyConnected: return initially_connected_ggf(order, mode);
    case Family::RestrictedScc: return restricted_scc_ggf(*id.payload, order);
    case Family::RestrictedSccSources: return restricted_scc_sources_ggf(*id.payload, order);
    case Family::MarkedSubfamily: return marked_subfamily_ggf(*id.payload, order);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

FamilyTable extract_table(const Series& f, const ExtractOptions& options) {
  const bool numeric = f.mode().is_numeric();
  std::map<FamilyTable::Key, BigInt> counts;
  for (std::size_t n = 0; n <= f.order(); ++n) {
    for (const Term& t : f[n].terms()) counts[{int(n), int(t.w_exp), int(t.u_exp)}] += t.coeff;
  }
  return FamilyTable::from_counts(options.family_name, int(f.order()), !numeric,
                                  !numeric && options.track_marker, counts);
}

}  // namespace dgf::catalog
