#pragma once

// Generating functions of labeled digraph families, each a short composition
// of series operations. GGF-valued families store the family polynomial
// a_n(w, u) as numerator; EGF-valued families store it as the coefficient.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "dgf/series.hpp"
#include "dgf/table.hpp"

namespace dgf::catalog {

/// EGF of all (undirected) graphs: c_n = (1+w)^binom(n,2).
Series base_graph_egf(std::size_t order, CoeffMode mode = CoeffMode::polynomial());

/// GGF of edgeless graphs: numerators all 1.
Series base_set_ggf(std::size_t order, CoeffMode mode = CoeffMode::polynomial());

/// GGF of all digraphs: numerators (1+w)^(n(n-1)).
Series base_digraph_ggf(std::size_t order, CoeffMode mode = CoeffMode::polynomial());

/// GGF of DAGs: 1 / Set(-z).
Series dag_ggf(std::size_t order, CoeffMode mode = CoeffMode::polynomial());

/// GGF of DAGs with u marking sources: Set((u-1)z) / Set(-z).
Series dag_sources_ggf(std::size_t order, CoeffMode mode = CoeffMode::polynomial());

/// EGF of strongly connected digraphs: -log(G ⊙ 1/G).
Series scc_egf(std::size_t order, CoeffMode mode = CoeffMode::polynomial());

/// GGF of initially connected digraphs, equal as a series to log(G).
Series initially_connected_ggf(std::size_t order, CoeffMode mode = CoeffMode::polynomial());

/// The single-vertex SCC family, EGF z.
Series single_vertex_egf(std::size_t order, CoeffMode mode = CoeffMode::polynomial());

/// Multiplies every coefficient by s (lifted into the series' mode).
Series scale_coeffs(const Series& a, const CoeffPoly& s);

/// GGF of digraphs whose SCCs all lie in the family with EGF `scc_family`:
/// 1 / (Set ⊙ e^{-A}). The result order is min(order, scc_family.order()).
Series restricted_scc_ggf(const Series& scc_family, std::size_t order);

/// Same family with u marking source-like components:
/// (Set ⊙ e^{(u-1)A}) / (Set ⊙ e^{-A}).
Series restricted_scc_sources_ggf(const Series& scc_family, std::size_t order);

/// GGF of all digraphs with u marking the SCCs that lie in `subfamily`:
/// 1 / (Set ⊙ e^{(1-u)B - SCC}).
Series marked_subfamily_ggf(const Series& subfamily, std::size_t order);

enum class Family {
  AllGraphs,
  AllDigraphs,
  SetFamily,
  Dag,
  DagSources,
  SccEgf,
  InitiallyConnected,
  RestrictedScc,
  RestrictedSccSources,
  MarkedSubfamily,
};

/// Command-line name of a family ("dag", "scc", ...).
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
bool family_needs_payload(Family f);
bool family_has_marker(Family f);

/// A family together with its SCC payload when it takes one.
struct FamilyId {
  Family family;
  std::optional<Series> payload;
};

Series compute_family(const FamilyId& id, std::size_t order, CoeffMode mode);

struct ExtractOptions {
  std::string family_name;
  /// Report the u exponent as a separate column; otherwise u is set to 1.
  bool track_marker = false;
};

/// Rows (n, m, p, count) with count = [w^m u^p] a_n in Polynomial mode, and
/// rows (n, count) with count = a_n in Numeric mode.
FamilyTable extract_table(const Series& f, const ExtractOptions& options);

}  // namespace dgf::catalog
