#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dgf/coeff_poly.hpp"

namespace dgf {

struct TableRow {
  int n = 0;
  int m = 0;  // edges; 0 when not tracked
  int p = 0;  // marker exponent; 0 when not tracked
  BigInt count;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Counts a_{n,m,p} of a digraph family, rows sorted by (n, m, p).
///
/// Every n in [0, order] has at least one row; an n with no objects is
/// represented by a single zero row (n, 0, 0, 0).
struct FamilyTable {
  std::string family;
  bool tracks_edges = true;
  bool tracks_marker = false;
  int order = 0;
  std::vector<TableRow> rows;

  using Key = std::tuple<int, int, int>;

  /// Builds the canonical table; zero counts are dropped before padding.
  static FamilyTable from_counts(std::string family, int order, bool tracks_edges, bool tracks_marker,
                                 const std::map<Key, BigInt>& counts);

  /// Sum of counts per n.
  std::vector<BigInt> totals() const;

  /// Collapses the marker (u = 1) or edges (w = 1) dimension.
  FamilyTable drop_marker() const;
  FamilyTable drop_edges() const;
};

struct TableMismatch {
  int n = 0;
  int m = 0;
  int p = 0;
  BigInt expected;
  BigInt actual;
};

/// First (n, m, p) where the two tables disagree, scanning in key order.
std::optional<TableMismatch> first_mismatch(const FamilyTable& expected, const FamilyTable& actual);

}  // namespace dgf
