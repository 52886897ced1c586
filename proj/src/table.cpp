#include "dgf/table.hpp"

#include <utility>

namespace dgf {

FamilyTable FamilyTable::from_counts(std::string family, int order, bool tracks_edges, bool tracks_marker,
                                     const std::map<Key, BigInt>& counts) {
  FamilyTable t;
  t.family = std::move(family);
  t.order = order;
  t.tracks_edges = tracks_edges;
  t.tracks_marker = tracks_marker;

  std::map<Key, BigInt> merged;
  for (const auto& [key, count] : counts) {
    auto [n, m, p] = key;
    if (n < 0 || n > order || count == 0) continue;
    merged[{n, tracks_edges ? m : 0, tracks_marker ? p : 0}] += count;
  }
  for (int n = 0; n <= order; ++n) {
    auto it = merged.lower_bound({n, 0, 0});
    bool any = false;
    for (; it != merged.end() && std::get<0>(it->first) == n; ++it) {
      if (it->second == 0) continue;
      auto [nn, m, p] = it->first;
      t.rows.push_back(TableRow{nn, m, p, it->second});
      any = true;
    }
    if (!any) t.rows.push_back(TableRow{n, 0, 0, 0});
  }
  return t;
}

std::vector<BigInt> FamilyTable::totals() const {
  std::vector<BigInt> out(order + 1);
  for (const auto& r : rows) out[r.n] += r.count;
  return out;
}

namespace {

std::map<FamilyTable::Key, BigInt> as_counts(const FamilyTable& t) {
  std::map<FamilyTable::Key, BigInt> c;
  for (const auto& r : t.rows) c[{r.n, r.m, r.p}] += r.count;
  return c;
}

}  // namespace

FamilyTable FamilyTable::drop_marker() const {
  return from_counts(family, order, tracks_edges, false, as_counts(*this));
}

FamilyTable FamilyTable::drop_edges() const {
  return from_counts(family, order, false, tracks_marker, as_counts(*this));
}

std::optional<TableMismatch> first_mismatch(const FamilyTable& expected, const FamilyTable& actual) {
  auto e = as_counts(expected);
  auto a = as_counts(actual);
  std::map<FamilyTable::Key, std::pair<BigInt, BigInt>> all;
  for (const auto& [k, v] : e) all[k].first = v;
  for (const auto& [k, v] : a) all[k].second = v;
  for (const auto& [k, v] : all) {
    if (v.first != v.second) {
      auto [n, m, p] = k;
      return TableMismatch{n, m, p, v.first, v.second};
    }
  }
  return std::nullopt;
}

}  // namespace dgf
