#include "dgf/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "dgf/error.hpp"

namespace dgf::oracle {

namespace {

void check_limit(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  if (n > kMaxVertices)
    throw Error(ErrorCode::LimitExceeded,
                "oracle supports at most " + std::to_string(kMaxVertices) + " vertices, got " + std::to_string(n));
}

// Tarjan's algorithm; recursion depth is bounded by kMaxVertices.
class Tarjan {
 public:
  explicit Tarjan(const Digraph& d) : d_(d) {
    for (int v = 0; v < d.n(); ++v) {
      if (index_[v] < 0) visit(v);
    }
  }

  std::vector<VertexSet> components() && { return std::move(components_); }

 private:
  void visit(int v) {
    index_[v] = low_[v] = next_index_++;
    stack_[depth_++] = v;
    on_stack_ |= VertexSet(1) << v;
    VertexSet succ = d_.successors(v);
    while (succ) {
      int w = std::countr_zero(succ);
      succ &= succ - 1;
      if (index_[w] < 0) {
        visit(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (on_stack_ & (VertexSet(1) << w)) {
        low_[v] = std::min(low_[v], index_[w]);
      }
    }
    if (low_[v] == index_[v]) {
      VertexSet comp = 0;
      int w;
      do {
        w = stack_[--depth_];
        on_stack_ &= ~(VertexSet(1) << w);
        comp |= VertexSet(1) << w;
      } while (w != v);
      components_.push_back(comp);
    }
  }

  const Digraph& d_;
  std::array<int, kMaxVertices> index_{-1, -1, -1, -1, -1};
  std::array<int, kMaxVertices> low_{};
  std::array<int, kMaxVertices> stack_{};
  int depth_ = 0;
  int next_index_ = 0;
  VertexSet on_stack_ = 0;
  std::vector<VertexSet> components_;
};

VertexSet reachable_from(const Digraph& d, int start) {
  VertexSet seen = VertexSet(1) << start;
  VertexSet frontier = seen;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    VertexSet fresh = d.successors(v) & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

VertexSet all_vertices(int n) { return n == 0 ? 0 : (VertexSet(1) << n) - 1; }

int undirected_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // pairs {a, b}, a < b, row-major
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

}  // namespace

Digraph::Digraph(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  check_limit(n);
  if (pair_count(n) < 32 && (bits >> pair_count(n)) != 0)
    throw Error(ErrorCode::InvalidArgument, "bitmask wider than n(n-1)");
}

bool Digraph::has_edge(int from, int to) const {
  return from != to && ((bits_ >> pair_index(n_, from, to)) & 1u);
}

int Digraph::edge_count() const { return std::popcount(bits_); }

VertexSet Digraph::successors(int v) const {
  VertexSet out = 0;
  for (int j = 0; j < n_; ++j) {
    if (has_edge(v, j)) out |= VertexSet(1) << j;
  }
  return out;
}

VertexSet Digraph::predecessors(int v) const {
  VertexSet out = 0;
  for (int i = 0; i < n_; ++i) {
    if (has_edge(i, v)) out |= VertexSet(1) << i;
  }
  return out;
}

Digraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  check_limit(n);
  std::uint32_t bits = 0;
  for (auto [from, to] : edges) {
    if (from == to || from < 0 || to < 0 || from >= n || to >= n)
      throw Error(ErrorCode::InvalidArgument, "bad edge");
    bits |= std::uint32_t(1) << Digraph::pair_index(n, from, to);
  }
  return Digraph(n, bits);
}

Digraph relabel(const Digraph& d, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < d.n(); ++i) {
    for (int j = 0; j < d.n(); ++j) {
      if (d.has_edge(i, j)) edges.emplace_back(perm[i], perm[j]);
    }
  }
  return from_edges(d.n(), edges);
}

DigraphRange::DigraphRange(int n) : n_(n) { check_limit(n); }

DigraphRange enumerate_digraphs(int n) { return DigraphRange(n); }

ClassifierReport classify(const Digraph& d) {
  ClassifierReport r;
  const int n = d.n();
  r.edge_count = d.edge_count();
  r.scc_partition = Tarjan(d).components();

  std::array<VertexSet, kMaxVertices> pred{};
  for (int v = 0; v < n; ++v) {
    pred[v] = d.predecessors(v);
    if (pred[v] == 0) ++r.source_count;
  }

  r.is_dag = std::all_of(r.scc_partition.begin(), r.scc_partition.end(),
                         [](VertexSet s) { return std::popcount(s) == 1; });
  for (VertexSet comp : r.scc_partition) {
    VertexSet incoming = 0;
    for (VertexSet rest = comp; rest; rest &= rest - 1) incoming |= pred[std::countr_zero(rest)];
    if ((incoming & ~comp) == 0) {
      ++r.source_like_scc_count;
      r.source_like_vertices |= comp;
    }
  }
  r.is_strongly_connected = n >= 1 && r.scc_partition.size() == 1;
  r.is_initially_connected = n >= 1 && reachable_from(d, 0) == all_vertices(n);
  return r;
}

bool is_acyclic_toposort(const Digraph& d) {
  const int n = d.n();
  std::array<int, kMaxVertices> indegree{};
  for (int v = 0; v < n; ++v) indegree[v] = std::popcount(d.predecessors(v));
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (VertexSet s = d.successors(v); s; s &= s - 1) {
      int w = std::countr_zero(s);
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == n;
}

GraphPair split_initially_connected(const Digraph& d) {
  const int n = d.n();
  std::array<int, kMaxVertices> dist;
  dist.fill(-1);
  std::vector<int> queue{0};
  dist[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (VertexSet s = d.successors(v); s; s &= s - 1) {
      int w = std::countr_zero(s);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (std::any_of(dist.begin(), dist.begin() + n, [](int x) { return x < 0; }))
    throw Error(ErrorCode::InvalidArgument, "digraph is not initially connected");

  GraphPair out{0, 0};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // `near` is strictly closer to vertex 0, ties broken by label
      const bool i_first = dist[i] < dist[j] || (dist[i] == dist[j] && i < j);
      const int near = i_first ? i : j;
      const int far = i_first ? j : i;
      const std::uint32_t bit = std::uint32_t(1) << undirected_index(n, i, j);
      if (d.has_edge(near, far)) out.connected |= bit;
      if (d.has_edge(far, near)) out.rest |= bit;
    }
  }
  return out;
}

bool is_connected_graph(int n, std::uint32_t graph_bits) {
  if (n == 0) return false;
  VertexSet seen = 1, frontier = 1;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      if (((graph_bits >> undirected_index(n, v, w)) & 1u) && !(seen & (VertexSet(1) << w))) {
        seen |= VertexSet(1) << w;
        frontier |= VertexSet(1) << w;
      }
    }
  }
  return seen == all_vertices(n);
}

std::string_view selector_name(Selector s) {
  switch (s) {
    case Selector::AllDigraphs: return "all_digraphs";
    case Selector::Dag: return "dag";
    case Selector::DagBySources: return "dag_by_sources";
    case Selector::DagSourcePointed: return "dag_source_pointed";
    case Selector::Scc: return "scc";
    case Selector::InitiallyConnected: return "initially_connected";
    case Selector::UniqueSourceLikePointed: return "unique_source_like_pointed";
    case Selector::SourceLikeMarked: return "source_like_marked";
    case Selector::NoSingletonScc: return "no_subfamily_scc";
  }
  return "unknown";
}

FamilyTable oracle_table(int n_max, Selector selector) {
  check_limit(n_max);
  const bool marked = selector == Selector::DagBySources || selector == Selector::SourceLikeMarked;
  std::map<FamilyTable::Key, BigInt> counts;
  for (int n = 0; n <= n_max; ++n) {
    std::map<FamilyTable::Key, unsigned long> local;
    for (const Digraph d : enumerate_digraphs(n)) {
      const ClassifierReport r = classify(d);
      const int m = r.edge_count;
      switch (selector) {
        case Selector::AllDigraphs: ++local[{n, m, 0}]; break;
        case Selector::Dag:
          if (r.is_dag) ++local[{n, m, 0}];
          break;
        case Selector::DagBySources:
          if (r.is_dag) ++local[{n, m, r.source_count}];
          break;
        case Selector::DagSourcePointed:
          if (r.is_dag) local[{n, m, 0}] += r.source_count;
          break;
        case Selector::Scc:
          if (r.is_strongly_connected) ++local[{n, m, 0}];
          break;
        case Selector::InitiallyConnected:
          if (r.is_initially_connected) ++local[{n, m, 0}];
          break;
        case Selector::UniqueSourceLikePointed:
          if (r.source_like_scc_count == 1) local[{n, m, 0}] += std::popcount(r.source_like_vertices);
          break;
        case Selector::SourceLikeMarked: ++local[{n, m, r.source_like_scc_count}]; break;
        case Selector::NoSingletonScc:
          if (std::none_of(r.scc_partition.begin(), r.scc_partition.end(),
                           [](VertexSet s) { return std::popcount(s) == 1; }))
            ++local[{n, m, 0}];
          break;
      }
    }
    for (const auto& [k, v] : local) counts[k] += v;
  }
  return FamilyTable::from_counts(std::string(selector_name(selector)), n_max, true, marked, counts);
}

}  // namespace dgf::oracle
