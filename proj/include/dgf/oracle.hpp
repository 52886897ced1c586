#pragma once

// Exhaustive enumeration and classification of small labeled digraphs.
//
// A digraph on n <= 5 vertices is a bitmask over the n(n-1) ordered pairs
// (i, j), i != j, in row-major order: bit i*(n-1) + (j < i ? j : j - 1)
// encodes the edge i -> j. Vertex "1" of the usual labeling is index 0 here.

#include <cstdint>
#include <string_view>
#include <vector>

#include "dgf/table.hpp"

namespace dgf::oracle {

inline constexpr int kMaxVertices = 5;

/// A vertex subset as a bitmask (bit i = vertex i).
using VertexSet = std::uint32_t;

class Digraph {
 public:
  Digraph() = default;
  /// Throws LimitExceeded if n > kMaxVertices, InvalidArgument if the bitmask
  /// has bits beyond n(n-1).
  Digraph(int n, std::uint32_t bits);

  static int pair_count(int n) { return n * (n - 1); }
  static int pair_index(int n, int from, int to) { return from * (n - 1) + (to < from ? to : to - 1); }

  int n() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  bool has_edge(int from, int to) const;
  int edge_count() const;
  /// Out-neighbourhood of v.
  VertexSet successors(int v) const;
  VertexSet predecessors(int v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

/// Builds a digraph from an edge list of (from, to) pairs.
Digraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// Digraph with vertex v renamed perm[v].
Digraph relabel(const Digraph& d, const std::vector<int>& perm);

/// All 2^(n(n-1)) digraphs on n vertices in increasing bitmask order.
class DigraphRange {
 public:
  class iterator {
   public:
    using value_type = Digraph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, std::uint64_t bits) : n_(n), bits_(bits) {}
    Digraph operator*() const { return Digraph(n_, std::uint32_t(bits_)); }
    iterator& operator++() {
      ++bits_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++bits_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.bits_ == b.bits_; }

   private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
  };

  explicit DigraphRange(int n);
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, std::uint64_t(1) << Digraph::pair_count(n_)}; }
  std::uint64_t size() const { return std::uint64_t(1) << Digraph::pair_count(n_); }

 private:
  int n_;
};

/// Throws LimitExceeded if n > kMaxVertices.
DigraphRange enumerate_digraphs(int n);

struct ClassifierReport {
  int edge_count = 0;
  bool is_dag = false;
  int source_count = 0;
  std::vector<VertexSet> scc_partition;
  int source_like_scc_count = 0;
  /// Union of the source-like components.
  VertexSet source_like_vertices = 0;
  bool is_initially_connected = false;
  bool is_strongly_connected = false;
};

ClassifierReport classify(const Digraph& d);

/// Acyclicity by Kahn's topological sort, independent of the SCC computation.
bool is_acyclic_toposort(const Digraph& d);

/// Splits the edges of an initially connected digraph into a connected graph
/// (edges pointing away from vertex 0 in BFS order) and a graph (the others).
/// Undirected graphs are bitmasks over pairs {i < j} in row-major order.
struct GraphPair {
  std::uint32_t connected;
  std::uint32_t rest;
};
GraphPair split_initially_connected(const Digraph& d);
bool is_connected_graph(int n, std::uint32_t graph_bits);

enum class Selector {
  AllDigraphs,
  Dag,
  DagBySources,
  DagSourcePointed,
  Scc,
  InitiallyConnected,
  UniqueSourceLikePointed,
  SourceLikeMarked,
  NoSingletonScc,
};

std::string_view selector_name(Selector s);

/// Counts by (n, m[, p]) of the selected family for 0 <= n <= n_max.
///
/// Pointed selectors count (digraph, distinguished vertex) pairs; marked
/// selectors report the marker in p (sources, source-like SCCs).
FamilyTable oracle_table(int n_max, Selector selector);

}  // namespace dgf::oracle
