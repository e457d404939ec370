#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cdss {

/// Node N(l, j): the j-th node of the l-th cluster, both 1-based.
struct NodeId {
  int l = 1;
  int j = 1;
  friend constexpr auto operator<=>(const NodeId&, const NodeId&) = default;
};

std::string to_string(NodeId id);
/// Parses "l,j".
NodeId parse_node_id(const std::string& text);
/// Parses whitespace-separated "l,j" pairs.
std::vector<NodeId> parse_node_list(const std::string& text);

/// n nodes spread uniformly over L clusters; data collectors contact k nodes.
class ClusterTopology {
 public:
  /// Throws ParameterError unless L | n and 1 <= k < n.
  ClusterTopology(int n, int k, int L);

  int n() const { return n_; }
  int k() const { return k_; }
  int clusters() const { return clusters_; }
  int nodes_per_cluster() const { return n_ / clusters_; }

  /// 1-based flat index u = (l-1) n_I + j.
  int flat(NodeId id) const;
  NodeId node_at(int u) const;
  bool contains(NodeId id) const;
  std::vector<NodeId> nodes() const;
  std::vector<NodeId> cluster_nodes(int l) const;

  friend bool operator==(const ClusterTopology&, const ClusterTopology&) = default;

 private:
  int n_;
  int k_;
  int clusters_;
};

/// Incidence matrix of the complete graph K_t, edges in lexicographic order
/// (1,2), (1,3), ..., (t-1,t). Rows and columns are 1-based.
class IncidenceMatrix {
 public:
  /// Throws ParameterError for t < 2.
  explicit IncidenceMatrix(int t);

  int rows() const { return t_; }
  int cols() const { return t_ * (t_ - 1) / 2; }
  bool at(int row, int col) const;
  /// Endpoints of edge `col`.
  std::pair<int, int> edge(int col) const;
  /// Column of edge {a, b}, a != b.
  int column_of(int a, int b) const;
  /// Columns with a 1 in `row`, ascending.
  std::vector<int> row_support(int row) const;

 private:
  int t_;
  std::vector<std::pair<int, int>> edges_;
};

using ContactVector = std::vector<int>;

/// Every contact vector (per-cluster counts summing to k), lexicographic order.
std::vector<ContactVector> contact_vectors(const ClusterTopology& topo);
/// Cluster-greedy vector: floor(k/n_I) full clusters, then the remainder.
ContactVector omega_star(const ClusterTopology& topo);
/// True when `a` majorizes `b` (equal sums, dominating sorted partial sums).
bool majorizes(const ContactVector& a, const ContactVector& b);
/// Contact vector of a node set.
ContactVector contact_vector_of(const ClusterTopology& topo, std::span<const NodeId> nodes);
/// Lowest-index node choice realizing `omega`.
std::vector<NodeId> nodes_for_contact_vector(const ClusterTopology& topo, const ContactVector& omega);

std::int64_t binomial(int n, int k);

/// Calls `fn` with every k-subset of {0, ..., n-1} in lexicographic order.
/// Returning false from `fn` stops the enumeration.
void for_each_combination(int n, int k, const std::function<bool(std::span<const int>)>& fn);

}  // namespace cdss
