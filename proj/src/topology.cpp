#include "cdss/topology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cdss/errors.hpp"

namespace cdss {

std::string to_string(NodeId id) { return std::to_string(id.l) + "," + std::to_string(id.j); }

NodeId parse_node_id(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("node must be written \"l,j\", got \"" + text + "\"");
  try {
    std::size_t used_l = 0;
    std::size_t used_j = 0;
    const std::string ls = text.substr(0, comma);
    const std::string js = text.substr(comma + 1);
    NodeId id{std::stoi(ls, &used_l), std::stoi(js, &used_j)};
    if (used_l != ls.size() || used_j != js.size()) throw std::invalid_argument("trailing characters");
    return id;
  } catch (const std::logic_error&) {
    throw UsageError("node must be written \"l,j\", got \"" + text + "\"");
  }
}

std::vector<NodeId> parse_node_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<NodeId> out;
  for (std::string token; in >> token;) out.push_back(parse_node_id(token));
  return out;
}

ClusterTopology::ClusterTopology(int n, int k, int L) : n_(n), k_(k), clusters_(L) {
  if (n < 2) throw ParameterError("n must be at least 2");
  if (L < 1 || n % L != 0) {
    throw ParameterError("nodes must split uniformly: L=" + std::to_string(L) + " does not divide n=" +
                         std::to_string(n));
  }
  if (k < 1 || k >= n) throw ParameterError("k must satisfy 1 <= k < n, got k=" + std::to_string(k));
}

int ClusterTopology::flat(NodeId id) const {
  if (!contains(id)) throw UsageError("node " + to_string(id) + " is outside the topology");
  return (id.l - 1) * nodes_per_cluster() + id.j;
}

NodeId ClusterTopology::node_at(int u) const {
  if (u < 1 || u > n_) throw UsageError("flat node index " + std::to_string(u) + " out of range");
  const int ni = nodes_per_cluster();
  return NodeId{(u - 1) / ni + 1, (u - 1) % ni + 1};
}

bool ClusterTopology::contains(NodeId id) const {
  return id.l >= 1 && id.l <= clusters_ && id.j >= 1 && id.j <= nodes_per_cluster();
}

std::vector<NodeId> ClusterTopology::nodes() const {
  std::vector<NodeId> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int u = 1; u <= n_; ++u) out.push_back(node_at(u));
  return out;
}

std::vector<NodeId> ClusterTopology::cluster_nodes(int l) const {
  std::vector<NodeId> out;
  for (int j = 1; j <= nodes_per_cluster(); ++j) out.push_back(NodeId{l, j});
  return out;
}

IncidenceMatrix::IncidenceMatrix(int t) : t_(t) {
  if (t < 2) throw ParameterError("incidence matrix needs t >= 2, got " + std::to_string(t));
  for (int a = 1; a <= t; ++a) {
    for (int b = a + 1; b <= t; ++b) edges_.emplace_back(a, b);
  }
}

bool IncidenceMatrix::at(int row, int col) const {
  const auto [a, b] = edge(col);
  if (row < 1 || row > t_) throw UsageError("incidence row out of range");
  return row == a || row == b;
}

std::pair<int, int> IncidenceMatrix::edge(int col) const {
  if (col < 1 || col > cols()) throw UsageError("incidence column out of range");
  return edges_[static_cast<std::size_t>(col - 1)];
}

int IncidenceMatrix::column_of(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > t_ || a == b) throw UsageError("no edge between these vertices");
  return (a - 1) * t_ - a * (a - 1) / 2 + (b - a);
}

std::vector<int> IncidenceMatrix::row_support(int row) const {
  std::vector<int> out;
  for (int other = 1; other <= t_; ++other) {
    if (other != row) out.push_back(column_of(row, other));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ContactVector> contact_vectors(const ClusterTopology& topo) {
  const int L = topo.clusters();
  const int cap = topo.nodes_per_cluster();
  std::vector<ContactVector> out;
  ContactVector current(static_cast<std::size_t>(L), 0);
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == L - 1) {
      if (remaining <= cap) {
        current[static_cast<std::size_t>(pos)] = remaining;
        out.push_back(current);
      }
      return;
    }
    for (int v = 0; v <= std::min(cap, remaining); ++v) {
      current[static_cast<std::size_t>(pos)] = v;
      fill(pos + 1, remaining - v);
    }
  };
  fill(0, topo.k());
  return out;
}

ContactVector omega_star(const ClusterTopology& topo) {
  const int ni = topo.nodes_per_cluster();
  const int q = topo.k() / ni;
  ContactVector w(static_cast<std::size_t>(topo.clusters()), 0);
  for (int i = 0; i < q; ++i) w[static_cast<std::size_t>(i)] = ni;
  if (q < topo.clusters()) w[static_cast<std::size_t>(q)] = topo.k() - q * ni;
  return w;
}

bool majorizes(const ContactVector& a, const ContactVector& b) {
  if (a.size() != b.size()) return false;
  auto sa = a;
  auto sb = b;
  std::sort(sa.rbegin(), sa.rend());
  std::sort(sb.rbegin(), sb.rend());
  long pa = 0;
  long pb = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    pa += sa[i];
    pb += sb[i];
    if (pa < pb) return false;
  }
  return pa == pb;
}

ContactVector contact_vector_of(const ClusterTopology& topo, std::span<const NodeId> nodes) {
  ContactVector w(static_cast<std::size_t>(topo.clusters()), 0);
  for (const auto& id : nodes) {
    if (!topo.contains(id)) throw UsageError("node " + to_string(id) + " is outside the topology");
    ++w[static_cast<std::size_t>(id.l - 1)];
  }
  return w;
}

std::vector<NodeId> nodes_for_contact_vector(const ClusterTopology& topo, const ContactVector& omega) {
  if (omega.size() != static_cast<std::size_t>(topo.clusters())) throw UsageError("contact vector length != L");
  std::vector<NodeId> out;
  for (int l = 1; l <= topo.clusters(); ++l) {
    const int count = omega[static_cast<std::size_t>(l - 1)];
    if (count < 0 || count > topo.nodes_per_cluster()) throw UsageError("contact vector entry out of range");
    for (int j = 1; j <= count; ++j) out.push_back(NodeId{l, j});
  }
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void for_each_combination(int n, int k, const std::function<bool(std::span<const int>)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace cdss
