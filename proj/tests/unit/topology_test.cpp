#include <algorithm>
#include <functional>

#include "doctest.h"

#include "cdss/errors.hpp"
#include "cdss/topology.hpp"

using namespace cdss;

namespace {

std::vector<std::string> incidence_rows(const IncidenceMatrix& v) {
  std::vector<std::string> out;
  for (int r = 1; r <= v.rows(); ++r) {
    std::string row;
    for (int c = 1; c <= v.cols(); ++c) row += v.at(r, c) ? '1' : '0';
    out.push_back(row);
  }
  return out;
}

// All length-L vectors with entries in [0, n_I] summing to k, by odometer.
std::vector<ContactVector> brute_force_contacts(int L, int n_i, int k) {
  std::vector<ContactVector> out;
  ContactVector v(static_cast<std::size_t>(L), 0);
  while (true) {
    int sum = 0;
    for (int x : v) sum += x;
    if (sum == k) out.push_back(v);
    int pos = L - 1;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == n_i) v[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++v[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace

TEST_CASE("V_3 and V_2") {
  CHECK(incidence_rows(IncidenceMatrix(3)) == std::vector<std::string>{"110", "101", "011"});
  CHECK(incidence_rows(IncidenceMatrix(2)) == std::vector<std::string>{"1", "1"});
  CHECK_THROWS_AS(IncidenceMatrix(1), ParameterError);
}

TEST_CASE("V_6 matches the printed matrix") {
  const std::vector<std::string> expected{
      "111110000000000", "100001111000000", "010001000111000",
      "001000100100110", "000100010010101", "000010001001011",
  };
  CHECK(incidence_rows(IncidenceMatrix(6)) == expected);
}

TEST_CASE("incidence matrix clauses for t = 2..12") {
  for (int t = 2; t <= 12; ++t) {
    const IncidenceMatrix v(t);
    CHECK(v.cols() == t * (t - 1) / 2);
    for (int r = 1; r <= t; ++r) {
      int ones = 0;
      for (int c = 1; c <= v.cols(); ++c) ones += v.at(r, c);
      CHECK(ones == t - 1);
      CHECK(v.row_support(r).size() == static_cast<std::size_t>(t - 1));
    }
    for (int c = 1; c <= v.cols(); ++c) {
      int ones = 0;
      for (int r = 1; r <= t; ++r) ones += v.at(r, c);
      CHECK(ones == 2);
      const auto [a, b] = v.edge(c);
      CHECK(v.column_of(a, b) == c);
      CHECK(v.column_of(b, a) == c);
    }
    for (int a = 1; a <= t; ++a) {
      for (int b = a + 1; b <= t; ++b) {
        int shared = 0;
        for (int c = 1; c <= v.cols(); ++c) shared += v.at(a, c) && v.at(b, c);
        CHECK(shared == 1);
      }
    }
  }
}

TEST_CASE("flat index bijection") {
  const ClusterTopology topo(12, 6, 3);
  CHECK(topo.nodes_per_cluster() == 4);
  CHECK(topo.flat({2, 3}) == 7);
  CHECK(topo.node_at(1) == NodeId{1, 1});
  for (int u = 1; u <= 12; ++u) CHECK(topo.flat(topo.node_at(u)) == u);
  CHECK(topo.nodes().size() == 12);
  CHECK(topo.cluster_nodes(3).front() == NodeId{3, 1});
  CHECK_FALSE(topo.contains({4, 1}));
  CHECK_FALSE(topo.contains({1, 5}));
  CHECK_THROWS_AS(topo.flat({0, 1}), UsageError);
  CHECK_THROWS_AS(topo.node_at(13), UsageError);
}

TEST_CASE("topology validation") {
  CHECK_THROWS_AS(ClusterTopology(10, 3, 3), ParameterError);
  CHECK_THROWS_AS(ClusterTopology(6, 6, 2), ParameterError);
  CHECK_THROWS_AS(ClusterTopology(6, 0, 2), ParameterError);
  CHECK_THROWS_AS(ClusterTopology(6, 2, 0), ParameterError);
  CHECK_NOTHROW(ClusterTopology(6, 5, 6));
}

TEST_CASE("node id parsing") {
  CHECK(parse_node_id("2,3") == NodeId{2, 3});
  CHECK(parse_node_list("1,1 2,2  3,4") == std::vector<NodeId>{{1, 1}, {2, 2}, {3, 4}});
  CHECK(to_string(NodeId{2, 3}) == "2,3");
  CHECK_THROWS_AS(parse_node_id("2"), UsageError);
  CHECK_THROWS_AS(parse_node_id("a,b"), UsageError);
  CHECK_THROWS_AS(parse_node_id("1,2,3"), UsageError);
}

TEST_CASE("contact vectors agree with brute force") {
  const ClusterTopology topo(12, 6, 3);
  const auto omega = contact_vectors(topo);
  CHECK(omega.size() == 19);
  CHECK(omega == brute_force_contacts(3, 4, 6));
  CHECK(std::is_sorted(omega.begin(), omega.end()));

  CHECK(contact_vectors(ClusterTopology(6, 4, 1)) == std::vector<ContactVector>{{4}});
  for (int n = 2; n <= 12; ++n) {
    for (int L = 1; L <= n; ++L) {
      if (n % L != 0) continue;
      for (int k = 1; k < n; ++k) {
        CHECK(contact_vectors(ClusterTopology(n, k, L)) == brute_force_contacts(L, n / L, k));
      }
    }
  }
}

TEST_CASE("omega star and majorization") {
  CHECK(omega_star(ClusterTopology(12, 6, 3)) == ContactVector{4, 2, 0});
  CHECK(omega_star(ClusterTopology(12, 4, 3)) == ContactVector{4, 0, 0});
  CHECK(majorizes({4, 2, 0}, {2, 2, 2}));
  CHECK_FALSE(majorizes({2, 2, 2}, {4, 2, 0}));
  CHECK_FALSE(majorizes({3, 0}, {1, 1}));

  for (int n = 2; n <= 12; ++n) {
    for (int L = 1; L <= n; ++L) {
      if (n % L != 0) continue;
      for (int k = 1; k < n; ++k) {
        const ClusterTopology topo(n, k, L);
        const auto star = omega_star(topo);
        auto sorted_star = star;
        std::sort(sorted_star.rbegin(), sorted_star.rend());
        for (const auto& w : contact_vectors(topo)) {
          auto sorted = w;
          std::sort(sorted.rbegin(), sorted.rend());
          int a = 0;
          int b = 0;
          for (std::size_t i = 0; i < sorted.size(); ++i) {
            a += sorted_star[i];
            b += sorted[i];
            CHECK(a >= b);
          }
          CHECK(majorizes(star, w));
        }
      }
    }
  }
}

TEST_CASE("nodes realizing a contact vector") {
  const ClusterTopology topo(12, 6, 3);
  const auto nodes = nodes_for_contact_vector(topo, {1, 3, 2});
  CHECK(nodes == std::vector<NodeId>{{1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}});
  CHECK(contact_vector_of(topo, nodes) == ContactVector{1, 3, 2});
}

TEST_CASE("binomial and combinations") {
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  int count = 0;
  std::vector<int> first;
  for_each_combination(5, 3, [&](std::span<const int> c) {
    if (count == 0) first.assign(c.begin(), c.end());
    ++count;
    return true;
  });
  CHECK(count == 10);
  CHECK(first == std::vector<int>{0, 1, 2});
  count = 0;
  for_each_combination(5, 3, [&](std::span<const int>) { return ++count < 4; });
  CHECK(count == 4);
}
