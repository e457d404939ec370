#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"

#include "cdss/codes.hpp"
#include "cdss/errors.hpp"
#include "cdss/harness.hpp"

using namespace cdss;

namespace {

using R = Rational;

// Edge {a, b} of K_t (1-based, a < b) to its lexicographic column.
int edge_column(int t, int a, int b) {
  int col = 0;
  for (int x = 1; x <= t; ++x) {
    for (int y = x + 1; y <= t; ++y) {
      ++col;
      if (x == a && y == b) return col;
    }
  }
  return -1;
}

std::vector<int> incident_columns(int t, int v) {
  std::vector<int> out;
  for (int w = 1; w <= t; ++w) {
    if (w != v) out.push_back(edge_column(t, std::min(v, w), std::max(v, w)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> layout_oracle(const ClusterTopology& topo, int chi, bool zero) {
  const int n = topo.n();
  const int ni = topo.nodes_per_cluster();
  const int pairs_n = n * (n - 1) / 2;
  const int pairs_i = ni * (ni - 1) / 2;
  std::vector<std::vector<int>> out;
  for (int u = 1; u <= n; ++u) {
    const int l = (u - 1) / ni + 1;
    const int j = (u - 1) % ni + 1;
    std::vector<int> idx;
    if (zero) {
      for (int c : incident_columns(ni, j)) idx.push_back((l - 1) * pairs_i + c);
    } else {
      idx = incident_columns(n, u);
      for (int t = 1; t < chi; ++t) {
        for (int c : incident_columns(ni, j)) idx.push_back(pairs_n + (chi * l - chi - l + t) * pairs_i + c);
      }
    }
    std::sort(idx.begin(), idx.end());
    out.push_back(idx);
  }
  return out;
}

std::map<NodeId, std::vector<int>> sent_indices(const RepairTranscript& t) {
  std::map<NodeId, std::vector<int>> out;
  for (const auto& c : t.contributions) {
    auto& v = out[c.helper];
    for (const auto& s : c.symbols) {
      REQUIRE(s.index);
      v.push_back(*s.index);
    }
    std::sort(v.begin(), v.end());
  }
  return out;
}

Placement build(CodeKind kind, const ClusterTopology& topo, R eps, int stripes = 1, std::uint64_t seed = 3) {
  auto scheme = make_scheme(kind, topo, eps);
  const auto src = random_source(*scheme->field(), static_cast<std::size_t>(scheme->file_size() * stripes), seed);
  return Placement::build(scheme, src);
}

}  // namespace

TEST_CASE("epsilon = 0 layout on the 12-node example") {
  const ClusterTopology topo(12, 6, 3);
  auto scheme = make_scheme(CodeKind::mbr0, topo, R(0));
  CHECK(scheme->symbol_count() == 18);
  CHECK(scheme->file_size() == 11);
  CHECK(scheme->alpha() == 3);
  const auto layout = scheme->index_layout();
  CHECK(layout == layout_oracle(topo, 1, true));
  CHECK(layout[static_cast<std::size_t>(topo.flat({2, 3}) - 1)] == std::vector<int>{8, 10, 12});
  CHECK(mbr_zero_layout(topo) == layout);

  std::map<int, int> copies;
  for (const auto& node : layout) {
    for (int i : node) ++copies[i];
  }
  CHECK(copies.size() == 18);
  for (const auto& [i, c] : copies) CHECK(c == 2);
}

TEST_CASE("epsilon = 0 repair copies the shared symbols") {
  const ClusterTopology topo(12, 6, 3);
  const auto p = build(CodeKind::mbr0, topo, R(0));
  const auto out = repair(p, {2, 3});
  CHECK(out.regenerated == p.node({2, 3}));
  const auto sent = sent_indices(out.transcript);
  CHECK(sent.at({2, 1}) == std::vector<int>{8});
  CHECK(sent.at({2, 2}) == std::vector<int>{10});
  CHECK(sent.at({2, 4}) == std::vector<int>{12});
  CHECK(out.transcript.helper_count(LinkClass::intra) == 3);
  CHECK(out.transcript.helper_count(LinkClass::cross) == 8);
  CHECK(out.transcript.per_helper(LinkClass::intra) == 1);
  CHECK(out.transcript.per_helper(LinkClass::cross) == 0);
  CHECK(out.transcript.gamma() == 3);

  for (const auto& id : topo.nodes()) CHECK(repair(p, id).regenerated == p.node(id));
}

TEST_CASE("epsilon = 0 reconstruction from every 6-subset") {
  const ClusterTopology topo(12, 6, 3);
  auto scheme = make_scheme(CodeKind::mbr0, topo, R(0));
  const auto src = random_source(*scheme->field(), 11, 9);
  const auto p = Placement::build(scheme, src);
  int subsets = 0;
  bool ok = true;
  for_each_combination(12, 6, [&](std::span<const int> c) {
    std::vector<NodeId> ids;
    for (int u : c) ids.push_back(topo.node_at(u + 1));
    ok = reconstruct(p, ids) == src;
    ++subsets;
    return ok;
  });
  CHECK(ok);
  CHECK(subsets == 924);

  const std::vector<NodeId> few{{1, 1}, {1, 2}};
  CHECK_THROWS_AS(reconstruct(p, few), InsufficientDataError);
  const std::vector<NodeId> dup{{1, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}};
  CHECK_THROWS_AS(reconstruct(p, dup), UsageError);
}

TEST_CASE("epsilon = 0 with two nodes per cluster") {
  const ClusterTopology topo(6, 3, 3);
  const auto p = build(CodeKind::mbr0, topo, R(0));
  CHECK(p.scheme().symbol_count() == 3);
  CHECK(p.scheme().alpha() == 1);
  CHECK(p.scheme().index_layout() == layout_oracle(topo, 1, true));
  CHECK(verify_all_repairs(p).pass);
  const auto src = random_source(*p.scheme().field(), static_cast<std::size_t>(p.scheme().file_size()), 3);
  CHECK(verify_reconstruction(p, src).pass);
}

TEST_CASE("chi = 3 layout on the 6-node example") {
  const ClusterTopology topo(6, 3, 2);
  auto scheme = make_scheme(CodeKind::mbr, topo, R(1, 3));
  CHECK(scheme->symbol_count() == 27);
  CHECK(scheme->file_size() == 18);
  CHECK(scheme->alpha() == 9);
  const auto layout = scheme->index_layout();
  CHECK(layout == layout_oracle(topo, 3, false));
  CHECK(mbr_pos_layout(topo, 3) == layout);
  CHECK(layout[1] == std::vector<int>{1, 6, 7, 8, 9, 16, 18, 19, 21});

  std::set<int> global;
  std::set<int> local;
  for (const auto& node : layout) {
    for (int i : node) (i <= 15 ? global : local).insert(i);
  }
  CHECK(global.size() == 15);
  CHECK(local.size() == 12);
}

TEST_CASE("local index bijection") {
  const ClusterTopology topo(6, 3, 2);
  CHECK(split_local_index(topo, 3, 16) == LocalIndex{1, 1, 1});
  CHECK(split_local_index(topo, 3, 27) == LocalIndex{2, 2, 3});
  for (int s = 16; s <= 27; ++s) CHECK(join_local_index(topo, 3, split_local_index(topo, 3, s)) == s);
  CHECK_THROWS_AS(split_local_index(topo, 3, 15), UsageError);
  CHECK_THROWS_AS(split_local_index(topo, 3, 28), UsageError);

  const ClusterTopology big(12, 6, 3);
  std::set<std::tuple<int, int, int>> seen;
  for (int s = 67; s <= 66 + 3 * 3 * 6; ++s) {
    const auto li = split_local_index(big, 4, s);
    seen.insert({li.l, li.t, li.i2});
    CHECK(join_local_index(big, 4, li) == s);
  }
  CHECK(seen.size() == 54);
}

TEST_CASE("chi = 3 repair of N(1,2)") {
  const ClusterTopology topo(6, 3, 2);
  const auto p = build(CodeKind::mbr, topo, R(1, 3));
  const auto out = repair(p, {1, 2});
  CHECK(out.regenerated == p.node({1, 2}));
  const auto sent = sent_indices(out.transcript);
  CHECK(sent.at({1, 1}) == std::vector<int>{1, 16, 19});
  CHECK(sent.at({1, 3}) == std::vector<int>{6, 18, 21});
  CHECK(sent.at({2, 1}) == std::vector<int>{7});
  CHECK(sent.at({2, 2}) == std::vector<int>{8});
  CHECK(sent.at({2, 3}) == std::vector<int>{9});
  CHECK(out.transcript.gamma() == 9);
  CHECK(out.transcript.per_helper(LinkClass::intra) == 3);
  CHECK(out.transcript.per_helper(LinkClass::cross) == 1);
}

TEST_CASE("chi = 3 contact inside one cluster sees exactly M distinct symbols") {
  const ClusterTopology topo(6, 3, 2);
  const auto p = build(CodeKind::mbr, topo, R(1, 3));
  std::set<int> seen;
  for (int j = 1; j <= 3; ++j) {
    for (const auto& s : p.node({1, j})) seen.insert(s.index);
  }
  std::set<int> expected;
  for (int i = 1; i <= 12; ++i) expected.insert(i);
  for (int i = 16; i <= 21; ++i) expected.insert(i);
  CHECK(seen == expected);
  CHECK(count_distinct(p, {3, 0}).measured == 18);

  const auto src = random_source(*p.scheme().field(), 18, 3);
  CHECK(verify_reconstruction(p, src, Coverage::exhaustive).pass);
}

TEST_CASE("chi = 1 is the classical repair-by-transfer layout") {
  for (int n : {6, 10}) {
    const ClusterTopology topo(n, n == 6 ? 3 : 4, 2);
    auto scheme = make_scheme(CodeKind::mbr, topo, R(1));
    CHECK(scheme->symbol_count() == n * (n - 1) / 2);
    const auto layout = scheme->index_layout();
    for (std::size_t a = 0; a < layout.size(); ++a) {
      for (std::size_t b = a + 1; b < layout.size(); ++b) {
        std::vector<int> common;
        std::set_intersection(layout[a].begin(), layout[a].end(), layout[b].begin(), layout[b].end(),
                              std::back_inserter(common));
        CHECK(common.size() == 1);
      }
    }
  }
}

TEST_CASE("several stripes") {
  const ClusterTopology topo(12, 6, 3);
  auto scheme = make_scheme(CodeKind::mbr0, topo, R(0));
  const auto src = random_source(*scheme->field(), 33, 5);
  const auto p = Placement::build(scheme, src);
  CHECK(p.stripes() == 3);
  CHECK(p.node({1, 1}).size() == 9);
  CHECK(p.params().file_size == R(33));
  CHECK(p.params().gamma == R(9));
  for (const auto& id : topo.nodes()) CHECK(repair(p, id).regenerated == p.node(id));
  const auto ids = nodes_for_contact_vector(topo, {2, 2, 2});
  CHECK(reconstruct(p, ids) == src);
  CHECK_THROWS_AS(Placement::build(scheme, std::vector<FieldElement>(12)), UsageError);
}

TEST_CASE("tampered transcripts are caught") {
  const ClusterTopology topo(6, 3, 2);
  const auto p = build(CodeKind::mbr, topo, R(1, 3));
  CHECK(verify_exact_repair(p, {1, 2}).pass);
  const auto flip = [](RepairTranscript& t) {
    auto& s = t.contributions.front().symbols.front();
    s.value += FieldElement(1);
  };
  CHECK_FALSE(verify_exact_repair(p, {1, 2}, flip).pass);
  const auto drop = [](RepairTranscript& t) { t.contributions.back().symbols.clear(); };
  CHECK_FALSE(verify_exact_repair(p, {1, 2}, drop).pass);
}

TEST_CASE("regime checks") {
  CHECK_THROWS_AS(make_scheme(CodeKind::mbr0, ClusterTopology(6, 3, 2), R(1, 3)), RegimeError);
  CHECK_THROWS_AS(make_scheme(CodeKind::mbr, ClusterTopology(6, 3, 2), R(0)), RegimeError);
  CHECK_THROWS_AS(make_scheme(CodeKind::mbr, ClusterTopology(6, 3, 2), R(2, 3)), ParameterError);
  // theta = 276 + 132 exceeds the 255 points of GF(2^8).
  auto s = make_scheme(CodeKind::mbr, ClusterTopology(24, 10, 2), R(1, 2));
  CHECK(s->field()->degree() == 16);
  CHECK_THROWS_AS(make_scheme(CodeKind::mbr, ClusterTopology(24, 10, 2), R(1, 2), GaloisField::gf256()),
                  ParameterError);
}
