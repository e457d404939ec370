#include <algorithm>

#include "doctest.h"

#include "cdss/capacity.hpp"
#include "cdss/errors.hpp"

using namespace cdss;

namespace {

using R = Rational;

// Straight transcription of the capacity double sum with g and rho rebuilt
// from their definitions.
R capacity_oracle(int n, int k, int L, R alpha, R bi, R bc) {
  const int ni = n / L;
  const int q = k / ni;
  const int r = k % ni;
  R total(0);
  int before = 0;
  for (int i = 1; i <= ni; ++i) {
    const int g = i <= r ? q + 1 : q;
    const int rho = ni - i;
    for (int j = 1; j <= g; ++j) {
      const R term = R(rho) * bi + R(n - rho - before - j) * bc;
      total += std::min(alpha, term);
    }
    before += g;
  }
  return total;
}

template <typename F>
void for_each_topology(int n_max, F&& fn) {
  for (int n = 2; n <= n_max; ++n) {
    for (int L = 1; L <= n; ++L) {
      if (n % L != 0) continue;
      for (int k = 1; k < n; ++k) fn(ClusterTopology(n, k, L));
    }
  }
}

}  // namespace

TEST_CASE("derive on the 12-node example") {
  const auto d = derive(ClusterTopology(12, 6, 3));
  CHECK(d.q == 1);
  CHECK(d.r == 2);
  CHECK(d.g == std::vector<int>{2, 2, 1, 1});
  CHECK(d.h == std::vector<int>{1, 1, 2, 2, 3, 4});
  CHECK(d.rho == std::vector<int>{3, 2, 1, 0});
  CHECK(d.tau == 5);
}

TEST_CASE("derive with k = n_I") {
  const auto d = derive(ClusterTopology(12, 4, 3));
  CHECK(d.q == 1);
  CHECK(d.r == 0);
  CHECK(d.g == std::vector<int>{1, 1, 1, 1});
  CHECK(d.h == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("derived sequences satisfy their invariants") {
  for_each_topology(24, [](const ClusterTopology& t) {
    const auto d = derive(t);
    const int ni = t.nodes_per_cluster();
    CHECK(sum_g(d) == t.k());
    CHECK(2 * weighted_sum_g(d) == d.q * ni * ni + d.r * d.r + t.k());
    CHECK(2 * nested_sum_g(d) == t.k() + t.k() * t.k());
    CHECK(d.tau == t.k() - d.q);
    CHECK(std::is_sorted(d.h.begin(), d.h.end()));
    for (int h : d.h) CHECK((h >= 1 && h <= ni));
    int tail = d.tau;
    for (std::size_t i = static_cast<std::size_t>(d.tau); i < d.z.size(); ++i) tail += d.z[i];
    CHECK(tail == t.k() - d.q);
  });
}

TEST_CASE("capacity examples") {
  const ClusterTopology a(12, 6, 3);
  CHECK(capacity(a, R(3), R(1), R(0)) == R(11));
  CHECK(capacity(a, R(0), R(1), R(0)) == R(0));
  const ClusterTopology b(6, 3, 2);
  CHECK(capacity(b, R(9), R(3), R(1)) == R(18));
}

TEST_CASE("capacity matches the oracle on rational inputs") {
  for_each_topology(12, [](const ClusterTopology& t) {
    for (const R eps : {R(0), R(1, 3), R(1, 2), R(1)}) {
      for (const R alpha : {R(1), R(5, 2), R(7)}) {
        CHECK(capacity(t, alpha, R(1), eps) ==
              capacity_oracle(t.n(), t.k(), t.clusters(), alpha, R(1), eps));
      }
    }
  });
}

TEST_CASE("mbr point") {
  const ClusterTopology a(12, 6, 3);
  CHECK(s0(a, R(0)) == R(11, 3));
  const auto p0 = mbr_point(a, R(0), R(11));
  CHECK(p0.alpha == R(3));
  CHECK(p0.gamma == R(3));

  const ClusterTopology b(6, 3, 2);
  const auto p = mbr_point(b, R(1, 3), R(18));
  CHECK(p.alpha == R(9));
  CHECK(p.gamma == R(9));

  // epsilon = 1: s0 collapses to sum_{i<k} (n - i) / (n - 1).
  for_each_topology(12, [](const ClusterTopology& t) {
    R expected(0);
    for (int i = 1; i <= t.k(); ++i) expected += R(t.n() - i, t.n() - 1);
    CHECK(s0(t, R(1)) == expected);
  });
}

TEST_CASE("mbr point reaches capacity") {
  for_each_topology(12, [](const ClusterTopology& t) {
    for (const R eps : {R(0), R(1, 4), R(1, 2), R(1)}) {
      if (t.nodes_per_cluster() == 1 && eps == R(0)) continue;
      const auto p = mbr_point(t, eps, R(60));
      const R bi = p.gamma / (R(t.nodes_per_cluster() - 1) + R(t.n() - t.nodes_per_cluster()) * eps);
      CHECK(capacity_oracle(t.n(), t.k(), t.clusters(), p.alpha, bi, bi * eps) == R(60));
    }
  });
}

TEST_CASE("msr point") {
  const auto p0 = msr_point(ClusterTopology(6, 3, 2), R(0), R(6));
  CHECK(p0.alpha == R(3));
  CHECK(p0.gamma == R(6));

  const auto p = msr_point(ClusterTopology(6, 2, 3), R(1, 4), R(8));
  CHECK(p.alpha == R(4));
  CHECK(p.gamma == R(8));

  const ClusterTopology t(9, 5, 3);
  const auto p1 = msr_point(t, R(1), R(20));
  CHECK(p1.alpha == R(4));
  CHECK(p1.gamma == R(4) * R(8, 4));

  CHECK_THROWS_AS(msr_point(ClusterTopology(6, 2, 3), R(1, 5), R(8)), RegimeError);
  CHECK_THROWS_AS(msr_point(t, R(1, 10), R(20)), RegimeError);

  for_each_topology(16, [](const ClusterTopology& tt) {
    const R eps(1, tt.n() - tt.k());
    CHECK(msr_point(tt, eps, R(tt.k())).alpha == R(1));
    const auto d = derive(tt);
    if (d.q >= 1 && tt.nodes_per_cluster() > 1) CHECK(msr_point(tt, R(0), R(tt.k())).alpha > R(1));
  });
}

TEST_CASE("mbr file sizes") {
  CHECK(mbr_file_size_zero(ClusterTopology(12, 6, 3)) == 11);
  CHECK(mbr_file_size_pos(ClusterTopology(6, 3, 2), 3) == 18);
  for_each_topology(24, [](const ClusterTopology& t) {
    const int ni = t.nodes_per_cluster();
    if (t.k() == 1) CHECK(mbr_file_size_zero(t) == ni - 1);
    CHECK(R(mbr_file_size_zero(t)) == capacity_oracle(t.n(), t.k(), t.clusters(), R(ni - 1), R(1), R(0)));
    for (int chi = 1; chi <= 4; ++chi) {
      const int alpha = (ni - 1) * chi + (t.n() - ni);
      CHECK(R(mbr_file_size_pos(t, chi)) ==
            capacity_oracle(t.n(), t.k(), t.clusters(), R(alpha), R(chi), R(1)));
    }
    const int alpha1 = t.n() - 1;
    CHECK(mbr_file_size_pos(t, 1) == t.k() * alpha1 - t.k() * (t.k() - 1) / 2);
  });
}

TEST_CASE("normalized params") {
  const auto p = normalized_params(ClusterTopology(12, 6, 3), R(0), OperatingPoint::mbr);
  CHECK(p.alpha == R(3));
  CHECK(p.gamma == R(3));
  CHECK(p.file_size == R(11));
  CHECK(p.theta == 18);

  const auto q = normalized_params(ClusterTopology(6, 2, 3), R(1, 4), OperatingPoint::msr);
  CHECK(q.beta_intra == R(4));
  CHECK(q.beta_cross == R(1));
  CHECK(q.alpha == R(4));
  CHECK(q.gamma == R(8));
  CHECK(q.file_size == R(8));

  for_each_topology(12, [](const ClusterTopology& t) {
    for (const R eps : {R(0), R(1, 3), R(1)}) {
      const auto s = normalized_params(t, eps, OperatingPoint::mbr);
      const int ni = t.nodes_per_cluster();
      CHECK(s.gamma == R(ni - 1) * s.beta_intra + R(t.n() - ni) * s.beta_cross);
      CHECK(s.alpha == s.gamma);
    }
  });
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("1/4") == R(1, 4));
  CHECK(parse_rational("2/4") == R(1, 2));
  CHECK(parse_rational("3") == R(3));
  CHECK(to_string(R(3, 6)) == "1/2");
  CHECK(to_string(R(2)) == "2");
  CHECK(is_integer(R(4, 2)));
  CHECK_THROWS_AS(parse_rational("1/0"), ParameterError);
  CHECK_THROWS_AS(parse_rational("x"), ParameterError);
  CHECK_THROWS_AS(parse_rational("1/"), ParameterError);
  CHECK_THROWS_AS(parse_rational(""), ParameterError);
}
