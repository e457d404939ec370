#include "cdss/capacity.hpp"

#include <algorithm>
#include <charconv>

#include "cdss/errors.hpp"

namespace cdss {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParameterError("malformed rational \"" + std::string(whole) + "\"; expected p/q");
  }
  return v;
}

void require_ratio(const Rational& epsilon) {
  if (epsilon < Rational(0) || epsilon > Rational(1)) {
    throw ParameterError("epsilon = beta_c/beta_I must lie in [0, 1], got " + to_string(epsilon));
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  const auto body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(body, text));
  const auto num = parse_int(trim(body.substr(0, slash)), text);
  const auto den = parse_int(trim(body.substr(slash + 1)), text);
  if (den == 0) throw ParameterError("rational \"" + std::string(text) + "\" has a zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

DerivedParams derive(const ClusterTopology& topo) {
  const int ni = topo.nodes_per_cluster();
  const int k = topo.k();
  DerivedParams d;
  d.q = k / ni;
  d.r = k % ni;
  for (int m = 1; m <= ni; ++m) {
    d.g.push_back(m <= d.r ? d.q + 1 : d.q);
    d.rho.push_back(ni - m);
  }
  for (int i = 1; i <= k; ++i) {
    int cumulative = 0;
    int t = 1;
    for (; t <= ni; ++t) {
      cumulative += d.g[static_cast<std::size_t>(t - 1)];
      if (cumulative >= i) break;
    }
    d.h.push_back(t);
    d.z.push_back(ni - t);
  }
  // Largest t with z_t >= 1, searched over {0, ..., k}; t = 0 is the fallback.
  d.tau = 0;
  for (int t = 1; t <= k; ++t) {
    if (d.z[static_cast<std::size_t>(t - 1)] >= 1) d.tau = t;
  }
  return d;
}

Rational s0(const ClusterTopology& topo, const Rational& epsilon) {
  require_ratio(epsilon);
  const auto d = derive(topo);
  const int n = topo.n();
  const int ni = topo.nodes_per_cluster();
  Rational numerator(0);
  for (int i = 1; i <= topo.k(); ++i) {
    const int hi = d.h[static_cast<std::size_t>(i - 1)];
    numerator += Rational(ni - hi) + epsilon * Rational(n - ni - i + hi);
  }
  const Rational denominator = Rational(ni - 1) + epsilon * Rational(n - ni);
  if (denominator == Rational(0)) {
    throw RegimeError("single-node clusters with epsilon = 0 admit no repair helpers");
  }
  return numerator / denominator;
}

Rational capacity(const ClusterTopology& topo, const Rational& alpha, const Rational& beta_intra,
                  const Rational& beta_cross) {
  if (alpha < Rational(0) || beta_intra < Rational(0) || beta_cross < Rational(0)) throw ParameterError("capacity inputs must be nonnegative");
  if (beta_cross > beta_intra) throw ParameterError("capacity assumes beta_c <= beta_I");
  const auto d = derive(topo);
  const int n = topo.n();
  Rational total(0);
  int preceding = 0;
  for (std::size_t i = 0; i < d.g.size(); ++i) {
    const int rho = d.rho[i];
    for (int j = 1; j <= d.g[i]; ++j) {
      const Rational flow = Rational(rho) * beta_intra + Rational(n - rho - preceding - j) * beta_cross;
      total += std::min(alpha, flow);
    }
    preceding += d.g[i];
  }
  return total;
}

ResourcePair mbr_point(const ClusterTopology& topo, const Rational& epsilon, const Rational& file_size) {
  if (file_size <= Rational(0)) throw ParameterError("file size must be positive");
  const Rational a = file_size / s0(topo, epsilon);
  return {a, a};
}

ResourcePair msr_point(const ClusterTopology& topo, const Rational& epsilon, const Rational& file_size) {
  require_ratio(epsilon);
  if (file_size <= Rational(0)) throw ParameterError("file size must be positive");
  const int n = topo.n();
  const int k = topo.k();
  const int ni = topo.nodes_per_cluster();
  if (epsilon == Rational(0)) {
    const int kq = k - k / ni;
    if (kq == 0) throw RegimeError("single-node clusters with epsilon = 0 admit no repair helpers");
    const Rational alpha = file_size / Rational(kq);
    return {alpha, alpha * Rational(ni - 1)};
  }
  const Rational threshold(1, n - k);
  if (epsilon < threshold) {
    throw RegimeError("no MSR point with alpha = M/k for 0 < epsilon < 1/(n-k) = " + to_string(threshold) +
                      " (alpha_msr > M/k in that regime); got epsilon = " + to_string(epsilon));
  }
  const Rational alpha = file_size / Rational(k);
  const Rational gamma = alpha * (Rational(n - ni) + Rational(ni - 1) / epsilon) / Rational(n - k);
  return {alpha, gamma};
}

std::int64_t mbr_file_size_zero(const ClusterTopology& topo) {
  const auto d = derive(topo);
  std::int64_t m = 0;
  for (int z : d.z) m += z;
  return m;
}

std::int64_t mbr_file_size_pos(const ClusterTopology& topo, int chi) {
  if (chi < 1) throw ParameterError("chi = 1/epsilon must be a positive integer");
  const std::int64_t n = topo.n();
  const std::int64_t k = topo.k();
  const std::int64_t ni = topo.nodes_per_cluster();
  const std::int64_t q = k / ni;
  const std::int64_t r = k % ni;
  const std::int64_t alpha = (ni - 1) * chi + (n - ni);
  return k * alpha - (chi - 1) * (q * ni * ni + r * r - k) / 2 - k * (k - 1) / 2;
}

std::int64_t sum_g(const DerivedParams& d) {
  std::int64_t s = 0;
  for (int g : d.g) s += g;
  return s;
}

std::int64_t weighted_sum_g(const DerivedParams& d) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < d.g.size(); ++i) s += static_cast<std::int64_t>(i + 1) * d.g[i];
  return s;
}

std::int64_t nested_sum_g(const DerivedParams& d) {
  std::int64_t s = 0;
  std::int64_t preceding = 0;
  for (int g : d.g) {
    for (int j = 1; j <= g; ++j) s += preceding + j;
    preceding += g;
  }
  return s;
}

SystemParams normalized_params(const ClusterTopology& topo, const Rational& epsilon, OperatingPoint point) {
  require_ratio(epsilon);
  const int n = topo.n();
  const int k = topo.k();
  const int ni = topo.nodes_per_cluster();
  SystemParams p;
  p.n = n;
  p.k = k;
  p.L = topo.clusters();
  p.epsilon = epsilon;

  if (point == OperatingPoint::mbr) {
    if (epsilon == Rational(0)) {
      p.beta_intra = 1;
      p.beta_cross = 0;
      p.alpha = p.gamma = Rational(ni - 1);
      p.file_size = Rational(mbr_file_size_zero(topo));
      p.theta = binomial(ni, 2) * topo.clusters();
    } else {
      p.beta_cross = 1;
      p.beta_intra = Rational(1) / epsilon;
      p.gamma = Rational(ni - 1) * p.beta_intra + Rational(n - ni);
      p.alpha = p.gamma;
      p.file_size = s0(topo, epsilon) * p.gamma;
      if (is_integer(p.beta_intra)) {
        p.theta = (p.beta_intra.numerator() - 1) * binomial(ni, 2) * topo.clusters() + binomial(n, 2);
      }
    }
    return p;
  }

  if (epsilon == Rational(0)) {
    if (ni == 1) throw RegimeError("single-node clusters with epsilon = 0 admit no repair helpers");
    const int q = k / ni;
    const int alpha = (k % ni == 0) ? ni : 1;
    p.alpha = alpha;
    p.beta_intra = alpha;
    p.beta_cross = 0;
    p.file_size = Rational(static_cast<std::int64_t>(k - q) * alpha);
    p.gamma = Rational(static_cast<std::int64_t>(ni - 1) * alpha);
    p.theta = static_cast<std::int64_t>(n) * alpha;
    return p;
  }
  // Validates the regime and yields gamma from the closed form.
  const Rational m(static_cast<std::int64_t>(k) * (n - k));
  const auto pair = msr_point(topo, epsilon, m);
  p.beta_cross = 1;
  p.beta_intra = Rational(1) / epsilon;
  p.alpha = pair.alpha;
  p.gamma = pair.gamma;
  p.file_size = m;
  p.theta = static_cast<std::int64_t>(n) * (n - k);
  return p;
}

}  // namespace cdss
