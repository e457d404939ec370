#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "cdss/topology.hpp"

namespace cdss {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" or an integer. Throws ParameterError on malformed text or q == 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
bool is_integer(const Rational& r);

/// Sequences derived from (n, k, L). g has n_I entries, h and z have k entries;
/// all are stored 0-based (g[0] is g_1).
struct DerivedParams {
  int q = 0;
  int r = 0;
  std::vector<int> g;
  std::vector<int> h;
  std::vector<int> rho;
  std::vector<int> z;
  int tau = 0;
};

DerivedParams derive(const ClusterTopology& topo);

/// s_0 for the MBR resource pair at ratio epsilon = beta_c / beta_I.
Rational s0(const ClusterTopology& topo, const Rational& epsilon);

/// Maximum reliably storable file size for the given storage and per-helper bandwidths.
Rational capacity(const ClusterTopology& topo, const Rational& alpha, const Rational& beta_intra,
                  const Rational& beta_cross);

struct ResourcePair {
  Rational alpha;
  Rational gamma;
};

/// (alpha, gamma) of the minimum-bandwidth point storing `file_size` symbols.
ResourcePair mbr_point(const ClusterTopology& topo, const Rational& epsilon, const Rational& file_size);
/// (alpha, gamma) of the minimum-storage point. Supported for epsilon == 0 and
/// 1/(n-k) <= epsilon <= 1; other ratios raise RegimeError.
ResourcePair msr_point(const ClusterTopology& topo, const Rational& epsilon, const Rational& file_size);

/// File size of the epsilon = 0 MBR code with beta_I = 1: sum of (n_I - h_i).
std::int64_t mbr_file_size_zero(const ClusterTopology& topo);
/// File size of the MBR code with beta_I = chi, beta_c = 1.
std::int64_t mbr_file_size_pos(const ClusterTopology& topo, int chi);

/// sum_i g_i
std::int64_t sum_g(const DerivedParams& d);
/// sum_i i * g_i
std::int64_t weighted_sum_g(const DerivedParams& d);
/// sum_i sum_{j <= g_i} (g_1 + ... + g_{i-1} + j)
std::int64_t nested_sum_g(const DerivedParams& d);

/// Repair and storage parameters of a concrete operating point. Integer-valued
/// for every constructible code; rational in general.
struct SystemParams {
  int n = 0;
  int k = 0;
  int L = 0;
  Rational epsilon;
  Rational beta_intra;
  Rational beta_cross;
  Rational alpha;
  Rational gamma;
  Rational file_size;
  // MDS codeword length for MBR codes, total coded symbols for MSR codes.
  std::optional<std::int64_t> theta;
};

enum class OperatingPoint { mbr, msr };

/// Normalized parameters: beta_I = 1 at epsilon = 0 (MBR); beta_c = 1,
/// beta_I = 1/epsilon otherwise. MSR at epsilon = 0 uses the smallest integral
/// base unit (alpha = n_I when n_I | k, else alpha = 1).
SystemParams normalized_params(const ClusterTopology& topo, const Rational& epsilon, OperatingPoint point);

}  // namespace cdss
