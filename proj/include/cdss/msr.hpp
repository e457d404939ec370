#pragma once

#include <memory>
#include <span>
#include <vector>

#include "cdss/code.hpp"
#include "cdss/rs_code.hpp"

namespace cdss {

/// epsilon = 0, n_I | k: n_I - 1 stacked (n, k) RS codewords plus their sums,
/// rotated inside each cluster so each node holds one element of each of its
/// cluster's n_I parity groups. alpha = n_I, M = k(n_I - 1).
class MsrDivisibleCode final : public Scheme {
 public:
  /// Throws RegimeError unless n_I | k and n_I >= 2.
  MsrDivisibleCode(const ClusterTopology& topo, FieldPtr field);
  CodeKind kind() const override { return CodeKind::msr0_div; }

  /// Parity group i(j, t) of slot t at node (l, j); slot n_I is the parity.
  int group_of(NodeId id, int slot) const;
  /// Coded-symbol index of slot t in group i.
  int symbol_index(int group, int slot) const { return (group - 1) * topology_.nodes_per_cluster() + slot; }
  const RsCode& component() const { return rs_; }

  std::vector<NodeContent> encode(std::span<const FieldElement> source) const override;
  std::vector<HelperContribution> transmit(std::span<const NodeContent> nodes, NodeId failed) const override;
  NodeContent regenerate(NodeId failed, std::span<const HelperContribution> received) const override;
  std::vector<FieldElement> reconstruct(std::span<const NodeId> contacted,
                                        std::span<const NodeContent> contents) const override;

 private:
  RsCode rs_;
};

/// epsilon = 0, n_I does not divide k: an outer systematic (T, k - q) RS code,
/// T = L(n_I - 1), whose output is split into L groups, each completed by a
/// single parity. Node N(l, j) stores y_{n_I(l-1)+j}. alpha = 1, M = k - q.
class MsrNondivisibleCode final : public Scheme {
 public:
  /// Throws RegimeError when n_I | k; ParameterError when no evaluation-point
  /// shift yields the any-k rank property.
  MsrNondivisibleCode(const ClusterTopology& topo, FieldPtr field);
  CodeKind kind() const override { return CodeKind::msr0_nondiv; }

  const RsCode& outer() const { return outer_; }
  /// (k - q) x n map from source to node symbols.
  const Matrix& overall_generator() const { return generator_; }
  /// Offset added to 1..T to obtain the outer evaluation points.
  int point_shift() const { return shift_; }

  std::vector<NodeContent> encode(std::span<const FieldElement> source) const override;
  std::vector<HelperContribution> transmit(std::span<const NodeContent> nodes, NodeId failed) const override;
  NodeContent regenerate(NodeId failed, std::span<const HelperContribution> received) const override;
  std::vector<FieldElement> reconstruct(std::span<const NodeId> contacted,
                                        std::span<const NodeContent> contents) const override;

 private:
  RsCode outer_;
  Matrix generator_;
  int shift_ = 0;
};

/// True when every k-column subset of `g` has rank g.rows().
bool any_k_full_rank(const GaloisField& f, const Matrix& g, int k);

/// epsilon = 1/(n-k), n = kL: n - k independent (n, k) RS codewords; node N_t
/// stores coordinate t of each. Cross-cluster helpers are assigned component
/// codes in ascending flat index order.
class MsrStackedCode final : public Scheme {
 public:
  /// Throws RegimeError unless n = kL.
  MsrStackedCode(const ClusterTopology& topo, FieldPtr field);
  CodeKind kind() const override { return CodeKind::msr_stacked; }
  const RsCode& component() const { return rs_; }

  std::vector<NodeContent> encode(std::span<const FieldElement> source) const override;
  std::vector<HelperContribution> transmit(std::span<const NodeContent> nodes, NodeId failed) const override;
  NodeContent regenerate(NodeId failed, std::span<const HelperContribution> received) const override;
  std::vector<FieldElement> reconstruct(std::span<const NodeId> contacted,
                                        std::span<const NodeContent> contents) const override;

 private:
  RsCode rs_;
};

/// A non-clustered MSR code with d = n - 1 helpers: alpha = n - k,
/// M = k(n - k). Nodes are 0-based here.
class BaseMsrCode {
 public:
  virtual ~BaseMsrCode() = default;
  virtual int n() const = 0;
  virtual int k() const = 0;
  int alpha() const { return n() - k(); }
  int file_size() const { return k() * (n() - k()); }
  const FieldPtr& field() const { return field_; }

  /// Returns n node vectors of alpha symbols.
  virtual std::vector<std::vector<FieldElement>> encode(std::span<const FieldElement> source) const = 0;
  /// The single symbol helper `helper` sends toward `failed`.
  virtual FieldElement repair_symbol(int helper, std::span<const FieldElement> content, int failed) const = 0;
  /// Rebuilds node `failed` from one symbol per helper; `helpers[i]` sent `symbols[i]`.
  virtual std::vector<FieldElement> repair(int failed, std::span<const int> helpers,
                                           std::span<const FieldElement> symbols) const = 0;
  /// Recovers the source from at least k distinct nodes.
  virtual std::vector<FieldElement> reconstruct(std::span<const int> nodes,
                                                std::span<const std::vector<FieldElement>> contents) const = 0;

 protected:
  explicit BaseMsrCode(FieldPtr field) : field_(std::move(field)) {}
  FieldPtr field_;
};

/// Product-matrix MSR code at d = 2k - 2, valid for n = 2k - 1 (so d = n - 1).
class ProductMatrixMsr final : public BaseMsrCode {
 public:
  /// Throws RegimeError unless n = 2k - 1 and k >= 2; ParameterError when the
  /// field lacks n points with distinct x^alpha.
  ProductMatrixMsr(int n, int k, FieldPtr field);

  int n() const override { return n_; }
  int k() const override { return k_; }
  /// Encoding matrix Psi (n x 2 alpha).
  const Matrix& psi() const { return psi_; }

  std::vector<std::vector<FieldElement>> encode(std::span<const FieldElement> source) const override;
  FieldElement repair_symbol(int helper, std::span<const FieldElement> content, int failed) const override;
  std::vector<FieldElement> repair(int failed, std::span<const int> helpers,
                                   std::span<const FieldElement> symbols) const override;
  std::vector<FieldElement> reconstruct(std::span<const int> nodes,
                                        std::span<const std::vector<FieldElement>> contents) const override;

 private:
  std::vector<FieldElement> phi(int node) const;

  int n_;
  int k_;
  Matrix psi_;
  std::vector<FieldElement> lambda_;
};

/// Clustered MSR code for 1/(n-k) <= epsilon = 1/chi <= 1 over a base MSR
/// code: cross helpers send their base repair symbol once, intra helpers
/// chi times.
class WrappedMsrCode final : public Scheme {
 public:
  WrappedMsrCode(std::shared_ptr<const BaseMsrCode> base, const ClusterTopology& topo, int chi);
  CodeKind kind() const override { return CodeKind::msr_wrapped; }
  int chi() const { return chi_; }
  const BaseMsrCode& base() const { return *base_; }

  std::vector<NodeContent> encode(std::span<const FieldElement> source) const override;
  std::vector<HelperContribution> transmit(std::span<const NodeContent> nodes, NodeId failed) const override;
  NodeContent regenerate(NodeId failed, std::span<const HelperContribution> received) const override;
  std::vector<FieldElement> reconstruct(std::span<const NodeId> contacted,
                                        std::span<const NodeContent> contents) const override;

 private:
  std::shared_ptr<const BaseMsrCode> base_;
  int chi_;
};

}  // namespace cdss
