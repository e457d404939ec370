#pragma once

#include <memory>
#include <span>
#include <vector>

#include "cdss/code.hpp"
#include "cdss/rs_code.hpp"

namespace cdss {

/// Repair-by-transfer code: a (theta, M) RS codeword spread so that every
/// coded symbol lives on exactly two nodes. Repair copies shared symbols;
/// reconstruction RS-decodes the distinct symbols collected.
class TransferCode : public Scheme {
 public:
  const RsCode* mds() const { return rs_ ? &*rs_ : nullptr; }
  /// Symbol indices held by `id`, ascending.
  const std::vector<int>& layout(NodeId id) const;

  std::vector<NodeContent> encode(std::span<const FieldElement> source) const override;
  std::vector<HelperContribution> transmit(std::span<const NodeContent> nodes, NodeId failed) const override;
  NodeContent regenerate(NodeId failed, std::span<const HelperContribution> received) const override;
  std::vector<FieldElement> reconstruct(std::span<const NodeId> contacted,
                                        std::span<const NodeContent> contents) const override;

 protected:
  TransferCode(const ClusterTopology& topo, SystemParams params, FieldPtr field,
               std::vector<std::vector<int>> layout);

 private:
  std::optional<RsCode> rs_;
  std::vector<std::vector<int>> layout_;
};

/// MBR code for epsilon = 0: a complete-graph layout inside each cluster.
class MbrZeroCode final : public TransferCode {
 public:
  /// Throws ParameterError when the field has fewer than theta nonzero elements.
  MbrZeroCode(const ClusterTopology& topo, FieldPtr field);
  CodeKind kind() const override { return CodeKind::mbr0; }
};

/// MBR code for epsilon = 1/chi: global symbols on the complete graph of all
/// nodes plus chi - 1 local layers on each cluster's complete graph.
class MbrPosCode final : public TransferCode {
 public:
  MbrPosCode(const ClusterTopology& topo, int chi, FieldPtr field);
  CodeKind kind() const override { return CodeKind::mbr; }
  int chi() const { return chi_; }

 private:
  int chi_;
};

/// (cluster l, layer t, column i2) of a local symbol.
struct LocalIndex {
  int l = 0;
  int t = 0;
  int i2 = 0;
  friend bool operator==(const LocalIndex&, const LocalIndex&) = default;
};

/// Splits a local symbol index s in (C(n,2), theta]. Throws UsageError when out of range.
LocalIndex split_local_index(const ClusterTopology& topo, int chi, int s);
/// Inverse of split_local_index.
int join_local_index(const ClusterTopology& topo, int chi, LocalIndex idx);

/// Node layouts without building a code (used by tests and the harness).
std::vector<std::vector<int>> mbr_zero_layout(const ClusterTopology& topo);
std::vector<std::vector<int>> mbr_pos_layout(const ClusterTopology& topo, int chi);

}  // namespace cdss
