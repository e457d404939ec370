#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdss/capacity.hpp"
#include "cdss/galois.hpp"
#include "cdss/matrix.hpp"
#include "cdss/topology.hpp"

namespace cdss {

/// One coded symbol held by a node. `index` is the 1-based coded-symbol index.
struct StoredSymbol {
  int index = 0;
  FieldElement value;
  friend constexpr auto operator<=>(const StoredSymbol&, const StoredSymbol&) = default;
};

/// A node's holdings, sorted by index.
using NodeContent = std::vector<StoredSymbol>;

enum class CodeKind { mbr0, mbr, msr0_div, msr0_nondiv, msr_stacked, msr_wrapped };

std::string_view to_string(CodeKind kind);
/// Accepts the serialized tags ("mbr0", "msr0-div", ...). Throws ParameterError.
CodeKind parse_code_kind(std::string_view text);

enum class LinkClass { intra, cross };

/// A symbol sent by a helper. Stored symbols carry their index; symbols a
/// helper computes on the fly (linear combinations) carry none.
struct SentSymbol {
  int stripe = 0;
  std::optional<int> index;
  FieldElement value;
  friend bool operator==(const SentSymbol&, const SentSymbol&) = default;
};

struct HelperContribution {
  NodeId helper;
  LinkClass link = LinkClass::intra;
  std::vector<SentSymbol> symbols;
  friend bool operator==(const HelperContribution&, const HelperContribution&) = default;
};

/// Everything a replacement node receives while regenerating `failed`.
struct RepairTranscript {
  NodeId failed;
  int stripes = 1;
  std::vector<HelperContribution> contributions;

  int helper_count(LinkClass link) const;
  /// Symbols sent by each helper of the class, when every helper sent the same
  /// amount; nullopt for a non-uniform transcript. Zero helpers count as 0.
  std::optional<int> per_helper(LinkClass link) const;
  int gamma() const;
};

/// A single-stripe code: encoding, placement, repair and reconstruction for
/// one instance of the base unit. Implementations are immutable after
/// construction and safe to share across threads.
class Scheme {
 public:
  virtual ~Scheme() = default;

  virtual CodeKind kind() const = 0;

  const ClusterTopology& topology() const { return topology_; }
  const SystemParams& params() const { return params_; }
  const FieldPtr& field() const { return field_; }

  int alpha() const;
  int file_size() const;
  /// Number of distinct coded-symbol indices per stripe.
  int symbol_count() const;

  /// Encodes `file_size()` source symbols into per-node holdings (flat order).
  virtual std::vector<NodeContent> encode(std::span<const FieldElement> source) const = 0;

  /// Helper transmissions for regenerating `failed`. The failed node's entry
  /// in `nodes` is empty; implementations read helper holdings only.
  virtual std::vector<HelperContribution> transmit(std::span<const NodeContent> nodes, NodeId failed) const = 0;

  /// Rebuilds the failed node's holdings from received symbols alone.
  virtual NodeContent regenerate(NodeId failed, std::span<const HelperContribution> received) const = 0;

  /// Recovers the source from at least k distinct nodes.
  virtual std::vector<FieldElement> reconstruct(std::span<const NodeId> contacted,
                                                std::span<const NodeContent> contents) const = 0;

  /// Linear map from source to stored symbols: row per source symbol, column
  /// c holds coded symbol index c + 1.
  Matrix generator_matrix() const;

  /// Index layout of every node, independent of data.
  std::vector<std::vector<int>> index_layout() const;

 protected:
  Scheme(ClusterTopology topology, SystemParams params, FieldPtr field);

  ClusterTopology topology_;
  SystemParams params_;
  FieldPtr field_;
};

using SchemePtr = std::shared_ptr<const Scheme>;

/// Holdings of every node for a file of `stripes` independent base-unit
/// instances. Global symbol index = stripe * symbol_count + local index.
class Placement {
 public:
  /// Source length must be a positive multiple of the scheme's file size.
  static Placement build(SchemePtr scheme, std::span<const FieldElement> source);

  /// Wraps deserialized holdings; throws FormatError when they do not match
  /// the scheme's layout.
  Placement(SchemePtr scheme, int stripes, std::vector<NodeContent> nodes);

  const Scheme& scheme() const { return *scheme_; }
  const SchemePtr& scheme_ptr() const { return scheme_; }
  const ClusterTopology& topology() const { return scheme_->topology(); }
  int stripes() const { return stripes_; }

  const NodeContent& node(NodeId id) const;
  const std::vector<NodeContent>& nodes() const { return nodes_; }

  /// Per-node holdings of one stripe with local indices.
  std::vector<NodeContent> stripe_contents(int stripe) const;

  /// Scheme parameters scaled by the stripe count.
  SystemParams params() const;

 private:
  SchemePtr scheme_;
  int stripes_ = 1;
  std::vector<NodeContent> nodes_;
};

struct RepairOutcome {
  RepairTranscript transcript;
  NodeContent regenerated;
};

/// Runs every helper's transmission for `failed` without exposing its holdings.
RepairTranscript collect_repair(const Placement& placement, NodeId failed);
/// Regenerates the failed node from a transcript alone.
NodeContent regenerate(const Placement& placement, const RepairTranscript& transcript);
RepairOutcome repair(const Placement& placement, NodeId failed);

/// Throws InsufficientDataError for fewer than k distinct nodes.
std::vector<FieldElement> reconstruct(const Placement& placement, std::span<const NodeId> contacted);

std::string hex_value(FieldElement v, int bits);

}  // namespace cdss
