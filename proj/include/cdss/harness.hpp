#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdss/code.hpp"
#include "cdss/serialize.hpp"

namespace cdss {

struct CheckResult {
  std::string name;
  bool pass = true;
  Json counterexample;  // null when passing
};

struct VerificationReport {
  Json system;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;
  bool passed() const;
};

Json report_to_json(const VerificationReport& r);

/// One system to verify, as read from a config file.
struct SystemConfig {
  std::string name;
  int n = 0;
  int k = 0;
  int L = 0;
  CodeKind kind = CodeKind::mbr0;
  Rational epsilon;
  FieldPtr field;  // null: default field with promotion
  std::uint64_t seed = 1;
  int stripes = 1;
  // Expected values; a mismatch fails the "declared" check.
  std::optional<Rational> declared_file_size;
  std::optional<Rational> declared_alpha;
  std::optional<Rational> declared_gamma;
};

/// Reads one system: {"n","k","L","code","epsilon"|"chi","field","seed",...}.
/// Throws ParameterError for invalid values, FormatError for malformed JSON.
SystemConfig config_from_json(const Json& j);
/// Accepts a single system, an array, or {"systems": [...]}.
std::vector<SystemConfig> configs_from_json(const Json& j);

/// Deterministic source symbols for a scheme and seed.
std::vector<FieldElement> random_source(const GaloisField& f, std::size_t length, std::uint64_t seed);

using TranscriptTamper = std::function<void(RepairTranscript&)>;

/// Regenerates `node` from its transcript and compares holdings and
/// bandwidth against the declared parameters.
CheckResult verify_exact_repair(const Placement& placement, NodeId node, const TranscriptTamper& tamper = {});
/// Runs verify_exact_repair for every node and folds the results.
CheckResult verify_all_repairs(const Placement& placement);

enum class Coverage { automatic, exhaustive, sampled };

/// Every (automatic: when C(n,k) <= 10^4) or sampled k-subset must decode
/// to `source`. Samples: 10^3 seeded uniform subsets plus every arrangement
/// of the cluster-greedy contact vector.
CheckResult verify_reconstruction(const Placement& placement, std::span<const FieldElement> source,
                                  Coverage coverage = Coverage::automatic, std::uint64_t seed = 1);

/// The subsets verify_reconstruction visits.
std::vector<std::vector<NodeId>> contact_sets(const ClusterTopology& topo, Coverage coverage, std::uint64_t seed);

struct DistinctCount {
  ContactVector omega;
  std::int64_t measured = 0;
  std::int64_t closed_form = 0;
  std::int64_t file_size = 0;
};

/// Distinct symbol indices seen by the lowest-index nodes realizing omega
/// (first stripe of an MBR placement).
DistinctCount count_distinct(const Placement& placement, const ContactVector& omega);
/// Counting check over every omega: measured == closed form >= M, equality and
/// minimum at omega*, and node-choice independence.
CheckResult verify_counting(const Placement& placement);

/// Structural clauses for the placement's code family.
std::vector<CheckResult> verify_structure(const Placement& placement);

/// Closed-form parameter checks plus any declared values in `config`.
std::vector<CheckResult> verify_params(const Placement& placement, const SystemConfig* config = nullptr);

/// For every failed node (flat order), the helpers and the distinct values
/// each sent. Duplicated copies collapse, so codes that differ only in
/// duplication counts compare equal.
std::vector<std::vector<std::pair<NodeId, std::vector<FieldElement>>>> deduplicated_transcripts(
    const Placement& placement);

VerificationReport verify_system(const SystemConfig& config);
VerificationReport verify_placement(const Placement& placement, std::span<const FieldElement> source,
                                    const SystemConfig* config = nullptr);
std::vector<VerificationReport> run_suite(std::span<const SystemConfig> configs);

struct SweepRow {
  int n = 0;
  int k = 0;
  int L = 0;
  std::string check;
  bool pass = true;
};

/// Closed-form identities for all n <= n_max, L | n, 1 <= k < n.
std::vector<SweepRow> identity_sweep(int n_max);
std::string sweep_csv(std::span<const SweepRow> rows);

}  // namespace cdss
