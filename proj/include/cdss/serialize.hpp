#pragma once

#include <string>

#include "json.hpp"

#include "cdss/capacity.hpp"
#include "cdss/code.hpp"

namespace cdss {

using Json = nlohmann::ordered_json;

Json params_to_json(const SystemParams& p);
Json field_to_json(const GaloisField& f);
/// Reads {"m", "poly"}; throws FieldError for a bad polynomial.
FieldPtr field_from_json(const Json& j);

Json placement_to_json(const Placement& placement);
/// Rebuilds the scheme from the stored kind and parameters and validates the
/// holdings. Throws FormatError on malformed input.
Placement placement_from_json(const Json& j);

Json node_content_to_json(const ClusterTopology& topo, NodeId id, const NodeContent& content, int bits);
NodeContent node_content_from_json(const Json& j, const GaloisField& f);

Json transcript_to_json(const RepairTranscript& t, int bits);
RepairTranscript transcript_from_json(const Json& j, const GaloisField& f);

}  // namespace cdss
