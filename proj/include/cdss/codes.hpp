#pragma once

#include "cdss/capacity.hpp"
#include "cdss/code.hpp"
#include "cdss/mbr.hpp"
#include "cdss/msr.hpp"

namespace cdss {

/// chi = 1/epsilon; throws ParameterError unless it is a positive integer.
int chi_of(const Rational& epsilon);

/// Builds the single-stripe scheme for `kind` at ratio `epsilon`, checking the
/// regime the construction covers. A null field selects GF(2^8) and promotes
/// to GF(2^16) when the code needs more evaluation points.
SchemePtr make_scheme(CodeKind kind, const ClusterTopology& topo, const Rational& epsilon, FieldPtr field = nullptr);

/// The code kind that covers (topology, epsilon, point), e.g. msr at
/// epsilon = 0 routes to msr0-div or msr0-nondiv.
CodeKind default_kind(const ClusterTopology& topo, const Rational& epsilon, OperatingPoint point);

}  // namespace cdss
