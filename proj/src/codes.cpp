#include "cdss/codes.hpp"

#include "cdss/errors.hpp"

namespace cdss {

namespace {

void require_zero(const Rational& epsilon, CodeKind kind) {
  if (epsilon != Rational(0)) {
    throw RegimeError(std::string(to_string(kind)) + " is the epsilon = 0 construction, got epsilon = " +
                      to_string(epsilon));
  }
}

SchemePtr build(CodeKind kind, const ClusterTopology& topo, const Rational& epsilon, const FieldPtr& field) {
  switch (kind) {
    case CodeKind::mbr0:
      require_zero(epsilon, kind);
      return std::make_shared<MbrZeroCode>(topo, field);
    case CodeKind::mbr:
      if (epsilon == Rational(0)) throw RegimeError("epsilon = 0 uses the mbr0 construction");
      return std::make_shared<MbrPosCode>(topo, chi_of(epsilon), field);
    case CodeKind::msr0_div:
      require_zero(epsilon, kind);
      return std::make_shared<MsrDivisibleCode>(topo, field);
    case CodeKind::msr0_nondiv:
      require_zero(epsilon, kind);
      return std::make_shared<MsrNondivisibleCode>(topo, field);
    case CodeKind::msr_stacked:
      if (topo.n() == topo.k()) throw RegimeError("the stacked construction needs n > k");
      if (epsilon != Rational(1, topo.n() - topo.k())) {
        throw RegimeError("the stacked construction runs at epsilon = 1/(n-k) = 1/" +
                          std::to_string(topo.n() - topo.k()) + ", got " + to_string(epsilon));
      }
      return std::make_shared<MsrStackedCode>(topo, field);
    case CodeKind::msr_wrapped: {
      const int chi = chi_of(epsilon);
      // Validates the regime before building the base code.
      normalized_params(topo, epsilon, OperatingPoint::msr);
      auto base = std::make_shared<ProductMatrixMsr>(topo.n(), topo.k(), field);
      return std::make_shared<WrappedMsrCode>(std::move(base), topo, chi);
    }
  }
  throw ParameterError("unknown code kind");
}

}  // namespace

int chi_of(const Rational& epsilon) {
  if (epsilon <= Rational(0) || epsilon > Rational(1)) throw ParameterError("epsilon must lie in (0, 1] here, got " + to_string(epsilon));
  if (epsilon.numerator() != 1) {
    throw ParameterError("chi = 1/epsilon must be a positive integer, got epsilon = " + to_string(epsilon));
  }
  return static_cast<int>(epsilon.denominator());
}

SchemePtr make_scheme(CodeKind kind, const ClusterTopology& topo, const Rational& epsilon, FieldPtr field) {
  if (field) return build(kind, topo, epsilon, field);
  try {
    return build(kind, topo, epsilon, GaloisField::gf256());
  } catch (const RegimeError&) {
    throw;
  } catch (const ParameterError&) {
    return build(kind, topo, epsilon, GaloisField::gf65536());
  }
}

CodeKind default_kind(const ClusterTopology& topo, const Rational& epsilon, OperatingPoint point) {
  if (point == OperatingPoint::mbr) return epsilon == Rational(0) ? CodeKind::mbr0 : CodeKind::mbr;
  if (epsilon == Rational(0)) {
    return topo.k() % topo.nodes_per_cluster() == 0 ? CodeKind::msr0_div : CodeKind::msr0_nondiv;
  }
  if (topo.n() == topo.k() * topo.clusters() && epsilon == Rational(1, topo.n() - topo.k())) {
    return CodeKind::msr_stacked;
  }
  return CodeKind::msr_wrapped;
}

}  // namespace cdss
