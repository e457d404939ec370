#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cdss/galois.hpp"
#include "cdss/matrix.hpp"

namespace cdss {

/// An (n_out, k_in) Reed-Solomon code used as an erasure-only MDS codec.
/// Coordinates are 0-based. Immutable after creation.
class RsCode {
 public:
  struct Share {
    std::size_t coordinate;
    FieldElement value;
  };

  /// Vandermonde generator on the first n_out nonzero field elements.
  /// Throws ParameterError when the field has fewer than n_out nonzero elements.
  static RsCode create(std::size_t n_out, std::size_t k_in, FieldPtr field);
  /// Vandermonde generator on caller-chosen distinct evaluation points.
  static RsCode with_points(std::vector<FieldElement> points, std::size_t k_in, FieldPtr field);

  /// Same code with the generator normalized so the first k_in coordinates
  /// carry the message verbatim.
  RsCode systematic() const;

  std::size_t n_out() const { return n_out_; }
  std::size_t k_in() const { return k_in_; }
  const std::vector<FieldElement>& eval_points() const { return points_; }
  const Matrix& generator() const { return generator_; }
  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  std::vector<FieldElement> encode(std::span<const FieldElement> message) const;

  /// Recovers the message from at least k_in shares on distinct coordinates.
  /// Extra shares are cross-checked; disagreement raises InconsistencyError.
  std::vector<FieldElement> decode(std::span<const Share> shares) const;

 private:
  RsCode(std::vector<FieldElement> points, std::size_t k_in, Matrix generator, FieldPtr field);

  std::size_t n_out_ = 0;
  std::size_t k_in_ = 0;
  std::vector<FieldElement> points_;
  Matrix generator_;
  FieldPtr field_;
};

/// Number of nonzero elements available as evaluation points.
inline std::size_t max_rs_length(const GaloisField& f) { return f.order() - 1; }

}  // namespace cdss
