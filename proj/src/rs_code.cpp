#include "cdss/rs_code.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cdss/errors.hpp"

namespace cdss {

RsCode::RsCode(std::vector<FieldElement> points, std::size_t k_in, Matrix generator, FieldPtr field)
    : n_out_(points.size()),
      k_in_(k_in),
      points_(std::move(points)),
      generator_(std::move(generator)),
      field_(std::move(field)) {}

RsCode RsCode::create(std::size_t n_out, std::size_t k_in, FieldPtr field) {
  if (n_out > max_rs_length(*field)) {
    throw ParameterError("an RS code of length " + std::to_string(n_out) + " needs more than the " +
                         std::to_string(max_rs_length(*field)) + " evaluation points of GF(2^" +
                         std::to_string(field->degree()) + "); promote the field to GF(2^16)");
  }
  std::vector<FieldElement> points;
  points.reserve(n_out);
  for (std::size_t i = 1; i <= n_out; ++i) points.emplace_back(static_cast<std::uint32_t>(i));
  return with_points(std::move(points), k_in, std::move(field));
}

RsCode RsCode::with_points(std::vector<FieldElement> points, std::size_t k_in, FieldPtr field) {
  if (k_in > points.size()) {
    throw ParameterError("RS message length " + std::to_string(k_in) + " exceeds codeword length " +
                         std::to_string(points.size()));
  }
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParameterError("RS evaluation points must be distinct");
  }
  for (auto p : points) {
    if (!field->contains(p.value())) throw ParameterError("RS evaluation point outside the field");
  }
  Matrix g(k_in, points.size());
  for (std::size_t c = 0; c < points.size(); ++c) {
    FieldElement x(1);
    for (std::size_t r = 0; r < k_in; ++r) {
      g(r, c) = x;
      x = field->mul(x, points[c]);
    }
  }
  return RsCode(std::move(points), k_in, std::move(g), std::move(field));
}

RsCode RsCode::systematic() const {
  std::vector<std::size_t> head(k_in_);
  for (std::size_t i = 0; i < k_in_; ++i) head[i] = i;
  const Matrix normalizer = inverse(*field_, generator_.select_columns(head));
  return RsCode(points_, k_in_, multiply(*field_, normalizer, generator_), field_);
}

std::vector<FieldElement> RsCode::encode(std::span<const FieldElement> message) const {
  if (message.size() != k_in_) {
    throw UsageError("RS message has " + std::to_string(message.size()) + " symbols, expected " +
                     std::to_string(k_in_));
  }
  return multiply(*field_, message, generator_);
}

std::vector<FieldElement> RsCode::decode(std::span<const Share> shares) const {
  std::map<std::size_t, FieldElement> distinct;
  for (const auto& s : shares) {
    if (s.coordinate >= n_out_) throw UsageError("share coordinate out of range");
    auto [it, inserted] = distinct.emplace(s.coordinate, s.value);
    if (!inserted && it->second != s.value) {
      throw InconsistencyError("two shares disagree on coordinate " + std::to_string(s.coordinate));
    }
  }
  if (distinct.size() < k_in_) {
    throw InsufficientDataError("RS decode needs " + std::to_string(k_in_) + " distinct coordinates, got " +
                                std::to_string(distinct.size()));
  }
  std::vector<std::size_t> cols;
  std::vector<FieldElement> values;
  for (const auto& [coord, value] : distinct) {
    if (cols.size() == k_in_) break;
    cols.push_back(coord);
    values.push_back(value);
  }
  const Matrix sub_inverse = inverse(*field_, generator_.select_columns(cols));
  auto message = multiply(*field_, std::span<const FieldElement>(values), sub_inverse);

  if (distinct.size() > k_in_) {
    const auto codeword = encode(message);
    for (const auto& [coord, value] : distinct) {
      if (codeword[coord] != value) {
        throw InconsistencyError("share on coordinate " + std::to_string(coord) +
                                 " is inconsistent with the other shares");
      }
    }
  }
  return message;
}

}  // namespace cdss
