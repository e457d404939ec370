#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace cdss {

/// An element of GF(2^m), m <= 16, stored as its polynomial-basis bit pattern.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t value) : value_(static_cast<std::uint16_t>(value)) {}

  constexpr std::uint16_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

  // Addition and subtraction coincide in characteristic 2 and need no tables.
  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    return FieldElement(static_cast<std::uint32_t>(a.value_ ^ b.value_));
  }
  friend constexpr FieldElement operator-(FieldElement a, FieldElement b) { return a + b; }
  constexpr FieldElement& operator+=(FieldElement o) {
    value_ ^= o.value_;
    return *this;
  }

 private:
  std::uint16_t value_ = 0;
};

/// Returns a nontrivial factor of the GF(2) polynomial `poly` (bit i is the
/// coefficient of x^i), or nullopt when `poly` is irreducible.
std::optional<std::uint32_t> find_polynomial_factor(std::uint32_t poly);

int polynomial_degree(std::uint32_t poly);

/// GF(2^m) with exp/log tables built eagerly. Immutable after creation.
class GaloisField {
 public:
  static constexpr std::uint32_t kDefaultPoly8 = 0x11D;
  static constexpr std::uint32_t kDefaultPoly16 = 0x1100B;

  /// Throws FieldError when `poly` is not an irreducible polynomial of degree m.
  static std::shared_ptr<const GaloisField> create(int m, std::uint32_t poly);
  static std::shared_ptr<const GaloisField> gf256();
  static std::shared_ptr<const GaloisField> gf65536();

  int degree() const { return m_; }
  std::uint32_t poly() const { return poly_; }
  /// 2^m.
  std::uint32_t order() const { return order_; }
  FieldElement generator() const { return FieldElement(generator_); }

  bool contains(std::uint32_t raw) const { return raw < order_; }
  /// Range-checked conversion; throws UsageError when raw >= 2^m.
  FieldElement element(std::uint32_t raw) const;

  FieldElement add(FieldElement a, FieldElement b) const { return a + b; }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::int64_t e) const;
  /// generator^i.
  FieldElement exp(std::int64_t i) const;
  /// Discrete log to the generator base; a must be nonzero.
  std::uint32_t log(FieldElement a) const;

 private:
  GaloisField(int m, std::uint32_t poly);

  int m_;
  std::uint32_t poly_;
  std::uint32_t order_;
  std::uint32_t generator_ = 2;
  std::vector<std::uint16_t> exp_;  // doubled so log(a)+log(b) indexes directly
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

}  // namespace cdss
