#include "cdss/galois.hpp"

#include <sstream>

#include "cdss/errors.hpp"

namespace cdss {

namespace {

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const int db = polynomial_degree(b);
  for (int da = polynomial_degree(a); da >= db; da = polynomial_degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

// Shift-and-add product reduced modulo `poly`; only used while building tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, int m, std::uint32_t poly) {
  std::uint32_t acc = 0;
  while (b != 0) {
    if (b & 1U) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1U << m)) a ^= poly;
  }
  return acc;
}

std::string hex(std::uint32_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::uppercase << v;
  return os.str();
}

}  // namespace

int polynomial_degree(std::uint32_t poly) {
  int d = -1;
  while (poly != 0) {
    poly >>= 1;
    ++d;
  }
  return d;
}

std::optional<std::uint32_t> find_polynomial_factor(std::uint32_t poly) {
  const int deg = polynomial_degree(poly);
  if (deg < 1) return std::nullopt;
  for (std::uint32_t cand = 2; polynomial_degree(cand) * 2 <= deg; ++cand) {
    if (poly_mod(poly, cand) == 0) return cand;
  }
  return std::nullopt;
}

GaloisField::GaloisField(int m, std::uint32_t poly) : m_(m), poly_(poly), order_(1U << m) {
  const std::uint32_t cycle = order_ - 1;
  // The polynomial need not be primitive, so search for an element of full order.
  for (std::uint32_t g = (m == 1 ? 1 : 2); g < order_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t steps = 0;
    do {
      x = slow_mul(x, g, m, poly);
      ++steps;
    } while (x != 1 && steps <= cycle);
    if (steps == cycle) {
      generator_ = g;
      break;
    }
  }
  exp_.assign(2 * static_cast<std::size_t>(cycle), 0);
  log_.assign(order_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < cycle; ++i) {
    exp_[i] = static_cast<std::uint16_t>(x);
    exp_[i + cycle] = static_cast<std::uint16_t>(x);
    log_[x] = i;
    x = slow_mul(x, generator_, m, poly);
  }
}

std::shared_ptr<const GaloisField> GaloisField::create(int m, std::uint32_t poly) {
  if (m < 1 || m > 16) {
    throw FieldError("field degree must be in [1, 16], got " + std::to_string(m));
  }
  if (polynomial_degree(poly) != m) {
    throw FieldError("polynomial " + hex(poly) + " has degree " + std::to_string(polynomial_degree(poly)) +
                     ", expected " + std::to_string(m));
  }
  if (auto factor = find_polynomial_factor(poly)) {
    throw FieldError("polynomial " + hex(poly) + " is reducible: divisible by " + hex(*factor));
  }
  return std::shared_ptr<const GaloisField>(new GaloisField(m, poly));
}

std::shared_ptr<const GaloisField> GaloisField::gf256() {
  static const auto field = create(8, kDefaultPoly8);
  return field;
}

std::shared_ptr<const GaloisField> GaloisField::gf65536() {
  static const auto field = create(16, kDefaultPoly16);
  return field;
}

FieldElement GaloisField::element(std::uint32_t raw) const {
  if (!contains(raw)) {
    throw UsageError("value " + std::to_string(raw) + " is outside GF(2^" + std::to_string(m_) + ")");
  }
  return FieldElement(raw);
}

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero()) return FieldElement{};
  return FieldElement(exp_[log_[a.value()] + log_[b.value()]]);
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.is_zero()) throw DomainError("inverse of zero");
  const std::uint32_t cycle = order_ - 1;
  return FieldElement(exp_[(cycle - log_[a.value()]) % cycle]);
}

FieldElement GaloisField::div(FieldElement a, FieldElement b) const {
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_zero()) return FieldElement{};
  const std::uint32_t cycle = order_ - 1;
  return FieldElement(exp_[log_[a.value()] + cycle - log_[b.value()]]);
}

FieldElement GaloisField::pow(FieldElement a, std::int64_t e) const {
  if (e == 0) return FieldElement(1);
  if (a.is_zero()) {
    if (e < 0) throw DomainError("negative power of zero");
    return FieldElement{};
  }
  return exp(static_cast<std::int64_t>(log_[a.value()]) * e);
}

FieldElement GaloisField::exp(std::int64_t i) const {
  const auto cycle = static_cast<std::int64_t>(order_ - 1);
  std::int64_t r = i % cycle;
  if (r < 0) r += cycle;
  return FieldElement(exp_[static_cast<std::size_t>(r)]);
}

std::uint32_t GaloisField::log(FieldElement a) const {
  if (a.is_zero()) throw DomainError("log of zero");
  return log_[a.value()];
}

}  // namespace cdss
