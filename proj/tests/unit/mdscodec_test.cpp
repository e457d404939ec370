#include <random>

#include "doctest.h"

#include "cdss/errors.hpp"
#include "cdss/matrix.hpp"
#include "cdss/rs_code.hpp"
#include "cdss/topology.hpp"

using namespace cdss;

namespace {

std::vector<FieldElement> random_vector(std::size_t n, std::mt19937& rng) {
  std::vector<FieldElement> v(n);
  for (auto& x : v) x = FieldElement(rng() & 0xFF);
  return v;
}

// Determinant by cofactor expansion; independent of the elimination code.
FieldElement det(const GaloisField& f, const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  FieldElement acc;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != c) cols.push_back(j);
    }
    acc += f.mul(a(0, c), det(f, a.select_rows(rows).select_columns(cols)));
  }
  return acc;
}

}  // namespace

TEST_CASE("solve on identity returns b") {
  const auto f = GaloisField::gf256();
  const std::vector<FieldElement> b{FieldElement(3), FieldElement(9), FieldElement(200)};
  const auto r = solve(*f, Matrix::identity(3), b);
  CHECK(r.consistent);
  CHECK_FALSE(r.underdetermined);
  CHECK(r.rank == 3);
  CHECK(*r.solution == b);
}

TEST_CASE("singular consistent system is flagged underdetermined") {
  const auto f = GaloisField::gf256();
  Matrix a(3, 3);
  a(0, 0) = FieldElement(1);
  a(0, 1) = FieldElement(2);
  a(1, 0) = FieldElement(2);
  a(1, 1) = f->mul(FieldElement(2), FieldElement(2));
  a(2, 2) = FieldElement(7);
  const std::vector<FieldElement> x{FieldElement(5), FieldElement(6), FieldElement(7)};
  const auto b = multiply(*f, a, x);
  const auto r = solve(*f, a, b);
  CHECK(r.consistent);
  CHECK(r.underdetermined);
  CHECK(r.rank == 2);
  REQUIRE(r.solution);
  CHECK(multiply(*f, a, *r.solution) == b);

  auto bad = b;
  bad[1] += FieldElement(1);
  const auto r2 = solve(*f, a, bad);
  CHECK_FALSE(r2.consistent);
  CHECK_FALSE(r2.solution);
}

TEST_CASE("random full-rank 5x5 solve round-trips") {
  const auto f = GaloisField::gf256();
  std::mt19937 rng(5);
  int tried = 0;
  while (tried < 50) {
    Matrix a(5, 5, random_vector(25, rng));
    if (det(*f, a).is_zero()) continue;
    ++tried;
    const auto b = random_vector(5, rng);
    const auto r = solve(*f, a, b);
    REQUIRE(r.solution);
    CHECK(multiply(*f, a, *r.solution) == b);
    CHECK(multiply(*f, inverse(*f, a), a) == Matrix::identity(5));
  }
}

TEST_CASE("inverse rejects singular matrices") {
  const auto f = GaloisField::gf256();
  CHECK_THROWS_AS(inverse(*f, Matrix(2, 2)), DomainError);
  CHECK_THROWS_AS(inverse(*f, Matrix(2, 3)), DomainError);
}

TEST_CASE("rs_create bounds") {
  const auto f = GaloisField::gf256();
  const auto code = RsCode::create(18, 11, f);
  CHECK(code.generator().rows() == 11);
  CHECK(code.generator().cols() == 18);
  CHECK(code.encode(std::vector<FieldElement>(11)).size() == 18);
  CHECK(RsCode::create(255, 3, f).n_out() == 255);
  CHECK_THROWS_AS(RsCode::create(256, 3, f), ParameterError);
  try {
    RsCode::create(300, 3, f);
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("16") != std::string::npos);
  }
  CHECK(RsCode::create(300, 3, GaloisField::gf65536()).n_out() == 300);
}

TEST_CASE("every k-column submatrix is invertible for small codes") {
  const auto f = GaloisField::gf256();
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto code = RsCode::create(static_cast<std::size_t>(n), static_cast<std::size_t>(k), f);
      bool ok = true;
      for_each_combination(n, k, [&](std::span<const int> idx) {
        std::vector<std::size_t> cols(idx.begin(), idx.end());
        ok = rank(*f, code.generator().select_columns(cols)) == static_cast<std::size_t>(k);
        return ok;
      });
      CHECK_MESSAGE(ok, "n=" << n << " k=" << k);
    }
  }
}

TEST_CASE("(6,3) code: all 20 column triples have nonzero determinant and decode") {
  const auto f = GaloisField::gf256();
  const auto code = RsCode::create(6, 3, f);
  std::mt19937 rng(11);
  const auto msg = random_vector(3, rng);
  const auto c = code.encode(msg);
  int subsets = 0;
  for_each_combination(6, 3, [&](std::span<const int> idx) {
    std::vector<std::size_t> cols(idx.begin(), idx.end());
    CHECK_FALSE(det(*f, code.generator().select_columns(cols)).is_zero());
    std::vector<RsCode::Share> shares;
    for (auto i : cols) shares.push_back({i, c[i]});
    CHECK(code.decode(shares) == msg);
    ++subsets;
    return true;
  });
  CHECK(subsets == 20);
}

TEST_CASE("encode and decode edge cases") {
  const auto f = GaloisField::gf256();
  const auto code = RsCode::create(6, 3, f);
  CHECK(code.encode(std::vector<FieldElement>(3)) == std::vector<FieldElement>(6));
  CHECK_THROWS_AS(code.encode(std::vector<FieldElement>(4)), UsageError);

  const std::vector<FieldElement> msg{FieldElement(1), FieldElement(2), FieldElement(3)};
  const auto c = code.encode(msg);
  std::vector<RsCode::Share> two{{0, c[0]}, {1, c[1]}};
  CHECK_THROWS_AS(code.decode(two), InsufficientDataError);
  std::vector<RsCode::Share> dup{{0, c[0]}, {0, c[0]}, {1, c[1]}};
  CHECK_THROWS_AS(code.decode(dup), InsufficientDataError);
  std::vector<RsCode::Share> extra{{0, c[0]}, {1, c[1]}, {2, c[2]}, {3, c[3] + FieldElement(1)}};
  CHECK_THROWS_AS(code.decode(extra), InconsistencyError);
  extra[3].value = c[3];
  CHECK(code.decode(extra) == msg);

  const auto square = RsCode::create(4, 4, f);
  const std::vector<FieldElement> m4{FieldElement(9), FieldElement(8), FieldElement(7), FieldElement(6)};
  const auto c4 = square.encode(m4);
  std::vector<RsCode::Share> all;
  for (std::size_t i = 0; i < 4; ++i) all.push_back({i, c4[i]});
  CHECK(square.decode(all) == m4);

  // (n, 1): every coordinate alone decodes.
  const auto rep = RsCode::create(5, 1, f);
  const auto cr = rep.encode(std::vector<FieldElement>{FieldElement(42)});
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<RsCode::Share> one{{i, cr[i]}};
    CHECK(rep.decode(one)[0] == FieldElement(42));
  }
}

TEST_CASE("systematic form carries the message in the first k coordinates") {
  const auto f = GaloisField::gf256();
  const auto code = RsCode::create(10, 4, f).systematic();
  std::mt19937 rng(2);
  const auto msg = random_vector(4, rng);
  const auto c = code.encode(msg);
  CHECK(std::vector<FieldElement>(c.begin(), c.begin() + 4) == msg);
  bool ok = true;
  for_each_combination(10, 4, [&](std::span<const int> idx) {
    std::vector<std::size_t> cols(idx.begin(), idx.end());
    ok = rank(*f, code.generator().select_columns(cols)) == 4;
    return ok;
  });
  CHECK(ok);
}

TEST_CASE("(18,11) code decodes from 11 coordinates") {
  const auto f = GaloisField::gf256();
  const auto code = RsCode::create(18, 11, f);
  std::mt19937 rng(4);
  const auto msg = random_vector(11, rng);
  const auto c = code.encode(msg);
  std::vector<RsCode::Share> shares;
  for (std::size_t i = 7; i < 18; ++i) shares.push_back({i, c[i]});
  CHECK(code.decode(shares) == msg);
}

TEST_CASE("hex csv dump") {
  Matrix a(2, 2);
  a(0, 0) = FieldElement(1);
  a(1, 1) = FieldElement(0xAB);
  CHECK(to_hex_csv(a, 8) == "01,00\n00,ab\n");
}
