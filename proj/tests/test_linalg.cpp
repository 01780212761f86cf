#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "strand/linalg.hpp"

using namespace strand;

namespace {

MatF random_mat(std::mt19937& rng, Index rows, Index cols, std::int64_t p) {
  std::uniform_int_distribution<std::int64_t> d(0, p - 1);
  MatF m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Fp(d(rng), p);
  return m;
}

bool mats_equal(const MatF& a, const MatF& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("Fp arithmetic") {
  const Fp a(7, 5);
  CHECK(a.value() == 2);
  CHECK(Fp(-3, 5).value() == 2);
  for (std::int64_t p : {2LL, 5LL, 13LL})
    for (std::int64_t x = 1; x < p; ++x) {
      const Fp v(x, p);
      CHECK((v * v.inv()).value() == 1);
      CHECK(v.pow(p - 1).value() == 1);
    }
  CHECK((Fp(3, 5) / Fp(2, 5)).value() == 4);
  CHECK(Fp(4, 5) + Fp(3, 5) == Fp(2, 5));
  CHECK(-Fp(1, 5) == Fp(4, 5));
}

TEST_CASE("Fp unbound literals bind on contact") {
  const Fp lit(7);  // no modulus yet
  CHECK(lit.modulus() == 0);
  CHECK((lit + Fp(0, 5)).value() == 2);
  CHECK((Fp(3, 5) * lit).modulus() == 5);
  CHECK(lit.bound(5).value() == 2);
  CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), InternalError);
  CHECK_THROWS_AS(Fp(0, 5).inv(), InternalError);
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(!is_prime(1));
  CHECK(!is_prime(9));
}

TEST_CASE("TruncPoly truncation and ring laws") {
  const std::int64_t p = 5;
  const TruncPoly t = TruncPoly::t(p, 3);
  const TruncPoly t2 = t * t;
  CHECK(t2.coeff(2).value() == 1);
  CHECK((t2 * t).is_zero());  // degree 3 dies at order 3

  std::mt19937 rng(20260816);
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
  for (int trial = 0; trial < 40; ++trial) {
    TruncPoly a(Fp(coeff(rng), p), 4), b(Fp(coeff(rng), p), 4), c(Fp(coeff(rng), p), 4);
    const TruncPoly tp = TruncPoly::t(p, 4);
    a += tp * TruncPoly(Fp(coeff(rng), p), 4);
    b += tp * tp * TruncPoly(Fp(coeff(rng), p), 4);
    c += tp * TruncPoly(Fp(coeff(rng), p), 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).reduced(2) == a.reduced(2) * b.reduced(2));
  }
}

TEST_CASE("TruncPoly eval and printing") {
  const TruncPoly q = TruncPoly(Fp(2, 5)) + TruncPoly::t(5) * TruncPoly(Fp(3, 5));
  CHECK(q.eval(Fp(1, 5)).value() == 0);  // 2 + 3 = 5
  CHECK(q.eval(Fp(2, 5)).value() == 3);  // 2 + 6 = 8
  CHECK(q.degree() == 1);
}

TEST_CASE("rref on the spec examples") {
  const std::int64_t p = 5;
  const Rref id = rref(identity_mat(2, p), p);
  CHECK(id.rank() == 2);
  CHECK(id.pivots == std::vector<Index>{0, 1});
  CHECK(mats_equal(id.r, identity_mat(2, p)));

  const Rref zero = rref(bound(MatF::Zero(3, 4), p), p);
  CHECK(zero.rank() == 0);
  CHECK(zero.pivots.empty());

  MatF m(2, 2);
  m << Fp(1, p), Fp(2, p), Fp(2, p), Fp(4, p);
  CHECK(rref(m, p).rank() == 1);
}

TEST_CASE("rref is idempotent and rank complements the kernel") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<Index> dims(1, 8);
    const MatF m = random_mat(rng, dims(rng), dims(rng), 5);
    const Rref rr = rref(m, 5);
    const Rref again = rref(rr.r, 5);
    CHECK(mats_equal(rr.r, again.r));
    CHECK(rr.pivots == again.pivots);
    const MatF k = kernel_basis(m, 5);
    CHECK(rr.rank() + k.cols() == m.cols());
    if (k.cols() > 0) CHECK(is_zero_mat(m * k));
  }
}

TEST_CASE("kernel_basis on the spec examples") {
  CHECK(kernel_basis(identity_mat(3, 5), 5).cols() == 0);
  CHECK(kernel_basis(bound(MatF::Zero(2, 3), 5), 5).cols() == 3);
  MatF m(2, 2);
  m << Fp(1, 5), Fp(2, 5), Fp(2, 5), Fp(4, 5);
  const MatF k = kernel_basis(m, 5);
  CHECK(k.cols() == 1);
  CHECK((k(0, 0) + Fp(2, 5) * k(1, 0)).is_zero());
}

TEST_CASE("solve_affine") {
  const std::int64_t p = 5;
  VecF b(2);
  b << Fp(3, p), Fp(1, p);
  const auto sol = solve_affine(identity_mat(2, p), b, p);
  REQUIRE(sol.has_value());
  CHECK(mats_equal(*sol, b));

  CHECK(!solve_affine(bound(MatF::Zero(2, 2), p), b, p).has_value());

  MatF m(2, 2);
  m << Fp(1, p), Fp(2, p), Fp(2, p), Fp(4, p);
  VecF consistent(2), inconsistent(2);
  consistent << Fp(1, p), Fp(2, p);
  inconsistent << Fp(1, p), Fp(1, p);
  CHECK(solve_affine(m, consistent, p).has_value());
  CHECK(!solve_affine(m, inconsistent, p).has_value());

  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<Index> dims(1, 8);
    const MatF a = random_mat(rng, dims(rng), dims(rng), p);
    const VecF rhs = random_mat(rng, a.rows(), 1, p);
    const auto x = solve_affine(a, rhs, p);
    if (x) CHECK(is_zero_mat(a * *x - rhs));
  }
}

TEST_CASE("RowSpan mirrors rref") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<Index> dims(1, 8);
    const MatF m = random_mat(rng, dims(rng), dims(rng), 5);
    RowSpan span(m.cols(), 5);
    span.insert_all(m);
    const Rref rr = rref(m, 5);
    CHECK(span.dim() == rr.rank());
    CHECK(span.pivots() == rr.pivots);
    CHECK(mats_equal(span.rows(), rr.r));
    for (Index i = 0; i < m.rows(); ++i) {
      CHECK(span.contains(m.row(i).transpose()));
      CHECK(is_zero_mat(span.reduce(m.row(i).transpose())));
    }
  }
}

TEST_CASE("RowSpan insert reports growth") {
  RowSpan span(3, 5);
  VecF v(3);
  v << Fp(1, 5), Fp(2, 5), Fp(0, 5);
  CHECK(span.insert(v));
  CHECK(!span.insert(v));                          // duplicate
  CHECK(!span.insert((Fp(3, 5) * v).eval()));      // scalar multiple
  VecF w(3);
  w << Fp(0, 5), Fp(0, 5), Fp(1, 5);
  CHECK(span.insert(w));
  CHECK(span.dim() == 2);
  VecF u(3);
  u << Fp(2, 5), Fp(4, 5), Fp(3, 5);  // 2v + 3w
  CHECK(span.contains(u));
  CHECK(!span.insert(u));
  VecF z(3);
  z << Fp(0, 5), Fp(1, 5), Fp(0, 5);
  const VecF res = span.reduce(z);
  CHECK(!is_zero_mat(res));
}

TEST_CASE("flatten round trip") {
  std::mt19937 rng(31);
  const MatF m = random_mat(rng, 3, 4, 5);
  CHECK(mats_equal(unflatten(flatten(m), 3, 4), m));
}
