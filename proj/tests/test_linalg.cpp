#include "doctest.h"
#include "hopfkit/linalg.hpp"
#include "test_util.hpp"

using namespace hk;

namespace {

Matrix random_matrix(std::mt19937& rng, size_t r, size_t c, const Field& f, int zero_bias = 0) {
  std::uniform_int_distribution<int> coin(0, 2 + zero_bias);
  Matrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (coin(rng) < 2) m(i, j) = testing::random_scalar(rng, f);
  return m;
}

Subspace random_subspace(std::mt19937& rng, size_t n, const Field& f) {
  std::uniform_int_distribution<int> k(0, static_cast<int>(n));
  return image(random_matrix(rng, n, static_cast<size_t>(k(rng)), f, 2));
}

}  // namespace

TEST_CASE("kernel, solve, rank basics") {
  CHECK(kernel(Matrix(4, 4)).dim() == 4);
  CHECK(kernel(Matrix(4, 4)) == Subspace::full(4));
  Matrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 1) = 1;
  auto x = solve(a, Vec{Scalar(2), Scalar(1)});
  REQUIRE(x);
  CHECK((*x)[0] == Scalar(1));
  CHECK((*x)[1] == Scalar(1));
  Matrix sing(2, 2);
  sing(0, 0) = 1;
  CHECK(!solve(sing, Vec{Scalar(0), Scalar(1)}));
  CHECK(!inverse(sing));
  CHECK(*inverse(a) * a == Matrix::identity(2));
  CHECK_THROWS_AS(solve(a, Vec{Scalar(1)}), Error);
}

TEST_CASE("kron conventions") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  Matrix p(1, 1), q(1, 1);
  p(0, 0) = Scalar(3);
  q(0, 0) = Scalar(-1, 2);
  CHECK(kron(p, q)(0, 0) == Scalar(-3, 2));
  // left factor major: e_1 (x) e_0 in dims (2,3) is index 3
  Vec v = kron(unit_vec(2, 1), unit_vec(3, 0));
  CHECK(v[3] == Scalar(1));
}

TEST_CASE("kron properties on random samples") {
  std::mt19937 rng(11);
  Field f = default_field();
  for (int t = 0; t < 10; ++t) {
    Matrix a = random_matrix(rng, 3, 3, f, 2), b = random_matrix(rng, 3, 3, f, 2);
    CHECK(rank(kron(a, b)) == rank(a) * rank(b));
    Matrix c = random_matrix(rng, 3, 2, f), d = random_matrix(rng, 3, 2, f);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("subspace operations") {
  Subspace e1 = Subspace::span(2, {unit_vec(2, 0)}), e2 = Subspace::span(2, {unit_vec(2, 1)});
  CHECK(e1 + e2 == Subspace::full(2));
  CHECK(e1.intersect(e2).dim() == 0);
  CHECK(e1.intersect(e1) == e1);
  CHECK_THROWS_AS(e1 + Subspace::full(3), Error);

  std::mt19937 rng(5);
  Field f = default_field();
  for (int t = 0; t < 25; ++t) {
    const size_t n = 2 + static_cast<size_t>(t % 5);
    Subspace x = random_subspace(rng, n, f), y = random_subspace(rng, n, f), z = random_subspace(rng, n, f);
    CHECK((x + y).dim() + x.intersect(y).dim() == x.dim() + y.dim());
    CHECK(x.contains(x));
    CHECK((x + y).contains(x));
    CHECK(x.contains(x.intersect(y)));
    if (x.contains(y) && y.contains(x)) CHECK(x == y);
    if (x.contains(y) && y.contains(z)) CHECK(x.contains(z));
    // modular law: if z is inside x then x ∩ (y + z) = (x ∩ y) + z
    Subspace zx = z.intersect(x);
    CHECK(x.intersect(y + zx) == x.intersect(y) + zx);
    // canonical form does not depend on the spanning set
    std::vector<Vec> shuffled = x.basis();
    std::reverse(shuffled.begin(), shuffled.end());
    if (shuffled.size() >= 2) shuffled[0] = shuffled[0] + shuffled[1];
    CHECK(Subspace::span(n, shuffled) == x);
  }
}

TEST_CASE("preimage and complement") {
  std::mt19937 rng(3);
  Field f = default_field();
  for (int t = 0; t < 10; ++t) {
    Matrix m = random_matrix(rng, 4, 5, f, 1);
    Subspace y = random_subspace(rng, 4, f);
    Subspace pre = preimage(m, y);
    for (const auto& b : pre.basis()) CHECK(y.contains(m * b));
    CHECK(pre.contains(kernel(m)));
    // dimension formula: dim pre = dim ker + dim(im ∩ y)
    CHECK(pre.dim() == kernel(m).dim() + image(m).intersect(y).dim());
    Subspace comp = y.pivot_complement();
    CHECK(comp.dim() + y.dim() == 4);
    CHECK(comp.intersect(y).dim() == 0);
  }
}

TEST_CASE("spin closure") {
  CHECK(spin(4, {unit_vec(4, 0)}, {Matrix::identity(4)}).dim() == 1);
  Matrix cyc(4, 4);
  for (size_t i = 0; i < 4; ++i) cyc((i + 1) % 4, i) = 1;
  CHECK(spin(4, {unit_vec(4, 0)}, {cyc}) == Subspace::full(4));

  std::mt19937 rng(9);
  Field f = default_field();
  for (int t = 0; t < 10; ++t) {
    Matrix a = random_matrix(rng, 5, 5, f, 4);
    Vec seed = random_matrix(rng, 5, 1, f).col(0);
    Subspace s = spin(5, {seed}, {a});
    CHECK(s.contains(seed));
    for (const auto& b : s.basis()) CHECK(s.contains(a * b));
    Matrix r = restrict_to(a, s);
    CHECK(s.basis_columns() * r == a * s.basis_columns());
  }
}
