#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "lr3/lift_verify.hpp"
#include "lr3/matrix.hpp"
#include "lr3/rays.hpp"

using namespace lr3;

namespace {

RatMatrix mat(const std::vector<std::vector<long long>>& rows) {
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// 6x9 matrix with the nine rays as columns.
RatMatrix ray_matrix() {
  RatMatrix v(6, kRayCount);
  for (std::size_t j = 0; j < kRayCount; ++j)
    for (std::size_t i = 0; i < 6; ++i) v(i, j) = kRays[j][i];
  return v;
}

// Frozen projection matrix of the nine rays, in the fixed ray order. The
// pattern: b is alone in its color class, {c,f} share one, the six block
// rays share one; edges only depend on which classes and blocks they join.
Rat expected_q(std::size_t i, std::size_t j) {
  auto block = [](std::size_t k) -> int {
    if (k == 3 || k == 5 || k == 7) return 1;
    if (k == 4 || k == 6 || k == 8) return 2;
    return 0;
  };
  if (i == j) {
    if (i == 0) return {6, 13};
    if (i <= 2) return {8, 13};
    return {28, 39};
  }
  if (i > j) std::swap(i, j);
  if (i == 0) return j <= 2 ? Rat(3, 13) : Rat(2, 13);
  if (i <= 2) return j <= 2 ? Rat(-5, 13) : Rat(1, 13);
  return block(i) == block(j) ? Rat(-11, 39) : Rat(2, 39);
}

}  // namespace

TEST_CASE("solve_linear") {
  const std::vector<Rat> b = {1, 2, 3};
  CHECK(solve_linear(RatMatrix::identity(3), b) == b);

  const auto half = solve_linear(mat({{2, 0}, {0, 2}}), {1, 1});
  CHECK(half == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});

  // Expressing ray b over the ray columns b,c,d1,e2,d2,e1 picks out the
  // first column.
  RatMatrix m(6, 6);
  const std::array<const char*, 6> cols = {"b", "c", "d1", "e2", "d2", "e1"};
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t i = 0; i < 6; ++i)
      m(i, j) = kRays[static_cast<std::size_t>(ray_index(cols[j]))][i];
  std::vector<Rat> rhs(6);
  for (std::size_t i = 0; i < 6; ++i) rhs[i] = kRays[0][i];
  CHECK(solve_linear(m, rhs) == std::vector<Rat>{1, 0, 0, 0, 0, 0});

  CHECK_THROWS_AS(solve_linear(mat({{1, 1}, {2, 2}}), {1, 1}), SingularMatrix);
}

TEST_CASE("inverse") {
  CHECK(inverse(RatMatrix::identity(6)) == RatMatrix::identity(6));

  const RatMatrix d = inverse(mat({{1, 0}, {0, 2}}));
  CHECK(d(0, 0) == 1);
  CHECK(d(1, 1) == Rat(1, 2));
  CHECK(d(0, 1) == 0);

  const RatMatrix v = ray_matrix();
  const RatMatrix gram = v * v.transpose();
  CHECK(gram * inverse(gram) == RatMatrix::identity(6));

  CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), SingularMatrix);
}

TEST_CASE("determinant and rank") {
  CHECK(determinant(RatMatrix::identity(4)) == 1);
  CHECK(determinant(mat({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(determinant(mat({{3, 0, 0}, {1, -2, 0}, {5, 7, 4}})) == -24);

  CHECK(rank(ray_matrix()) == 6);
  CHECK(rank(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(rank(RatMatrix::identity(5)) == 5);
}

TEST_CASE("projection_matrix basics") {
  const RatMatrix line = projection_matrix(mat({{2}}));
  CHECK(line.rows() == 1);
  CHECK(line(0, 0) == 1);

  CHECK(projection_matrix(RatMatrix::identity(6)) == RatMatrix::identity(6));

  // Rows that do not span rank(rows) make the Gram matrix singular.
  CHECK_THROWS_AS(projection_matrix(mat({{1, 0}, {2, 0}})), RankDeficient);
}

TEST_CASE("projection_matrix of the nine rays") {
  const RatMatrix v = ray_matrix();
  const RatMatrix q = projection_matrix(v);
  REQUIRE(q.rows() == 9);
  REQUIRE(q.cols() == 9);

  CHECK(q == q.transpose());
  CHECK(q * q == q);
  CHECK(q * v.transpose() == v.transpose());
  CHECK(rank(q) == 6);

  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      INFO("entry " << i << "," << j);
      CHECK(q(i, j) == expected_q(i, j));
    }
}

TEST_CASE("exact algebra on random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long long> entry(-5, 5);

  int solved = 0;
  while (solved < 25) {
    RatMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = entry(rng);
    if (determinant(a) == 0) continue;
    ++solved;

    std::vector<Rat> b(4);
    for (auto& x : b) x = entry(rng);
    const std::vector<Rat> x = solve_linear(a, b);
    CHECK(a * x == b);
    CHECK(inverse(inverse(a)) == a);
    CHECK(a * inverse(a) == RatMatrix::identity(4));
  }

  int projected = 0;
  while (projected < 10) {
    RatMatrix v(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) v(i, j) = entry(rng);
    if (rank(v) != 3) continue;
    ++projected;

    const RatMatrix q = projection_matrix(v);
    CHECK(q == q.transpose());
    CHECK(q * q == q);
    CHECK(q * v.transpose() == v.transpose());
  }
}

TEST_CASE("integer 6x6 matrices") {
  const IntMat6 id = IntMat6::identity();
  const Vec6 p = {2, 1, 2, 1, 3, 2};
  CHECK(id.apply(p) == p);
  CHECK(id * id == id);
  CHECK(is_unimodular(id));

  IntMat6 dbl = id;
  dbl.a[0][0] = 2;
  CHECK_FALSE(is_unimodular(dbl));

  const IntMat6 x = known_symmetries().X;
  CHECK(is_unimodular(x));
  CHECK(determinant(to_rational(x)) == -1);
  CHECK(x * x == id);
  CHECK(unimodular_inverse(x) * x == id);

  RatMatrix half = to_rational(id);
  half(2, 3) = Rat(1, 2);
  CHECK_FALSE(is_integral(half));
  CHECK_THROWS_AS(to_integral(half), std::invalid_argument);
  CHECK(is_integral(to_rational(x)));
  CHECK(to_integral(to_rational(x)) == x);
}
