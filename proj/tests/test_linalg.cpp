#include <doctest.h>

#include "axial/linalg.hpp"
#include "gen.hpp"

using namespace axial;
using Space = Subspace<Scalar>;

namespace {

Mat q_matrix(std::vector<std::vector<long>> rows) {
  Mat m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = Scalar::from_int(FieldSpec::rational(), rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("rref of a hand-worked matrix") {
  // [[1,2,3],[2,4,7]] -> [[1,2,0],[0,0,1]]
  auto e = rref(q_matrix({{1, 2, 3}, {2, 4, 7}}));
  REQUIRE(e.rank() == 2);
  CHECK(e.pivots == std::vector<Index>{0, 2});
  CHECK(e.rows == q_matrix({{1, 2, 0}, {0, 0, 1}}));
  Mat k = kernel(q_matrix({{1, 2, 3}, {2, 4, 7}}));
  REQUIRE(k.rows() == 1);
  CHECK(k == q_matrix({{-2, 1, 0}}));
}

TEST_CASE("subspace operations") {
  auto f = FieldSpec::rational();
  Space u = Space::span(3, {unit_vector(f, 3, 0), unit_vector(f, 3, 1)});
  Space v = Space::span(3, {unit_vector(f, 3, 1), unit_vector(f, 3, 2)});
  CHECK((u + v).dim() == 3);
  Space w = u.intersect(v);
  CHECK(w.dim() == 1);
  CHECK(w.contains(unit_vector(f, 3, 1)));
  CHECK(!w.contains(unit_vector(f, 3, 0)));
  Space z(3);
  CHECK(z.intersect(u).dim() == 0);
  CHECK(u.intersect(Space::whole(3)) == u);
}



TEST_CASE("property: rank-nullity, kernel and solve over several fields") {
  testgen::Gen g(17);
  for (const auto& f : testgen::fields()) {
    for (int t = 0; t < 25; ++t) {
      Index r = g.small(1, 6), c = g.small(1, 7);
      Mat m = g.matrix(f, r, c, 40);
      auto e = rref(m);
      Mat k = kernel(m);
      CHECK(e.rank() + k.rows() == c);
      for (Index i = 0; i < k.rows(); ++i) CHECK(is_zero_vector(Vec(m * k.row(i).transpose())));
      Vec x = g.vector(f, c);
      Vec b = m * x;
      auto sol = solve(m, b);
      REQUIRE(sol);
      CHECK(Vec(m * *sol) == b);
      // incremental insertion agrees with batch rref
      Space s(c);
      for (Index i = 0; i < r; ++i) s.insert(m.row(i).transpose());
      CHECK(s == Space::span_rows(m));
      // dim(U) + dim(V) = dim(U+V) + dim(U n V)
      Mat m2 = g.matrix(f, g.small(1, 5), c, 40);
      Space u = Space::span_rows(m), v = Space::span_rows(m2);
      CHECK(u.dim() + v.dim() == (u + v).dim() + u.intersect(v).dim());
    }
  }
}

TEST_CASE("inverse matrix and eigenspace") {
  Mat m = q_matrix({{2, 1}, {0, 3}});
  auto inv = inverse_matrix(m);
  REQUIRE(inv);
  CHECK(Mat(m * *inv) == Mat::Identity(2, 2));
  auto f = FieldSpec::rational();
  CHECK(eigenspace(m, Scalar::from_int(f, 3)).dim() == 1);
  CHECK(eigenspace(m, Scalar::from_int(f, 5)).dim() == 0);
  CHECK(!inverse_matrix(q_matrix({{1, 2}, {2, 4}})));
}
