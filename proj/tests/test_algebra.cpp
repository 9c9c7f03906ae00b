#include <doctest.h>

#include "axial/catalog.hpp"
#include "gen.hpp"

using namespace axial;

namespace {

const FieldSpec Q = FieldSpec::rational();

Scalar q(long n, long d = 1) { return Scalar::from_frac(Q, n, d); }

// Random commutative algebra with sparse structure constants.
Algebra random_algebra(testgen::Gen& g, const FieldSpec& f, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  Algebra a(f, labels);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (g.small(0, 2) == 0) a.add_constant(i, j, static_cast<int>(g.small(0, n - 1)), g.scalar(f));
  return a;
}

}  // namespace

TEST_CASE("structure constants, labels and vec builder") {
  Algebra a(Q, {"x", "y"});
  a.add_constant(0, 1, 0, q(1, 2));
  a.add_constant(1, 0, 1, q(1, 2));
  CHECK(a.product_of_basis(0, 1) == a.product_of_basis(1, 0));
  CHECK(a.mul(a.basis_vector(1), a.basis_vector(0)) == a.vec({{"x", q(1, 2)}, {"y", q(1, 2)}}));
  CHECK(a.index_of("y") == 1);
  CHECK_THROWS_AS(a.index_of("w"), Error);
  CHECK_THROWS_AS(a.add_axis(a.basis_vector(0)), Error);
  CHECK_THROWS_AS(Algebra(Q, {"x", "x"}), Error);
}

TEST_CASE("3C(-1): sum of axes spans an ideal and the form radical") {
  Algebra c = build_3C(q(-1));
  Vec s = c.vec({{"x", q(1)}, {"y", q(1)}, {"z", q(1)}});
  // x (x + y + z) = (1 + eta) x, so s is annihilated at eta = -1
  for (int i = 0; i < 3; ++i) CHECK(is_zero_vector(c.mul(c.basis_vector(i), s)));
  Space i = ideal_generated(c, {s});
  CHECK(i.dim() == 1);
  CHECK(is_ideal(c, i));
  CHECK(form_radical(c) == i);
  QuotientResult qr = quotient(c, i);
  CHECK(qr.algebra.dim() == 2);
  CHECK(qr.algebra.has_form());
  CHECK(frobenius_check(qr.algebra));
  CHECK(qr.algebra.axes().size() == 3);
  CHECK_THROWS_AS(quotient(c, Space::span(3, {c.basis_vector(0)})), Error);
  // for other eta the algebra is simple
  Algebra c2 = build_3C(q(1, 3));
  CHECK(ideal_generated(c2, {c2.basis_vector(0)}).dim() == 3);
  CHECK(form_radical(c2).dim() == 0);
}

TEST_CASE("subalgebra closure inside 6A") {
  Algebra a = build_6A(q(1, 4));
  Vec a0 = a.basis_vector(a.index_of("a0")), a2 = a.basis_vector(a.index_of("a2"));
  Vec a3 = a.basis_vector(a.index_of("a3"));
  SubalgebraResult s3 = subalgebra_closure(a, {a0, a3});
  CHECK(s3.algebra.dim() == 3);
  CHECK(s3.space.contains(a.basis_vector(a.index_of("c"))));
  SubalgebraResult s4 = subalgebra_closure(a, {a0, a2});
  CHECK(s4.algebra.dim() == 4);
  CHECK(s4.space.contains(a.basis_vector(a.index_of("a-2"))));
  CHECK(s4.space.contains(a.basis_vector(a.index_of("z"))));
  CHECK(s4.algebra.has_form());
  CHECK(frobenius_check(s4.algebra));
  CHECK(s4.to_ambient(s4.to_sub(a2)) == a2);
  CHECK(subalgebra_span(a, {a0, a2}) == s4.space);
  CHECK(subalgebra_closure(a, {a0, a.basis_vector(a.index_of("a1"))}).algebra.dim() == 8);
}

TEST_CASE("random algebras: ideals are ideals and quotients have the right size") {
  testgen::Gen g(7);
  for (const auto& f : {Q, FieldSpec::prime(7), FieldSpec::quadratic(-3)}) {
    for (int t = 0; t < 20; ++t) {
      int n = static_cast<int>(g.small(2, 6));
      Algebra a = random_algebra(g, f, n);
      Vec v = g.vector(f, n);
      Space i = ideal_generated(a, {v});
      CHECK(is_ideal(a, i));
      CHECK(i.contains(v));
      QuotientResult qr = quotient(a, i);
      CHECK(qr.algebra.dim() == n - i.dim());
      // the projection is an algebra homomorphism
      Vec x = g.vector(f, n), y = g.vector(f, n);
      CHECK(qr.project(a.mul(x, y)) == qr.algebra.mul(qr.project(x), qr.project(y)));
      Space s = subalgebra_span(a, {x});
      for (int p = 0; p < s.dim(); ++p)
        for (int r = 0; r < s.dim(); ++r) CHECK(s.contains(a.mul(s.vector(p), s.vector(r))));
    }
  }
}

TEST_CASE("direct sums and projection graphs") {
  Algebra one = build_1A(Q);
  Algebra two = direct_sum(one, one);
  CHECK(two.dim() == 2);
  CHECK(two.labels()[1] == "a'");
  CHECK(is_zero_vector(two.mul(two.basis_vector(0), two.basis_vector(1))));
  CHECK(two.axes().size() == 2);
  CHECK(projection_graph(two).components() == 2);
  CHECK(projection_graph(build_2B(Q)).components() == 2);
  CHECK(projection_graph(build_3C(q(1, 3))).components() == 1);
  CHECK(projection_graph(build_6A(q(1, 4))).components() == 1);
}

TEST_CASE("Frobenius check detects a bad form") {
  Algebra c = build_3C(q(1, 3));
  CHECK(frobenius_check(c));
  Mat g = c.gram();
  g(0, 1) = g(1, 0) = q(7);
  c.set_gram(g);
  CHECK_FALSE(frobenius_check(c));
  Algebra nf = build_iy3(q(1, 3), q(-1));
  CHECK_FALSE(nf.has_form());
  CHECK_THROWS_AS(form_radical(nf), Error);
}

TEST_CASE("homomorphisms extend from generators") {
  Algebra c = build_3C(q(1, 3));
  Vec x = c.basis_vector(0), y = c.basis_vector(1), z = c.basis_vector(2);
  auto swap = extend_homomorphism(c, {x, y}, c, {y, x});
  REQUIRE(swap);
  CHECK(swap->injective);
  CHECK(swap->apply(z) == z);
  Algebra b = build_2B(Q);
  CHECK_FALSE(extend_homomorphism(b, b.axes(), c, {x, y}));
  CHECK_FALSE(extend_homomorphism(c, {x, y}, b, b.axes()));
  // 3C(-1) onto its 2-dim quotient
  Algebra m = build_3C(q(-1));
  Algebra cx = build_3C_cross(Q);
  auto proj = extend_homomorphism(m, {m.axes()[0], m.axes()[1]}, cx, {cx.axes()[0], cx.axes()[1]});
  REQUIRE(proj);
  CHECK_FALSE(proj->injective);
}

TEST_CASE("automorphism test") {
  Algebra c = build_3C(q(2));
  Mat p = Mat::Zero(3, 3);
  p(1, 0) = p(2, 1) = p(0, 2) = q(1);
  CHECK(is_automorphism(c, p));
  Mat bad = Mat::Identity(3, 3);
  bad(0, 0) = q(2);
  CHECK_FALSE(is_automorphism(c, bad));
}
