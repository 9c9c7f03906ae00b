#include <doctest.h>

#include "axial/catalog.hpp"
#include "axial/highwater.hpp"
#include "gen.hpp"

using namespace axial;
using E = HwElement;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F5 = FieldSpec::prime(5);

Scalar q(const FieldSpec& f, long n, long d = 1) { return Scalar::from_frac(f, n, d); }

E random_element(testgen::Gen& g, const FieldSpec& f, int terms) {
  E e(f);
  for (int t = 0; t < terms; ++t) {
    Scalar c = Scalar::from_int(f, g.small(-3, 3));
    switch (g.small(0, 2)) {
      case 0: e += c * E::a(f, g.small(-8, 8)); break;
      case 1: e += c * E::s(f, g.small(1, 8)); break;
      default: e += c * E::p(f, g.small(1, 2), 3 * g.small(1, 3)); break;
    }
  }
  return e;
}

}  // namespace

TEST_CASE("symbolic products: printed examples") {
  CHECK(hw_mul(E::a(Q, 0), E::a(Q, 0)) == E::a(Q, 0));
  for (long j = 1; j <= 6; ++j)
    CHECK(hw_mul(E::s(Q, j), E::s(Q, j)) == q(Q, 3, 2) * E::s(Q, j) - q(Q, 3, 8) * E::s(Q, 2 * j));
  for (long n = 1; n <= 6; ++n) {
    E expect = q(Q, -3, 4) * E::a(Q, 0) + q(Q, 3, 8) * (E::a(Q, -n) + E::a(Q, n)) + q(Q, 3, 2) * E::s(Q, n) -
               E::z(Q, 0, n);
    CHECK(hw_mul(E::a(Q, 0), E::s(Q, n)) == expect);
  }
  // normalisation
  CHECK(E::s(Q, 0).is_zero());
  CHECK(E::p(Q, 1, 4).is_zero());
  CHECK(E::p(Q, 0, 3) == q(Q, -1) * (E::p(Q, 1, 3) + E::p(Q, 2, 3)));
  CHECK(E::z(Q, 0, 3) == E::p(Q, 1, 3) - E::p(Q, 2, 3));
  CHECK_THROWS_AS(hw_mul(E::a(FieldSpec::prime(3), 0), E::a(FieldSpec::prime(3), 1)), Error);
}

TEST_CASE("symbolic products are commutative") {
  testgen::Gen g(11);
  for (int t = 0; t < 200; ++t) {
    E u = random_element(g, Q, 4), v = random_element(g, Q, 4);
    CHECK(hw_mul(u, v) == hw_mul(v, u));
  }
}

TEST_CASE("z-product identities follow from the p-rules") {
  auto minus_sum = [](long r, long t) { return -(r + t); };
  for (long i = -4; i <= 4; ++i)
    for (long r = 0; r < 3; ++r)
      for (long j : {3L, 6L, 9L}) {
        E lhs = hw_mul(E::a(Q, i), E::z(Q, r, j));
        long ib = ((i % 3) + 3) % 3;
        CHECK(lhs == q(Q, 3, 2) * E::z(Q, r, j) + E::z(Q, -(ib + r), j));
      }
  for (long j = 1; j <= 7; ++j)
    for (long r = 0; r < 3; ++r)
      for (long k : {3L, 6L}) {
        E expect = q(Q, 3, 4) * (E::z(Q, r, j) + E::z(Q, r, k)) - q(Q, 3, 8) * (E::z(Q, r, j - k) + E::z(Q, r, j + k));
        CHECK(hw_mul(E::s(Q, j), E::z(Q, r, k)) == expect);
      }
  for (long r = 0; r < 3; ++r)
    for (long t = 0; t < 3; ++t)
      for (long h : {3L, 6L})
        for (long k : {3L, 6L, 9L}) {
          long m = minus_sum(r, t);
          E pz = q(Q, 3, 4) * (E::p(Q, m, h) + E::p(Q, m, k)) - q(Q, 3, 8) * (E::p(Q, m, h - k) + E::p(Q, m, h + k));
          CHECK(hw_mul(E::p(Q, r, h), E::z(Q, t, k)) == pz);
          E zz = q(Q, -3, 4) * (E::z(Q, m, h) + E::z(Q, m, k)) + q(Q, 3, 8) * (E::z(Q, m, h - k) + E::z(Q, m, h + k));
          CHECK(hw_mul(E::z(Q, r, h), E::z(Q, t, k)) == zz);
        }
}

TEST_CASE("H_n dimensions") {
  for (int n = 3; n <= 12; ++n) {
    CHECK(build_Hn(n, Q, false).algebra.dim() == n + n / 2);
    CHECK(build_Hn(n, F5, true).algebra.dim() == n + n / 2 + (n % 3 == 0 ? 2 * (n / 6) : 0));
  }
  CHECK(build_Hn(6, F5, true).algebra.dim() == 11);
  CHECK(build_Hn(4, Q, true).algebra.dim() == 6);  // 3 !| n: cover coincides with H_n
  CHECK_THROWS_AS(build_Hn(6, Q, true), Error);
  CHECK_THROWS_AS(build_Hn(5, FieldSpec::prime(3), false), Error);
}

TEST_CASE("reduction is compatible with the spanning set of I_n") {
  // adding a spanning element of I_n to a factor must not change the reduced product
  testgen::Gen g(5);
  for (int n : {6, 9, 12}) {
    HwQuotient h = build_Hn(n, F5, true);
    std::vector<E> span;
    for (long i = -3; i <= 3; ++i) span.push_back(E::a(F5, i) - E::a(F5, i + n));
    for (long j = 1; j <= 4; ++j) {
      span.push_back(E::s(F5, j) - E::s(F5, j + n));
      span.push_back(E::s(F5, j * n));
      for (long r = 1; r <= 2; ++r) span.push_back(E::p(F5, r, 3 * j) - E::p(F5, r, 3 * j + n));
    }
    for (long j = 1; j <= n / 2; ++j) {
      span.push_back(E::s(F5, j) - E::s(F5, n - j));
      for (long r = 1; r <= 2; ++r) span.push_back(E::p(F5, r, j) - E::p(F5, r, n - j));
    }
    for (const auto& w : span) {
      CHECK(is_zero_vector(h.reduce(w)));
      for (int t = 0; t < 6; ++t) {
        E u = random_element(g, F5, 3);
        CHECK(is_zero_vector(h.reduce(hw_mul(u, w))));
      }
    }
  }
}

TEST_CASE("H_n: axes, Miyamoto involutions and symmetries") {
  for (const FieldSpec& f : {Q, F5}) {
    FusionLaw law = FusionLaw::monster(q(f, 2), q(f, 1, 2));
    for (int n = 3; n <= 12; ++n) {
      CAPTURE(n);
      HwQuotient h = build_Hn(n, f, f == F5);
      Mat flip = hw_reflection(h, 1), shift = hw_translation(h, 1);
      CHECK(is_automorphism(h.algebra, flip));
      CHECK(is_automorphism(h.algebra, shift));
      for (int j = 0; j < n; ++j) {
        AxisReport r = verify_axis(h.algebra, h.algebra.basis_vector(j), law, 4);
        CHECK(r.ok());
        CHECK(r.seress_ok == std::optional<bool>(true));
        REQUIRE(r.miyamoto);
        // tau_{a_j} is the reflection i -> 2j - i
        CHECK(*r.miyamoto == hw_reflection(h, 2 * j));
      }
      ClosedAxes cl = closed_axes(h.algebra, {h.algebra.basis_vector(0), h.algebra.basis_vector(1)}, law);
      CHECK(cl.axes.size() == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("third axes b_i in H_2n") {
  for (int n : {3, 5}) {
    HwQuotient h = build_Hn(2 * n, Q, false);
    std::vector<Vec> bs;
    for (int i = 0; i < n; ++i) {
      Vec b = third_axis_b(h, i);
      bs.push_back(b);
      Vec x = h.algebra.basis_vector(i), y = h.algebra.basis_vector(i + n);
      CHECK(jordan_identify(h.algebra, x, y).label == "3C[eta=2]");
      CHECK(subalgebra_span(h.algebra, {x, y}).contains(b));
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) CHECK(bs[i] != bs[j]);
  }
  CHECK_THROWS_AS(third_axis_b(build_Hn(5, Q, false), 0), Error);
}

TEST_CASE("property-(J) quotients of H_2n") {
  struct Case {
    int n;
    FieldSpec f;
    bool cover;
    int dim;
  };
  for (const Case& c : {Case{3, Q, false, 6}, Case{5, Q, false, 9}, Case{7, Q, false, 12},
                        Case{3, F5, true, 8}, Case{9, F5, true, 19}, Case{5, F5, true, 9}}) {
    CAPTURE(c.n);
    HwJQuotient r = build_H2nJ(c.n, c.f, c.cover);
    CHECK(r.algebra.dim() == c.dim);
    CHECK(r.printed == r.ideal);
    const FieldSpec& f = c.f;
    // every b_i has the same image
    for (int i = 1; i < c.n; ++i) CHECK(r.quotient.project(third_axis_b(r.parent, i)) == r.a);

    AxisReport ra = verify_axis(r.algebra, r.a, FusionLaw::jordan(q(f, 2)));
    CHECK(ra.ok());
    FusionLaw m = FusionLaw::monster(q(f, 2), q(f, 1, 2));
    for (const auto& ax : r.algebra.axes()) CHECK(verify_axis(r.algebra, ax, m, 0).ok());
    Mat ad = r.algebra.ad(r.a);
    for (int i = 0; i < c.n; ++i) {
      Vec d = r.quotient.project(Vec(r.parent.algebra.basis_vector(i) - r.parent.algebra.basis_vector(i + c.n)));
      CHECK(ad * d == Vec(q(f, 2) * d));
    }
    for (int b = 2 * c.n; b < r.parent.algebra.dim(); ++b) {
      Vec v = r.quotient.project(r.parent.algebra.basis_vector(b));
      CHECK(is_zero_vector(Vec(ad * v)));
    }
    Mat sigma = sigma_jordan(r.algebra, r.a, q(f, 2));
    for (int i = 0; i < 2 * c.n; ++i)
      CHECK(sigma * r.algebra.axes()[i] == r.algebra.axes()[(i + c.n) % (2 * c.n)]);
    CHECK(ideal_generated(r.algebra, {r.a}).dim() == r.algebra.dim());
  }
  CHECK_THROWS_AS(build_H2nJ(4, Q, false), Error);
}
