#include <doctest.h>

#include "axial/catalog.hpp"

using namespace axial;

namespace {

const FieldSpec Q = FieldSpec::rational();

Scalar q(long n, long d = 1) { return Scalar::from_frac(Q, n, d); }

// Recurrence a_{i+5} = 5a_{i+4} - 10a_{i+3} + 10a_{i+2} - 5a_{i+1} + a_i, started
// from the unit vectors; returns the coefficients of a_n in a_0..a_4.
std::vector<Scalar> iterate_recurrence(long n, const FieldSpec& f) {
  std::vector<std::vector<Scalar>> a;
  for (int i = 0; i < 5; ++i) {
    std::vector<Scalar> e(5, Scalar::zero(f));
    e[i] = Scalar::one(f);
    a.push_back(e);
  }
  const long c[5] = {1, -5, 10, -10, 5};
  while (static_cast<long>(a.size()) <= n) {
    std::vector<Scalar> next(5, Scalar::zero(f));
    std::size_t m = a.size();
    for (int k = 0; k < 5; ++k)
      for (int t = 0; t < 5; ++t) next[t] += Scalar::from_int(f, c[k]) * a[m - 5 + k][t];
    a.push_back(next);
  }
  return a[n];
}

}  // namespace

TEST_CASE("labels parse and print back") {
  AlgebraLabel l = AlgebraLabel::parse("6A[alpha=1/4]");
  CHECK(l.family == "6A");
  CHECK(l.get("alpha") == std::optional<std::string>("1/4"));
  CHECK(l.str() == "6A[alpha=1/4]");
  CHECK(AlgebraLabel::parse("iy3[alpha = 1/3, mu=-1]").str() == "iy3[alpha=1/3,mu=-1]");
  CHECK(AlgebraLabel::parse("6Y").params.empty());
  CHECK_THROWS_AS(AlgebraLabel::parse("6A[alpha]"), Error);
  CHECK_THROWS_AS(AlgebraLabel::parse("6A[alpha=1"), Error);
  CHECK_THROWS_AS(build("nosuch", Q), Error);
  CHECK_THROWS_AS(build("6A", Q), Error);
}

TEST_CASE("forbidden parameters are rejected") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind_of([] { build_6A(q(1, 2)); }) == ErrorKind::ForbiddenParameter);
  CHECK(kind_of([] { build_6A(q(4, 9)); }) == ErrorKind::ForbiddenParameter);
  CHECK(kind_of([] { build_6A(q(1)); }) == ErrorKind::ForbiddenParameter);
  CHECK(kind_of([] { build_6A(q(0)); }) == ErrorKind::ForbiddenParameter);
  // -4 + 2 sqrt 5 lives in Q(sqrt 5)
  FieldSpec q5 = FieldSpec::quadratic(5);
  CHECK(kind_of([&] { build_6A(Scalar::from_parts(q5, -4, 2)); }) == ErrorKind::ForbiddenParameter);
  CHECK(kind_of([] { build_6J(q(1, 2)); }) == ErrorKind::ForbiddenParameter);
  CHECK(kind_of([] { build_6J(q(0)); }) == ErrorKind::ForbiddenParameter);
  CHECK(kind_of([] { build_3C(q(1)); }) == ErrorKind::ForbiddenParameter);
  CHECK(kind_of([] { build_spin(q(2)); }) == ErrorKind::ForbiddenParameter);
  CHECK(kind_of([] { build_split_spin(q(1, 3), q(1, 2)); }) == ErrorKind::ForbiddenParameter);
  // 2/5 and 1/3 are valid in this basis
  CHECK_NOTHROW(build_6A(q(2, 5)));
  CHECK_NOTHROW(build_6A(q(1, 3)));
}

TEST_CASE("6A(1/4): printed form values") {
  Algebra a = build_6A(q(1, 4));
  CHECK(*a.param("beta") == q(1, 32));
  CHECK(frobenius_check(a));
  auto g = [&](const std::string& x, const std::string& y) { return a.gram()(a.index_of(x), a.index_of(y)); };
  // substituted by hand into the printed expressions at alpha = 1/4
  CHECK(g("a0", "a0") == q(1));
  CHECK(g("c", "c") == q(1));
  CHECK(g("a0", "a1") == q(5, 256));
  CHECK(g("a-2", "a3") == q(5, 256));
  CHECK(g("a0", "a2") == q(13, 256));
  CHECK(g("a0", "a3") == q(1, 8));
  CHECK(g("a1", "c") == q(1, 8));
  CHECK(g("a2", "z") == q(45, 128));
  CHECK(g("c", "z") == q(0));
  CHECK(g("z", "z") == q(405, 128));
}

TEST_CASE("6J(2b, b) and 6Y: printed form values") {
  Algebra j = build_6J(q(1, 32));
  CHECK(frobenius_check(j));
  auto g = [&](const std::string& x, const std::string& y) { return j.gram()(j.index_of(x), j.index_of(y)); };
  CHECK(g("a0", "a1") == q(1, 32));
  CHECK(g("a0", "a2") == q(1, 64));
  CHECK(g("a0", "a3") == q(1, 32));
  CHECK(g("a0", "u") == q(1, 32));
  CHECK(g("a0", "w") == q(1, 16));
  CHECK(g("u", "w") == q(1, 32));
  CHECK(g("w", "w") == q(65, 32));

  Algebra y = build_6Y(Q);
  CHECK(frobenius_check(y));
  for (const auto& u : y.axes())
    for (const auto& v : y.axes()) CHECK(y.form(u, v) == q(1));
  CHECK(y.form(y.basis_vector(3), y.basis_vector(3)) == q(0));
}

TEST_CASE("catalog: products follow the printed rules") {
  Algebra a = build_6A(q(1, 3));
  Scalar al = q(1, 3);
  Vec a0 = a.basis_vector(a.index_of("a0")), a3 = a.basis_vector(a.index_of("a3"));
  Vec c = a.basis_vector(a.index_of("c"));
  CHECK(a.mul(a0, a3) == Vec(al / q(2) * (a0 + a3 - c)));
  CHECK(c == Vec(a0 + a3 - (q(2) / al) * a.mul(a0, a3)));

  Algebra s = build_spin(q(-1));
  Vec one = s.basis_vector(0);
  for (int i = 0; i < 3; ++i) CHECK(s.mul(one, s.basis_vector(i)) == s.basis_vector(i));

  Algebra cx = build_3C_cross(Q);
  CHECK(cx.dim() == 2);
  CHECK(cx.axes().size() == 3);
  Algebra yx = build_6Y_cross(Q);
  CHECK(yx.dim() == 4);
  CHECK(yx.axes().size() == 6);
}

TEST_CASE("IY3 dispatch and declared laws") {
  CHECK(build_iy3(q(1, 3), q(-1)).labels() == std::vector<std::string>{"e", "f", "z1", "z2"});
  CHECK(build_iy3(q(-1), q(-1)).labels() == std::vector<std::string>{"e", "f", "z1", "n"});
  CHECK(build_iy3(q(1, 3), q(1)).labels() == std::vector<std::string>{"a0", "a1", "z", "n"});
  for (const char* l : {"iy3[alpha=1/3,mu=-1]", "iy3[alpha=-1,mu=-1]", "iy3[alpha=1/3,mu=1]", "splitspin[alpha=1/5,mu=3]",
                        "6A[alpha=5]", "6J[beta=2]", "6Y", "6Yx", "bar01", "3Cx", "clhat", "spin[delta=0]"}) {
    CAPTURE(l);
    CatalogEntry e = build_entry(l, Q);
    REQUIRE(e.law);
    for (const auto& ax : e.algebra.axes()) CHECK(verify_axis(e.algebra, ax, *e.law).ok());
  }
}

TEST_CASE("Bar01: derived products are unique and give a new axis") {
  Algebra b = build_bar01(Q);
  CHECK(*b.param("bar01_unique") == q(1));
  CHECK(b.dim() == 5);
  FusionLaw law = FusionLaw::monster(q(1, 2), q(2));
  for (const auto& ax : b.axes()) CHECK(verify_axis(b, ax, law).ok());
  Vec a = b.basis_vector(4);
  // in S(-2): x(y + y') = 0, x(y - y') = (y - y')/2, so a.a_i = -d/4 and a.d = d/2
  Vec d = b.basis_vector(3);
  CHECK(b.mul(a, d) == Vec(q(1, 2) * d));
  CHECK(b.mul(a, b.basis_vector(0)) == Vec(q(-1, 4) * d));
}

TEST_CASE("jordan_identify: 3C(1/2) pairs are spin factors") {
  Algebra c = build_3C(q(1, 2));
  Vec x = c.basis_vector(0), y = c.basis_vector(1), z = c.basis_vector(2);
  JordanId id = jordan_identify(c, x, y);
  CHECK(id.label == "spin[delta=-1]");
  CHECK(*id.gamma == q(-3, 8));
  Vec one = q(2, 3) * (x + y + z);
  for (int i = 0; i < 3; ++i) CHECK(c.mul(one, c.basis_vector(i)) == c.basis_vector(i));
  JordanId id2 = jordan_identify(c, x, Vec(one - y));
  CHECK(id2.label == "spin[delta=1]");
  CHECK(*id2.gamma == q(-1, 8));
}

TEST_CASE("jordan_identify: round trip through the catalog") {
  for (long num : {-3, -1, 0, 1, 3, 5}) {
    Scalar delta = q(num, 2);
    Algebra s = build_spin(delta);
    JordanId id = jordan_identify(s, s.axes()[0], s.axes()[1]);
    CHECK(id.label == "spin[delta=" + delta.str() + "]");
    CHECK(*id.gamma == (delta - q(2)) / q(8));
  }
  for (Scalar eta : {q(2), q(1, 3), q(-3)}) {
    Algebra c = build_3C(eta);
    CHECK(jordan_identify(c, c.axes()[0], c.axes()[2]).label == "3C[eta=" + eta.str() + "]");
  }
  Algebra b = build_2B(Q);
  CHECK(jordan_identify(b, b.axes()[0], b.axes()[1]).label == "2B");
  Algebra cl = build_clhat(Q);
  CHECK(jordan_identify(cl, cl.axes()[0], cl.axes()[1]).label == "clhat");
  Algebra s2 = build_spin2_circ(Q);
  CHECK(jordan_identify(s2, s2.axes()[0], s2.axes()[1]).label == "spin2circ");
  Algebra cx = build_3C_cross(Q);
  CHECK(jordan_identify(cx, cx.axes()[0], cx.axes()[1]).label == "3Cx");
  Algebra six = build_6A(q(1, 4));
  CHECK_THROWS_AS(jordan_identify(six, six.axes()[0], six.axes()[1]), Error);
}

TEST_CASE("spin axet sizes: order of the rotation matrix and the τ-closure agree") {
  struct Case {
    FieldSpec f;
    Scalar delta;
    std::optional<long> n;
  };
  FieldSpec q5 = FieldSpec::quadratic(5), q2 = FieldSpec::quadratic(2), q3 = FieldSpec::quadratic(3);
  std::vector<Case> cases = {
      {Q, q(-1), 3},
      {Q, q(0), 4},
      {Q, q(1), 6},
      {Q, q(-2), std::nullopt},
      {Q, q(2), std::nullopt},
      {q5, Scalar::from_parts(q5, mpq_class(-1, 2), mpq_class(1, 2)), 5},
      {q5, Scalar::from_parts(q5, mpq_class(1, 2), mpq_class(1, 2)), 10},
      {q2, Scalar::from_parts(q2, 0, 1), 8},
      {q3, Scalar::from_parts(q3, 0, 1), 12},
      {FieldSpec::prime(5), Scalar::from_int(FieldSpec::prime(5), 2), 5},
      {FieldSpec::prime(7), Scalar::from_int(FieldSpec::prime(7), 2), 7},
      {FieldSpec::prime(7), Scalar::from_int(FieldSpec::prime(7), -2), 14},
  };
  for (const auto& c : cases) {
    CAPTURE(c.delta.str());
    CHECK(spin_axet_size(c.delta) == c.n);
    if (!c.n || c.delta == Scalar::from_int(c.f, 2)) continue;
    Algebra s = build_spin(c.delta);
    ClosedAxes cl = closed_axes(s, s.axes(), FusionLaw::jordan(Scalar::from_frac(c.f, 1, 2)), 64);
    CHECK(!cl.capped);
    CHECK(static_cast<long>(cl.axes.size()) == *c.n);
  }
}

TEST_CASE("IY5 coefficients match the recurrence") {
  std::vector<FieldSpec> fields = {Q, FieldSpec::prime(5), FieldSpec::prime(7), FieldSpec::prime(11)};
  for (const auto& f : fields)
    for (long n = 0; n <= 40; ++n) {
      CAPTURE(n);
      auto c = iy5_coeffs(n, f);
      auto r = iterate_recurrence(n, f);
      for (int i = 0; i < 5; ++i) CHECK(c[i] == r[i]);
    }
  CHECK_THROWS_AS(iy5_coeffs(7, FieldSpec::prime(3)), Error);
  CHECK(iy5_axet_size(Q) == std::nullopt);
  CHECK(iy5_axet_size(FieldSpec::prime(3)) == 9);
  for (long p : {5, 7, 11, 13}) CHECK(iy5_axet_size(FieldSpec::prime(p)) == p);
}
