#include <doctest.h>

#include "axial/catalog.hpp"
#include "axial/highwater.hpp"
#include "axial/shapes.hpp"

using namespace axial;

namespace {

const FieldSpec Q = FieldSpec::rational();

Scalar q(long n, long d = 1) { return Scalar::from_frac(Q, n, d); }

const FusionLaw kLaw = FusionLaw::monster(q(1, 4), q(1, 32));

Vec basis(const Algebra& a, const std::string& l) { return a.basis_vector(a.index_of(l)); }

Algebra three_a() {
  Algebra a = build_6A(q(1, 4));
  return subalgebra_closure(a, {basis(a, "a0"), basis(a, "a2")}).algebra;
}

// 6A(1/4) with designated axes c, a0, a2, a4 (= a-2).
Algebra six_a_on_x1() {
  Algebra a = build_6A(q(1, 4));
  return with_axes(a, {basis(a, "c"), basis(a, "a0"), basis(a, "a2"), basis(a, "a-2")});
}

Shape shape_on_x1(const std::string& pair_label, const std::string& triangle_label) {
  Shape s;
  s.axet = x1(3);
  s.law = kLaw;
  for (const auto& v : shape_graph(s.axet).vertices) {
    REQUIRE(v.proper);
    ShapeAssignment as;
    as.orbit_rep = v.points;
    as.generators = v.generators;
    as.label = v.points.size() == 2 ? pair_label : triangle_label;
    s.assignments.push_back(as);
  }
  return s;
}

}  // namespace

TEST_CASE("shape graphs of standard axets") {
  ShapeGraph h = shape_graph(xn(6));
  REQUIRE(h.vertices.size() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& v : h.vertices) sizes.push_back(v.points.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 3, 6});
  CHECK(h.edges.size() == 2);
  for (auto [z, y] : h.edges) CHECK(h.vertices[y].points.size() == 6);
  for (const auto& v : h.vertices) CHECK(v.proper == (v.points.size() != 6));

  ShapeGraph one = shape_graph(x1(5));
  REQUIRE(one.vertices.size() == 2);
  CHECK(one.edges.empty());
  for (const auto& v : one.vertices) CHECK(v.proper);

  ShapeGraph two = shape_graph(xn(2));
  CHECK(two.vertices.size() == 1);
  CHECK(two.edges.empty());
  CHECK_FALSE(two.vertices[0].proper);
}

TEST_CASE("6A(1/4): shape 3A2A") {
  Algebra a = build_6A(q(1, 4));
  Shape s = shape_of_algebra(a, kLaw);
  int opposite = 0, triangles = 0;
  for (const auto& as : s.assignments) {
    if (as.orbit_rep.size() == 2) {
      ++opposite;
      CHECK(as.label == "3C[eta=1/4]");
      CHECK(as.fingerprint->dim == 3);
    } else {
      ++triangles;
      CHECK(as.orbit_rep.size() == 3);
      CHECK(as.label.empty());
      CHECK(as.fingerprint->dim == 4);
    }
  }
  CHECK(opposite == 1);
  CHECK(triangles == 2);  // the Miyamoto group keeps the two triangles apart
  Realizers r;
  for (const auto& as : s.assignments)
    if (as.label.empty()) r[as.key()] = three_a();
  CHECK(validate_shape(s, r, kLaw).ok);
  CHECK_THROWS_AS(validate_shape(s, {}, kLaw), Error);
}

TEST_CASE("6J(2b, b): opposite pairs give 3C(2b), triangles give 3C(b)") {
  Scalar b = q(1, 32);
  Algebra a = build_6J(b);
  FusionLaw law = FusionLaw::monster(q(2) * b, b);
  for (const auto& as : shape_of_algebra(a, law).assignments)
    CHECK(as.label == (as.orbit_rep.size() == 2 ? "3C[eta=1/16]" : "3C[eta=1/32]"));
}

TEST_CASE("fingerprints are constant on Miyamoto orbits") {
  for (const char* l : {"6A[alpha=1/3]", "6J[beta=2]", "6Y", "H[n=5]"}) {
    CAPTURE(l);
    CatalogEntry e = build_entry(l, Q);
    ClosedAxes cl = closed_axes(e.algebra, e.algebra.axes(), *e.law);
    for (std::size_t x = 0; x < cl.axes.size(); ++x)
      for (std::size_t y = 0; y < cl.axes.size(); ++y) {
        if (x == y) continue;
        Fingerprint f0 = fingerprint(e.algebra, cl.axes[x], cl.axes[y], *e.law);
        for (const auto& t : cl.perms) CHECK(fingerprint(e.algebra, cl.axes[t[x]], cl.axes[t[y]], *e.law) == f0);
      }
  }
}

TEST_CASE("validate_shape on X(6) hand shapes") {
  Shape s;
  s.axet = xn(6);
  s.law = kLaw;
  for (const auto& v : shape_graph(s.axet).vertices) {
    if (!v.proper) continue;
    ShapeAssignment as;
    as.orbit_rep = v.points;
    as.generators = v.generators;
    as.label = v.points.size() == 2 ? "3C[eta=1/4]" : "3A";
    s.assignments.push_back(as);
  }
  CHECK(validate_shape(s, {{"3A", three_a()}}, kLaw).ok);
  // a realizer whose axet does not fit the subaxet
  ShapeVerdict bad = validate_shape(s, {{"3A", build_2B(Q)}}, kLaw);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.detail.empty());
}

TEST_CASE("completions on X1(1+3)") {
  Realizers r{{"3A", three_a()}};
  CompletionResult c = completion_check(shape_on_x1("3C[eta=1/4]", "3A"), six_a_on_x1(), kLaw, r);
  CHECK(c.ok);
  CHECK(c.faithful);
  CHECK(validate_shape(shape_on_x1("3C[eta=1/4]", "3A"), r, kLaw).ok);

  Algebra sum = direct_sum(build_1A(Q), build_3C(q(1, 32)));
  CHECK(completion_check(shape_on_x1("2B", "3C[eta=1/32]"), sum, kLaw).ok);
  CHECK_FALSE(completion_check(shape_on_x1("3C[eta=1/4]", "3A"), sum, kLaw, r).ok);
  Algebra sum3a = direct_sum(build_1A(Q), three_a());
  CHECK_FALSE(completion_check(shape_on_x1("3C[eta=1/4]", "3A"), sum3a, kLaw, r).ok);
  CHECK(completion_check(shape_on_x1("2B", "3A"), sum3a, kLaw, r).ok);
}

TEST_CASE("property (J): witnesses") {
  Algebra a = build_6A(q(1, 4));
  Vec c = basis(a, "c");
  CHECK(property_j_check(a, kLaw, c).ok);
  CHECK(property_j_search(a, kLaw) == std::optional<Vec>(c));

  Scalar b = q(1, 32);
  Algebra j = build_6J(b);
  FusionLaw lj = FusionLaw::monster(q(2) * b, b);
  CHECK(property_j_check(j, lj, basis(j, "u")).ok);
  CHECK(property_j_search(j, lj) == std::optional<Vec>(basis(j, "u")));

  // 2 mu = 1 is the N(6) value
  for (Scalar alpha : {q(1, 3), q(1, 5), q(3)}) {
    Algebra s = build_split_spin(q(1, 2), alpha);
    FusionLaw ls = FusionLaw::monster(alpha, q(1, 2));
    CHECK(closed_axes(s, s.axes(), ls).axes.size() == 6);
    CHECK(property_j_check(s, ls, basis(s, "z1")).ok);
    CHECK(property_j_search(s, ls) == std::optional<Vec>(basis(s, "z1")));
  }

  for (int n : {3, 5}) {
    HwJQuotient h = build_H2nJ(n, Q, false);
    FusionLaw lh = FusionLaw::monster(q(2), q(1, 2));
    CHECK(property_j_check(h.algebra, lh, h.a).ok);
    CHECK(property_j_search(h.algebra, lh) == std::optional<Vec>(h.a));
  }
}

TEST_CASE("property (J): failures") {
  FusionLaw l6y = FusionLaw::monster(q(1, 2), q(2));
  Algebra y = build_6Y(Q);
  CHECK_FALSE(property_j_search(y, l6y));
  for (const Vec& v : {Vec(y.basis_vector(3)), Vec(y.basis_vector(4)), Vec(y.basis_vector(3) + y.basis_vector(4))})
    CHECK_FALSE(property_j_check(y, l6y, v).ok);
  for (long d : {0, 1}) {
    Algebra s = build_spin(q(d));
    CHECK_FALSE(property_j_search(s, FusionLaw::jordan(q(1, 2))));
  }
  Algebra a = build_6A(q(1, 4));
  CHECK_FALSE(property_j_check(a, kLaw, basis(a, "a0")).ok);
  CHECK_FALSE(property_j_check(a, kLaw, basis(a, "z")).ok);
  // odd axet
  Algebra h = build_Hn(5, Q, false).algebra;
  CHECK_THROWS_AS(property_j_search(h, FusionLaw::monster(q(2), q(1, 2))), Error);
}

TEST_CASE("sigma_a centralises Miy and {a} + Z + Z' is X2(1+2n)") {
  Algebra a = build_6A(q(1, 4));
  Vec c = basis(a, "c");
  ClosedAxes cl = closed_axes(a, a.axes(), kLaw);
  Mat sigma = sigma_jordan(a, c, q(1, 4));
  const int n = static_cast<int>(cl.axes.size());
  for (const auto& t : cl.tau) CHECK(sigma * t == t * sigma);
  Perm s(n + 1);
  s[0] = 0;
  for (int x = 0; x < n; ++x) s[x + 1] = cl.index_of(Vec(sigma * cl.axes[x])) + 1;
  std::vector<Perm> tau{s};
  for (int x = 0; x < n; ++x) {
    Perm t(n + 1);
    t[0] = 0;
    for (int y = 0; y < n; ++y) t[y + 1] = cl.perms[x][y] + 1;
    tau.push_back(t);
  }
  std::vector<std::string> labels{"a"};
  for (int x = 0; x < n; ++x) labels.push_back(std::to_string(x));
  Axet ext(labels, tau);
  FixedAxisClass k = classify_fixed_axis_3gen(ext, 0, 1, 2);
  CHECK(k.kind == FixedAxisClass::Kind::X2);
  CHECK(k.n == 6);
}
