#include <doctest.h>

#include "axial/scalar.hpp"
#include "gen.hpp"

using axial::ErrorKind;
using axial::FieldSpec;
using axial::Scalar;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const axial::Error& e) {
    return e.kind();
  }
  FAIL("expected an axial::Error");
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("field specs parse and print") {
  CHECK(FieldSpec::parse("Q") == FieldSpec::rational());
  CHECK(FieldSpec::parse("GF(7)") == FieldSpec::prime(7));
  CHECK(FieldSpec::parse("Q(sqrt 5)") == FieldSpec::quadratic(5));
  CHECK(FieldSpec::parse("Q(sqrt -3)") == FieldSpec::quadratic(-3));
  for (const auto& f : testgen::fields()) CHECK(FieldSpec::parse(f.str()) == f);
  CHECK(FieldSpec::prime(5).characteristic() == 5);
  CHECK(FieldSpec::quadratic(2).characteristic() == 0);
}

TEST_CASE("bad fields are rejected") {
  CHECK(kind_of([] { FieldSpec::prime(2); }) == ErrorKind::CharacteristicUnsupported);
  CHECK(kind_of([] { FieldSpec::prime(9); }) == ErrorKind::BadField);
  CHECK(kind_of([] { FieldSpec::quadratic(1); }) == ErrorKind::BadField);
  CHECK(kind_of([] { FieldSpec::quadratic(0); }) == ErrorKind::BadField);
  CHECK(kind_of([] { FieldSpec::quadratic(12); }) == ErrorKind::BadField);
  CHECK(kind_of([] { FieldSpec::parse("R"); }) == ErrorKind::ParseError);
}

TEST_CASE("hand-computed values") {
  auto gf7 = FieldSpec::prime(7);
  CHECK(Scalar::parse(gf7, "1/2").str() == "4");
  CHECK(Scalar::parse(gf7, "-1").str() == "6");
  CHECK((Scalar::from_int(gf7, 3) * Scalar::from_int(gf7, 5)).str() == "1");

  auto q = FieldSpec::rational();
  CHECK((Scalar::parse(q, "1/4") + Scalar::parse(q, "1/12")).str() == "1/3");
  CHECK(Scalar::parse(q, "-6/4").str() == "-3/2");

  auto q5 = FieldSpec::quadratic(5);
  Scalar phi = Scalar::parse(q5, "(1/2)+(1/2)r");
  CHECK((phi * phi).str() == "(3/2)+(1/2)r");
  CHECK(phi * phi - phi == Scalar::one(q5));

  auto q2 = FieldSpec::quadratic(2);
  CHECK(Scalar::parse(q2, "(1)+(1)r").inverse().str() == "(-1)+(1)r");
  CHECK(Scalar::parse(q2, "(3)+(0)r").str() == "3");
}

TEST_CASE("scalar errors") {
  auto q = FieldSpec::rational();
  CHECK(kind_of([&] { Scalar::parse(q, "1/0"); }) == ErrorKind::ZeroDenominator);
  CHECK(kind_of([&] { Scalar::zero(q).inverse(); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { Scalar::one(q) / Scalar::zero(q); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { Scalar::parse(q, "x"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { Scalar::parse(q, "(1)+(1)r"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { Scalar::parse(FieldSpec::prime(5), "1/5"); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([] { Scalar::one(FieldSpec::prime(5)) + Scalar::one(FieldSpec::prime(7)); }) ==
        ErrorKind::FieldMismatch);
}

TEST_CASE("unbound literals adopt the other operand's field") {
  auto f = FieldSpec::prime(5);
  Scalar x = Scalar::from_int(f, 3);
  Scalar y = x + Scalar(1);
  CHECK(y.bound());
  CHECK(y.field() == f);
  CHECK(y.str() == "4");
  CHECK(Scalar(0) == Scalar::zero(f));
  CHECK(Scalar::literal(mpq_class(1, 2)) * Scalar::from_int(f, 2) == Scalar::one(f));
}

TEST_CASE("property: field axioms and round-trip") {
  testgen::Gen g(0x5ca1a7);
  for (const auto& f : testgen::fields()) {
    for (int t = 0; t < 200; ++t) {
      Scalar a = g.scalar(f), b = g.scalar(f), c = g.scalar(f);
      REQUIRE(Scalar::parse(f, a.str()) == a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}
