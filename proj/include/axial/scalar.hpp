#ifndef AXIAL_SCALAR_HPP
#define AXIAL_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "axial/error.hpp"

namespace axial {

// One of Q, GF(p) with p an odd prime, or Q(sqrt d) with d square-free.
class FieldSpec {
 public:
  enum class Kind { Rational, Prime, Quadratic };

  FieldSpec() = default;
  static FieldSpec rational() { return FieldSpec(); }
  static FieldSpec prime(long p);
  static FieldSpec quadratic(long d);
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  long param() const { return param_; }
  long characteristic() const { return kind_ == Kind::Prime ? param_ : 0; }
  std::string str() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.param_ == b.param_;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

 private:
  Kind kind_ = Kind::Rational;
  long param_ = 0;
};

// An element of a FieldSpec. Integer-constructed values are "unbound"
// literals: they carry no field and adopt the field of whatever they are
// combined with. Eigen relies on this when it writes Scalar(0) or Scalar(1).
class Scalar {
 public:
  Scalar() = default;
  Scalar(int n) : a_(n) {}
  Scalar(long n) : a_(n) {}
  static Scalar literal(const mpq_class& q) {
    Scalar s;
    s.a_ = q;
    return s;
  }

  static Scalar from_rational(const FieldSpec& f, const mpq_class& q);
  static Scalar from_int(const FieldSpec& f, long n) { return from_rational(f, mpq_class(n)); }
  static Scalar from_frac(const FieldSpec& f, long num, long den);
  // a + b sqrt(d); b must be zero outside Q(sqrt d).
  static Scalar from_parts(const FieldSpec& f, const mpq_class& a, const mpq_class& b);
  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar parse(const FieldSpec& f, std::string_view text);

  bool bound() const { return bound_; }
  const FieldSpec& field() const { return field_; }
  // Returns this value placed in f. Bound values must already live in f.
  Scalar in(const FieldSpec& f) const;

  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;
  std::string str() const;

  // Components: rational part and sqrt(d) coefficient, or the residue in GF(p).
  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt_part() const { return b_; }
  std::int64_t residue() const { return r_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  Scalar operator-() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

 private:
  void unify(Scalar& other);

  FieldSpec field_;
  bool bound_ = false;
  mpq_class a_;
  mpq_class b_;
  std::int64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline Scalar inverse(const Scalar& s) { return s.inverse(); }

// Eigen's scalar customisation points.
inline const Scalar& conj(const Scalar& x) { return x; }
inline const Scalar& real(const Scalar& x) { return x; }
inline Scalar imag(const Scalar&) { return Scalar(0); }
inline Scalar abs2(const Scalar& x) { return x * x; }

}  // namespace axial

#endif
