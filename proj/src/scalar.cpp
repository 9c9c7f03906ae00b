#include "axial/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>

namespace axial {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::ParseError, "bad integer in '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

mpq_class parse_q(std::string_view s, std::string_view whole) {
  s = trim(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_int(s, whole));
  mpz_class num = parse_int(s.substr(0, slash), whole);
  std::string_view dtext = trim(s.substr(slash + 1));
  if (!all_digits(dtext)) throw Error(ErrorKind::ParseError, "bad denominator in '" + std::string(whole) + "'");
  mpz_class den(std::string(dtext), 10);
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, std::string(whole));
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::int64_t reduce_mod(const mpz_class& z, long p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace

FieldSpec FieldSpec::prime(long p) {
  if (p == 2) throw Error(ErrorKind::CharacteristicUnsupported, "characteristic 2");
  if (!is_prime(p)) throw Error(ErrorKind::BadField, "GF(" + std::to_string(p) + "): not a prime");
  if (p >= (1L << 31)) throw Error(ErrorKind::BadField, "prime too large");
  FieldSpec f;
  f.kind_ = Kind::Prime;
  f.param_ = p;
  return f;
}

FieldSpec FieldSpec::quadratic(long d) {
  if (d == 0 || d == 1) throw Error(ErrorKind::BadField, "Q(sqrt " + std::to_string(d) + ")");
  long m = std::labs(d);
  for (long k = 2; k * k <= m; ++k)
    if (m % (k * k) == 0) throw Error(ErrorKind::BadField, "radicand not square-free");
  FieldSpec f;
  f.kind_ = Kind::Quadratic;
  f.param_ = d;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string t;
  for (char c : trim(text))
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "Q" || t == "QQ") return rational();
  auto grab = [&](std::string_view prefix, std::string_view suffix, std::string& out) {
    if (t.size() < prefix.size() + suffix.size()) return false;
    if (t.compare(0, prefix.size(), prefix) != 0) return false;
    if (t.compare(t.size() - suffix.size(), suffix.size(), suffix) != 0) return false;
    out = t.substr(prefix.size(), t.size() - prefix.size() - suffix.size());
    return true;
  };
  std::string inner;
  if (grab("GF(", ")", inner)) return prime(parse_int(inner, text).get_si());
  if (grab("Q(sqrt(", "))", inner) || grab("Q(sqrt", ")", inner)) return quadratic(parse_int(inner, text).get_si());
  throw Error(ErrorKind::ParseError, "unknown field '" + std::string(text) + "'");
}

std::string FieldSpec::str() const {
  switch (kind_) {
    case Kind::Rational: return "Q";
    case Kind::Prime: return "GF(" + std::to_string(param_) + ")";
    case Kind::Quadratic: return "Q(sqrt " + std::to_string(param_) + ")";
  }
  return "?";
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
  Scalar s;
  s.field_ = f;
  s.bound_ = true;
  if (f.kind() == FieldSpec::Kind::Prime) {
    long p = f.param();
    std::int64_t den = reduce_mod(q.get_den(), p);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator divisible by the characteristic");
    s.r_ = reduce_mod(q.get_num(), p) * mod_pow(den, p - 2, p) % p;
  } else {
    s.a_ = q;
  }
  return s;
}

Scalar Scalar::from_frac(const FieldSpec& f, long num, long den) {
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, "from_frac");
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(f, q);
}

Scalar Scalar::from_parts(const FieldSpec& f, const mpq_class& a, const mpq_class& b) {
  if (f.kind() != FieldSpec::Kind::Quadratic) {
    if (b != 0) throw Error(ErrorKind::FieldMismatch, "sqrt part outside a quadratic field");
    return from_rational(f, a);
  }
  Scalar s = from_rational(f, a);
  s.b_ = b;
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  std::string_view t = trim(text);
  if (!t.empty() && t.back() == 'r') {
    if (f.kind() != FieldSpec::Kind::Quadratic)
      throw Error(ErrorKind::ParseError, "'" + std::string(text) + "' needs a quadratic field");
    // (q)+(q)r
    std::string_view body = trim(t.substr(0, t.size() - 1));
    auto close1 = body.find(')');
    if (body.size() < 2 || body.front() != '(' || close1 == std::string_view::npos)
      throw Error(ErrorKind::ParseError, std::string(text));
    std::string_view first = body.substr(1, close1 - 1);
    std::string_view rest = trim(body.substr(close1 + 1));
    if (rest.size() < 3 || rest.front() != '+') throw Error(ErrorKind::ParseError, std::string(text));
    rest = trim(rest.substr(1));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') throw Error(ErrorKind::ParseError, std::string(text));
    std::string_view second = rest.substr(1, rest.size() - 2);
    return from_parts(f, parse_q(first, text), parse_q(second, text));
  }
  return from_rational(f, parse_q(t, text));
}

Scalar Scalar::in(const FieldSpec& f) const {
  if (bound_) {
    if (field_ != f) throw Error(ErrorKind::FieldMismatch, field_.str() + " vs " + f.str());
    return *this;
  }
  return from_rational(f, a_);
}

void Scalar::unify(Scalar& other) {
  if (bound_ && other.bound_) {
    if (field_ != other.field_) throw Error(ErrorKind::FieldMismatch, field_.str() + " vs " + other.field_.str());
  } else if (bound_) {
    other = other.in(field_);
  } else if (other.bound_) {
    *this = in(other.field_);
  }
}

bool Scalar::is_zero() const {
  if (bound_ && field_.kind() == FieldSpec::Kind::Prime) return r_ == 0;
  return a_ == 0 && b_ == 0;
}

bool Scalar::is_one() const {
  if (bound_ && field_.kind() == FieldSpec::Kind::Prime) return r_ == 1;
  return a_ == 1 && b_ == 0;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Scalar y = o;
  unify(y);
  if (bound_ && field_.kind() == FieldSpec::Kind::Prime) {
    r_ = (r_ + y.r_) % field_.param();
  } else {
    a_ += y.a_;
    b_ += y.b_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (bound_ && field_.kind() == FieldSpec::Kind::Prime) {
    s.r_ = (field_.param() - r_) % field_.param();
  } else {
    s.a_ = -a_;
    s.b_ = -b_;
  }
  return s;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar y = o;
  unify(y);
  if (!bound_) {
    a_ *= y.a_;
    return *this;
  }
  switch (field_.kind()) {
    case FieldSpec::Kind::Prime:
      r_ = r_ * y.r_ % field_.param();
      break;
    case FieldSpec::Kind::Rational:
      a_ *= y.a_;
      break;
    case FieldSpec::Kind::Quadratic: {
      if (b_ == 0 && y.b_ == 0) {
        a_ *= y.a_;
        break;
      }
      mpq_class na = a_ * y.a_ + mpq_class(field_.param()) * b_ * y.b_;
      mpq_class nb = a_ * y.b_ + b_ * y.a_;
      a_ = na;
      b_ = nb;
      break;
    }
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar s = *this;
  if (!bound_) {
    s.a_ = 1 / a_;
    return s;
  }
  switch (field_.kind()) {
    case FieldSpec::Kind::Prime:
      s.r_ = mod_pow(r_, field_.param() - 2, field_.param());
      break;
    case FieldSpec::Kind::Rational:
      s.a_ = 1 / a_;
      break;
    case FieldSpec::Kind::Quadratic: {
      mpq_class norm = a_ * a_ - mpq_class(field_.param()) * b_ * b_;
      s.a_ = a_ / norm;
      s.b_ = -b_ / norm;
      break;
    }
  }
  return s;
}

bool operator==(const Scalar& x, const Scalar& y) {
  Scalar u = x, v = y;
  u.unify(v);
  if (u.bound_ && u.field_.kind() == FieldSpec::Kind::Prime) return u.r_ == v.r_;
  return u.a_ == v.a_ && u.b_ == v.b_;
}

std::string Scalar::str() const {
  if (bound_ && field_.kind() == FieldSpec::Kind::Prime) return std::to_string(r_);
  if (b_ == 0) return a_.get_str();
  return "(" + a_.get_str() + ")+(" + b_.get_str() + ")r";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace axial
