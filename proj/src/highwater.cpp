#include "axial/highwater.hpp"

#include <cstdlib>

namespace axial {

namespace {

long mod(long x, long m) { return ((x % m) + m) % m; }

Scalar q(const FieldSpec& f, long n, long d = 1) { return Scalar::from_frac(f, n, d); }

void check_char(const FieldSpec& f) {
  if (f.characteristic() == 3) throw Error(ErrorKind::CharacteristicUnsupported, "highwater needs char != 2, 3");
}

}  // namespace

std::string HwSym::str() const {
  switch (kind) {
    case Kind::A: return "a" + std::to_string(idx);
    case Kind::S: return "s" + std::to_string(idx);
    case Kind::P: return "p" + std::to_string(r) + "_" + std::to_string(idx);
  }
  return "?";
}

void HwElement::add(HwSym sym, const Scalar& c) {
  if (c.is_zero()) return;
  if (sym.kind == HwSym::Kind::S && sym.idx == 0) return;
  if (sym.kind == HwSym::Kind::P) {
    if (sym.idx <= 0 || sym.idx % 3 != 0) return;
    sym.r = static_cast<int>(mod(sym.r, 3));
    if (sym.r == 0) {
      add({HwSym::Kind::P, 1, sym.idx}, -c);
      add({HwSym::Kind::P, 2, sym.idx}, -c);
      return;
    }
  } else {
    sym.r = 0;
  }
  auto it = terms_.find(sym);
  if (it == terms_.end()) {
    terms_.emplace(sym, c.in(field_));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HwElement HwElement::a(const FieldSpec& f, long i) {
  HwElement e(f);
  e.add({HwSym::Kind::A, 0, i}, q(f, 1));
  return e;
}

HwElement HwElement::s(const FieldSpec& f, long j) {
  HwElement e(f);
  e.add({HwSym::Kind::S, 0, std::labs(j)}, q(f, 1));
  return e;
}

HwElement HwElement::p(const FieldSpec& f, long r, long k) {
  HwElement e(f);
  e.add({HwSym::Kind::P, static_cast<int>(mod(r, 3)), std::labs(k)}, q(f, 1));
  return e;
}

HwElement HwElement::z(const FieldSpec& f, long r, long j) { return p(f, r + 1, j) - p(f, r - 1, j); }

HwElement& HwElement::operator+=(const HwElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

HwElement& HwElement::operator-=(const HwElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

HwElement operator*(const Scalar& c, const HwElement& x) {
  HwElement out(x.field());
  for (const auto& [k, v] : x.terms_) out.add(k, c * v);
  return out;
}

bool HwElement::operator==(const HwElement& o) const { return (*this - o).is_zero(); }

std::string HwElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")" + k.str();
  }
  return out;
}

namespace {

using K = HwSym::Kind;

HwElement mul_sym(const FieldSpec& f, HwSym x, HwSym y) {
  if (y < x) std::swap(x, y);
  using E = HwElement;
  const long i = x.idx;
  if (x.kind == K::A && y.kind == K::A) {
    long j = y.idx, d = std::labs(i - j);
    return q(f, 1, 2) * (E::a(f, i) + E::a(f, j)) + E::s(f, d) + E::z(f, mod(i, 3), d);
  }
  if (x.kind == K::A && y.kind == K::S) {
    long j = y.idx;
    return q(f, -3, 4) * E::a(f, i) + q(f, 3, 8) * (E::a(f, i - j) + E::a(f, i + j)) + q(f, 3, 2) * E::s(f, j) -
           E::z(f, mod(i, 3), j);
  }
  if (x.kind == K::A && y.kind == K::P) {
    long r = y.r, j = y.idx;
    return q(f, 3, 2) * E::p(f, r, j) - E::p(f, -(mod(i, 3) + r), j);
  }
  if (x.kind == K::S && y.kind == K::S) {
    long l = y.idx;
    return q(f, 3, 4) * (E::s(f, i) + E::s(f, l)) - q(f, 3, 8) * (E::s(f, i - l) + E::s(f, i + l));
  }
  if (x.kind == K::S && y.kind == K::P) {
    long r = y.r, k = y.idx;
    return q(f, 3, 4) * (E::p(f, r, i) + E::p(f, r, k)) - q(f, 3, 8) * (E::p(f, r, i - k) + E::p(f, r, i + k));
  }
  // p_{r,h} p_{t,k}
  long h = x.idx, k = y.idx, t = -(x.r + y.r);
  return q(f, 1, 4) * (E::z(f, t, h) + E::z(f, t, k)) - q(f, 1, 8) * (E::z(f, t, h - k) + E::z(f, t, h + k));
}

}  // namespace

HwElement hw_mul(const HwElement& u, const HwElement& v) {
  const FieldSpec& f = u.field();
  if (!(f == v.field())) throw Error(ErrorKind::FieldMismatch, "hw_mul");
  check_char(f);
  HwElement out(f);
  for (const auto& [x, cx] : u.terms())
    for (const auto& [y, cy] : v.terms()) out += (cx * cy) * mul_sym(f, x, y);
  return out;
}

Vec HwQuotient::reduce(const HwElement& e) const {
  const FieldSpec& f = algebra.field();
  Vec out = algebra.zero();
  const long half = n / 2;
  auto fold = [&](long j) -> long {
    long r = mod(j, n);
    return r > half ? n - r : r;
  };
  for (const auto& [sym, c] : e.terms()) {
    switch (sym.kind) {
      case K::A: out(mod(sym.idx, n)) += c; break;
      case K::S: {
        long j = fold(sym.idx);
        if (j) out(n + j - 1) += c;
        break;
      }
      case K::P: {
        if (!with_p) break;
        long j = fold(sym.idx);
        if (j) out(n + half + 2 * (j / 3 - 1) + (sym.r - 1)) += c;
        break;
      }
    }
  }
  bind_to(out, f);
  return out;
}

HwElement HwQuotient::lift(int b) const {
  const FieldSpec& f = algebra.field();
  const int half = n / 2;
  if (b < n) return HwElement::a(f, b);
  if (b < n + half) return HwElement::s(f, b - n + 1);
  int k = b - n - half;
  return HwElement::p(f, 1 + k % 2, 3 * (k / 2 + 1));
}

HwQuotient build_Hn(int n, const FieldSpec& f, bool cover) {
  check_char(f);
  if (n < 1) throw Error(ErrorKind::BadParameter, "highwater quotient needs n >= 1");
  HwQuotient h;
  h.n = n;
  h.with_p = cover && n % 3 == 0;
  if (h.with_p && f.characteristic() != 5)
    throw Error(ErrorKind::CharacteristicUnsupported, "cover with 3 | n is only of Monster type in char 5");
  const int half = n / 2;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  for (int j = 1; j <= half; ++j) labels.push_back("s" + std::to_string(j));
  if (h.with_p)
    for (int j = 3; j <= half; j += 3) {
      labels.push_back("p1_" + std::to_string(j));
      labels.push_back("p2_" + std::to_string(j));
    }
  h.algebra = Algebra(f, labels);
  const int d = h.algebra.dim();
  std::vector<HwElement> reps;
  for (int b = 0; b < d; ++b) reps.push_back(h.lift(b));
  for (int x = 0; x < d; ++x)
    for (int y = x; y < d; ++y) h.algebra.set_product(x, y, h.reduce(hw_mul(reps[x], reps[y])));
  std::vector<Vec> axes;
  for (int i = 0; i < n; ++i) axes.push_back(h.algebra.basis_vector(i));
  h.algebra.set_axes(axes);
  h.algebra.set_param("alpha", q(f, 2));
  h.algebra.set_param("beta", q(f, 1, 2));

  if (!is_automorphism(h.algebra, hw_reflection(h, 1)) || !is_automorphism(h.algebra, hw_translation(h, 1)))
    throw Error(ErrorKind::Internal, "flip or translation is not an automorphism of H_" + std::to_string(n));
  return h;
}

namespace {

// sign * p_{r^g} on p symbols; a_i -> a_{i^g}; s fixed.
template <class F>
Mat hw_symmetry(const HwQuotient& h, F point, bool reflection) {
  const FieldSpec& f = h.algebra.field();
  const int d = h.algebra.dim();
  Mat m(d, d);
  for (int b = 0; b < d; ++b) {
    HwElement src = h.lift(b), img(f);
    for (const auto& [sym, c] : src.terms()) {
      HwSym t = sym;
      Scalar coef = c;
      if (sym.kind == K::A) t.idx = point(sym.idx);
      if (sym.kind == K::P) {
        t.r = static_cast<int>(mod(point(sym.r), 3));
        if (reflection) coef = -coef;
      }
      img.add(t, coef);
    }
    m.col(b) = h.reduce(img);
  }
  return m;
}

}  // namespace

Mat hw_reflection(const HwQuotient& h, long c) {
  return hw_symmetry(h, [c](long i) { return c - i; }, true);
}

Mat hw_translation(const HwQuotient& h, long t) {
  return hw_symmetry(h, [t](long i) { return i + t; }, false);
}

Vec third_axis_b(const HwQuotient& h, int i) {
  if (h.n % 2) throw Error(ErrorKind::BadParameter, "third_axis_b needs an even quotient");
  const FieldSpec& f = h.algebra.field();
  const long m = h.n / 2;
  using E = HwElement;
  E b = q(f, 1, 2) * (E::a(f, i) + E::a(f, i + m)) - E::s(f, m) - E::z(f, mod(i, 3), m);
  Vec v = h.reduce(b);
  Vec x = h.algebra.basis_vector(static_cast<int>(mod(i, h.n)));
  Vec y = h.algebra.basis_vector(static_cast<int>(mod(i + m, h.n)));
  if (!h.algebra.is_idempotent(v) || v != Vec(x + y - h.algebra.mul(x, y)))
    throw Error(ErrorKind::Internal, "b_i is not the third axis of <<a_i, a_{i+n}>>");
  return v;
}

HwJQuotient build_H2nJ(int n, const FieldSpec& f, bool cover) {
  if (n % 2 == 0) throw Error(ErrorKind::NOddRequired, "property-(J) quotient needs n odd");
  if (n < 3) throw Error(ErrorKind::BadParameter, "property-(J) quotient needs n >= 3");
  HwJQuotient r{build_Hn(2 * n, f, cover), Space(), Space(), {}, {}, {}};
  const HwQuotient& h = r.parent;
  Vec b0 = third_axis_b(h, 0), b1 = third_axis_b(h, 1);
  r.ideal = ideal_generated(h.algebra, {Vec(b0 - b1)});

  using E = HwElement;
  std::vector<Vec> printed;
  for (int i = 1; i < n; ++i) {
    E e = E::a(f, 0) + E::a(f, n) - E::a(f, i) - E::a(f, i + n) - q(f, 2) * (E::z(f, 0, n) - E::z(f, mod(i, 3), n));
    printed.push_back(h.reduce(e));
  }
  for (int j = 1; j <= n / 2; ++j) printed.push_back(h.reduce(E::s(f, j) + E::s(f, n - j) - E::s(f, n)));
  if (h.with_p)
    for (int j = 3; j <= n / 2; j += 3)
      for (int rr = 1; rr <= 2; ++rr) printed.push_back(h.reduce(E::p(f, rr, j) + E::p(f, rr, n - j) - E::p(f, rr, n)));
  r.printed = Space::span(h.algebra.dim(), printed);
  if (!(r.printed == r.ideal)) throw Error(ErrorKind::Internal, "ideal (b0 - b1) differs from the explicit basis");

  r.quotient = quotient(h.algebra, r.ideal);
  r.algebra = r.quotient.algebra;
  r.a = r.quotient.project(b0);
  long expect = n + (n + 1) / 2 + 1;
  if (h.with_p) expect += 2 * ((n + 5) / 6);
  if (r.algebra.dim() != expect)
    throw Error(ErrorKind::Internal, "property-(J) quotient has dimension " + std::to_string(r.algebra.dim()) +
                                         ", expected " + std::to_string(expect));
  r.algebra.set_param("alpha", q(f, 2));
  r.algebra.set_param("beta", q(f, 1, 2));
  return r;
}

}  // namespace axial
