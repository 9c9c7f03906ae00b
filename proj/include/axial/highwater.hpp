#ifndef AXIAL_HIGHWATER_HPP
#define AXIAL_HIGHWATER_HPP

#include <map>
#include <string>
#include <tuple>

#include "axial/algebra.hpp"

namespace axial {

// Basis symbol of the infinite algebra: a_i (i in Z), s_j (j >= 1), p_{r,k} (r in {1,2}, 3 | k).
struct HwSym {
  enum class Kind { A, S, P } kind = Kind::A;
  int r = 0;
  long idx = 0;
  bool operator<(const HwSym& o) const { return std::tie(kind, r, idx) < std::tie(o.kind, o.r, o.idx); }
  bool operator==(const HwSym& o) const { return kind == o.kind && r == o.r && idx == o.idx; }
  std::string str() const;
};

// Finitely supported element; normalisation (s_0 = 0, p_{r,j} = 0 for 3 !| j,
// p_0 = -p_1 - p_2) is applied on insertion.
class HwElement {
 public:
  explicit HwElement(FieldSpec f) : field_(std::move(f)) {}
  static HwElement a(const FieldSpec& f, long i);
  static HwElement s(const FieldSpec& f, long j);
  static HwElement p(const FieldSpec& f, long r, long k);
  static HwElement z(const FieldSpec& f, long r, long j);  // p_{r+1,j} - p_{r-1,j}

  const FieldSpec& field() const { return field_; }
  const std::map<HwSym, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(HwSym sym, const Scalar& c);

  HwElement& operator+=(const HwElement& o);
  HwElement& operator-=(const HwElement& o);
  friend HwElement operator+(HwElement x, const HwElement& y) { return x += y; }
  friend HwElement operator-(HwElement x, const HwElement& y) { return x -= y; }
  friend HwElement operator*(const Scalar& c, const HwElement& x);
  bool operator==(const HwElement& o) const;
  std::string str() const;

 private:
  FieldSpec field_;
  std::map<HwSym, Scalar> terms_;
};

HwElement hw_mul(const HwElement& u, const HwElement& v);

// Finite quotient: H_n (plain) or the cover with the p_{r,k} kept (char 5, 3 | n).
struct HwQuotient {
  Algebra algebra;
  int n = 0;
  bool with_p = false;

  Vec reduce(const HwElement& e) const;
  HwElement lift(int basis_index) const;
};

HwQuotient build_Hn(int n, const FieldSpec& f, bool cover);

// Automorphisms a_i -> a_{c-i} and a_i -> a_{i+t}.
Mat hw_reflection(const HwQuotient& h, long c);
Mat hw_translation(const HwQuotient& h, long t);

// 1/2 (a_i + a_{i+m}) - (s_m + z_{i,m}) in H_{2m}.
Vec third_axis_b(const HwQuotient& h, int i);

struct HwJQuotient {
  HwQuotient parent;        // H_{2n}
  Space ideal;              // ideal generated by b_0 - b_1
  Space printed;            // span of the explicit basis
  QuotientResult quotient;
  Algebra algebra;          // quotient.algebra
  Vec a;                    // common image of the b_i
};

HwJQuotient build_H2nJ(int n, const FieldSpec& f, bool cover);

}  // namespace axial

#endif
