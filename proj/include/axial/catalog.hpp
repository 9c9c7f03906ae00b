#ifndef AXIAL_CATALOG_HPP
#define AXIAL_CATALOG_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/fusion.hpp"

namespace axial {

// Family name plus named parameters, e.g. "6A[alpha=1/4]" or "iy3[alpha=1/3,mu=-1]".
struct AlgebraLabel {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;

  static AlgebraLabel parse(const std::string& text);
  std::string str() const;
  std::optional<std::string> get(const std::string& name) const;
};

struct CatalogEntry {
  Algebra algebra;
  std::optional<FusionLaw> law;  // declared law of the designated axes
};

CatalogEntry build_entry(const AlgebraLabel& label, const FieldSpec& f);
CatalogEntry build_entry(const std::string& label, const FieldSpec& f);
Algebra build(const std::string& label, const FieldSpec& f);

Algebra build_1A(const FieldSpec& f);
Algebra build_2B(const FieldSpec& f);
Algebra build_3C(const Scalar& eta);
Algebra build_3C_cross(const FieldSpec& f);
Algebra build_spin(const Scalar& delta);
Algebra build_spin2_circ(const FieldSpec& f);
Algebra build_clhat(const FieldSpec& f);
Algebra build_split_spin(const Scalar& mu, const Scalar& alpha);
Algebra build_hat_split_spin_circ(const Scalar& mu);
Algebra build_iy3(const Scalar& alpha, const Scalar& mu);
Algebra build_iy3_one(const Scalar& alpha);
Algebra build_6A(const Scalar& alpha);
Algebra build_6J(const Scalar& beta);
Algebra build_6Y(const FieldSpec& f);
Algebra build_6Y_cross(const FieldSpec& f);
Algebra build_bar01(const FieldSpec& f);

// Both light-weight checks that the catalog constructors enforce.
void check_monster_params(const Scalar& alpha, const Scalar& beta);
Scalar six_a_beta(const Scalar& alpha);

struct JordanId {
  std::string label;             // catalog label, e.g. "spin[delta=-1]"
  std::optional<Scalar> eta;     // Jordan type
  std::optional<Scalar> gamma;   // xy = (x+y)/2 + gamma 1, spin case only
};
// Identifies the Jordan-type algebra generated by two distinct axes.
JordanId jordan_identify(const Algebra& a, const Vec& x, const Vec& y);

// Size of the spin-factor axet (order of [[delta,-1],[1,0]]); nothing = infinite.
std::optional<long> spin_axet_size(const Scalar& delta);

std::array<Scalar, 5> iy5_coeffs(long n, const FieldSpec& f);
std::optional<long> iy5_axet_size(const FieldSpec& f);

}  // namespace axial

#endif
