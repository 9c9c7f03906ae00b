#ifndef AXIAL_FUSION_HPP
#define AXIAL_FUSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"

namespace axial {

// A fusion law over a fixed field: eigenvalues, a symmetric product
// lam * mu -> subset (bitmask over eigenvalue indices), and an optional
// C2-grading given by the set of odd eigenvalues.
class FusionLaw {
 public:
  FusionLaw(std::string name, std::vector<Scalar> eigenvalues, std::vector<std::vector<unsigned>> star,
            std::vector<bool> odd);

  // J(eta): 1,0 even; eta odd.
  static FusionLaw jordan(const Scalar& eta);
  // M(alpha,beta): 1,0,alpha even; beta odd.
  static FusionLaw monster(const Scalar& alpha, const Scalar& beta);
  // "J[eta]", "J[eta=1/2]", "M[alpha,beta]", "M[alpha=..,beta=..]" (round brackets also accepted).
  static FusionLaw parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  int size() const { return static_cast<int>(eigenvalues_.size()); }
  const std::vector<Scalar>& eigenvalues() const { return eigenvalues_; }
  const Scalar& eigenvalue(int i) const { return eigenvalues_[i]; }
  int index_of(const Scalar& lambda) const;  // -1 if absent
  unsigned star(int i, int j) const { return star_[i][j]; }
  bool graded() const;
  bool odd(int i) const { return odd_[i]; }
  bool is_seress() const;
  const std::string& name() const { return name_; }
  std::string str() const;

 private:
  std::string name_;
  FieldSpec field_;
  std::vector<Scalar> eigenvalues_;
  std::vector<std::vector<unsigned>> star_;
  std::vector<bool> odd_;
};

struct FusionViolation {
  int lambda = 0, mu = 0;        // eigenvalue indices
  Vec u, v, product;
  int offending = -1;            // eigenvalue index of a component outside lambda*mu, if known
  Vec component;
};

struct AxisReport {
  bool idempotent = false;
  bool semisimple = false;
  bool primitive = false;
  bool fusion_ok = false;
  std::vector<Space> eigenspaces;  // aligned with the law's eigenvalues
  std::vector<FusionViolation> violations;
  std::optional<Mat> miyamoto;
  std::optional<bool> seress_ok;
  Mat eigenbasis;      // columns: eigenspace bases in law order (semisimple only)
  Mat eigenbasis_inv;

  bool ok() const { return idempotent && semisimple && primitive && fusion_ok; }
  std::vector<int> dims() const;
};

constexpr std::uint64_t kDefaultSeed = 0x6a78e5u;

AxisReport verify_axis(const Algebra& a, const Vec& axis, const FusionLaw& law, int seress_trials = 16,
                       std::uint64_t seed = kDefaultSeed);

// Splits v along the eigenspaces of a semisimple axis; components align with the law.
std::vector<Vec> eigen_components(const AxisReport& r, const Vec& v);

// Miyamoto involution of a graded axis: -1 on odd eigenspaces.
Mat miyamoto(const Algebra& a, const Vec& axis, const FusionLaw& law);

// Involution negating A_alpha(a) for an axis of Jordan type alpha.
Mat sigma_jordan(const Algebra& a, const Vec& axis, const Scalar& alpha);

struct ClosedAxes {
  std::vector<Vec> axes;
  std::vector<Mat> tau;                  // Miyamoto matrices, aligned with axes
  std::vector<std::vector<int>> perms;   // tau as permutations of axes; empty if capped
  bool capped = false;
  int index_of(const Vec& v) const;      // -1 if absent
};

// Closure of the seeds under Miyamoto involutions of every axis reached.
ClosedAxes closed_axes(const Algebra& a, const std::vector<Vec>& seeds, const FusionLaw& law,
                       std::size_t cap = 10000);

// Random test of a(xy) = (ax)y for x in A and y in A_1(a) + A_0(a).
bool seress_check(const Algebra& a, const Vec& axis, int trials, std::uint64_t seed = kDefaultSeed);

}  // namespace axial

#endif
