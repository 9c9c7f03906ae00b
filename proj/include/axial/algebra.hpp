#ifndef AXIAL_ALGEBRA_HPP
#define AXIAL_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/linalg.hpp"

namespace axial {

struct StructureConstant {
  int i, j, k;
  Scalar c;
};

using Space = Subspace<Scalar>;

// A finite-dimensional commutative algebra given by structure constants on a
// labelled basis, with optional Frobenius form and designated axes.
class Algebra {
 public:
  Algebra() = default;
  Algebra(FieldSpec field, std::vector<std::string> labels);

  const FieldSpec& field() const { return field_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;

  // e_i e_j += c e_k (symmetric).
  void add_constant(int i, int j, int k, const Scalar& c);
  void set_product(int i, int j, const Vec& v);
  Vec product_of_basis(int i, int j) const;
  std::vector<StructureConstant> structure_constants() const;

  Vec mul(const Vec& u, const Vec& v) const;
  Mat ad(const Vec& u) const;
  Vec basis_vector(int i) const { return unit_vector(field_, dim(), i); }
  Vec zero() const { return zero_vector(field_, dim()); }
  // Builds a vector from (label, coefficient) pairs.
  Vec vec(const std::vector<std::pair<std::string, Scalar>>& terms) const;
  Scalar s(long num, long den = 1) const { return Scalar::from_frac(field_, num, den); }

  bool has_form() const { return gram_.has_value(); }
  const Mat& gram() const;
  void set_gram(const Mat& g);
  void clear_gram() { gram_.reset(); }
  Scalar form(const Vec& u, const Vec& v) const;

  const std::vector<Vec>& axes() const { return axes_; }
  void set_axes(std::vector<Vec> axes);
  void add_axis(const Vec& a);

  const std::map<std::string, Scalar>& params() const { return params_; }
  void set_param(const std::string& name, const Scalar& v) { params_[name] = v.in(field_); }
  std::optional<Scalar> param(const std::string& name) const;

  bool is_idempotent(const Vec& v) const;
  // Throws on a symmetric/idempotency violation.
  void validate() const;

  Vec bind(Vec v) const {
    bind_to(v, field_);
    return v;
  }

 private:
  std::size_t slot(int i, int j) const;

  FieldSpec field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<int, Scalar>>> prod_;  // upper triangle, sparse
  std::optional<Mat> gram_;
  std::vector<Vec> axes_;
  std::map<std::string, Scalar> params_;
};

struct SubalgebraResult {
  Space space;          // span inside the ambient algebra
  Algebra algebra;      // induced algebra on the RREF basis of space
  Mat inclusion;        // ambient coordinates of each induced basis vector (columns)

  // Ambient vector -> induced coordinates. Requires membership.
  Vec to_sub(const Vec& v) const;
  Vec to_ambient(const Vec& w) const { return inclusion * w; }
};

// Smallest subalgebra containing gens.
SubalgebraResult subalgebra_closure(const Algebra& a, const std::vector<Vec>& gens);
Space subalgebra_span(const Algebra& a, const std::vector<Vec>& gens);

// Smallest ideal containing gens.
Space ideal_generated(const Algebra& a, const std::vector<Vec>& gens);
bool is_ideal(const Algebra& a, const Space& s);

struct QuotientResult {
  Algebra algebra;
  Mat projection;  // (dim A - dim I) x dim A
  Vec project(const Vec& v) const { return projection * v; }
};

QuotientResult quotient(const Algebra& a, const Space& ideal);

Algebra direct_sum(const Algebra& a, const Algebra& b);

// True iff (uv, w) = (u, vw) on all basis triples.
bool frobenius_check(const Algebra& a);
Space form_radical(const Algebra& a);

struct ProjectionGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  int components() const;
};
ProjectionGraph projection_graph(const Algebra& a);

// m (as a matrix on coordinates) respects multiplication.
bool is_automorphism(const Algebra& a, const Mat& m);

// Algebra homomorphism from the subalgebra of a generated by gens into b,
// sending gens[i] to images[i]. The result maps each input vector in
// domain.space. Returns nothing if no such homomorphism exists.
struct Homomorphism {
  Space domain;                         // in a
  std::vector<std::pair<Vec, Vec>> on_basis;  // (u in a, phi(u) in b), u independent
  bool injective = false;
  Vec apply(const Vec& u) const;
};
std::optional<Homomorphism> extend_homomorphism(const Algebra& a, const std::vector<Vec>& gens,
                                                const Algebra& b, const std::vector<Vec>& images);

Algebra with_axes(Algebra a, std::vector<Vec> axes);

}  // namespace axial

#endif
