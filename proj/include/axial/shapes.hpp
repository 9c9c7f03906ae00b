#ifndef AXIAL_SHAPES_HPP
#define AXIAL_SHAPES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "axial/axet.hpp"
#include "axial/fusion.hpp"

namespace axial {

// Points 0..k-1 in closed-axes order; no extra generators.
Axet axet_of(const ClosedAxes& c);

// Invariants of the subalgebra generated by a pair of axes.
struct Fingerprint {
  int dim = 0;
  std::optional<int> axet_size;                       // nothing if the closure hit the cap
  std::vector<std::pair<Scalar, int>> eigen_profile;  // first generating axis, inside the subalgebra
  std::optional<std::vector<Scalar>> form_values;     // (a,a), (a,b), (b,b)
  std::optional<Scalar> gamma;

  std::string str() const;
  bool operator==(const Fingerprint& o) const { return str() == o.str(); }
};

Fingerprint fingerprint(const Algebra& a, const Vec& x, const Vec& y, const FusionLaw& law, std::size_t cap = 256);

struct ShapeGraph {
  struct Vertex {
    std::vector<int> points;      // orbit representative, sorted
    std::vector<int> generators;  // a generating pair of points
    std::size_t orbit_size = 0;
    bool proper = true;           // false for the whole axet
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // (Z, Y): some image of Z lies properly inside Y
};

// Vertices: orbits of the acting group on subaxets generated by two distinct points.
ShapeGraph shape_graph(const Axet& x);

struct ShapeAssignment {
  std::vector<int> orbit_rep;
  std::vector<int> generators;
  std::string label;                       // catalog label, or empty
  std::optional<Fingerprint> fingerprint;  // always set by shape_of_algebra
  std::string key() const;                 // label if present, else the fingerprint string
};

// Condensed shape: assignments cover the proper vertices only.
struct Shape {
  Axet axet;
  std::vector<ShapeAssignment> assignments;
  std::optional<FusionLaw> law;
};

Shape shape_of_algebra(const Algebra& a, const FusionLaw& law, std::size_t cap = 10000);

// Realizer algebras by assignment key; keys not found are built from the catalog.
using Realizers = std::map<std::string, Algebra>;

struct ShapeVerdict {
  bool ok = false;
  std::string detail;
  explicit operator bool() const { return ok; }
};

ShapeVerdict validate_shape(const Shape& s, const Realizers& realizers, const FusionLaw& law);

ShapeVerdict property_j_check(const Algebra& a, const FusionLaw& law, const Vec& candidate);
std::optional<Vec> property_j_search(const Algebra& a, const FusionLaw& law);

struct CompletionResult {
  bool ok = false;
  bool faithful = false;
  std::vector<int> morphism;  // point map from the shape's axet onto A's axet
  std::string detail;
};

// A's axet is the closure of its designated axes, which must generate A.
CompletionResult completion_check(const Shape& s, const Algebra& a, const FusionLaw& law,
                                  const Realizers& realizers = {});

}  // namespace axial

#endif
