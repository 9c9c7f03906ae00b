#ifndef AXIAL_AXET_HPP
#define AXIAL_AXET_HPP

#include <optional>
#include <string>
#include <vector>

#include "axial/error.hpp"

namespace axial {

// Permutation of {0..n-1} as an image list; points act on the right: x.g = g[x].
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& g, const Perm& h);  // first g, then h
Perm inverse_perm(const Perm& g);
Perm conjugate(const Perm& t, const Perm& g);  // g^-1 t g
bool is_identity(const Perm& g);

// A finite axet: points with an involution tau_x for each point x, plus
// optional extra generators of the acting group G.
class Axet {
 public:
  Axet() = default;
  Axet(std::vector<std::string> labels, std::vector<Perm> tau, std::vector<Perm> extra_gens = {});

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Perm& tau(int x) const { return tau_[x]; }
  const std::vector<Perm>& taus() const { return tau_; }
  const std::vector<Perm>& extra_gens() const { return extra_; }
  // Distinct tau's followed by the extra generators.
  std::vector<Perm> group_generators() const;
  std::vector<Perm> miyamoto_generators() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Perm> tau_;
  std::vector<Perm> extra_;
};

// n-gon with vertex reflections; G is the full dihedral group.
Axet xn(int n);
// 3k points: one Miyamoto orbit of X(4k) folded by the opposite pairing.
Axet xprime(int k3);
// Point a with tau_a = 1, plus X(n).
Axet x1(int n);
// Point a with tau_a the half-turn of X(n); n even.
Axet x2(int n);

std::vector<int> closure(const Axet& x, const std::vector<int>& points);
// Restriction to a closed subset; points are listed in increasing order.
Axet subaxet(const Axet& x, const std::vector<int>& points);

struct PermGroup {
  std::vector<Perm> elements;  // sorted
  std::vector<std::vector<int>> orbits;
  std::size_t order() const { return elements.size(); }
};
PermGroup generated_group(int n, const std::vector<Perm>& gens, std::size_t cap = 200000);
std::vector<std::vector<int>> orbits(int n, const std::vector<Perm>& gens);
PermGroup miyamoto_group(const Axet& x);
PermGroup acting_group(const Axet& x);

bool check_morphism(const Axet& x, const Axet& y, const std::vector<int>& psi);
bool is_isomorphism(const Axet& x, const Axet& y, const std::vector<int>& psi);

// Extends gens -> images along psi(y tau_x) = psi(y) tau'_psi(x); the gens
// must generate x. Returns a checked morphism or nothing.
std::optional<std::vector<int>> extend_morphism(const Axet& x, const std::vector<int>& gens, const Axet& y,
                                                const std::vector<int>& images);
std::vector<int> generating_set(const Axet& x);
std::optional<std::vector<int>> find_isomorphism(const Axet& x, const Axet& y);

// classes[p] = class index of point p.
Axet factor_axet(const Axet& x, const std::vector<int>& classes);
bool is_congruence(const Axet& x, const std::vector<int>& classes);
// partner[p] = paired point (or p itself).
Axet fold(const Axet& x, const std::vector<int>& partner);

struct TwoGenClass {
  enum class Kind { Regular, Skew } kind = Kind::Regular;
  int n = 0;                    // X(n), or 3k for X'(3k)
  std::vector<int> points;      // closure of {a,b} in x
  std::vector<int> witness;     // witness[i] = model point of points[i]
  Axet model;
  std::string str() const;
};
TwoGenClass classify_2gen(const Axet& x, int a, int b);

struct FixedAxisClass {
  enum class Kind { X1, X2, Skew3 } kind = Kind::X1;
  int n = 0;
  std::size_t miy_order = 0;
  std::vector<int> witness;
  std::string str() const;
};
FixedAxisClass classify_fixed_axis_3gen(const Axet& x, int a, int b, int c);

bool is_skew(const Axet& x);

}  // namespace axial

#endif
