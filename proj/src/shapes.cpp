#include "axial/shapes.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "axial/catalog.hpp"

namespace axial {

Axet axet_of(const ClosedAxes& c) {
  if (c.capped) throw Error(ErrorKind::CapExceeded, "axis closure hit the cap");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < c.axes.size(); ++i) labels.push_back(std::to_string(i));
  return Axet(labels, c.perms);
}

std::string Fingerprint::str() const {
  std::string s = "dim=" + std::to_string(dim) + ";axes=" + (axet_size ? std::to_string(*axet_size) : "capped");
  s += ";eig=";
  for (std::size_t i = 0; i < eigen_profile.size(); ++i)
    s += (i ? "," : "") + eigen_profile[i].first.str() + ":" + std::to_string(eigen_profile[i].second);
  if (form_values) s += ";form=" + (*form_values)[0].str() + "," + (*form_values)[1].str() + "," + (*form_values)[2].str();
  if (gamma) s += ";gamma=" + gamma->str();
  return s;
}

Fingerprint fingerprint(const Algebra& a, const Vec& x, const Vec& y, const FusionLaw& law, std::size_t cap) {
  SubalgebraResult sub = subalgebra_closure(a, {x, y});
  Fingerprint fp;
  fp.dim = sub.algebra.dim();
  Vec sx = sub.to_sub(x), sy = sub.to_sub(y);
  ClosedAxes cl = closed_axes(sub.algebra, {sx, sy}, law, cap);
  if (!cl.capped) fp.axet_size = static_cast<int>(cl.axes.size());
  AxisReport r = verify_axis(sub.algebra, sx, law, 0);
  for (int i = 0; i < law.size(); ++i)
    if (i < static_cast<int>(r.eigenspaces.size()) && r.eigenspaces[i].dim() > 0)
      fp.eigen_profile.emplace_back(law.eigenvalue(i), static_cast<int>(r.eigenspaces[i].dim()));
  if (a.has_form()) fp.form_values = std::vector<Scalar>{a.form(x, x), a.form(x, y), a.form(y, y)};
  try {
    fp.gamma = jordan_identify(a, x, y).gamma;
  } catch (const Error&) {
  }
  return fp;
}

namespace {

std::vector<int> image(const std::vector<int>& pts, const Perm& g) {
  std::vector<int> out;
  for (int p : pts) out.push_back(g[p]);
  std::sort(out.begin(), out.end());
  return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ShapeGraph shape_graph(const Axet& x) {
  const int n = x.size();
  std::map<std::vector<int>, std::vector<int>> subs;  // closed subset -> first generating pair
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> c = closure(x, {a, b});
      std::sort(c.begin(), c.end());
      subs.emplace(c, std::vector<int>{a, b});
    }
  PermGroup g = acting_group(x);
  ShapeGraph out;
  std::set<std::vector<int>> seen;
  for (const auto& [pts, gens] : subs) {
    if (seen.count(pts)) continue;
    std::set<std::vector<int>> orbit;
    for (const auto& e : g.elements) orbit.insert(image(pts, e));
    seen.insert(orbit.begin(), orbit.end());
    out.vertices.push_back({pts, gens, orbit.size(), static_cast<int>(pts.size()) != n});
  }
  for (std::size_t z = 0; z < out.vertices.size(); ++z)
    for (std::size_t y = 0; y < out.vertices.size(); ++y) {
      const auto& zp = out.vertices[z].points;
      const auto& yp = out.vertices[y].points;
      if (z == y || zp.size() >= yp.size()) continue;
      for (const auto& e : g.elements)
        if (subset(image(zp, e), yp)) {
          out.edges.emplace_back(static_cast<int>(z), static_cast<int>(y));
          break;
        }
    }
  return out;
}

std::string ShapeAssignment::key() const {
  if (!label.empty()) return label;
  if (!fingerprint) throw Error(ErrorKind::MissingRealizer, "assignment with neither label nor fingerprint");
  return fingerprint->str();
}

Shape shape_of_algebra(const Algebra& a, const FusionLaw& law, std::size_t cap) {
  ClosedAxes cl = closed_axes(a, a.axes(), law, cap);
  if (cl.capped) throw Error(ErrorKind::CapExceeded, "axis closure exceeded " + std::to_string(cap));
  Shape s;
  s.axet = axet_of(cl);
  s.law = law;
  for (const auto& v : shape_graph(s.axet).vertices) {
    if (!v.proper) continue;
    ShapeAssignment as;
    as.orbit_rep = v.points;
    as.generators = v.generators;
    const Vec& x = cl.axes[v.generators[0]];
    const Vec& y = cl.axes[v.generators[1]];
    as.fingerprint = fingerprint(a, x, y, law);
    try {
      as.label = jordan_identify(a, x, y).label;
    } catch (const Error&) {
    }
    s.assignments.push_back(as);
  }
  return s;
}

namespace {

Algebra resolve(const std::string& key, const Realizers& realizers, const FieldSpec& f) {
  auto it = realizers.find(key);
  if (it != realizers.end()) return it->second;
  try {
    return build(key, f);
  } catch (const Error&) {
    throw Error(ErrorKind::MissingRealizer, "no realizer for '" + key + "'");
  }
}

// theta_Y: points of Y -> axes of A_Y, generators to A_Y's first two axes.
std::optional<std::map<int, Vec>> theta(const Axet& x, const ShapeAssignment& as, const Algebra& ay,
                                        const FusionLaw& law) {
  if (ay.axes().size() < 2) return std::nullopt;
  Axet sub = subaxet(x, as.orbit_rep);
  ClosedAxes cl = closed_axes(ay, {ay.axes()[0], ay.axes()[1]}, law, 4 * static_cast<std::size_t>(sub.size()) + 8);
  if (cl.capped || static_cast<int>(cl.axes.size()) != sub.size()) return std::nullopt;
  auto local = [&](int p) {
    return static_cast<int>(std::lower_bound(as.orbit_rep.begin(), as.orbit_rep.end(), p) - as.orbit_rep.begin());
  };
  auto psi = extend_morphism(sub, {local(as.generators[0]), local(as.generators[1])}, axet_of(cl), {0, 1});
  if (!psi) return std::nullopt;
  std::set<int> targets(psi->begin(), psi->end());
  if (static_cast<int>(targets.size()) != sub.size()) return std::nullopt;
  std::map<int, Vec> out;
  for (std::size_t i = 0; i < as.orbit_rep.size(); ++i) out.emplace(as.orbit_rep[i], cl.axes[(*psi)[i]]);
  return out;
}

// Homomorphism from A_Z extending theta_Z(p) -> target(p) over all points of Z.
bool maps_consistently(const Algebra& az, const std::map<int, Vec>& tz, const ShapeAssignment& z, const Algebra& ay,
                       const std::function<Vec(int)>& target, bool need_injective) {
  std::vector<Vec> gens{tz.at(z.generators[0]), tz.at(z.generators[1])};
  std::vector<Vec> images{target(z.generators[0]), target(z.generators[1])};
  auto hom = extend_homomorphism(az, gens, ay, images);
  if (!hom) return false;
  if (need_injective && !hom->injective) return false;
  for (const auto& [p, v] : tz)
    if (hom->apply(v) != target(p)) return false;
  return true;
}

}  // namespace

ShapeVerdict validate_shape(const Shape& s, const Realizers& realizers, const FusionLaw& law) {
  const FieldSpec& f = law.field();
  std::vector<Algebra> alg;
  std::vector<std::map<int, Vec>> th;
  for (const auto& as : s.assignments) {
    alg.push_back(resolve(as.key(), realizers, f));
    auto t = theta(s.axet, as, alg.back(), law);
    if (!t) return {false, "realizer of " + as.key() + " does not match its subaxet"};
    th.push_back(*t);
  }
  PermGroup g = acting_group(s.axet);
  for (std::size_t z = 0; z < s.assignments.size(); ++z)
    for (std::size_t y = 0; y < s.assignments.size(); ++y) {
      const auto& zp = s.assignments[z].orbit_rep;
      const auto& yp = s.assignments[y].orbit_rep;
      if (zp.size() > yp.size()) continue;
      for (const auto& e : g.elements) {
        if (!subset(image(zp, e), yp)) continue;
        auto target = [&](int p) { return th[y].at(e[p]); };
        if (!maps_consistently(alg[z], th[z], s.assignments[z], alg[y], target, true))
          return {false, "no embedding " + s.assignments[z].key() + " -> " + s.assignments[y].key()};
      }
    }
  return {true, ""};
}

namespace {

struct EvenAxet {
  ClosedAxes cl;
  std::vector<int> opposite;
};

EvenAxet even_axet(const Algebra& a, const FusionLaw& law) {
  EvenAxet e{closed_axes(a, a.axes(), law, 512), {}};
  if (e.cl.capped) throw Error(ErrorKind::WrongAxet, "axet is not finite within the cap");
  const int n = static_cast<int>(e.cl.axes.size());
  if (n < 4 || n % 2 || !find_isomorphism(axet_of(e.cl), xn(n)))
    throw Error(ErrorKind::WrongAxet, "axet is not X(2n), size " + std::to_string(n));
  e.opposite.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (y != x && e.cl.perms[x] == e.cl.perms[y]) e.opposite[x] = y;
  return e;
}

ShapeVerdict check_with(const Algebra& a, const FusionLaw& law, const Vec& cand, const EvenAxet& e) {
  const Scalar& alpha = law.eigenvalue(2);
  if (!verify_axis(a, cand, FusionLaw::jordan(alpha), 0).ok()) return {false, "candidate is not of Jordan type alpha"};
  for (const auto& t : e.cl.tau)
    if (t * cand != cand) return {false, "candidate is moved by a Miyamoto involution"};
  Mat sigma = sigma_jordan(a, cand, alpha);
  for (std::size_t x = 0; x < e.cl.axes.size(); ++x) {
    if (e.opposite[x] < 0) return {false, "axis without an opposite"};
    if (sigma * e.cl.axes[x] != e.cl.axes[e.opposite[x]]) return {false, "sigma does not switch the halves"};
  }
  return {true, ""};
}

}  // namespace

ShapeVerdict property_j_check(const Algebra& a, const FusionLaw& law, const Vec& candidate) {
  return check_with(a, law, candidate, even_axet(a, law));
}

std::optional<Vec> property_j_search(const Algebra& a, const FusionLaw& law) {
  EvenAxet e = even_axet(a, law);
  const FieldSpec& f = a.field();
  const Scalar& alpha = law.eigenvalue(2);
  const Scalar half = Scalar::from_frac(f, 1, 2), quarter = Scalar::from_frac(f, 1, 4);
  const int n = static_cast<int>(e.cl.axes.size());
  std::vector<Vec> cands;
  Space meet = Space::whole(a.dim());
  bool all_2b = true, all_s2 = true;
  for (int x = 0; x < n; ++x) {
    const Vec& u = e.cl.axes[x];
    const Vec& v = e.cl.axes[e.opposite[x]];
    Space pair = subalgebra_span(a, {u, v});
    meet = meet.intersect(pair);
    Vec uv = a.mul(u, v);
    all_2b = all_2b && is_zero_vector(uv);
    all_s2 = all_s2 && pair.dim() == 2 && uv == Vec(half * (u + v));
    // third axis of 3C(alpha)
    if (pair.dim() == 3) cands.push_back(Vec(u + v - (Scalar::from_int(f, 2) / alpha) * uv));
  }
  if (meet.dim() == 1) {
    Vec w = meet.vector(0), w2 = a.mul(w, w);
    for (int i = 0; i < a.dim(); ++i)
      if (!w(i).is_zero()) {
        Scalar k = w2(i) / w(i);
        if (!k.is_zero() && w2 == Vec(k * w)) cands.push_back(Vec(w / k));
        break;
      }
  }
  // alpha = 1/2 exceptions: <<x, x'>> is 2B inside S(0), or S(2)° inside S(-2)
  if (alpha == half && (all_2b || all_s2)) {
    const int d = a.dim();
    Mat sys(n * d, d);
    Vec rhs(n * d);
    for (int x = 0; x < n; ++x) {
      const Vec& u = e.cl.axes[x];
      Vec diff = quarter * (u - e.cl.axes[e.opposite[x]]);
      Mat m = a.ad(u);
      if (all_2b) m -= half * Mat::Identity(d, d);
      sys.block(x * d, 0, d, d) = m;
      rhs.segment(x * d, d) = diff;
    }
    bind_to(sys, f);
    if (auto sol = solve(sys, rhs); sol && rank(sys) == d) cands.push_back(*sol);
  }
  std::set<std::string> tried;
  for (const auto& c : cands) {
    if (!tried.insert(vector_key(c)).second) continue;
    if (check_with(a, law, c, e)) return c;
  }
  return std::nullopt;
}

CompletionResult completion_check(const Shape& s, const Algebra& a, const FusionLaw& law, const Realizers& realizers) {
  CompletionResult res;
  ClosedAxes cl = closed_axes(a, a.axes(), law, 4096);
  if (cl.capped) throw Error(ErrorKind::CapExceeded, "axis closure of the candidate completion hit the cap");
  if (subalgebra_span(a, cl.axes).dim() != a.dim()) {
    res.detail = "axes do not generate the algebra";
    return res;
  }
  Axet t = axet_of(cl);
  const FieldSpec& f = law.field();
  std::vector<Algebra> alg;
  std::vector<std::map<int, Vec>> th;
  for (const auto& as : s.assignments) {
    alg.push_back(resolve(as.key(), realizers, f));
    auto m = theta(s.axet, as, alg.back(), law);
    if (!m) {
      res.detail = "realizer of " + as.key() + " does not match its subaxet";
      return res;
    }
    th.push_back(*m);
  }
  std::vector<int> gens = generating_set(s.axet);
  std::vector<int> images(gens.size(), 0);
  const int m = t.size();
  std::set<std::vector<int>> tried;
  // odometer over generator images
  while (true) {
    auto psi = extend_morphism(s.axet, gens, t, images);
    if (psi && tried.insert(*psi).second && std::set<int>(psi->begin(), psi->end()).size() == static_cast<std::size_t>(m)) {
      bool ok = true;
      for (std::size_t k = 0; ok && k < s.assignments.size(); ++k) {
        const auto& as = s.assignments[k];
        std::vector<Vec> tgt;
        for (int p : as.orbit_rep) tgt.push_back(cl.axes[(*psi)[p]]);
        if (subalgebra_span(a, tgt).dim() > alg[k].dim()) {
          ok = false;
          break;
        }
        auto target = [&](int p) { return cl.axes[(*psi)[p]]; };
        ok = maps_consistently(alg[k], th[k], as, a, target, false);
      }
      if (ok) {
        res.ok = true;
        res.morphism = *psi;
        res.faithful = s.axet.size() == m;
        return res;
      }
    }
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == m) images[i++] = 0;
    if (i == images.size()) break;
  }
  res.detail = "no surjective morphism carries the shape into the algebra";
  return res;
}

}  // namespace axial
