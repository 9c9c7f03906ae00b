#include "axial/axet.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace axial {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

bool is_perm(const Perm& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm restrict_perm(const Perm& g, const std::vector<int>& pts, const std::vector<int>& pos) {
  Perm r(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) r[i] = pos[g[pts[i]]];
  return r;
}

// Images of classes under g, or nothing if g does not respect them.
std::optional<Perm> induced_perm(const Perm& g, const std::vector<int>& classes, int nclasses) {
  Perm r(nclasses, -1);
  for (std::size_t p = 0; p < classes.size(); ++p) {
    int c = classes[p], d = classes[g[p]];
    if (r[c] == -1)
      r[c] = d;
    else if (r[c] != d)
      return std::nullopt;
  }
  return r;
}

std::vector<int> normalize_classes(const std::vector<int>& classes, int& count) {
  std::vector<int> out(classes.size());
  std::vector<std::pair<int, int>> seen;
  count = 0;
  for (std::size_t p = 0; p < classes.size(); ++p) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](auto& e) { return e.first == classes[p]; });
    if (it == seen.end()) {
      seen.emplace_back(classes[p], count);
      out[p] = count++;
    } else {
      out[p] = it->second;
    }
  }
  return out;
}

}  // namespace

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& g, const Perm& h) {
  Perm r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = h[g[x]];
  return r;
}

Perm inverse_perm(const Perm& g) {
  Perm r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[g[x]] = static_cast<int>(x);
  return r;
}

Perm conjugate(const Perm& t, const Perm& g) { return compose(compose(inverse_perm(g), t), g); }

bool is_identity(const Perm& g) {
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g[x] != static_cast<int>(x)) return false;
  return true;
}

Axet::Axet(std::vector<std::string> labels, std::vector<Perm> tau, std::vector<Perm> extra_gens)
    : labels_(std::move(labels)), tau_(std::move(tau)), extra_(std::move(extra_gens)) {
  const int n = size();
  if (static_cast<int>(tau_.size()) != n) throw Error(ErrorKind::DimensionMismatch, "one tau per point");
  for (int x = 0; x < n; ++x) {
    if (!is_perm(tau_[x], n)) throw Error(ErrorKind::BadParameter, "tau is not a permutation");
    if (tau_[x][x] != x) throw Error(ErrorKind::BadParameter, "tau_x does not fix x");
    if (!is_identity(compose(tau_[x], tau_[x]))) throw Error(ErrorKind::BadParameter, "tau_x is not an involution");
  }
  for (const auto& g : extra_)
    if (!is_perm(g, n)) throw Error(ErrorKind::BadParameter, "extra generator is not a permutation");
  for (const auto& g : group_generators())
    for (int x = 0; x < n; ++x)
      if (tau_[g[x]] != conjugate(tau_[x], g)) throw Error(ErrorKind::BadParameter, "tau is not G-equivariant");
}

std::vector<Perm> Axet::miyamoto_generators() const {
  std::set<Perm> seen;
  std::vector<Perm> out;
  for (const auto& t : tau_)
    if (!is_identity(t) && seen.insert(t).second) out.push_back(t);
  return out;
}

std::vector<Perm> Axet::group_generators() const {
  std::vector<Perm> out = miyamoto_generators();
  for (const auto& g : extra_) out.push_back(g);
  return out;
}

Axet xn(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "X(n) needs n >= 1");
  std::vector<std::string> labels;
  std::vector<Perm> tau;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    Perm t(n);
    for (int j = 0; j < n; ++j) t[j] = mod(2 * i - j, n);
    tau.push_back(t);
  }
  std::vector<Perm> extra;
  if (n >= 3) {
    Perm r(n);
    for (int j = 0; j < n; ++j) r[j] = mod(j + 1, n);
    extra.push_back(r);
  }
  return Axet(labels, tau, extra);
}

Axet xprime(int k3) {
  if (k3 < 3 || k3 % 3 != 0) throw Error(ErrorKind::BadParameter, "X'(3k) needs 3 | n");
  const int k = k3 / 3, m = 4 * k;
  // vertices of X(4k): even 2j -> point j; odd v -> point 2k + ((v-1)/2 mod k)
  auto point = [&](int v) {
    v = mod(v, m);
    return v % 2 == 0 ? v / 2 : 2 * k + ((v - 1) / 2) % k;
  };
  std::vector<int> rep(k3);
  for (int j = 0; j < 2 * k; ++j) rep[j] = 2 * j;
  for (int j = 0; j < k; ++j) rep[2 * k + j] = 2 * j + 1;
  std::vector<std::string> labels;
  std::vector<Perm> tau;
  for (int p = 0; p < k3; ++p) {
    labels.push_back((p < 2 * k ? "e" : "o") + std::to_string(rep[p]));
    Perm t(k3);
    for (int q = 0; q < k3; ++q) t[q] = point(2 * rep[p] - rep[q]);
    tau.push_back(t);
  }
  return Axet(labels, tau);
}

namespace {

Axet one_point_extension(int n, bool half_turn) {
  Axet base = xn(n);
  std::vector<std::string> labels{"a"};
  for (const auto& l : base.labels()) labels.push_back("x" + l);
  std::vector<Perm> tau;
  Perm ta = identity_perm(n + 1);
  if (half_turn)
    for (int j = 0; j < n; ++j) ta[j + 1] = 1 + mod(j + n / 2, n);
  tau.push_back(ta);
  for (int i = 0; i < n; ++i) {
    Perm t(n + 1);
    t[0] = 0;
    for (int j = 0; j < n; ++j) t[j + 1] = 1 + base.tau(i)[j];
    tau.push_back(t);
  }
  std::vector<Perm> extra;
  for (const auto& g : base.extra_gens()) {
    Perm e(n + 1);
    e[0] = 0;
    for (int j = 0; j < n; ++j) e[j + 1] = 1 + g[j];
    extra.push_back(e);
  }
  return Axet(labels, tau, extra);
}

}  // namespace

Axet x1(int n) { return one_point_extension(n, false); }

Axet x2(int n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::BadParameter, "X2(1+n) needs n even");
  return one_point_extension(n, true);
}

std::vector<int> closure(const Axet& x, const std::vector<int>& points) {
  std::vector<bool> in(x.size(), false);
  std::vector<int> list;
  for (int p : points)
    if (!in[p]) {
      in[p] = true;
      list.push_back(p);
    }
  for (std::size_t j = 0; j < list.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      for (int z : {x.tau(list[i])[list[j]], x.tau(list[j])[list[i]]})
        if (!in[z]) {
          in[z] = true;
          list.push_back(z);
        }
    }
  std::sort(list.begin(), list.end());
  return list;
}

Axet subaxet(const Axet& x, const std::vector<int>& points) {
  std::vector<int> pts = points;
  std::sort(pts.begin(), pts.end());
  if (closure(x, pts) != pts) throw Error(ErrorKind::BadParameter, "subset is not closed");
  std::vector<int> pos(x.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  std::vector<Perm> tau;
  for (int p : pts) {
    labels.push_back(x.labels()[p]);
    tau.push_back(restrict_perm(x.tau(p), pts, pos));
  }
  return Axet(labels, tau);
}

std::vector<std::vector<int>> orbits(int n, const std::vector<Perm>& gens) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> orb{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : gens) {
        int t = g[orb[i]];
        if (comp[t] == -1) {
          comp[t] = comp[s];
          orb.push_back(t);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(orb);
  }
  return out;
}

PermGroup generated_group(int n, const std::vector<Perm>& gens, std::size_t cap) {
  PermGroup g;
  std::set<Perm> seen{identity_perm(n)};
  std::deque<Perm> queue{identity_perm(n)};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Perm q = compose(p, s);
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw Error(ErrorKind::CapExceeded, "group enumeration");
        queue.push_back(q);
      }
    }
  }
  g.elements.assign(seen.begin(), seen.end());
  g.orbits = orbits(n, gens);
  return g;
}

PermGroup miyamoto_group(const Axet& x) { return generated_group(x.size(), x.miyamoto_generators()); }
PermGroup acting_group(const Axet& x) { return generated_group(x.size(), x.group_generators()); }

bool check_morphism(const Axet& x, const Axet& y, const std::vector<int>& psi) {
  if (static_cast<int>(psi.size()) != x.size()) return false;
  for (int v : psi)
    if (v < 0 || v >= y.size()) return false;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b)
      if (psi[x.tau(a)[b]] != y.tau(psi[a])[psi[b]]) return false;
  return true;
}

bool is_isomorphism(const Axet& x, const Axet& y, const std::vector<int>& psi) {
  if (x.size() != y.size() || !check_morphism(x, y, psi)) return false;
  std::vector<int> s = psi;
  std::sort(s.begin(), s.end());
  return s == identity_perm(y.size());
}

std::optional<std::vector<int>> extend_morphism(const Axet& x, const std::vector<int>& gens, const Axet& y,
                                                const std::vector<int>& images) {
  std::vector<int> psi(x.size(), -1);
  std::vector<int> known;
  auto set = [&](int p, int v) {
    if (psi[p] == -1) {
      psi[p] = v;
      known.push_back(p);
      return true;
    }
    return psi[p] == v;
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!set(gens[i], images[i])) return std::nullopt;
  for (std::size_t j = 0; j < known.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      int p = known[i], q = known[j];
      if (!set(x.tau(p)[q], y.tau(psi[p])[psi[q]])) return std::nullopt;
      if (!set(x.tau(q)[p], y.tau(psi[q])[psi[p]])) return std::nullopt;
    }
  for (int v : psi)
    if (v == -1) return std::nullopt;
  if (!check_morphism(x, y, psi)) return std::nullopt;
  return psi;
}

std::vector<int> generating_set(const Axet& x) {
  std::vector<int> gens;
  std::vector<int> cur;
  for (int p = 0; p < x.size(); ++p) {
    if (std::binary_search(cur.begin(), cur.end(), p)) continue;
    gens.push_back(p);
    cur = closure(x, gens);
  }
  return gens;
}

std::optional<std::vector<int>> find_isomorphism(const Axet& x, const Axet& y) {
  if (x.size() != y.size()) return std::nullopt;
  if (x.size() == 0) return std::vector<int>{};
  std::vector<int> gens = generating_set(x);
  std::vector<int> images(gens.size(), 0);
  while (true) {
    auto psi = extend_morphism(x, gens, y, images);
    if (psi && is_isomorphism(x, y, *psi)) return psi;
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == y.size()) images[i++] = 0;
    if (i == images.size()) return std::nullopt;
  }
}

bool is_congruence(const Axet& x, const std::vector<int>& classes) {
  if (static_cast<int>(classes.size()) != x.size()) return false;
  int count = 0;
  std::vector<int> cls = normalize_classes(classes, count);
  for (int z = 0; z < x.size(); ++z)
    if (!induced_perm(x.tau(z), cls, count)) return false;
  // z ~ w must give the same induced action
  for (int z = 0; z < x.size(); ++z)
    for (int w = z + 1; w < x.size(); ++w)
      if (cls[z] == cls[w] && *induced_perm(x.tau(z), cls, count) != *induced_perm(x.tau(w), cls, count))
        return false;
  return true;
}

Axet factor_axet(const Axet& x, const std::vector<int>& classes) {
  if (!is_congruence(x, classes)) throw Error(ErrorKind::NotACongruence, "partition is not a congruence");
  int count = 0;
  std::vector<int> cls = normalize_classes(classes, count);
  std::vector<std::string> labels(count);
  std::vector<Perm> tau(count);
  std::vector<bool> done(count, false);
  for (int p = 0; p < x.size(); ++p) {
    int c = cls[p];
    if (!labels[c].empty()) labels[c] += "~";
    labels[c] += x.labels()[p];
    if (!done[c]) {
      tau[c] = *induced_perm(x.tau(p), cls, count);
      done[c] = true;
    }
  }
  std::vector<Perm> extra;
  for (const auto& g : x.extra_gens())
    if (auto e = induced_perm(g, cls, count)) extra.push_back(*e);
  return Axet(labels, tau, extra);
}

Axet fold(const Axet& x, const std::vector<int>& partner) {
  if (static_cast<int>(partner.size()) != x.size()) throw Error(ErrorKind::DimensionMismatch, "pairing size");
  std::vector<int> classes(x.size());
  for (int p = 0; p < x.size(); ++p) {
    int q = partner[p];
    if (q < 0 || q >= x.size() || partner[q] != p) throw Error(ErrorKind::BadParameter, "pairing is not an involution");
    if (x.tau(p) != x.tau(q)) throw Error(ErrorKind::TauMismatch, "paired points have different tau");
    classes[p] = std::min(p, q);
  }
  return factor_axet(x, classes);
}

std::string TwoGenClass::str() const {
  return kind == Kind::Regular ? "X(" + std::to_string(n) + ")" : "X'(" + std::to_string(n) + ")";
}

TwoGenClass classify_2gen(const Axet& x, int a, int b) {
  TwoGenClass out;
  out.points = closure(x, {a, b});
  Axet sub = subaxet(x, out.points);
  const int m = sub.size();
  auto orb = miyamoto_group(sub).orbits;
  std::vector<std::size_t> len;
  for (const auto& o : orb) len.push_back(o.size());
  std::sort(len.begin(), len.end());
  if (orb.size() == 1 || (orb.size() == 2 && len[0] == len[1])) {
    out.kind = TwoGenClass::Kind::Regular;
    out.n = m;
    out.model = xn(m);
  } else if (orb.size() == 2 && len[1] == 2 * len[0]) {
    out.kind = TwoGenClass::Kind::Skew;
    out.n = m;
    out.model = xprime(m);
  } else {
    throw Error(ErrorKind::WrongOrbitStructure, "2-generated axet with unexpected orbits");
  }
  std::vector<int> pos(x.size(), -1);
  for (std::size_t i = 0; i < out.points.size(); ++i) pos[out.points[i]] = static_cast<int>(i);
  std::vector<int> gens{pos[a]};
  if (a != b) gens.push_back(pos[b]);
  std::vector<int> images(gens.size(), 0);
  while (true) {
    auto psi = extend_morphism(sub, gens, out.model, images);
    if (psi && is_isomorphism(sub, out.model, *psi)) {
      out.witness = *psi;
      return out;
    }
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == out.model.size()) images[i++] = 0;
    if (i == images.size()) break;
  }
  throw Error(ErrorKind::Internal, "no isomorphism to the standard model");
}

std::string FixedAxisClass::str() const {
  switch (kind) {
    case Kind::X1: return "X1(1+" + std::to_string(n) + ")";
    case Kind::X2: return "X2(1+" + std::to_string(n) + ")";
    case Kind::Skew3: return "X'(3)";
  }
  return "?";
}

FixedAxisClass classify_fixed_axis_3gen(const Axet& x, int a, int b, int c) {
  if (closure(x, {a, b, c}) != identity_perm(x.size()))
    throw Error(ErrorKind::BadParameter, "points do not generate the axet");
  PermGroup miy = miyamoto_group(x);
  bool ok = miy.orbits.size() == 2;
  if (ok) {
    const auto& o0 = miy.orbits[0].size() == 1 ? miy.orbits[0] : miy.orbits[1];
    ok = o0.size() == 1 && o0[0] == a;
  }
  if (!ok) throw Error(ErrorKind::WrongOrbitStructure, "Miyamoto orbits are not {a} and X - {a}");
  FixedAxisClass out;
  out.n = x.size() - 1;
  out.miy_order = miy.order();
  bool trivial = is_identity(x.tau(a));
  Axet model;
  if (trivial) {
    out.kind = FixedAxisClass::Kind::X1;
    model = x1(out.n);
  } else {
    if (out.n % 2 != 0) throw Error(ErrorKind::WrongOrbitStructure, "nontrivial tau_a needs n even");
    out.kind = out.n == 2 ? FixedAxisClass::Kind::Skew3 : FixedAxisClass::Kind::X2;
    model = out.n == 2 ? xprime(3) : x2(out.n);
  }
  // the fixed point a must go to the model's fixed point
  int fixed = 0;
  for (const auto& o : miyamoto_group(model).orbits)
    if (o.size() == 1) fixed = o[0];
  for (int pb = 0; pb < model.size(); ++pb)
    for (int pc = 0; pc < model.size(); ++pc) {
      if (pb == fixed || pc == fixed) continue;
      auto psi = extend_morphism(x, {a, b, c}, model, {fixed, pb, pc});
      if (psi && is_isomorphism(x, model, *psi)) {
        out.witness = *psi;
        return out;
      }
    }
  throw Error(ErrorKind::Internal, "no isomorphism to the standard model");
}

bool is_skew(const Axet& x) {
  for (int a = 0; a < x.size(); ++a)
    for (int b = a + 1; b < x.size(); ++b) {
      Axet sub = subaxet(x, closure(x, {a, b}));
      auto orb = miyamoto_group(sub).orbits;
      if (orb.size() == 2 && orb[0].size() != orb[1].size()) return true;
    }
  return false;
}

}  // namespace axial
