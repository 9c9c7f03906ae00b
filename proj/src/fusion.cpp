#include "axial/fusion.hpp"

#include <map>
#include <random>
#include <unordered_map>

namespace axial {

namespace {

unsigned bit(int i) { return 1u << i; }

std::string trim_copy(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

FusionLaw::FusionLaw(std::string name, std::vector<Scalar> eigenvalues, std::vector<std::vector<unsigned>> star,
                     std::vector<bool> odd)
    : name_(std::move(name)), eigenvalues_(std::move(eigenvalues)), star_(std::move(star)), odd_(std::move(odd)) {
  const int n = size();
  if (n == 0 || n > 16) throw Error(ErrorKind::BadParameter, "fusion law size");
  for (const auto& e : eigenvalues_)
    if (!e.bound()) throw Error(ErrorKind::BadParameter, "fusion law eigenvalues must carry a field");
  field_ = eigenvalues_[0].field();
  for (const auto& e : eigenvalues_)
    if (e.field() != field_) throw Error(ErrorKind::FieldMismatch, "fusion law eigenvalues");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (eigenvalues_[i] == eigenvalues_[j])
        throw Error(ErrorKind::ForbiddenParameter, "eigenvalues coincide: " + eigenvalues_[i].str());
  if (static_cast<int>(star_.size()) != n || static_cast<int>(odd_.size()) != n)
    throw Error(ErrorKind::BadParameter, "fusion table shape");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (star_[i][j] != star_[j][i]) throw Error(ErrorKind::BadParameter, "fusion table not symmetric");
      for (int k = 0; k < n; ++k)
        if ((star_[i][j] & bit(k)) && odd_[k] != (odd_[i] != odd_[j]))
          throw Error(ErrorKind::BadParameter, "grading does not respect the fusion table");
    }
}

FusionLaw FusionLaw::jordan(const Scalar& eta) {
  if (!eta.bound()) throw Error(ErrorKind::BadParameter, "eta must carry a field");
  const FieldSpec& f = eta.field();
  if (eta.is_zero() || eta.is_one()) throw Error(ErrorKind::ForbiddenParameter, "eta must avoid 0 and 1");
  // indices: 0 -> 1, 1 -> 0, 2 -> eta
  std::vector<std::vector<unsigned>> t(3, std::vector<unsigned>(3, 0));
  t[0][0] = bit(0);
  t[0][2] = t[2][0] = bit(2);
  t[1][1] = bit(1);
  t[1][2] = t[2][1] = bit(2);
  t[2][2] = bit(0) | bit(1);
  return FusionLaw("J", {Scalar::one(f), Scalar::zero(f), eta}, t, {false, false, true});
}

FusionLaw FusionLaw::monster(const Scalar& alpha, const Scalar& beta) {
  if (!alpha.bound() || !beta.bound()) throw Error(ErrorKind::BadParameter, "alpha, beta must carry a field");
  const FieldSpec& f = alpha.field();
  // indices: 0 -> 1, 1 -> 0, 2 -> alpha, 3 -> beta
  std::vector<std::vector<unsigned>> t(4, std::vector<unsigned>(4, 0));
  t[0][0] = bit(0);
  t[0][2] = t[2][0] = bit(2);
  t[0][3] = t[3][0] = bit(3);
  t[1][1] = bit(1);
  t[1][2] = t[2][1] = bit(2);
  t[1][3] = t[3][1] = bit(3);
  t[2][2] = bit(0) | bit(1);
  t[2][3] = t[3][2] = bit(3);
  t[3][3] = bit(0) | bit(1) | bit(2);
  return FusionLaw("M", {Scalar::one(f), Scalar::zero(f), alpha, beta}, t, {false, false, false, true});
}

FusionLaw FusionLaw::parse(const FieldSpec& f, const std::string& text) {
  std::string t = trim_copy(text);
  if (t.size() < 4) throw Error(ErrorKind::ParseError, "fusion law '" + text + "'");
  char kind = t[0];
  char open = t[1], close = t.back();
  if (!((open == '[' && close == ']') || (open == '(' && close == ')')))
    throw Error(ErrorKind::ParseError, "fusion law '" + text + "'");
  std::vector<std::string> parts;
  std::string body = t.substr(2, t.size() - 3), cur;
  for (char c : body) {
    if (c == ',') {
      parts.push_back(trim_copy(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(trim_copy(cur));
  std::map<std::string, std::string> named;
  std::vector<std::string> positional;
  for (const auto& p : parts) {
    auto eq = p.find('=');
    if (eq == std::string::npos)
      positional.push_back(p);
    else
      named[trim_copy(p.substr(0, eq))] = trim_copy(p.substr(eq + 1));
  }
  auto get = [&](const std::string& name, std::size_t pos) {
    if (named.count(name)) return Scalar::parse(f, named[name]);
    if (pos < positional.size()) return Scalar::parse(f, positional[pos]);
    throw Error(ErrorKind::ParseError, "fusion law '" + text + "' lacks " + name);
  };
  if (kind == 'J') return jordan(get("eta", 0));
  if (kind == 'M') return monster(get("alpha", 0), get("beta", 1));
  throw Error(ErrorKind::ParseError, "fusion law '" + text + "'");
}

int FusionLaw::index_of(const Scalar& lambda) const {
  for (int i = 0; i < size(); ++i)
    if (eigenvalues_[i] == lambda) return i;
  return -1;
}

bool FusionLaw::graded() const {
  for (bool o : odd_)
    if (o) return true;
  return false;
}

bool FusionLaw::is_seress() const {
  int one = index_of(Scalar::one(field_)), zero = index_of(Scalar::zero(field_));
  if (one < 0 || zero < 0) return false;
  for (int i = 0; i < size(); ++i) {
    if (star_[zero][i] & ~bit(i)) return false;
    if (star_[one][i] & ~bit(i)) return false;
  }
  return true;
}

std::string FusionLaw::str() const {
  std::string s = name_ + "(";
  for (int i = 2; i < size(); ++i) {
    if (i > 2) s += ",";
    s += eigenvalues_[i].str();
  }
  return s + ")";
}

std::vector<int> AxisReport::dims() const {
  std::vector<int> d;
  for (const auto& e : eigenspaces) d.push_back(static_cast<int>(e.dim()));
  return d;
}

std::vector<Vec> eigen_components(const AxisReport& r, const Vec& v) {
  if (!r.semisimple) throw Error(ErrorKind::NotAnAxis, "eigen components need a semisimple axis");
  Vec c = r.eigenbasis_inv * v;
  std::vector<Vec> out;
  Index off = 0;
  for (const auto& e : r.eigenspaces) {
    Vec comp = Vec::Constant(v.size(), Scalar(0));
    for (Index t = 0; t < e.dim(); ++t) comp += c(off + t) * r.eigenbasis.col(off + t);
    off += e.dim();
    out.push_back(comp);
  }
  return out;
}

AxisReport verify_axis(const Algebra& a, const Vec& axis, const FusionLaw& law, int seress_trials,
                       std::uint64_t seed) {
  if (law.field() != a.field()) throw Error(ErrorKind::FieldMismatch, "law over " + law.field().str());
  if (axis.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "axis length");
  AxisReport r;
  const int n = a.dim(), m = law.size();
  r.idempotent = a.is_idempotent(axis);
  Mat ad = a.ad(axis);
  Index total = 0;
  for (int i = 0; i < m; ++i) {
    r.eigenspaces.push_back(eigenspace(ad, law.eigenvalue(i)));
    total += r.eigenspaces.back().dim();
  }
  r.semisimple = total == n;
  int one = law.index_of(Scalar::one(a.field()));
  r.primitive = r.idempotent && one >= 0 && r.eigenspaces[one].dim() == 1 && r.eigenspaces[one].contains(axis);

  if (r.semisimple) {
    r.eigenbasis = Mat(n, n);
    Index off = 0;
    for (const auto& e : r.eigenspaces)
      for (Index t = 0; t < e.dim(); ++t) r.eigenbasis.col(off++) = e.vector(t);
    r.eigenbasis_inv = *inverse_matrix(r.eigenbasis);
  }

  std::map<unsigned, Space> targets;
  auto target = [&](unsigned mask) -> const Space& {
    auto it = targets.find(mask);
    if (it != targets.end()) return it->second;
    Space s(n);
    for (int k = 0; k < m; ++k)
      if (mask & bit(k)) s = s + r.eigenspaces[k];
    return targets.emplace(mask, s).first->second;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const Space& t = target(law.star(i, j));
      for (Index p = 0; p < r.eigenspaces[i].dim(); ++p)
        for (Index q = (i == j ? p : 0); q < r.eigenspaces[j].dim(); ++q) {
          Vec u = r.eigenspaces[i].vector(p), v = r.eigenspaces[j].vector(q);
          Vec w = a.mul(u, v);
          if (t.contains(w)) continue;
          FusionViolation fv{i, j, u, v, w, -1, Vec()};
          if (r.semisimple) {
            auto comps = eigen_components(r, w);
            for (int k = 0; k < m; ++k)
              if (!(law.star(i, j) & bit(k)) && !is_zero_vector(comps[k])) {
                fv.offending = k;
                fv.component = comps[k];
                break;
              }
          }
          r.violations.push_back(fv);
        }
    }
  r.fusion_ok = r.violations.empty();

  if (r.semisimple && r.idempotent && r.fusion_ok && law.graded()) {
    Mat d = Mat::Identity(n, n);
    Index off = 0;
    for (int k = 0; k < m; ++k) {
      for (Index t = 0; t < r.eigenspaces[k].dim(); ++t, ++off)
        if (law.odd(k)) d(off, off) = Scalar(-1);
    }
    Mat t = r.eigenbasis * d * r.eigenbasis_inv;
    bind_to(t, a.field());
    r.miyamoto = t;
  }
  if (law.is_seress() && r.semisimple && r.idempotent && seress_trials > 0)
    r.seress_ok = seress_check(a, axis, seress_trials, seed);
  return r;
}

Mat miyamoto(const Algebra& a, const Vec& axis, const FusionLaw& law) {
  AxisReport r = verify_axis(a, axis, law, 0);
  if (!r.ok()) throw Error(ErrorKind::NotAnAxis, "axis fails " + law.str());
  if (!law.graded()) {
    Mat id = Mat::Identity(a.dim(), a.dim());
    bind_to(id, a.field());
    return id;
  }
  if (!is_automorphism(a, *r.miyamoto)) throw Error(ErrorKind::Internal, "Miyamoto map is not an automorphism");
  return *r.miyamoto;
}

Mat sigma_jordan(const Algebra& a, const Vec& axis, const Scalar& alpha) {
  FusionLaw j = FusionLaw::jordan(alpha.in(a.field()));
  AxisReport r = verify_axis(a, axis, j, 0);
  if (!r.idempotent) throw Error(ErrorKind::NotIdempotent, "sigma_jordan");
  if (!r.semisimple) throw Error(ErrorKind::HasBetaPart, "eigenvalues beyond 1, 0, " + alpha.str());
  if (!r.fusion_ok) throw Error(ErrorKind::NotJordan, "axis is not of Jordan type " + alpha.str());
  return *r.miyamoto;
}

int ClosedAxes::index_of(const Vec& v) const {
  for (std::size_t i = 0; i < axes.size(); ++i)
    if (axes[i] == v) return static_cast<int>(i);
  return -1;
}

ClosedAxes closed_axes(const Algebra& a, const std::vector<Vec>& seeds, const FusionLaw& law, std::size_t cap) {
  ClosedAxes out;
  std::unordered_map<std::string, int> where;
  auto add = [&](const Vec& v) {
    Vec b = a.bind(v);
    auto key = vector_key(b);
    if (where.count(key)) return;
    where[key] = static_cast<int>(out.axes.size());
    out.axes.push_back(b);
  };
  for (const auto& s : seeds) add(s);
  std::vector<std::size_t> applied;
  bool progress = true;
  while (progress && !out.capped) {
    progress = false;
    for (std::size_t i = 0; i < out.axes.size() && !out.capped; ++i) {
      if (out.tau.size() <= i) {
        out.tau.push_back(miyamoto(a, out.axes[i], law));
        applied.push_back(0);
      }
      while (applied[i] < out.axes.size()) {
        add(out.tau[i] * out.axes[applied[i]++]);
        if (out.axes.size() > cap) {
          out.capped = true;
          break;
        }
      }
      if (applied[i] < out.axes.size()) progress = true;
    }
    for (std::size_t i = 0; i < out.axes.size() && !progress; ++i)
      if (i >= out.tau.size() || applied[i] < out.axes.size()) progress = true;
  }
  if (out.capped) {
    out.axes.resize(cap);
    if (out.tau.size() > cap) out.tau.resize(cap);
    return out;
  }
  for (std::size_t i = 0; i < out.axes.size(); ++i) {
    std::vector<int> p;
    for (std::size_t j = 0; j < out.axes.size(); ++j)
      p.push_back(where.at(vector_key(a.bind(out.tau[i] * out.axes[j]))));
    out.perms.push_back(p);
  }
  return out;
}

bool seress_check(const Algebra& a, const Vec& axis, int trials, std::uint64_t seed) {
  const FieldSpec& f = a.field();
  Mat ad = a.ad(axis);
  Space ev = eigenspace(ad, Scalar::one(f)) + eigenspace(ad, Scalar::zero(f));
  std::mt19937_64 rng(seed);
  auto coeff = [&]() { return Scalar::from_int(f, static_cast<long>(rng() % 7) - 3); };
  for (int t = 0; t < trials; ++t) {
    Vec x = a.zero(), y = a.zero();
    for (int i = 0; i < a.dim(); ++i) x(i) = coeff();
    for (Index k = 0; k < ev.dim(); ++k) y += coeff() * ev.vector(k);
    if (a.mul(axis, a.mul(x, y)) != a.mul(a.mul(axis, x), y)) return false;
  }
  return true;
}

}  // namespace axial
