#include "axial/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace axial {

std::string vector_key(const Vec& v) {
  std::string k;
  for (Index i = 0; i < v.size(); ++i) {
    if (i) k.push_back(',');
    k += v(i).str();
  }
  return k;
}

Algebra::Algebra(FieldSpec field, std::vector<std::string> labels)
    : field_(field), labels_(std::move(labels)) {
  std::size_t n = labels_.size();
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::BadLabel, "duplicate basis label");
  prod_.assign(n * (n + 1) / 2, {});
}

int Algebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorKind::BadLabel, "no basis vector '" + label + "'");
}

std::size_t Algebra::slot(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= dim()) throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
  // row-major upper triangle
  return static_cast<std::size_t>(i) * dim() - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
}

void Algebra::add_constant(int i, int j, int k, const Scalar& c) {
  if (k < 0 || k >= dim()) throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
  Scalar v = c.in(field_);
  if (v.is_zero()) return;
  auto& entry = prod_[slot(i, j)];
  for (auto it = entry.begin(); it != entry.end(); ++it) {
    if (it->first == k) {
      it->second += v;
      if (it->second.is_zero()) entry.erase(it);
      return;
    }
    if (it->first > k) {
      entry.insert(it, {k, v});
      return;
    }
  }
  entry.push_back({k, v});
}

void Algebra::set_product(int i, int j, const Vec& v) {
  if (v.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "product vector length");
  auto& entry = prod_[slot(i, j)];
  entry.clear();
  for (int k = 0; k < dim(); ++k) {
    Scalar c = v(k).in(field_);
    if (!c.is_zero()) entry.push_back({k, c});
  }
}

Vec Algebra::product_of_basis(int i, int j) const {
  Vec r = zero();
  for (const auto& [k, c] : prod_[slot(i, j)]) r(k) = c;
  return r;
}

std::vector<StructureConstant> Algebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j)
      for (const auto& [k, c] : prod_[slot(i, j)]) out.push_back({i, j, k, c});
  return out;
}

Vec Algebra::mul(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "mul");
  Vec r = zero();
  std::vector<int> nu, nv;
  for (int i = 0; i < dim(); ++i) {
    if (!u(i).is_zero()) nu.push_back(i);
    if (!v(i).is_zero()) nv.push_back(i);
  }
  for (int i : nu)
    for (int j : nv) {
      const auto& entry = prod_[slot(i, j)];
      if (entry.empty()) continue;
      Scalar f = u(i) * v(j);
      for (const auto& [k, c] : entry) r(k) += f * c;
    }
  return r;
}

Mat Algebra::ad(const Vec& u) const {
  Mat m = Mat::Constant(dim(), dim(), Scalar::zero(field_));
  for (int j = 0; j < dim(); ++j) m.col(j) = mul(u, basis_vector(j));
  return m;
}

Vec Algebra::vec(const std::vector<std::pair<std::string, Scalar>>& terms) const {
  Vec v = zero();
  for (const auto& [label, c] : terms) v(index_of(label)) += c.in(field_);
  return v;
}

const Mat& Algebra::gram() const {
  if (!gram_) throw Error(ErrorKind::MissingForm, "algebra has no Frobenius form");
  return *gram_;
}

void Algebra::set_gram(const Mat& g) {
  if (g.rows() != dim() || g.cols() != dim()) throw Error(ErrorKind::DimensionMismatch, "gram size");
  Mat b = g;
  bind_to(b, field_);
  gram_ = b;
}

Scalar Algebra::form(const Vec& u, const Vec& v) const {
  const Mat& g = gram();
  Scalar s = Scalar::zero(field_);
  for (int i = 0; i < dim(); ++i) {
    if (u(i).is_zero()) continue;
    for (int j = 0; j < dim(); ++j)
      if (!v(j).is_zero() && !g(i, j).is_zero()) s += u(i) * g(i, j) * v(j);
  }
  return s;
}

bool Algebra::is_idempotent(const Vec& v) const { return mul(v, v) == v; }

void Algebra::set_axes(std::vector<Vec> axes) {
  axes_.clear();
  for (auto& a : axes) add_axis(a);
}

void Algebra::add_axis(const Vec& a) {
  if (a.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "axis length");
  Vec b = bind(a);
  if (is_zero_vector(b) || !is_idempotent(b)) throw Error(ErrorKind::NotIdempotent, "designated axis is not a nonzero idempotent");
  axes_.push_back(b);
}

std::optional<Scalar> Algebra::param(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) return std::nullopt;
  return it->second;
}

void Algebra::validate() const {
  if (gram_) {
    for (int i = 0; i < dim(); ++i)
      for (int j = i + 1; j < dim(); ++j)
        if ((*gram_)(i, j) != (*gram_)(j, i)) throw Error(ErrorKind::BadParameter, "gram matrix not symmetric");
  }
  for (const auto& a : axes_)
    if (!is_idempotent(a)) throw Error(ErrorKind::NotIdempotent, "designated axis is not idempotent");
}

Vec SubalgebraResult::to_sub(const Vec& v) const {
  auto c = space.coordinates(v);
  if (!c) throw Error(ErrorKind::DimensionMismatch, "vector outside the subalgebra");
  return algebra.bind(*c);
}

Space subalgebra_span(const Algebra& a, const std::vector<Vec>& gens) {
  Space s(a.dim());
  std::vector<Vec> list;
  for (const auto& g : gens)
    if (s.insert(g)) list.push_back(g);
  for (std::size_t j = 0; j < list.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      Vec p = a.mul(list[i], list[j]);
      if (s.insert(p)) list.push_back(p);
    }
  return s;
}

SubalgebraResult subalgebra_closure(const Algebra& a, const std::vector<Vec>& gens) {
  Space s = subalgebra_span(a, gens);
  const int k = static_cast<int>(s.dim());
  std::vector<std::string> labels;
  for (int r = 0; r < k; ++r) labels.push_back(a.labels()[s.pivots()[r]]);
  Algebra sub(a.field(), labels);
  Mat inc(a.dim(), k);
  for (int r = 0; r < k; ++r) inc.col(r) = s.vector(r);
  bind_to(inc, a.field());
  for (int r = 0; r < k; ++r)
    for (int t = r; t < k; ++t) {
      Vec p = a.mul(inc.col(r), inc.col(t));
      Vec c(k);
      for (int q = 0; q < k; ++q) c(q) = p(s.pivots()[q]);
      sub.set_product(r, t, c);
    }
  if (a.has_form()) sub.set_gram(inc.transpose() * a.gram() * inc);
  SubalgebraResult out{s, sub, inc};
  std::set<std::string> seen;
  std::vector<Vec> axes;
  for (const auto& g : gens) {
    Vec c = out.to_sub(g);
    if (is_zero_vector(c) || !out.algebra.is_idempotent(c)) continue;
    if (seen.insert(vector_key(c)).second) axes.push_back(c);
  }
  for (const auto& [n, v] : a.params()) out.algebra.set_param(n, v);
  out.algebra.set_axes(axes);
  return out;
}

Space ideal_generated(const Algebra& a, const std::vector<Vec>& gens) {
  Space s(a.dim());
  std::vector<Vec> list;
  for (const auto& g : gens)
    if (s.insert(g)) list.push_back(g);
  for (std::size_t j = 0; j < list.size(); ++j)
    for (int k = 0; k < a.dim(); ++k) {
      Vec p = a.mul(a.basis_vector(k), list[j]);
      if (s.insert(p)) list.push_back(p);
    }
  return s;
}

bool is_ideal(const Algebra& a, const Space& s) {
  for (Index r = 0; r < s.dim(); ++r)
    for (int k = 0; k < a.dim(); ++k)
      if (!s.contains(a.mul(a.basis_vector(k), s.vector(r)))) return false;
  return true;
}

QuotientResult quotient(const Algebra& a, const Space& ideal) {
  if (ideal.ambient() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "ideal ambient dimension");
  if (!is_ideal(a, ideal)) throw Error(ErrorKind::NotAnIdeal, "subspace is not an ideal");
  std::vector<bool> pivot(a.dim(), false);
  for (Index p : ideal.pivots()) pivot[p] = true;
  std::vector<int> keep;
  for (int c = 0; c < a.dim(); ++c)
    if (!pivot[c]) keep.push_back(c);
  const int q = static_cast<int>(keep.size());
  Mat proj = Mat::Constant(q, a.dim(), Scalar::zero(a.field()));
  for (int c = 0; c < a.dim(); ++c) {
    Vec r = ideal.reduce(a.basis_vector(c));
    for (int t = 0; t < q; ++t) proj(t, c) = r(keep[t]).in(a.field());
  }
  std::vector<std::string> labels;
  for (int c : keep) labels.push_back(a.labels()[c]);
  Algebra out(a.field(), labels);
  for (int s = 0; s < q; ++s)
    for (int t = s; t < q; ++t) out.set_product(s, t, proj * a.product_of_basis(keep[s], keep[t]));
  if (a.has_form()) {
    bool in_radical = true;
    for (Index r = 0; r < ideal.dim() && in_radical; ++r)
      in_radical = is_zero_vector(Vec(a.gram() * ideal.vector(r)));
    if (in_radical) {
      Mat g(q, q);
      for (int s = 0; s < q; ++s)
        for (int t = 0; t < q; ++t) g(s, t) = a.gram()(keep[s], keep[t]);
      out.set_gram(g);
    }
  }
  for (const auto& [n, v] : a.params()) out.set_param(n, v);
  std::set<std::string> seen;
  std::vector<Vec> axes;
  for (const auto& x : a.axes()) {
    Vec y = out.bind(proj * x);
    if (is_zero_vector(y)) continue;
    if (seen.insert(vector_key(y)).second) axes.push_back(y);
  }
  out.set_axes(axes);
  return {out, proj};
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "direct_sum");
  std::vector<std::string> labels = a.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (const auto& l : b.labels()) {
    std::string name = l;
    while (used.count(name)) name += "'";
    used.insert(name);
    labels.push_back(name);
  }
  const int n = a.dim(), m = b.dim();
  Algebra out(a.field(), labels);
  for (const auto& c : a.structure_constants()) out.add_constant(c.i, c.j, c.k, c.c);
  for (const auto& c : b.structure_constants()) out.add_constant(c.i + n, c.j + n, c.k + n, c.c);
  if (a.has_form() && b.has_form()) {
    Mat g = Mat::Constant(n + m, n + m, Scalar::zero(a.field()));
    g.topLeftCorner(n, n) = a.gram();
    g.bottomRightCorner(m, m) = b.gram();
    out.set_gram(g);
  }
  std::vector<Vec> axes;
  for (const auto& x : a.axes()) {
    Vec v = out.zero();
    v.head(n) = x;
    axes.push_back(v);
  }
  for (const auto& x : b.axes()) {
    Vec v = out.zero();
    v.tail(m) = x;
    axes.push_back(v);
  }
  out.set_axes(axes);
  return out;
}

bool frobenius_check(const Algebra& a) {
  const Mat& g = a.gram();
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g(i, j) != g(j, i)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ij = a.product_of_basis(i, j);
      for (int k = 0; k < n; ++k) {
        Vec jk = a.product_of_basis(j, k);
        Scalar lhs = Scalar::zero(a.field()), rhs = Scalar::zero(a.field());
        for (int m = 0; m < n; ++m) {
          if (!ij(m).is_zero()) lhs += ij(m) * g(m, k);
          if (!jk(m).is_zero()) rhs += g(i, m) * jk(m);
        }
        if (lhs != rhs) return false;
      }
    }
  return true;
}

Space form_radical(const Algebra& a) {
  const Mat& g = a.gram();
  for (const auto& x : a.axes())
    if (a.form(x, x).is_zero()) throw Error(ErrorKind::AxisNormZero, "axis with (a,a) = 0");
  return Space::kernel_of(g);
}

int ProjectionGraph::components() const {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = vertices;
  for (auto [u, v] : edges) {
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      --count;
    }
  }
  return count;
}

ProjectionGraph projection_graph(const Algebra& a) {
  ProjectionGraph g;
  g.vertices = static_cast<int>(a.axes().size());
  for (int i = 0; i < g.vertices; ++i)
    for (int j = i + 1; j < g.vertices; ++j)
      if (!a.form(a.axes()[i], a.axes()[j]).is_zero()) g.edges.emplace_back(i, j);
  return g;
}

bool is_automorphism(const Algebra& a, const Mat& m) {
  const int n = a.dim();
  if (m.rows() != n || m.cols() != n) return false;
  if (!inverse_matrix(m)) return false;
  std::vector<Vec> img;
  for (int i = 0; i < n; ++i) img.push_back(m.col(i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (Vec(m * a.product_of_basis(i, j)) != a.mul(img[i], img[j])) return false;
  return true;
}

Vec Homomorphism::apply(const Vec& u) const {
  const Index k = static_cast<Index>(on_basis.size());
  if (k == 0) throw Error(ErrorKind::DimensionMismatch, "empty homomorphism");
  Mat src(u.size(), k), dst(on_basis[0].second.size(), k);
  for (Index t = 0; t < k; ++t) {
    src.col(t) = on_basis[t].first;
    dst.col(t) = on_basis[t].second;
  }
  auto c = solve(src, u);
  if (!c) throw Error(ErrorKind::DimensionMismatch, "vector outside the homomorphism domain");
  return dst * *c;
}

std::optional<Homomorphism> extend_homomorphism(const Algebra& a, const std::vector<Vec>& gens,
                                                const Algebra& b, const std::vector<Vec>& images) {
  if (gens.size() != images.size()) throw Error(ErrorKind::DimensionMismatch, "generator/image count");
  const int n = a.dim(), m = b.dim();
  Space graph(n + m), dom(n), img(m);
  std::vector<std::pair<Vec, Vec>> pairs;
  auto add = [&](const Vec& u, const Vec& w) {
    Vec uw(n + m);
    uw << u, w;
    bool grew_graph = graph.insert(uw);
    bool grew_dom = dom.insert(u);
    if (grew_graph != grew_dom) return false;  // same u, two different images
    if (grew_graph) {
      pairs.emplace_back(u, w);
      img.insert(w);
    }
    return true;
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!add(gens[i], images[i])) return std::nullopt;
  for (std::size_t j = 0; j < pairs.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      Vec u = a.mul(pairs[i].first, pairs[j].first);
      Vec w = b.mul(pairs[i].second, pairs[j].second);
      if (!add(u, w)) return std::nullopt;
    }
  Homomorphism h;
  h.domain = dom;
  h.on_basis = pairs;
  h.injective = img.dim() == dom.dim();
  return h;
}

Algebra with_axes(Algebra a, std::vector<Vec> axes) {
  a.set_axes(std::move(axes));
  return a;
}

}  // namespace axial
