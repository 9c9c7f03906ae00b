#include "axial/catalog.hpp"

#include <cctype>

#include "axial/highwater.hpp"

namespace axial {

namespace {

int mod6(int i) { return ((i % 6) + 6) % 6; }

Scalar frac(const FieldSpec& f, long n, long d = 1) { return Scalar::from_frac(f, n, d); }

void forbid(bool bad, const std::string& what) {
  if (bad) throw Error(ErrorKind::ForbiddenParameter, what);
}

Mat form_from(const Algebra& a, const std::vector<std::vector<Scalar>>& rows) {
  Mat g(a.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) g(i, j) = rows[i][j];
  return g;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

AlgebraLabel AlgebraLabel::parse(const std::string& text) {
  AlgebraLabel l;
  auto open = text.find('[');
  if (open == std::string::npos) {
    l.family = text;
  } else {
    if (text.back() != ']') throw Error(ErrorKind::ParseError, "label '" + text + "'");
    l.family = text.substr(0, open);
    std::string body = text.substr(open + 1, text.size() - open - 2), cur;
    auto flush = [&]() {
      if (cur.empty()) return;
      auto eq = cur.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "label parameter '" + cur + "'");
      l.params.emplace_back(cur.substr(0, eq), cur.substr(eq + 1));
      cur.clear();
    };
    for (char c : body) {
      if (c == ',')
        flush();
      else if (!std::isspace(static_cast<unsigned char>(c)))
        cur.push_back(c);
    }
    flush();
  }
  if (l.family.empty()) throw Error(ErrorKind::ParseError, "empty label");
  return l;
}

std::string AlgebraLabel::str() const {
  std::string s = family;
  if (params.empty()) return s;
  s += "[";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += params[i].first + "=" + params[i].second;
  }
  return s + "]";
}

std::optional<std::string> AlgebraLabel::get(const std::string& name) const {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  return std::nullopt;
}

void check_monster_params(const Scalar& alpha, const Scalar& beta) {
  forbid(alpha.is_zero() || alpha.is_one(), "alpha in {0,1}");
  forbid(beta.is_zero() || beta.is_one(), "beta in {0,1}");
  forbid(alpha == beta, "alpha = beta");
}

Algebra build_1A(const FieldSpec& f) {
  Algebra a(f, {"a"});
  a.add_constant(0, 0, 0, frac(f, 1));
  a.set_gram(Mat::Constant(1, 1, frac(f, 1)));
  a.set_axes({a.basis_vector(0)});
  return a;
}

Algebra build_2B(const FieldSpec& f) {
  Algebra a(f, {"a0", "a1"});
  a.add_constant(0, 0, 0, frac(f, 1));
  a.add_constant(1, 1, 1, frac(f, 1));
  Mat g = Mat::Identity(2, 2);
  a.set_gram(g);
  a.set_axes({a.basis_vector(0), a.basis_vector(1)});
  return a;
}

Algebra build_3C(const Scalar& eta) {
  const FieldSpec& f = eta.field();
  forbid(eta.is_zero() || eta.is_one(), "3C needs eta not in {0,1}");
  Algebra a(f, {"x", "y", "z"});
  Scalar h = eta / frac(f, 2);
  for (int i = 0; i < 3; ++i) a.add_constant(i, i, i, frac(f, 1));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      int k = 3 - i - j;
      a.add_constant(i, j, i, h);
      a.add_constant(i, j, j, h);
      a.add_constant(i, j, k, -h);
    }
  Mat g(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = i == j ? frac(f, 1) : h;
  a.set_gram(g);
  a.set_axes({a.basis_vector(0), a.basis_vector(1), a.basis_vector(2)});
  a.set_param("eta", eta);
  return a;
}

Algebra build_3C_cross(const FieldSpec& f) {
  Algebra c = build_3C(frac(f, -1));
  Vec s = c.vec({{"x", frac(f, 1)}, {"y", frac(f, 1)}, {"z", frac(f, 1)}});
  return quotient(c, ideal_generated(c, {s})).algebra;
}

Algebra build_spin(const Scalar& delta) {
  const FieldSpec& f = delta.field();
  forbid(delta == frac(f, 2), "S(delta) needs delta != 2; use spin2circ");
  // basis 1, u, v with b(u,u) = b(v,v) = 2, b(u,v) = delta
  Algebra a(f, {"1", "u", "v"});
  a.add_constant(0, 0, 0, frac(f, 1));
  a.add_constant(0, 1, 1, frac(f, 1));
  a.add_constant(0, 2, 2, frac(f, 1));
  a.add_constant(1, 1, 0, frac(f, 1));
  a.add_constant(2, 2, 0, frac(f, 1));
  a.add_constant(1, 2, 0, delta / frac(f, 2));
  a.set_gram(form_from(a, {{frac(f, 2), frac(f, 0), frac(f, 0)},
                           {frac(f, 0), frac(f, 2), delta},
                           {frac(f, 0), delta, frac(f, 2)}}));
  Scalar h = frac(f, 1, 2);
  a.set_axes({a.vec({{"1", h}, {"u", h}}), a.vec({{"1", h}, {"v", h}})});
  a.set_param("delta", delta);
  return a;
}

Algebra build_spin2_circ(const FieldSpec& f) {
  Algebra a(f, {"x", "y"});
  a.add_constant(0, 0, 0, frac(f, 1));
  a.add_constant(1, 1, 1, frac(f, 1));
  a.add_constant(0, 1, 0, frac(f, 1, 2));
  a.add_constant(0, 1, 1, frac(f, 1, 2));
  a.set_gram(Mat::Constant(2, 2, frac(f, 1)));
  a.set_axes({a.basis_vector(0), a.basis_vector(1)});
  a.set_param("delta", frac(f, 2));
  return a;
}

Algebra build_clhat(const FieldSpec& f) {
  Algebra a(f, {"x", "y", "z"});
  a.add_constant(0, 0, 0, frac(f, 1));
  a.add_constant(1, 1, 1, frac(f, 1));
  a.add_constant(0, 1, 0, frac(f, 1, 2));
  a.add_constant(0, 1, 1, frac(f, 1, 2));
  a.add_constant(0, 1, 2, frac(f, 1));
  Mat g = Mat::Constant(3, 3, frac(f, 0));
  g.topLeftCorner(2, 2) = Mat::Constant(2, 2, frac(f, 1));
  a.set_gram(g);
  a.set_axes({a.basis_vector(0), a.basis_vector(1)});
  return a;
}

Algebra build_split_spin(const Scalar& mu, const Scalar& alpha) {
  const FieldSpec& f = alpha.field();
  Scalar one = frac(f, 1), half = frac(f, 1, 2);
  check_monster_params(alpha, half);
  Algebra a(f, {"e", "f", "z1", "z2"});
  const int e = 0, fv = 1, z1 = 2, z2 = 3;
  a.add_constant(z1, z1, z1, one);
  a.add_constant(z2, z2, z2, one);
  for (int v : {e, fv}) {
    a.add_constant(v, z1, v, alpha);
    a.add_constant(v, z2, v, one - alpha);
  }
  // ef = -b(e,f) z with z = alpha(alpha-2) z1 + (alpha-1)(alpha+1) z2
  Scalar c1 = alpha * (alpha - frac(f, 2)), c2 = (alpha - one) * (alpha + one);
  auto set_ef = [&](int i, int j, const Scalar& b) {
    a.add_constant(i, j, z1, -b * c1);
    a.add_constant(i, j, z2, -b * c2);
  };
  set_ef(e, e, one);
  set_ef(fv, fv, one);
  set_ef(e, fv, mu);
  Scalar w1 = alpha * half, w2 = (alpha + one) * half;
  a.set_axes({a.vec({{"e", half}, {"z1", w1}, {"z2", w2}}), a.vec({{"f", half}, {"z1", w1}, {"z2", w2}})});
  a.set_param("alpha", alpha);
  a.set_param("beta", half);
  a.set_param("mu", mu);
  return a;
}

Algebra build_hat_split_spin_circ(const Scalar& mu) {
  const FieldSpec& f = mu.field();
  Scalar one = frac(f, 1), half = frac(f, 1, 2);
  Algebra a(f, {"e", "f", "z1", "n"});
  const int e = 0, fv = 1, z1 = 2, n = 3;
  a.add_constant(z1, z1, z1, one);
  for (int v : {e, fv}) a.add_constant(v, z1, v, -one);
  // ef = -b(e,f) z with z = 3 z1 - 2 n
  auto set_ef = [&](int i, int j, const Scalar& b) {
    a.add_constant(i, j, z1, -b * frac(f, 3));
    a.add_constant(i, j, n, b * frac(f, 2));
  };
  set_ef(e, e, one);
  set_ef(fv, fv, one);
  set_ef(e, fv, mu);
  a.set_axes({a.vec({{"e", half}, {"z1", -half}, {"n", half}}), a.vec({{"f", half}, {"z1", -half}, {"n", half}})});
  a.set_param("alpha", frac(f, -1));
  a.set_param("beta", half);
  a.set_param("mu", mu);
  return a;
}

Algebra build_iy3_one(const Scalar& alpha) {
  const FieldSpec& f = alpha.field();
  Scalar one = frac(f, 1), half = frac(f, 1, 2);
  check_monster_params(alpha, half);
  Algebra a(f, {"a0", "a1", "z", "n"});
  a.add_constant(0, 0, 0, one);
  a.add_constant(1, 1, 1, one);
  a.add_constant(0, 1, 0, half);
  a.add_constant(0, 1, 1, half);
  a.add_constant(0, 1, 2, alpha - half);
  a.add_constant(0, 1, 3, one);
  a.add_constant(0, 2, 2, alpha);
  a.add_constant(1, 2, 2, alpha);
  a.set_axes({a.basis_vector(0), a.basis_vector(1)});
  a.set_param("alpha", alpha);
  a.set_param("beta", half);
  a.set_param("mu", one);
  return a;
}

Algebra build_iy3(const Scalar& alpha, const Scalar& mu) {
  const FieldSpec& f = alpha.field();
  if (mu == frac(f, 1)) return build_iy3_one(alpha);
  if (alpha == frac(f, -1)) return build_hat_split_spin_circ(mu);
  return build_split_spin(mu, alpha);
}

Scalar six_a_beta(const Scalar& alpha) {
  const FieldSpec& f = alpha.field();
  forbid(alpha == frac(f, 1, 2), "6A needs alpha != 1/2");
  return -(alpha * alpha) / (frac(f, 4) * (frac(f, 2) * alpha - frac(f, 1)));
}

Algebra build_6A(const Scalar& alpha) {
  const FieldSpec& f = alpha.field();
  Scalar beta = six_a_beta(alpha);
  forbid(alpha == frac(f, 4, 9), "6A needs alpha != 4/9");
  forbid((alpha * alpha + frac(f, 8) * alpha - frac(f, 4)).is_zero(), "6A needs alpha != -4 +- 2 sqrt 5");
  check_monster_params(alpha, beta);
  Algebra a(f, {"a-2", "a-1", "a0", "a1", "a2", "a3", "c", "z"});
  const int C = 6, Z = 7;
  auto A = [](int i) { return mod6(i + 2); };
  Scalar one = frac(f, 1), two = frac(f, 2), t = frac(f, 2) * alpha - one;
  Scalar b2 = beta / two, a2 = alpha / two, a4 = alpha / frac(f, 4);
  Scalar k24 = alpha * (frac(f, 3) * alpha - one) / (frac(f, 4) * t);
  Scalar kz2 = alpha * (frac(f, 5) * alpha - two) / (frac(f, 8) * t);
  Scalar kz = alpha * (frac(f, 3) * alpha - two) / (frac(f, 4) * t);
  auto put = [&](int i, int j, std::vector<std::pair<int, Scalar>> terms) {
    Vec v = a.zero();
    for (auto& [k, c] : terms) v(k) += c;
    a.set_product(i, j, v);
  };
  for (int i = 0; i < 6; ++i) {
    put(A(i), A(i), {{A(i), one}});
    put(A(i), A(i + 1), {{A(i), b2}, {A(i + 1), b2}, {A(i + 2), -b2}, {A(i + 3), -b2}, {A(i - 1), -b2},
                         {A(i - 2), -b2}, {C, b2}, {Z, b2}});
    put(A(i), A(i + 2), {{A(i), a4}, {A(i + 2), a4}, {A(i + 4), k24}, {Z, -kz2}});
    put(A(i), A(i + 3), {{A(i), a2}, {A(i + 3), a2}, {C, -a2}});
    put(A(i), C, {{A(i), a2}, {C, a2}, {A(i + 3), -a2}});
    put(A(i), Z, {{A(i), two * kz}, {A(i - 2), -kz}, {A(i + 2), -kz}, {Z, kz}});
  }
  put(C, C, {{C, one}});
  put(C, Z, {});
  put(Z, Z, {{Z, (alpha + two) * (frac(f, 3) * alpha - two) / (frac(f, 4) * t)}});

  Scalar g1 = -(alpha * alpha) * (frac(f, 3) * alpha - two) / ((frac(f, 4) * t) * (frac(f, 4) * t));
  Scalar g2 = alpha * (frac(f, 21) * alpha * alpha - frac(f, 18) * alpha + frac(f, 4)) /
              ((frac(f, 4) * t) * (frac(f, 4) * t));
  Scalar gz = alpha * (frac(f, 7) * alpha - frac(f, 4)) * (frac(f, 3) * alpha - two) / (frac(f, 8) * t * t);
  Scalar gzz = (alpha + two) * (frac(f, 7) * alpha - frac(f, 4)) * (frac(f, 3) * alpha - two) / (frac(f, 8) * t * t);
  Mat g = Mat::Constant(8, 8, frac(f, 0));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      int d = mod6(j - i);
      g(A(i), A(j)) = d == 0 ? one : (d == 1 || d == 5) ? g1 : (d == 2 || d == 4) ? g2 : a2;
    }
    g(A(i), C) = g(C, A(i)) = a2;
    g(A(i), Z) = g(Z, A(i)) = gz;
  }
  g(C, C) = one;
  g(Z, Z) = gzz;
  a.set_gram(g);
  std::vector<Vec> axes;
  for (int i = -2; i <= 3; ++i) axes.push_back(a.basis_vector(A(i)));
  a.set_axes(axes);
  a.set_param("alpha", alpha);
  a.set_param("beta", beta);
  return a;
}

Algebra build_6J(const Scalar& beta) {
  const FieldSpec& f = beta.field();
  forbid(beta.is_zero() || beta.is_one() || beta == frac(f, 1, 2), "6J needs beta not in {0,1,1/2}");
  Scalar alpha = frac(f, 2) * beta;
  check_monster_params(alpha, beta);
  Algebra a(f, {"a-2", "a-1", "a0", "a1", "a2", "a3", "u", "w"});
  const int U = 6, W = 7;
  auto A = [](int i) { return mod6(i + 2); };
  Scalar one = frac(f, 1), two = frac(f, 2), b2 = beta / two, a2 = alpha / two;
  auto put = [&](int i, int j, std::vector<std::pair<int, Scalar>> terms) {
    Vec v = a.zero();
    for (auto& [k, c] : terms) v(k) += c;
    a.set_product(i, j, v);
  };
  for (int i = 0; i < 6; ++i) {
    put(A(i), A(i), {{A(i), one}});
    put(A(i), A(i + 1), {{A(i), beta}, {A(i + 1), beta}, {W, -b2}});
    put(A(i), A(i + 2), {{A(i), b2}, {A(i + 2), b2}, {A(i + 4), -b2}});
    put(A(i), A(i + 3), {{A(i), a2}, {A(i + 3), a2}, {U, -a2}});
    put(A(i), U, {{A(i), a2}, {U, a2}, {A(i + 3), -a2}});
    put(A(i), W, {{A(i), alpha}, {A(i - 1), -a2}, {A(i + 1), -a2}, {W, a2}});
  }
  put(U, U, {{U, one}});
  put(U, W, {{U, beta}});
  put(W, W, {{W, beta + one}, {U, -beta}});
  Mat g = Mat::Constant(8, 8, frac(f, 0));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      int d = mod6(j - i);
      g(A(i), A(j)) = d == 0 ? one : (d == 1 || d == 5) ? beta : (d == 2 || d == 4) ? b2 : a2;
    }
    g(A(i), U) = g(U, A(i)) = a2;
    g(A(i), W) = g(W, A(i)) = alpha;
  }
  g(U, U) = one;
  g(U, W) = g(W, U) = beta;
  g(W, W) = beta + two;
  a.set_gram(g);
  std::vector<Vec> axes;
  for (int i = -2; i <= 3; ++i) axes.push_back(a.basis_vector(A(i)));
  a.set_axes(axes);
  a.set_param("alpha", alpha);
  a.set_param("beta", beta);
  return a;
}

Algebra build_6Y(const FieldSpec& f) {
  Scalar one = frac(f, 1), half = frac(f, 1, 2);
  // even axes a0, a2, a4 are basis vectors; the odd ones are a_{i+3} = a_i + d
  Algebra a(f, {"a0", "a2", "a4", "d", "z"});
  const int D = 3, Z = 4;
  for (int i = 0; i < 3; ++i) {
    a.add_constant(i, i, i, one);
    int j = (i + 1) % 3, k = (i + 2) % 3;
    if (i < j) {
      a.add_constant(i, j, i, one);
      a.add_constant(i, j, j, one);
      a.add_constant(i, j, k, -one);
    } else {
      a.add_constant(j, i, i, one);
      a.add_constant(j, i, j, one);
      a.add_constant(j, i, k, -one);
    }
    a.add_constant(i, D, D, half);
    a.add_constant(i, D, Z, one);
  }
  a.add_constant(D, D, Z, frac(f, -2));
  Mat g = Mat::Constant(5, 5, frac(f, 0));
  g.topLeftCorner(3, 3) = Mat::Constant(3, 3, one);
  a.set_gram(g);
  std::vector<Vec> axes;
  for (int i = 0; i < 3; ++i) axes.push_back(a.basis_vector(i));
  for (int i = 0; i < 3; ++i) axes.push_back(Vec(a.basis_vector(i) + a.basis_vector(D)));
  a.set_axes(axes);
  a.set_param("alpha", half);
  a.set_param("beta", frac(f, 2));
  return a;
}

Algebra build_6Y_cross(const FieldSpec& f) {
  Algebra y = build_6Y(f);
  return quotient(y, ideal_generated(y, {y.basis_vector(4)})).algebra;
}

Algebra build_bar01(const FieldSpec& f) {
  Scalar one = frac(f, 1), half = frac(f, 1, 2);
  // Linear identities of an S(-2) generated by axes x, y with y' = y^sigma_x:
  // x (y + y') and x (y - y') expressed in the basis x, y, y'.
  Algebra s = build_spin(frac(f, -2));
  Vec x = s.axes()[0], y = s.axes()[1];
  Vec yp = sigma_jordan(s, x, half) * y;
  Mat b(3, 3);
  b << x, y, yp;
  auto coeffs = [&](const Vec& t) {
    auto c = solve(b, t);
    if (!c) throw Error(ErrorKind::Internal, "S(-2) identity not in span{x,y,y'}");
    return *c;
  };
  Vec sum_id = coeffs(s.mul(x, Vec(y + yp))), diff_id = coeffs(s.mul(x, Vec(y - yp)));

  // Unknowns: a*e_k for e_k in {a0, a2, a4, d} of 6Y^x, 5 coordinates each
  // (basis of the result: a0, a2, a4, d, a).
  Algebra base = build_6Y_cross(f);
  const int n = 5, m = 4;
  const int A = 4;
  auto unk = [&](int k, int coord) { return k * n + coord; };
  std::vector<Vec> rows;
  std::vector<Scalar> rhs;
  auto lift = [&](const Vec& v) {
    Vec w = zero_vector(f, n);
    w.head(m) = v;
    return w;
  };
  Vec av = unit_vector(f, n, A);
  for (int i = 0; i < 3; ++i) {
    Vec bi = lift(base.basis_vector(i));
    Vec bj = lift(Vec(base.basis_vector(i) + base.basis_vector(3)));  // opposite axis a_{i+3}
    for (int which = 0; which < 2; ++which) {
      Vec lhs_vec = which == 0 ? Vec(bi + bj) : Vec(bi - bj);
      const Vec& id = which == 0 ? sum_id : diff_id;
      Vec target = id(0) * av + id(1) * bi + id(2) * bj;
      for (int coord = 0; coord < n; ++coord) {
        Vec row = zero_vector(f, n * m);
        for (int k = 0; k < m; ++k) row(unk(k, coord)) = lhs_vec(k);
        rows.push_back(row);
        rhs.push_back(target(coord));
      }
    }
  }
  Mat sys(static_cast<Index>(rows.size()), n * m);
  Vec r(static_cast<Index>(rows.size()));
  for (Index i = 0; i < sys.rows(); ++i) {
    sys.row(i) = rows[i].transpose();
    r(i) = rhs[i];
  }
  auto sol = solve(sys, r);
  if (!sol) throw Error(ErrorKind::Internal, "Bar01 constraints are inconsistent");
  bool unique = rank(sys) == n * m;

  Algebra out(f, {"a0", "a2", "a4", "d", "a"});
  for (const auto& c : base.structure_constants()) out.add_constant(c.i, c.j, c.k, c.c);
  for (int k = 0; k < m; ++k) {
    Vec p(n);
    for (int coord = 0; coord < n; ++coord) p(coord) = (*sol)(unk(k, coord));
    out.set_product(k, A, p);
  }
  out.add_constant(A, A, A, one);
  std::vector<Vec> axes;
  for (const auto& ax : base.axes()) axes.push_back(lift(ax));
  axes.push_back(av);
  out.set_axes(axes);
  out.set_param("alpha", half);
  out.set_param("beta", frac(f, 2));
  out.set_param("bar01_unique", unique ? one : frac(f, 0));
  return out;
}

CatalogEntry build_entry(const AlgebraLabel& label, const FieldSpec& f) {
  std::string fam = lower(label.family);
  auto need = [&](const std::string& name) {
    auto v = label.get(name);
    if (!v) throw Error(ErrorKind::BadLabel, label.str() + " lacks parameter " + name);
    return Scalar::parse(f, *v);
  };
  auto opt = [&](const std::string& name, long dflt) {
    auto v = label.get(name);
    return v ? Scalar::parse(f, *v) : frac(f, dflt);
  };
  Scalar half = frac(f, 1, 2);
  if (fam == "1a") return {build_1A(f), std::nullopt};
  if (fam == "2b") return {build_2B(f), std::nullopt};
  if (fam == "3c") {
    Scalar eta = need("eta");
    return {build_3C(eta), FusionLaw::jordan(eta)};
  }
  if (fam == "3cx") return {build_3C_cross(f), FusionLaw::jordan(frac(f, -1))};
  if (fam == "spin") return {build_spin(need("delta")), FusionLaw::jordan(half)};
  if (fam == "spin2circ") return {build_spin2_circ(f), FusionLaw::jordan(half)};
  if (fam == "clhat") return {build_clhat(f), FusionLaw::jordan(half)};
  if (fam == "splitspin") {
    Scalar alpha = need("alpha");
    return {build_split_spin(need("mu"), alpha), FusionLaw::monster(alpha, half)};
  }
  if (fam == "hatsplitspin") return {build_hat_split_spin_circ(need("mu")), FusionLaw::monster(frac(f, -1), half)};
  if (fam == "iy3") {
    Scalar alpha = need("alpha");
    return {build_iy3(alpha, opt("mu", 1)), FusionLaw::monster(alpha, half)};
  }
  if (fam == "6a") {
    Scalar alpha = need("alpha");
    Algebra a = build_6A(alpha);
    return {a, FusionLaw::monster(alpha, *a.param("beta"))};
  }
  if (fam == "6j") {
    Scalar beta = need("beta");
    return {build_6J(beta), FusionLaw::monster(frac(f, 2) * beta, beta)};
  }
  if (fam == "6y") return {build_6Y(f), FusionLaw::monster(half, frac(f, 2))};
  if (fam == "6yx") return {build_6Y_cross(f), FusionLaw::monster(half, frac(f, 2))};
  if (fam == "bar01") return {build_bar01(f), FusionLaw::monster(half, frac(f, 2))};
  if (fam == "h" || fam == "hj") {
    auto nv = label.get("n");
    if (!nv) throw Error(ErrorKind::BadLabel, label.str() + " lacks parameter n");
    int n = std::stoi(*nv);
    bool cover = label.get("cover").value_or("0") != "0";
    Algebra a = fam == "h" ? build_Hn(n, f, cover).algebra : build_H2nJ(n, f, cover).algebra;
    return {a, FusionLaw::monster(frac(f, 2), half)};
  }
  throw Error(ErrorKind::BadLabel, "unknown family '" + label.family + "'");
}

CatalogEntry build_entry(const std::string& label, const FieldSpec& f) {
  return build_entry(AlgebraLabel::parse(label), f);
}

Algebra build(const std::string& label, const FieldSpec& f) { return build_entry(label, f).algebra; }

JordanId jordan_identify(const Algebra& a, const Vec& x, const Vec& y) {
  const FieldSpec& f = a.field();
  if (x == y) throw Error(ErrorKind::BadParameter, "jordan_identify needs distinct axes");
  SubalgebraResult sub = subalgebra_closure(a, {x, y});
  const Algebra& s = sub.algebra;
  Vec sx = sub.to_sub(x), sy = sub.to_sub(y);
  Vec xy = s.mul(sx, sy);
  const int d = s.dim();
  Scalar one = frac(f, 1), half = frac(f, 1, 2);
  auto is_jordan = [&](const Scalar& eta) {
    FusionLaw law = FusionLaw::jordan(eta);
    return verify_axis(s, sx, law, 0).ok() && verify_axis(s, sy, law, 0).ok();
  };
  JordanId id;
  if (d == 2) {
    if (is_zero_vector(xy)) {
      id.label = "2B";
      return id;
    }
    if (xy == Vec(half * (sx + sy))) {
      if (!is_jordan(half)) throw Error(ErrorKind::NotJordan, "S(2)-type pair is not of Jordan type 1/2");
      id.label = "spin2circ";
      id.eta = half;
      id.gamma = frac(f, 0);
      return id;
    }
    if (xy == Vec(-(sx + sy))) {
      if (!is_jordan(frac(f, -1))) throw Error(ErrorKind::NotJordan, "pair is not of Jordan type -1");
      id.label = "3Cx";
      id.eta = frac(f, -1);
      return id;
    }
    throw Error(ErrorKind::Unidentified, "2-dim algebra with unknown product");
  }
  if (d != 3) throw Error(ErrorKind::Unidentified, "generated algebra has dimension " + std::to_string(d));
  Mat ad = s.ad(sx);
  Scalar trace = frac(f, 0);
  for (int i = 0; i < 3; ++i) trace += ad(i, i);
  Scalar eta = trace - one;
  if (eta.is_zero() || eta.is_one() || !is_jordan(eta)) throw Error(ErrorKind::NotJordan, "axes are not of Jordan type");
  id.eta = eta;
  if (eta != half) {
    Vec c = sx + sy - (frac(f, 2) / eta) * xy;
    if (!s.is_idempotent(c)) throw Error(ErrorKind::Unidentified, "no third axis");
    id.label = "3C[eta=" + eta.str() + "]";
    return id;
  }
  Vec w = xy - half * (sx + sy);
  // identity: e with e b = b for every basis vector b
  Mat sys(d * d, d);
  Vec rhs(d * d);
  for (int j = 0; j < d; ++j) {
    Mat adj = s.ad(s.basis_vector(j));
    for (int i = 0; i < d; ++i) {
      sys.row(j * d + i) = adj.row(i);
      rhs(j * d + i) = j == i ? one : frac(f, 0);
    }
  }
  if (auto e = solve(sys, rhs)) {
    for (int i = 0; i < d; ++i) {
      if ((*e)(i).is_zero()) continue;
      Scalar gamma = w(i) / (*e)(i);
      if (w != Vec(gamma * *e)) break;
      id.gamma = gamma;
      id.label = "spin[delta=" + (frac(f, 8) * gamma + frac(f, 2)).str() + "]";
      return id;
    }
    throw Error(ErrorKind::Unidentified, "xy - (x+y)/2 is not a multiple of the identity");
  }
  bool annihilates = true;
  for (int j = 0; j < d; ++j) annihilates = annihilates && is_zero_vector(s.mul(w, s.basis_vector(j)));
  if (annihilates && !is_zero_vector(w)) {
    id.label = "clhat";
    return id;
  }
  throw Error(ErrorKind::Unidentified, "3-dim Jordan type 1/2 algebra without identity");
}

std::optional<long> spin_axet_size(const Scalar& delta) {
  const FieldSpec& f = delta.field();
  Mat rho(2, 2);
  rho << delta, frac(f, -1), frac(f, 1), frac(f, 0);
  Mat id = Mat::Identity(2, 2);
  // finite orders: at most 12 over Q or Q(sqrt d); at most 2p in SL_2(p)
  long bound = f.characteristic() == 0 ? 12 : 2 * f.characteristic() + 2;
  Mat p = rho;
  for (long k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * rho;
  }
  return std::nullopt;
}

std::array<Scalar, 5> iy5_coeffs(long n, const FieldSpec& f) {
  if (f.characteristic() == 3) throw Error(ErrorKind::CharThree, "coefficient formula needs char != 3");
  static const long fact[5] = {1, 1, 2, 6, 24};
  std::array<Scalar, 5> out;
  for (int i = 0; i < 5; ++i) {
    // n(n-1)...(n-4) / (n-i), with the factor cancelled
    mpz_class num = 1;
    for (int j = 0; j < 5; ++j)
      if (j != i) num *= (n - j);
    if (i % 2) num = -num;
    mpq_class q(num, fact[i] * fact[4 - i]);
    q.canonicalize();
    out[i] = Scalar::from_rational(f, q);
  }
  return out;
}

std::optional<long> iy5_axet_size(const FieldSpec& f) {
  if (f.characteristic() == 0) return std::nullopt;  // unipotent and nontrivial: infinite order
  // companion matrix of (x-1)^5 acting on windows (a_i, ..., a_{i+4})
  Mat c = Mat::Constant(5, 5, frac(f, 0));
  for (int i = 0; i < 4; ++i) c(i, i + 1) = frac(f, 1);
  const long rec[5] = {1, -5, 10, -10, 5};
  for (int i = 0; i < 5; ++i) c(4, i) = frac(f, rec[i]);
  Mat id = Mat::Identity(5, 5), p = c;
  for (long k = 1; k <= 100000; ++k) {
    if (p == id) return k;
    p = p * c;
  }
  return std::nullopt;
}

}  // namespace axial
