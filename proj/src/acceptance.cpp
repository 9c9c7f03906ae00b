#include "axial/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <numeric>

#include "axial/catalog.hpp"
#include "axial/highwater.hpp"
#include "axial/shapes.hpp"

namespace axial {

namespace {

// Every comparison below is exact equality of field elements; there is no
// floating tolerance anywhere in the suite.

struct Checker {
  int checks = 0;
  std::vector<std::string> failures;

  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
  template <class F>
  void guarded(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      (*this)(false, what + ": " + e.what());
    }
  }
};

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F5 = FieldSpec::prime(5);

Scalar q(long n, long d = 1) { return Scalar::from_frac(Q, n, d); }

struct Entry {
  std::string label;
  FieldSpec field;
};

std::vector<Entry> fusion_entries() {
  std::vector<Entry> e;
  for (const char* eta : {"1/2", "2", "-1", "1/3"}) e.push_back({std::string("3C[eta=") + eta + "]", Q});
  for (const char* d : {"-1", "0", "1", "-2"}) e.push_back({std::string("spin[delta=") + d + "]", Q});
  e.push_back({"clhat", Q});
  for (const char* a : {"1/4", "1/3", "2/5", "5"}) e.push_back({std::string("6A[alpha=") + a + "]", Q});
  for (const char* b : {"1/32", "2", "-1"}) e.push_back({std::string("6J[beta=") + b + "]", Q});
  e.push_back({"6Y", Q});
  for (const char* p : {"alpha=1/3,mu=-1", "alpha=-1,mu=-1", "alpha=1/3,mu=1"})
    e.push_back({std::string("iy3[") + p + "]", Q});
  // over Q the cover is H_n itself; over GF(5) the cover differs when 3 | n
  for (int n = 3; n <= 7; ++n) {
    e.push_back({"H[n=" + std::to_string(n) + "]", Q});
    e.push_back({"H[n=" + std::to_string(n) + ",cover=1]", F5});
  }
  return e;
}

std::string where(const Entry& e) { return e.label + " over " + e.field.str(); }

void fusion_suite(Checker& ck, std::uint64_t) {
  for (const Entry& e : fusion_entries())
    ck.guarded(where(e), [&] {
      CatalogEntry c = build_entry(e.label, e.field);
      ck(c.law.has_value(), where(e) + ": no declared law");
      for (std::size_t i = 0; i < c.algebra.axes().size(); ++i) {
        AxisReport r = verify_axis(c.algebra, c.algebra.axes()[i], *c.law, 0);
        ck(r.ok() && r.violations.empty(), where(e) + ": axis " + std::to_string(i) + " fails " + c.law->str());
      }
    });
}

void table_forms(Checker& ck, std::uint64_t) {
  Algebra a = build_6A(q(1, 4));
  ck(frobenius_check(a), "6A(1/4) Frobenius");
  auto g = [&](const std::string& x, const std::string& y) { return a.gram()(a.index_of(x), a.index_of(y)); };
  // printed expressions evaluated at alpha = 1/4
  struct Pin {
    const char *x, *y;
    long n, d;
  };
  for (const Pin& p : {Pin{"a0", "a0", 1, 1}, Pin{"c", "c", 1, 1}, Pin{"a0", "a1", 5, 256}, Pin{"a-2", "a3", 5, 256},
                       Pin{"a0", "a2", 13, 256}, Pin{"a0", "a3", 1, 8}, Pin{"a1", "c", 1, 8}, Pin{"a2", "z", 45, 128},
                       Pin{"c", "z", 0, 1}, Pin{"z", "z", 405, 128}})
    ck(g(p.x, p.y) == q(p.n, p.d), std::string("6A(1/4) (") + p.x + "," + p.y + ")");
  // the closed form for neighbours
  Scalar al = q(1, 4);
  Scalar t = q(4) * (q(2) * al - q(1));
  ck(g("a0", "a1") == -(al * al) * (q(3) * al - q(2)) / (t * t), "6A(1/4) (a_i,a_i+1) closed form");

  Algebra j = build_6J(q(1, 32));
  ck(frobenius_check(j), "6J(1/32) Frobenius");
  auto gj = [&](const std::string& x, const std::string& y) { return j.gram()(j.index_of(x), j.index_of(y)); };
  for (const Pin& p : {Pin{"a0", "a1", 1, 32}, Pin{"a0", "a2", 1, 64}, Pin{"a0", "a3", 1, 32}, Pin{"a0", "u", 1, 32},
                       Pin{"a0", "w", 1, 16}, Pin{"u", "w", 1, 32}, Pin{"w", "w", 65, 32}})
    ck(gj(p.x, p.y) == q(p.n, p.d), std::string("6J(1/32) (") + p.x + "," + p.y + ")");

  Algebra y = build_6Y(Q);
  ck(frobenius_check(y), "6Y Frobenius");
  for (const auto& u : y.axes())
    for (const auto& v : y.axes()) ck(y.form(u, v) == q(1), "6Y (a_i,a_j) = 1");
}

void axet_sizes(Checker& ck, std::uint64_t) {
  struct Case {
    std::string label;
    FieldSpec f;
    std::size_t size;
  };
  std::vector<Case> cases = {{"3C[eta=1/3]", Q, 3},      {"3C[eta=2]", Q, 3},         {"spin[delta=-1]", Q, 3},
                             {"spin[delta=0]", Q, 4},     {"spin[delta=1]", Q, 6},     {"spin2circ", F5, 5},
                             {"clhat", FieldSpec::prime(7), 7}, {"6A[alpha=1/4]", Q, 6}, {"6A[alpha=5]", Q, 6},
                             {"6J[beta=1/32]", Q, 6},     {"6J[beta=-1]", Q, 6},       {"6Y", Q, 6}};
  for (int n = 3; n <= 12; ++n) {
    cases.push_back({"H[n=" + std::to_string(n) + "]", Q, static_cast<std::size_t>(n)});
    cases.push_back({"H[n=" + std::to_string(n) + ",cover=1]", F5, static_cast<std::size_t>(n)});
  }
  for (const Case& c : cases)
    ck.guarded(c.label, [&] {
      CatalogEntry e = build_entry(c.label, c.f);
      ClosedAxes cl = closed_axes(e.algebra, e.algebra.axes(), *e.law, 256);
      ck(!cl.capped && cl.axes.size() == c.size,
         c.label + " over " + c.f.str() + ": " + std::to_string(cl.axes.size()) + " axes");
    });
}

void jordan_id(Checker& ck, std::uint64_t) {
  Algebra c = build_3C(q(1, 2));
  Vec x = c.basis_vector(0), y = c.basis_vector(1), z = c.basis_vector(2);
  JordanId id = jordan_identify(c, x, y);
  ck(id.label == "spin[delta=-1]", "(a,b) is S(-1), got " + id.label);
  ck(id.gamma && *id.gamma == q(-3, 8), "(a,b) gamma = -3/8");
  Vec one = q(2, 3) * (x + y + z);
  for (int i = 0; i < 3; ++i) ck(c.mul(one, c.basis_vector(i)) == c.basis_vector(i), "identity of 3C(1/2)");
  JordanId id2 = jordan_identify(c, x, Vec(one - y));
  ck(id2.label == "spin[delta=1]", "(a,1-b) is S(1), got " + id2.label);
  ck(id2.gamma && *id2.gamma == q(-1, 8), "(a,1-b) gamma = -1/8");
}

void highwater_dims(Checker& ck, std::uint64_t) {
  for (int n = 3; n <= 12; ++n) {
    ck.guarded("H_" + std::to_string(n), [&] {
      ck(build_Hn(n, Q, false).algebra.dim() == n + n / 2, "dim H_" + std::to_string(n));
      int extra = n % 3 == 0 ? 2 * (n / 6) : 0;
      ck(build_Hn(n, F5, true).algebra.dim() == n + n / 2 + extra, "dim cover H_" + std::to_string(n) + " in char 5");
    });
  }
  struct Case {
    int n;
    bool cover;
  };
  for (const Case& c : {Case{3, false}, Case{5, false}, Case{7, false}, Case{3, true}, Case{9, true}}) {
    std::string w = "H_2n^J n=" + std::to_string(c.n) + (c.cover ? " cover" : "");
    ck.guarded(w, [&] {
      HwJQuotient h = build_H2nJ(c.n, c.cover ? F5 : Q, c.cover);
      int up = (c.n + 1) / 2, up6 = (c.n + 5) / 6;
      int expect = c.n + up + 1 + (c.cover ? 2 * up6 : 0);
      ck(h.algebra.dim() == expect, w + ": dim " + std::to_string(h.algebra.dim()) + " != " + std::to_string(expect));
      ck(h.ideal == h.printed, w + ": ideal differs from the printed basis span");
    });
  }
}

void property_j(Checker& ck, std::uint64_t) {
  auto basis = [](const Algebra& a, const std::string& l) { return a.basis_vector(a.index_of(l)); };
  auto witness = [&](const std::string& w, const Algebra& a, const FusionLaw& law, const Vec& v) {
    ck.guarded(w, [&] {
      ShapeVerdict r = property_j_check(a, law, v);
      ck(r.ok, w + ": check fails: " + r.detail);
      ck(property_j_search(a, law) == std::optional<Vec>(v), w + ": search misses the witness");
    });
  };
  Algebra six = build_6A(q(1, 4));
  witness("6A(1/4), c", six, FusionLaw::monster(q(1, 4), q(1, 32)), basis(six, "c"));
  Algebra j = build_6J(q(1, 32));
  witness("6J(1/32), u", j, FusionLaw::monster(q(1, 16), q(1, 32)), basis(j, "u"));
  for (int n : {3, 5}) {
    HwJQuotient h = build_H2nJ(n, Q, false);
    witness("H_2n^J n=" + std::to_string(n) + ", a", h.algebra, FusionLaw::monster(q(2), q(1, 2)), h.a);
  }
  // 2 mu = 1 gives a 6-point axet
  for (Scalar alpha : {q(1, 3), q(3)}) {
    Algebra s = build_split_spin(q(1, 2), alpha);
    witness("split spin alpha=" + alpha.str() + ", z1", s, FusionLaw::monster(alpha, q(1, 2)), basis(s, "z1"));
  }

  auto fails = [&](const std::string& w, const Algebra& a, const FusionLaw& law) {
    ck.guarded(w, [&] {
      try {
        ck(!property_j_search(a, law), w + ": unexpected witness");
      } catch (const Error& e) {
        ck(e.kind() == ErrorKind::WrongAxet, w + ": " + e.what());
      }
    });
  };
  Algebra y = build_6Y(Q);
  FusionLaw l6y = FusionLaw::monster(q(1, 2), q(2));
  fails("6Y", y, l6y);
  for (int b = 0; b < y.dim(); ++b) ck(!property_j_check(y, l6y, y.basis_vector(b)).ok, "6Y basis vector passes");
  for (long d : {-1, 0, 1}) fails("S(" + std::to_string(d) + ")", build_spin(q(d)), FusionLaw::jordan(q(1, 2)));
}

void axet_classification(Checker& ck, std::uint64_t) {
  std::vector<Axet> all;
  for (int n = 1; n <= 24; ++n) all.push_back(xn(n));
  for (int k = 1; k <= 8; ++k) all.push_back(xprime(3 * k));
  for (int n = 1; n <= 23; ++n) all.push_back(x1(n));
  for (int n = 2; n <= 22; n += 2) all.push_back(x2(n));
  for (const auto& x : all)
    for (int a = 0; a < x.size(); ++a)
      for (int b = a; b < x.size(); ++b) {
        TwoGenClass c = classify_2gen(x, a, b);
        ck(is_isomorphism(subaxet(x, c.points), c.model, c.witness),
           "witness for <" + std::to_string(a) + "," + std::to_string(b) + "> in a " + std::to_string(x.size()) +
               "-point axet");
      }
  // <i,j> in X(n) is X(n / gcd(j - i, n))
  for (int n = 1; n <= 24; ++n)
    for (int j = 1; j < n; ++j) {
      TwoGenClass c = classify_2gen(xn(n), 0, j);
      ck(c.kind == TwoGenClass::Kind::Regular && c.n == n / std::gcd(j, n), "X(" + std::to_string(n) + ") pair class");
    }
  for (int n = 2; n <= 22; n += 2)
    for (int j = 1; j <= n; ++j) {
      TwoGenClass c = classify_2gen(x2(n), 0, j);
      ck(c.kind == TwoGenClass::Kind::Skew && c.n == 3, "X2(1+" + std::to_string(n) + ") pair through a");
    }
  for (int k = 1; k <= 3; ++k) {
    int m = 4 * k;
    std::vector<int> partner(m);
    for (int v = 0; v < m; ++v) partner[v] = v % 2 ? (v + 2 * k) % m : v;
    ck.guarded("fold X(" + std::to_string(m) + ")", [&] {
      Axet f = fold(xn(m), partner);
      ck(f.size() == 3 * k && find_isomorphism(f, xprime(3 * k)).has_value(), "fold X(" + std::to_string(m) + ")");
    });
  }
  ck(find_isomorphism(x2(2), xprime(3)).has_value(), "X2(1+2) = X'(3)");
  ck.guarded("X(6)/opposite", [&] {
    Axet f = factor_axet(xn(6), {0, 1, 2, 0, 1, 2});
    ck(find_isomorphism(f, xn(3)).has_value(), "X(6) modulo opposite pairs = X(3)");
  });
}

// a_{i+5} = 5a_{i+4} - 10a_{i+3} + 10a_{i+2} - 5a_{i+1} + a_i from unit vectors
std::vector<Scalar> iterate_recurrence(long n, const FieldSpec& f) {
  std::vector<std::vector<Scalar>> a;
  for (int i = 0; i < 5; ++i) {
    std::vector<Scalar> e(5, Scalar::zero(f));
    e[i] = Scalar::one(f);
    a.push_back(e);
  }
  const long c[5] = {1, -5, 10, -10, 5};
  while (static_cast<long>(a.size()) <= n) {
    std::vector<Scalar> next(5, Scalar::zero(f));
    std::size_t m = a.size();
    for (int k = 0; k < 5; ++k)
      for (int t = 0; t < 5; ++t) next[t] += Scalar::from_int(f, c[k]) * a[m - 5 + k][t];
    a.push_back(next);
  }
  return a[n];
}

void iy5(Checker& ck, std::uint64_t) {
  for (const FieldSpec& f : {Q, F5, FieldSpec::prime(7), FieldSpec::prime(11)})
    for (long n = 5; n <= 40; ++n) {
      auto c = iy5_coeffs(n, f);
      auto r = iterate_recurrence(n, f);
      ck(std::equal(c.begin(), c.end(), r.begin(), r.end()), "iy5 coefficients n=" + std::to_string(n) + " over " + f.str());
    }
  for (long p : {5, 7, 11, 13}) ck(iy5_axet_size(FieldSpec::prime(p)) == p, "iy5 axet over GF(" + std::to_string(p) + ")");
  ck(iy5_axet_size(FieldSpec::prime(3)) == 9, "iy5 axet over GF(3)");
  ck(!iy5_axet_size(Q), "iy5 axet over Q is infinite");
}

void norton_sakuma(Checker& ck, std::uint64_t) {
  FusionLaw law = FusionLaw::monster(q(1, 4), q(1, 32));
  Algebra a = build_6A(q(1, 4));
  Shape s = shape_of_algebra(a, law);
  int opp = 0, tri = 0;
  for (const auto& as : s.assignments) {
    if (as.orbit_rep.size() == 2) {
      ++opp;
      ck(as.label == "3C[eta=1/4]", "opposite pairs give " + as.key());
    } else {
      ++tri;
      ck(as.fingerprint && as.fingerprint->dim == 4, "X(3) class dimension");
    }
  }
  ck(opp == 1 && tri >= 1, "6A shape classes");

  auto basis = [&](const std::string& l) { return a.basis_vector(a.index_of(l)); };
  Algebra three_a = subalgebra_closure(a, {basis("a0"), basis("a2")}).algebra;
  Algebra target = with_axes(a, {basis("c"), basis("a0"), basis("a2"), basis("a-2")});
  Shape x13;
  x13.axet = x1(3);
  x13.law = law;
  for (const auto& v : shape_graph(x13.axet).vertices) {
    ShapeAssignment as;
    as.orbit_rep = v.points;
    as.generators = v.generators;
    as.label = v.points.size() == 2 ? "3C[eta=1/4]" : "3A";
    x13.assignments.push_back(as);
  }
  Realizers r{{"3A", three_a}};
  ShapeVerdict v = validate_shape(x13, r, law);
  ck(v.ok, "3A2A on X1(1+3) is a shape: " + v.detail);
  CompletionResult c = completion_check(x13, target, law, r);
  ck(c.ok && c.faithful, "6A completes 3A2A on X1(1+3): " + c.detail);
}

void seress_auto(Checker& ck, std::uint64_t seed) {
  for (const Entry& e : fusion_entries())
    ck.guarded(where(e), [&] {
      CatalogEntry c = build_entry(e.label, e.field);
      const Algebra& a = c.algebra;
      for (const auto& ax : a.axes()) ck(seress_check(a, ax, 200, seed), where(e) + ": Seress");
      ClosedAxes cl = closed_axes(a, a.axes(), *c.law, 64);
      Mat id = Mat::Identity(a.dim(), a.dim());
      bind_to(id, a.field());
      for (const auto& t : cl.tau) {
        ck(t * t == id, where(e) + ": tau not involutory");
        ck(is_automorphism(a, t), where(e) + ": tau not an automorphism");
      }
      if (cl.capped) return;  // infinite axet: nothing more to compare
      const int n = static_cast<int>(cl.axes.size());
      for (int g = 0; g < n; ++g)
        for (int x = 0; x < n; ++x) {
          int xg = cl.perms[g][x];
          ck(cl.perms[xg] == conjugate(cl.perms[x], cl.perms[g]), where(e) + ": permutation equivariance");
          ck(cl.tau[xg] == Mat(cl.tau[g] * cl.tau[x] * cl.tau[g]), where(e) + ": matrix equivariance");
        }
    });
}

struct Criterion {
  CriterionInfo info;
  std::function<void(Checker&, std::uint64_t)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {{1, "fusion"}, fusion_suite},
      {{2, "table-forms"}, table_forms},
      {{3, "axet-sizes"}, axet_sizes},
      {{4, "jordan-id"}, jordan_id},
      {{5, "highwater-dims"}, highwater_dims},
      {{6, "property-j"}, property_j},
      {{7, "axet-classification"}, axet_classification},
      {{8, "iy5"}, iy5},
      {{9, "norton-sakuma"}, norton_sakuma},
      {{10, "seress-automorphisms"}, seress_auto},
  };
  return c;
}

bool matches(const CriterionInfo& c, const std::string& filter) {
  if (filter.empty()) return true;
  if (filter == std::to_string(c.id)) return true;
  return std::string(c.name).find(filter) != std::string::npos;
}

}  // namespace

std::string CriterionResult::line(bool timing) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s %2d ", pass ? "PASS" : "FAIL", id);
  std::string s = buf + name + " (" + std::to_string(checks) + " checks";
  if (timing) {
    std::snprintf(buf, sizeof buf, ", %.2fs", seconds);
    s += buf;
  }
  s += ")";
  for (const auto& f : failures) s += "\n       " + f;
  return s;
}

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> v = [] {
    std::vector<CriterionInfo> r;
    for (const auto& c : criteria()) r.push_back(c.info);
    return r;
  }();
  return v;
}

std::vector<CriterionResult> run_acceptance(const std::string& filter, std::uint64_t seed) {
  std::vector<std::future<CriterionResult>> jobs;
  for (const auto& c : criteria()) {
    if (!matches(c.info, filter)) continue;
    jobs.push_back(std::async(std::launch::async, [&c, seed] {
      auto t0 = std::chrono::steady_clock::now();
      Checker ck;
      ck.guarded(c.info.name, [&] { c.run(ck, seed); });
      CriterionResult r;
      r.id = c.info.id;
      r.name = c.info.name;
      r.checks = ck.checks;
      r.failures = ck.failures;
      r.pass = ck.failures.empty() && ck.checks > 0;
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return r;
    }));
  }
  std::vector<CriterionResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace axial
