#include "axial/json_io.hpp"

#include <fstream>

namespace axial {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Scalar scalar_from(const Json& j, const FieldSpec& f, const std::string& where) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
  bad(where + ": scalar must be a string or an integer");
}

int int_from(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + ": expected an integer");
  return j.get<int>();
}

Perm perm_from(const Json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) bad(where + ": permutation of the wrong length");
  Perm p;
  for (const auto& e : j) p.push_back(int_from(e, where));
  std::vector<bool> seen(n, false);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) bad(where + ": not a permutation");
    seen[x] = true;
  }
  return p;
}

std::vector<int> points_from(const Json& j, int n, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected a list of points");
  std::vector<int> r;
  for (const auto& e : j) {
    int x = int_from(e, where);
    if (x < 0 || x >= n) bad(where + ": point out of range");
    r.push_back(x);
  }
  return r;
}

Json ints(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

}  // namespace

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i].str());
  return a;
}

Vec vec_from_json(const Json& j, const FieldSpec& f, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) bad("vector must have " + std::to_string(dim) + " coordinates");
  Vec v = zero_vector(f, dim);
  for (int i = 0; i < dim; ++i) v[i] = scalar_from(j[i], f, "vector");
  return v;
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["field"] = a.field().str();
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  Json sc = Json::array();
  auto cs = a.structure_constants();
  std::sort(cs.begin(), cs.end(), [](const StructureConstant& x, const StructureConstant& y) {
    return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
  });
  for (const auto& c : cs)
    if (c.i <= c.j && !c.c.is_zero()) sc.push_back(Json::array({c.i, c.j, c.k, c.c.str()}));
  j["sc"] = sc;
  if (a.has_form()) {
    Json g = Json::array();
    for (int r = 0; r < a.dim(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < a.dim(); ++c) row.push_back(a.gram()(r, c).str());
      g.push_back(row);
    }
    j["gram"] = g;
  } else {
    j["gram"] = nullptr;
  }
  Json ax = Json::array();
  for (const auto& v : a.axes()) ax.push_back(vec_to_json(v));
  j["axes"] = ax;
  Json p = Json::object();
  for (const auto& [k, v] : a.params()) p[k] = v.str();
  j["params"] = p;
  return j;
}

std::vector<Vec> axes_from_json(const Json& j, const FieldSpec& f, int dim) {
  std::vector<Vec> axes;
  if (!j.contains("axes")) return axes;
  const Json& ax = j.at("axes");
  if (!ax.is_array()) bad("axes must be a list");
  for (const auto& v : ax) axes.push_back(vec_from_json(v, f, dim));
  return axes;
}

Algebra algebra_from_json(const Json& j, bool check_axes) {
  const Json& fj = field_of(j, "field");
  if (!fj.is_string()) bad("field must be a string");
  FieldSpec f = FieldSpec::parse(fj.get<std::string>());
  const Json& basis = field_of(j, "basis");
  if (!basis.is_array()) bad("basis must be a list of labels");
  std::vector<std::string> labels;
  for (const auto& l : basis) {
    if (!l.is_string()) bad("basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const int n = static_cast<int>(labels.size());
  if (j.contains("dim") && int_from(j.at("dim"), "dim") != n) bad("dim does not match the basis length");
  Algebra a(f, labels);
  const Json& sc = field_of(j, "sc");
  if (!sc.is_array()) bad("sc must be a list");
  for (const auto& e : sc) {
    if (!e.is_array() || e.size() != 4) bad("sc entries are [i, j, k, scalar]");
    int i = int_from(e[0], "sc"), jj = int_from(e[1], "sc"), k = int_from(e[2], "sc");
    if (i < 0 || jj < 0 || k < 0 || i >= n || jj >= n || k >= n) bad("sc index out of range");
    if (i > jj) bad("sc entries need i <= j");
    a.add_constant(i, jj, k, scalar_from(e[3], f, "sc"));
  }
  if (j.contains("gram") && !j.at("gram").is_null()) {
    const Json& g = j.at("gram");
    if (!g.is_array() || static_cast<int>(g.size()) != n) bad("gram must be a dim x dim matrix");
    Mat m = Mat::Zero(n, n);
    for (int r = 0; r < n; ++r) {
      Vec row = vec_from_json(g[r], f, n);
      for (int c = 0; c < n; ++c) m(r, c) = row[c];
    }
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < r; ++c)
        if (m(r, c) != m(c, r)) bad("gram must be symmetric");
    a.set_gram(m);
  }
  if (check_axes) a.set_axes(axes_from_json(j, f, n));
  if (j.contains("params")) {
    const Json& p = j.at("params");
    if (!p.is_object()) bad("params must be an object");
    for (const auto& [k, v] : p.items()) a.set_param(k, scalar_from(v, f, "params." + k));
  }
  return a;
}

Json axet_to_json(const Axet& x) {
  Json j;
  j["points"] = x.labels();
  Json t = Json::array();
  for (const auto& p : x.taus()) t.push_back(ints(p));
  j["tau"] = t;
  Json e = Json::array();
  for (const auto& p : x.extra_gens()) e.push_back(ints(p));
  j["extra_gens"] = e;
  return j;
}

Axet axet_from_json(const Json& j) {
  const Json& pts = field_of(j, "points");
  if (!pts.is_array()) bad("points must be a list");
  std::vector<std::string> labels;
  for (const auto& l : pts) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  const int n = static_cast<int>(labels.size());
  const Json& taus = field_of(j, "tau");
  if (!taus.is_array() || static_cast<int>(taus.size()) != n) bad("tau needs one permutation per point");
  std::vector<Perm> tau;
  for (const auto& p : taus) tau.push_back(perm_from(p, n, "tau"));
  std::vector<Perm> extra;
  if (j.contains("extra_gens")) {
    if (!j.at("extra_gens").is_array()) bad("extra_gens must be a list");
    for (const auto& p : j.at("extra_gens")) extra.push_back(perm_from(p, n, "extra_gens"));
  }
  return Axet(labels, tau, extra);
}

Json fingerprint_to_json(const Fingerprint& f) {
  Json j;
  j["dim"] = f.dim;
  j["axet_size"] = f.axet_size ? Json(*f.axet_size) : Json(nullptr);
  Json e = Json::array();
  for (const auto& [l, m] : f.eigen_profile) e.push_back(Json::array({l.str(), m}));
  j["eigen_profile"] = e;
  if (f.form_values) {
    Json v = Json::array();
    for (const auto& s : *f.form_values) v.push_back(s.str());
    j["form_values"] = v;
  } else {
    j["form_values"] = nullptr;
  }
  j["gamma"] = f.gamma ? Json(f.gamma->str()) : Json(nullptr);
  j["key"] = f.str();
  return j;
}

namespace {

Fingerprint fingerprint_from_json(const Json& j, const FieldSpec& f) {
  Fingerprint fp;
  fp.dim = int_from(field_of(j, "dim"), "fingerprint.dim");
  if (j.contains("axet_size") && !j.at("axet_size").is_null()) fp.axet_size = int_from(j.at("axet_size"), "axet_size");
  if (j.contains("eigen_profile")) {
    for (const auto& e : j.at("eigen_profile")) {
      if (!e.is_array() || e.size() != 2) bad("eigen_profile entries are [eigenvalue, multiplicity]");
      fp.eigen_profile.emplace_back(scalar_from(e[0], f, "eigen_profile"), int_from(e[1], "eigen_profile"));
    }
  }
  if (j.contains("form_values") && !j.at("form_values").is_null()) {
    std::vector<Scalar> v;
    for (const auto& e : j.at("form_values")) v.push_back(scalar_from(e, f, "form_values"));
    if (v.size() != 3) bad("form_values has three entries");
    fp.form_values = v;
  }
  if (j.contains("gamma") && !j.at("gamma").is_null()) fp.gamma = scalar_from(j.at("gamma"), f, "gamma");
  return fp;
}

}  // namespace

Json shape_to_json(const Shape& s) {
  Json j;
  j["axet"] = axet_to_json(s.axet);
  Json as = Json::array();
  for (const auto& a : s.assignments) {
    Json e;
    e["orbit_rep"] = ints(a.orbit_rep);
    if (!a.label.empty())
      e["label"] = a.label;
    else if (a.fingerprint)
      e["label"] = Json{{"fingerprint", fingerprint_to_json(*a.fingerprint)}};
    e["generators"] = ints(a.generators);
    if (!a.label.empty() && a.fingerprint) e["fingerprint"] = fingerprint_to_json(*a.fingerprint);
    as.push_back(e);
  }
  j["assignments"] = as;
  if (s.law) j["law"] = s.law->str();
  return j;
}

Shape shape_from_json(const Json& j, const FieldSpec& f) {
  Shape s;
  s.axet = axet_from_json(field_of(j, "axet"));
  const int n = s.axet.size();
  const Json& as = field_of(j, "assignments");
  if (!as.is_array()) bad("assignments must be a list");
  for (const auto& e : as) {
    ShapeAssignment a;
    a.orbit_rep = points_from(field_of(e, "orbit_rep"), n, "orbit_rep");
    const Json& l = field_of(e, "label");
    if (l.is_string()) {
      a.label = l.get<std::string>();
      if (e.contains("fingerprint")) a.fingerprint = fingerprint_from_json(e.at("fingerprint"), f);
    } else {
      a.fingerprint = fingerprint_from_json(field_of(l, "fingerprint"), f);
    }
    if (e.contains("generators")) {
      a.generators = points_from(e.at("generators"), n, "generators");
    } else if (a.orbit_rep.size() >= 2) {
      a.generators = {a.orbit_rep[0], a.orbit_rep[1]};
    }
    if (a.generators.size() != 2) bad("an assignment needs two generators");
    s.assignments.push_back(a);
  }
  if (j.contains("law")) {
    if (!j.at("law").is_string()) bad("law must be a string");
    s.law = FusionLaw::parse(f, j.at("law").get<std::string>());
  }
  return s;
}

Json axis_report_to_json(const AxisReport& r, const FusionLaw& law) {
  Json j;
  j["ok"] = r.ok();
  j["idempotent"] = r.idempotent;
  j["semisimple"] = r.semisimple;
  j["primitive"] = r.primitive;
  j["fusion_ok"] = r.fusion_ok;
  Json d = Json::object();
  std::vector<int> dims = r.dims();
  for (std::size_t i = 0; i < dims.size(); ++i) d[law.eigenvalue(static_cast<int>(i)).str()] = dims[i];
  j["eigenspace_dims"] = d;
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e;
    e["lambda"] = law.eigenvalue(x.lambda).str();
    e["mu"] = law.eigenvalue(x.mu).str();
    e["u"] = vec_to_json(x.u);
    e["v"] = vec_to_json(x.v);
    e["product"] = vec_to_json(x.product);
    if (x.offending >= 0) {
      e["offending"] = law.eigenvalue(x.offending).str();
      e["component"] = vec_to_json(x.component);
    }
    v.push_back(e);
  }
  j["violations"] = v;
  j["seress_ok"] = r.seress_ok ? Json(*r.seress_ok) : Json(nullptr);
  j["graded"] = r.miyamoto.has_value();
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace axial
