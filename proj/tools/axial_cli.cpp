#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "axial/acceptance.hpp"
#include "axial/catalog.hpp"
#include "axial/highwater.hpp"
#include "axial/json_io.hpp"

using namespace axial;

namespace {

constexpr int kOk = 0, kFailed = 1, kBadInput = 2;

// Thrown for input problems spotted by the tool itself.
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::ZeroDenominator:
    case ErrorKind::BadField:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::BadParameter:
    case ErrorKind::ForbiddenParameter:
    case ErrorKind::CharacteristicUnsupported:
    case ErrorKind::CharThree:
    case ErrorKind::NOddRequired:
    case ErrorKind::BadLabel:
    case ErrorKind::MissingForm:
    case ErrorKind::WrongAxet:
    case ErrorKind::MissingRealizer:
    case ErrorKind::TauMismatch:
      return true;
    default:
      return false;
  }
}

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  bool timing = false;
};

void emit(const Options& o, const Json& j) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(o.out, j);
  }
}

Json report(const std::string& command, Json inputs, Json verdicts) {
  Json r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["verdicts"] = std::move(verdicts);
  return r;
}

FusionLaw law_for(const Algebra& a, const std::string& text) {
  if (!text.empty()) return FusionLaw::parse(a.field(), text);
  auto al = a.param("alpha"), be = a.param("beta");
  if (al && be) return FusionLaw::monster(*al, *be);
  if (auto eta = a.param("eta")) return FusionLaw::jordan(*eta);
  if (a.param("delta")) return FusionLaw::jordan(Scalar::from_frac(a.field(), 1, 2));
  throw BadInput("--law is required: the file records no alpha/beta, eta or delta");
}

Vec parse_candidate(const Algebra& a, const std::string& text) {
  for (int i = 0; i < a.dim(); ++i)
    if (a.labels()[i] == text) return a.basis_vector(i);
  Json j;
  if (!text.empty() && text.front() == '[') {
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception&) {
      throw BadInput("candidate is not a JSON array");
    }
  } else {
    j = Json::array();
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) j.push_back(part);
  }
  return vec_from_json(j, a.field(), a.dim());
}

int cmd_build(const Options& o, const std::string& label, const std::string& field) {
  Algebra a = build(label, FieldSpec::parse(field));
  emit(o, algebra_to_json(a));
  return kOk;
}

int cmd_verify(const Options& o, const std::string& file, const std::string& law_text, int seress) {
  Json j = read_json_file(file);
  Algebra a = algebra_from_json(j, false);
  std::vector<Vec> axes = axes_from_json(j, a.field(), a.dim());
  if (axes.empty()) throw BadInput(file + " designates no axes");
  FusionLaw law = law_for(a, law_text);
  Json verdicts = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    AxisReport r = verify_axis(a, axes[i], law, seress, o.seed);
    Json e = axis_report_to_json(r, law);
    e["axis"] = i;
    all = all && r.ok() && r.seress_ok.value_or(true);
    verdicts.push_back(e);
  }
  emit(o, report("verify", {{"file", file}, {"law", law.str()}, {"seed", o.seed}}, {{"ok", all}, {"axes", verdicts}}));
  return all ? kOk : kFailed;
}

int cmd_axet(const Options& o, const std::string& file, const std::string& law_text, std::size_t cap) {
  Algebra a = algebra_from_json(read_json_file(file));
  FusionLaw law = law_for(a, law_text);
  ClosedAxes cl = closed_axes(a, a.axes(), law, cap);
  Json v;
  v["size"] = cl.axes.size();
  v["capped"] = cl.capped;
  if (!cl.capped) {
    Axet x = axet_of(cl);
    PermGroup miy = miyamoto_group(x);
    v["miyamoto_order"] = miy.order();
    Json lens = Json::array();
    for (const auto& orb : miy.orbits) lens.push_back(orb.size());
    v["orbit_lengths"] = lens;
    v["skew"] = is_skew(x);
    v["axet"] = axet_to_json(x);
  }
  Json ax = Json::array();
  for (const auto& x : cl.axes) ax.push_back(vec_to_json(x));
  v["axes"] = ax;
  emit(o, report("axet", {{"file", file}, {"law", law.str()}, {"cap", cap}}, v));
  return kOk;
}

int cmd_shape(const Options& o, const std::string& file, const std::string& law_text, std::size_t cap) {
  Algebra a = algebra_from_json(read_json_file(file));
  FusionLaw law = law_for(a, law_text);
  emit(o, shape_to_json(shape_of_algebra(a, law, cap)));
  return kOk;
}

int cmd_property_j(const Options& o, const std::string& file, const std::string& law_text, const std::string& cand) {
  Algebra a = algebra_from_json(read_json_file(file));
  FusionLaw law = law_for(a, law_text);
  Json v;
  bool ok;
  if (!cand.empty()) {
    Vec c = parse_candidate(a, cand);
    ShapeVerdict r = property_j_check(a, law, c);
    ok = r.ok;
    v["mode"] = "check";
    v["candidate"] = vec_to_json(c);
    v["ok"] = r.ok;
    v["detail"] = r.detail;
  } else {
    auto w = property_j_search(a, law);
    ok = w.has_value();
    v["mode"] = "search";
    v["ok"] = ok;
    v["witness"] = w ? vec_to_json(*w) : Json(nullptr);
  }
  emit(o, report("property-j", {{"file", file}, {"law", law.str()}}, v));
  return ok ? kOk : kFailed;
}

int cmd_highwater(const Options& o, int n, long p, bool cover, bool jq) {
  FieldSpec f = p == 0 ? FieldSpec::rational() : FieldSpec::prime(p);
  Algebra a;
  std::optional<Vec> extra;
  if (jq) {
    HwJQuotient h = build_H2nJ(n, f, cover);
    a = h.algebra;
    extra = h.a;
  } else {
    a = build_Hn(n, f, cover).algebra;
  }
  FusionLaw law = FusionLaw::monster(Scalar::from_int(f, 2), Scalar::from_frac(f, 1, 2));
  bool ok = true;
  Json fus = Json::array();
  for (const auto& x : a.axes()) {
    bool r = verify_axis(a, x, law, 0).ok();
    ok = ok && r;
    fus.push_back(r);
  }
  Json v;
  v["dim"] = a.dim();
  v["axes"] = a.axes().size();
  v["law"] = law.str();
  v["fusion_ok"] = fus;
  if (extra) {
    FusionLaw jl = FusionLaw::jordan(Scalar::from_int(f, 2));
    bool r = verify_axis(a, *extra, jl, 0).ok();
    ok = ok && r;
    v["a"] = vec_to_json(*extra);
    v["a_jordan_ok"] = r;
  }
  v["ok"] = ok;
  Json out;
  out["algebra"] = algebra_to_json(a);
  out["report"] = report("highwater", {{"n", n}, {"char", p}, {"cover", cover}, {"j_quotient", jq}}, v);
  emit(o, out);
  return ok ? kOk : kFailed;
}

int cmd_suite(const Options& o, const std::string& name, const std::string& filter) {
  if (name != "acceptance") throw BadInput("unknown suite '" + name + "'");
  auto results = run_acceptance(filter, o.seed);
  if (results.empty()) throw BadInput("no criterion matches '" + filter + "'");
  bool ok = true;
  for (const auto& r : results) {
    std::cout << r.line(o.timing) << "\n";
    ok = ok && r.pass;
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with axial algebras and axets"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "seed for randomised checks");

  std::string label, field = "Q", file, law, cand, suite, filter;
  std::size_t cap = 10000;
  int seress = 16, n = 0;
  long p = 0;
  bool cover = false, jq = false;

  auto* b = app.add_subcommand("build", "print the JSON of a catalog algebra");
  b->add_option("label", label, "e.g. 6A[alpha=1/4]")->required();
  b->add_option("--field", field, "Q, GF(p) or Q(sqrt d)");
  b->add_option("-o,--output", o.out);

  auto* v = app.add_subcommand("verify", "verify every designated axis");
  v->add_option("file", file)->required()->check(CLI::ExistingFile);
  v->add_option("--law", law, "M[alpha,beta] or J[eta]");
  v->add_option("--seress", seress, "random trials of the Seress test");
  v->add_option("-o,--output", o.out);

  auto* x = app.add_subcommand("axet", "close the designated axes under Miyamoto involutions");
  x->add_option("file", file)->required()->check(CLI::ExistingFile);
  x->add_option("--law", law);
  x->add_option("--cap", cap);
  x->add_option("-o,--output", o.out);

  auto* s = app.add_subcommand("shape", "shape of an algebra on its axet");
  s->add_option("file", file)->required()->check(CLI::ExistingFile);
  s->add_option("--law", law);
  s->add_option("--cap", cap);
  s->add_option("-o,--output", o.out);

  auto* j = app.add_subcommand("property-j", "check or search for a property (J) witness");
  j->add_option("file", file)->required()->check(CLI::ExistingFile);
  j->add_option("--law", law);
  j->add_option("--candidate", cand, "basis label, comma list or JSON array");
  j->add_option("-o,--output", o.out);

  auto* h = app.add_subcommand("highwater", "Highwater quotients");
  h->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  h->add_option("--char", p, "0 for Q");
  h->add_flag("--cover", cover);
  h->add_flag("--j-quotient", jq);
  h->add_option("-o,--output", o.out);

  auto* su = app.add_subcommand("suite", "run a named check suite");
  su->add_option("name", suite)->required();
  su->add_option("--filter", filter, "criterion number or name fragment");
  su->add_flag("--timing", o.timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*b) return cmd_build(o, label, field);
    if (*v) return cmd_verify(o, file, law, seress);
    if (*x) return cmd_axet(o, file, law, cap);
    if (*s) return cmd_shape(o, file, law, cap);
    if (*j) return cmd_property_j(o, file, law, cand);
    if (*h) return cmd_highwater(o, n, p, cover, jq);
    if (*su) return cmd_suite(o, suite, filter);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? kBadInput : kFailed;
  }
  return kBadInput;
}
