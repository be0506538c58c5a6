#include "gaugekit/scene.hpp"

#include <cmath>
#include <fstream>

#include "gaugekit/manifold.hpp"

namespace gaugekit {

namespace {

[[noreturn]] void violation(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) violation(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) violation(where, std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) violation(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) violation(where, "number is not finite");
  return v;
}

long long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) violation(where, "expected an integer");
  return j.get<long long>();
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) violation(where, "expected a string");
  return j.get<std::string>();
}

const Json& object_of(const Json& j, const std::string& where) {
  if (!j.is_object()) violation(where, "expected an object");
  return j;
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) violation(where, "expected an array");
  return j;
}

template <int N>
Eigen::Matrix<double, N, 1> vector_of(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != std::size_t(N)) violation(where, "expected " + std::to_string(N) + " numbers");
  Eigen::Matrix<double, N, 1> v;
  for (int k = 0; k < N; ++k) v[k] = number(j[std::size_t(k)], where);
  return v;
}

double number_or(const Json& obj, const char* key, double fallback, const std::string& where) {
  return obj.contains(key) ? number(obj[key], where + "." + key) : fallback;
}

long long integer_or(const Json& obj, const char* key, long long fallback, const std::string& where) {
  return obj.contains(key) ? integer(obj[key], where + "." + key) : fallback;
}

// Rethrows library errors raised while building an object as schema errors
// located at `where`, except for the codes that are meaningful as they are.
template <typename F>
auto located(const std::string& where, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaViolation) throw;
    throw Error(e.code(), where + ": " + e.detail());
  } catch (const nlohmann::json::exception& e) {
    violation(where, e.what());
  }
}

Manifold parse_manifold(const Json& j) {
  const std::string kind = text(field(j, "kind", "manifold"), "manifold.kind");
  if (kind == "flat") {
    if (!j.contains("lower") && !j.contains("upper")) return Manifold::flat();
    return Manifold::flat(vector_of<2>(field(j, "lower", "manifold"), "manifold.lower"),
                          vector_of<2>(field(j, "upper", "manifold"), "manifold.upper"));
  }
  if (kind == "sphere") return Manifold::sphere(number_or(j, "overlap_radius", 1.2, "manifold"));
  violation("manifold.kind", "unknown kind '" + kind + "'");
}

PrincipalBundle parse_bundle(const Json& j, const Manifold& base) {
  const GroupKind group = located("bundle.group", [&] { return group_kind_from_string(text(field(j, "group", "bundle"), "bundle.group")); });
  if (base.kind() == ManifoldKind::FlatChart) {
    if (j.contains("charge") || j.contains("transition")) violation("bundle", "a flat base takes no transition data");
    return PrincipalBundle::trivial(base, group);
  }
  const double overlap = base.sphere_model().overlap_radius;
  if (j.contains("charge") == j.contains("transition")) {
    violation("bundle", "a sphere bundle needs exactly one of 'charge' or 'transition'");
  }
  if (j.contains("charge")) {
    const int n = int(integer(j["charge"], "bundle.charge"));
    return PrincipalBundle::sphere(group, TransitionFunction::charge(group, n), overlap);
  }
  std::vector<GroupElement> table;
  const Json& t = array(j["transition"], "bundle.transition");
  for (std::size_t k = 0; k < t.size(); ++k) {
    const std::string where = "bundle.transition[" + std::to_string(k) + "]";
    table.push_back(located(where, [&] { return group_element_from_json(t[k]); }));
  }
  return located("bundle.transition",
                 [&] { return PrincipalBundle::sphere(group, TransitionFunction::sampled(group, table), overlap); });
}

FormValue form_value(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) violation(where, "expected 3 rows of 2 numbers");
  FormValue v;
  for (int r = 0; r < 3; ++r) v.row(r) = vector_of<2>(j[std::size_t(r)], where).transpose();
  return v;
}

ConnectionForm parse_connection(const Json& j, GroupKind group, const std::string& where) {
  const std::string type = text(field(j, "type", where), where + ".type");
  if (type == "zero") return ConnectionForm::zero(group);
  if (type == "constant") return ConnectionForm::constant(group, form_value(field(j, "value", where), where + ".value"));
  if (type == "monopole") return ConnectionForm::monopole(group, int(integer(field(j, "charge", where), where + ".charge")));
  if (type == "random_smooth") {
    return ConnectionForm::random_smooth(group, std::uint64_t(integer_or(j, "seed", 0, where)),
                                         number_or(j, "amplitude", 1.0, where), int(integer_or(j, "modes", 3, where)));
  }
  if (type == "random_sphere") {
    return ConnectionForm::random_sphere(group, int(integer_or(j, "charge", 0, where)),
                                         std::uint64_t(integer_or(j, "seed", 0, where)),
                                         number_or(j, "amplitude", 0.5, where), int(integer_or(j, "modes", 3, where)));
  }
  if (type == "grid") {
    const Chart chart = located(where + ".chart", [&] { return chart_from_string(text(field(j, "chart", where), where)); });
    std::vector<FormValue> values;
    const Json& vs = array(field(j, "values", where), where + ".values");
    for (std::size_t k = 0; k < vs.size(); ++k) values.push_back(form_value(vs[k], where + ".values[" + std::to_string(k) + "]"));
    return located(where, [&] {
      return ConnectionForm::grid(group, chart, vector_of<2>(field(j, "lower", where), where + ".lower"),
                                  vector_of<2>(field(j, "upper", where), where + ".upper"),
                                  int(integer(field(j, "nu", where), where + ".nu")),
                                  int(integer(field(j, "nv", where), where + ".nv")), values);
    });
  }
  violation(where + ".type", "unknown connection type '" + type + "'");
}

Path parse_path(const Json& j, const std::map<std::string, Path>& earlier, const std::string& where) {
  if (!j.is_object()) violation(where, "expected an object");
  const auto ref = [&](const Json& name) -> const Path& {
    const std::string n = text(name, where);
    const auto it = earlier.find(n);
    if (it == earlier.end()) violation(where, "unknown path '" + n + "' (paths may only refer to earlier ones)");
    return it->second;
  };
  if (j.contains("latitude")) {
    const double theta = number(j["latitude"], where + ".latitude");
    const int samples = int(integer_or(j, "samples", 64, where));
    return located(where, [&] { return latitude_loop(theta, samples, number_or(j, "phi_start", 0.0, where)); });
  }
  if (j.contains("reverse")) return path_reverse(ref(j["reverse"]));
  if (j.contains("compose")) {
    const Json& parts = array(j["compose"], where + ".compose");
    if (parts.empty()) violation(where, "empty composition");
    Path out = ref(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k) out = located(where, [&] { return path_compose(out, ref(parts[k])); });
    return out;
  }
  const Interpolation interp = located(where + ".interpolation", [&] {
    return interpolation_from_string(j.contains("interpolation") ? text(j["interpolation"], where) : "linear");
  });
  std::vector<ChartPoint> samples;
  const Json& pts = array(field(j, "points", where), where + ".points");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const std::string w = where + ".points[" + std::to_string(k) + "]";
    const Chart chart = located(w, [&] { return chart_from_string(text(field(pts[k], "chart", w), w + ".chart")); });
    samples.push_back({chart, vector_of<2>(field(pts[k], "coords", w), w + ".coords")});
  }
  if (!j.contains("params")) return located(where, [&] { return Path(samples, interp); });
  std::vector<double> params;
  for (const auto& v : array(j["params"], where + ".params")) params.push_back(number(v, where + ".params"));
  return located(where, [&] { return Path(samples, params, interp); });
}

CylinderExpr parse_expr(const Json& j, const std::string& where) {
  const std::string op = text(field(j, "op", where), where + ".op");
  const auto arg = [&](std::size_t k, std::size_t count) {
    const Json& args = array(field(j, "args", where), where + ".args");
    if (args.size() != count) violation(where, "'" + op + "' takes " + std::to_string(count) + " arguments");
    return parse_expr(args[k], where + ".args[" + std::to_string(k) + "]");
  };
  if (op == "slot") return CylinderExpr::slot(int(integer(field(j, "index", where), where + ".index")));
  if (op == "constant") return CylinderExpr::constant(number(field(j, "value", where), where + ".value"));
  if (op == "inverse") return CylinderExpr::inverse(arg(0, 1));
  if (op == "trace") return CylinderExpr::real_trace(arg(0, 1));
  if (op == "product") return CylinderExpr::product(arg(0, 2), arg(1, 2));
  if (op == "sum") return CylinderExpr::sum(arg(0, 2), arg(1, 2));
  if (op == "scalar_product") return CylinderExpr::scalar_product(arg(0, 2), arg(1, 2));
  violation(where + ".op", "unknown operator '" + op + "'");
}

Cl03d cl_from_json(const Json& j, const std::string& where) {
  const Eigen::Matrix<double, 8, 1> c = vector_of<8>(j, where);
  return Cl03d(Quaterniond(c[0], c[1], c[2], c[3]), Quaterniond(c[4], c[5], c[6], c[7]));
}

SceneLoop parse_loop(const Json& j, const std::string& where) {
  const std::string kind = text(field(j, "kind", where), where + ".kind");
  const std::size_t n = std::size_t(integer_or(j, "intervals", static_cast<long long>(kMinLoopIntervals), where));
  if (j.contains("samples") == j.contains("generator")) violation(where, "a loop needs exactly one of 'samples' or 'generator'");
  if (j.contains("samples")) {
    const Json& s = array(j["samples"], where + ".samples");
    const auto at = [&](std::size_t k) { return where + ".samples[" + std::to_string(k) + "]"; };
    return located(where, [&]() -> SceneLoop {
      if (kind == "icl") {
        std::vector<Cl03d> v;
        for (std::size_t k = 0; k < s.size(); ++k) v.push_back(cl_from_json(s[k], at(k)));
        return IclLoop(v);
      }
      if (kind == "fiber_s1") {
        std::vector<double> v;
        for (std::size_t k = 0; k < s.size(); ++k) v.push_back(number(s[k], at(k)));
        return PhaseLoop(v);
      }
      if (kind == "fiber_s3") {
        std::vector<Versord> v;
        for (std::size_t k = 0; k < s.size(); ++k) {
          const Eigen::Vector4d q = vector_of<4>(s[k], at(k));
          v.emplace_back(Quaterniond(q[0], q[1], q[2], q[3]));
        }
        return VersorLoop(v);
      }
      violation(where + ".kind", "unknown loop kind '" + kind + "'");
    });
  }
  const Json& g = j["generator"];
  const std::string gw = where + ".generator";
  const std::string type = text(field(g, "type", gw), gw + ".type");
  return located(gw, [&]() -> SceneLoop {
    if (kind == "icl" && type == "constant") return icl_constant_loop(cl_from_json(field(g, "value", gw), gw + ".value"), n);
    if (kind == "icl" && type == "winding") return icl_winding_loop(int(integer(field(g, "winding", gw), gw)), n);
    if (kind == "icl" && type == "random_smooth") return icl_random_loop(std::uint64_t(integer_or(g, "seed", 0, gw)), n);
    if (kind == "fiber_s1" && type == "winding") return phase_winding_loop(int(integer(field(g, "winding", gw), gw)), n);
    if (kind == "fiber_s3" && type == "circle") return versor_circle_loop(vector_of<3>(field(g, "axis", gw), gw + ".axis"), n);
    violation(gw, "no generator '" + type + "' for loop kind '" + kind + "'");
  });
}

}  // namespace

Json to_json(const GroupElement& g) {
  if (g.kind() == GroupKind::U1) return Json{{"kind", "U1"}, {"theta", g.theta()}};
  const Versord& v = g.versor();
  return Json{{"kind", "SU2"}, {"w", v.w()}, {"x", v.x()}, {"y", v.y()}, {"z", v.z()}};
}

GroupElement group_element_from_json(const Json& j) {
  const GroupKind kind = group_kind_from_string(text(field(j, "kind", "element"), "element.kind"));
  if (kind == GroupKind::U1) return GroupElement::phase(number(field(j, "theta", "element"), "element.theta"));
  const Quaterniond q(number(field(j, "w", "element"), "element.w"), number(field(j, "x", "element"), "element.x"),
                      number(field(j, "y", "element"), "element.y"), number(field(j, "z", "element"), "element.z"));
  if (std::abs(q.norm() - 1) > 1e-9) violation("element", "SU2 element is not a unit quaternion");
  return GroupElement::from_quaternion(GroupKind::SU2, q);
}

Json to_json(const Path& p) {
  Json points = Json::array();
  for (const auto& s : p.samples()) {
    points.push_back(Json{{"chart", to_string(s.chart)}, {"coords", {s.coords.x(), s.coords.y()}}});
  }
  return Json{{"interpolation", to_string(p.interpolation())}, {"points", points}};
}

Json to_json(const GlobalSection& s) {
  Json rings = Json::array();
  for (const auto& ring : s.rings) {
    Json r = Json::array();
    for (const auto& g : ring) r.push_back(to_json(g));
    rings.push_back(std::move(r));
  }
  return Json{{"group", to_string(s.group)}, {"north", "identity"}, {"radii", s.radii}, {"rings", rings}};
}

Scene parse_scene(const Json& doc) {
  if (!doc.is_object()) violation("scene", "expected an object");
  if (integer(field(doc, "schema_version", "scene"), "schema_version") != kSceneSchemaVersion) {
    violation("schema_version", "unsupported version (expected " + std::to_string(kSceneSchemaVersion) + ")");
  }
  static const std::vector<std::string> known{"schema_version", "manifold", "bundle", "connections", "paths",
                                              "cylinders", "loops", "tolerance", "steps", "seed", "description"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) violation("scene", "unknown field '" + key + "'");
  }
  Scene scene;
  if (doc.contains("bundle")) {
    const Manifold base = parse_manifold(field(doc, "manifold", "scene"));
    scene.bundle = parse_bundle(doc["bundle"], base);
  } else if (doc.contains("manifold")) {
    violation("scene", "a manifold needs a bundle");
  }
  if (doc.contains("connections")) {
    if (!scene.bundle) violation("connections", "connections need a bundle");
    for (const auto& [name, spec] : object_of(doc["connections"], "connections").items()) {
      const std::string where = "connections." + name;
      scene.connections.emplace(name, parse_connection(spec, scene.bundle->group(), where));
    }
  }
  if (doc.contains("paths")) {
    for (const auto& [name, spec] : object_of(doc["paths"], "paths").items()) {
      const std::string where = "paths." + name;
      Path p = parse_path(spec, scene.paths, where);
      if (scene.bundle) located(where, [&] { scene.bundle->base().validate(p); return 0; });
      scene.paths.emplace(name, std::move(p));
    }
  }
  if (doc.contains("cylinders")) {
    for (const auto& [name, spec] : object_of(doc["cylinders"], "cylinders").items()) {
      const std::string where = "cylinders." + name;
      CylinderSpec c{{}, parse_expr(field(spec, "expr", where), where + ".expr")};
      for (const auto& ref : array(field(spec, "paths", where), where + ".paths")) {
        const std::string n = text(ref, where + ".paths");
        const auto it = scene.paths.find(n);
        if (it == scene.paths.end()) violation(where, "unknown path '" + n + "'");
        c.paths.push_back(it->second);
      }
      located(where, [&] { return c.expr.type(c.paths.size()); });
      scene.cylinders.emplace(name, std::move(c));
    }
  }
  if (doc.contains("loops")) {
    for (const auto& [name, spec] : object_of(doc["loops"], "loops").items()) scene.loops.emplace(name, parse_loop(spec, "loops." + name));
  }
  if (doc.contains("tolerance")) scene.tolerance = number(doc["tolerance"], "tolerance");
  if (doc.contains("steps")) {
    const long long s = integer(doc["steps"], "steps");
    if (s < 1) violation("steps", "must be positive");
    scene.steps = int(s);
  }
  if (doc.contains("seed")) scene.seed = std::uint64_t(integer(doc["seed"], "seed"));
  return scene;
}

Scene load_scene(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open scene '" + file + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    violation(file, e.what());
  }
  return parse_scene(doc);
}

}  // namespace gaugekit
