#include "gaugekit/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "gaugekit/generalized_connection.hpp"
#include "gaugekit/scene.hpp"
#include "gaugekit/transport.hpp"

namespace gaugekit::cli {

namespace {

struct Options {
  std::string command;
  int steps = 10000;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  std::string scene_file;
  std::string out_file;
  std::string connection, path, reference, cylinder, loop, corrupt;
  std::vector<std::string> paths;
  int trials = 100;
  int samples = 256;
  bool tabulated = false;
  bool steps_given = false, tol_given = false, seed_given = false;
};

struct Outcome {
  Json doc;
  int code = kExitOk;
};

template <typename Map>
const typename Map::mapped_type& pick(const Map& map, const std::string& name, const char* what, const char* flag,
                                      ErrorCode missing = ErrorCode::InvalidArgument) {
  if (name.empty()) {
    if (map.size() == 1) return map.begin()->second;
    throw Error(ErrorCode::InvalidArgument,
                std::string("scene has ") + std::to_string(map.size()) + " " + what + "s; choose one with " + flag);
  }
  const auto it = map.find(name);
  if (it == map.end()) throw Error(missing, std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

template <typename Map>
std::string pick_name(const Map& map, const std::string& name) {
  return name.empty() && map.size() == 1 ? map.begin()->first : name;
}

const PrincipalBundle& need_bundle(const Scene& s) {
  if (!s.bundle) throw Error(ErrorCode::SchemaViolation, "scene has no bundle");
  return *s.bundle;
}

Json report_json(const ConsistencyReport& r) {
  Json laws = Json::array();
  for (const auto& l : r.laws) {
    laws.push_back(Json{{"law", l.law}, {"max_deviation", l.max_deviation}, {"pass", l.pass}, {"checks", l.checks}});
  }
  return laws;
}

Outcome clifford_table() {
  Json table = Json::array();
  bool exact = true;
  for (int a = 0; a < 8; ++a) {
    Json row = Json::array();
    for (int b = 0; b < 8; ++b) {
      const Cl03d p = cl_blade<double>(a) * cl_blade<double>(b);
      Json entry = nullptr;
      for (int c = 0; c < 8 && entry.is_null(); ++c) {
        for (int sign : {1, -1}) {
          if (p.coeffs() == (cl_blade<double>(c) * double(sign)).coeffs()) {
            entry = Json{{"sign", sign}, {"blade", kBladeNames[std::size_t(c)]}};
            break;
          }
        }
      }
      if (entry.is_null()) {
        exact = false;
        entry = Json{{"coefficients", std::vector<double>(p.coeffs().data(), p.coeffs().data() + 8)}};
      }
      row.push_back(entry);
    }
    table.push_back(row);
  }
  bool anticommute = true, squares = true;
  for (int n = 1; n <= 3; ++n) {
    const Cl03d en = cl_generator<double>(n);
    squares = squares && (en * en).coeffs() == (Cl03d::Identity() * -1.0).coeffs();
    for (int m = 1; m <= 3; ++m) {
      if (m == n) continue;
      const Cl03d em = cl_generator<double>(m);
      anticommute = anticommute && (en * em + em * en).coeffs() == Cl03d::Zero().coeffs();
    }
  }
  const bool pass = exact && anticommute && squares;
  Json doc{{"command", "clifford-table"}, {"blades", kBladeNames}, {"table", table},
           {"checks", {{"closed_on_blades", exact}, {"anticommutation", anticommute}, {"generator_squares", squares}}},
           {"pass", pass}};
  return {doc, pass ? kExitOk : kExitCheckFailed};
}

Outcome run_command(const Options& o) {
  if (o.command == "clifford-table") return clifford_table();
  const Scene scene = load_scene(o.scene_file);
  const int steps = o.steps_given ? o.steps : scene.steps.value_or(o.steps);
  const double tol = o.tol_given ? o.tol : scene.tolerance.value_or(o.tol);
  const std::uint64_t seed = o.seed_given ? o.seed : scene.seed.value_or(o.seed);
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "--steps must be positive");
  Json doc{{"command", o.command}};

  const auto connection = [&]() -> const ConnectionForm& {
    doc["connection"] = pick_name(scene.connections, o.connection);
    return pick(scene.connections, o.connection, "connection", "--connection");
  };
  const auto path = [&]() -> const Path& {
    doc["path"] = pick_name(scene.paths, o.path);
    return pick(scene.paths, o.path, "path", "--path", ErrorCode::UnknownPath);
  };

  if (o.command == "transport" || o.command == "holonomy") {
    const PrincipalBundle& bundle = need_bundle(scene);
    const ConnectionForm& conn = connection();
    const Path& p = path();
    doc["steps"] = steps;
    const GroupElement g = o.command == "holonomy" ? loop_holonomy(conn, bundle, p, steps) : transport(conn, bundle, p, steps);
    doc["element"] = to_json(g);
    if (o.command == "holonomy") doc["trace"] = normalized_real_trace(g);
    return {doc};
  }
  if (o.command == "compare") {
    const PrincipalBundle& bundle = need_bundle(scene);
    const ConnectionForm& conn = connection();
    const std::string ref = o.reference.empty() ? "canonical_flat" : o.reference;
    const ConnectionForm reference =
        ref == "canonical_flat" ? canonical_flat(bundle) : pick(scene.connections, ref, "connection", "--reference");
    doc["reference"] = ref;
    const Path& p = path();
    doc["steps"] = steps;
    doc["element"] = to_json(compare_connections(conn, reference, bundle, p, steps));
    return {doc};
  }
  if (o.command == "check-consistency") {
    const PrincipalBundle& bundle = need_bundle(scene);
    const ConnectionForm& conn = connection();
    std::vector<Path> paths;
    std::vector<std::string> names = o.paths;
    if (names.empty()) {
      for (const auto& [name, p] : scene.paths) names.push_back(name);
    }
    for (const auto& n : names) paths.push_back(pick(scene.paths, n, "path", "--paths", ErrorCode::UnknownPath));
    const HolonomyBacked backed(conn, bundle, steps);
    ConsistencyReport report;
    if (o.tabulated) {
      std::vector<std::pair<Path, GroupElement>> generators;
      for (const auto& p : paths) generators.emplace_back(p, backed.assign(p));
      TabulatedConnection table = TabulatedConnection::generate(bundle.group(), generators);
      if (!o.corrupt.empty()) {
        const Path& bad = pick(scene.paths, o.corrupt, "path", "--corrupt", ErrorCode::UnknownPath);
        const GroupElement kick = bundle.group() == GroupKind::U1 ? GroupElement::phase(0.1)
                                                                  : GroupElement(Versord::Exp(Eigen::Vector3d(0.1, 0, 0)));
        table = table.with_entry(bad, kick * table.assign(bad));
        doc["corrupted"] = o.corrupt;
      }
      doc["representation"] = "tabulated";
      report = consistency_check(table, paths, tol);
    } else {
      doc["representation"] = "holonomy";
      report = consistency_check(backed, paths, tol);
    }
    doc["paths"] = names;
    doc["tol"] = tol;
    doc["laws"] = report_json(report);
    doc["pass"] = report.pass();
    return {doc, report.pass() ? kExitOk : kExitCheckFailed};
  }
  if (o.command == "winding") {
    doc["winding"] = equator_winding(need_bundle(scene));
    return {doc};
  }
  if (o.command == "trivial") {
    const TrivialityVerdict v = triviality_test(need_bundle(scene), o.samples);
    doc["outcome"] = v.outcome == Triviality::Trivial ? "trivial" : "nontrivial";
    if (v.winding) doc["winding"] = *v.winding;
    if (v.section) {
      doc["residual"] = v.residual;
      doc["section"] = to_json(*v.section);
    }
    return {doc};
  }
  if (o.command == "reduce") {
    doc["loop"] = pick_name(scene.loops, o.loop);
    const SceneLoop& loop = pick(scene.loops, o.loop, "loop", "--loop");
    ReductionVerdict v;
    if (const auto* icl = std::get_if<IclLoop>(&loop)) {
      v = reduce_pipeline(*icl);
    } else if (const auto* s1 = std::get_if<PhaseLoop>(&loop)) {
      v = section_glue_test(*s1);
    } else {
      v = section_glue_test(std::get<VersorLoop>(loop));
    }
    doc["outcome"] = v.outcome == ReductionOutcome::Reduced ? "reduced" : "obstructed";
    if (v.obstruction) doc["obstruction"] = *v.obstruction;
    if (v.section) {
      doc["residual"] = v.residual;
      doc["section"] = to_json(*v.section);
    }
    if (v.reduced_transition) {
      Json t = Json::array();
      for (const auto& s : v.reduced_transition->samples()) t.push_back(to_json(GroupElement(s)));
      doc["reduced_transition"] = t;
    }
    return {doc};
  }
  if (o.command == "cylinder" || o.command == "gauge-test") {
    const PrincipalBundle& bundle = need_bundle(scene);
    const ConnectionForm& conn = connection();
    doc["cylinder"] = pick_name(scene.cylinders, o.cylinder);
    const CylinderSpec& spec = pick(scene.cylinders, o.cylinder, "cylinder", "--cylinder");
    doc["steps"] = steps;
    if (o.command == "cylinder") {
      std::optional<ConnectionForm> reference;
      if (!o.reference.empty()) {
        reference = o.reference == "canonical_flat" ? canonical_flat(bundle)
                                                    : pick(scene.connections, o.reference, "connection", "--reference");
      }
      doc["frame"] = reference ? "reference:" + o.reference : std::string("trivialization");
      doc["value"] = evaluate_cylinder(spec, conn, bundle, steps, reference);
      return {doc};
    }
    if (o.trials < 1) throw Error(ErrorCode::InvalidArgument, "--trials must be positive");
    const double dev = gauge_invariance_test(spec, conn, bundle, o.trials, seed, steps);
    doc["trials"] = o.trials;
    doc["seed"] = seed;
    doc["max_deviation"] = dev;
    doc["tol"] = tol;
    doc["pass"] = dev <= tol;
    return {doc, dev <= tol ? kExitOk : kExitCheckFailed};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + o.command + "'");
}

Json error_record(const std::string& command, std::string_view code, const std::string& message) {
  Json doc;
  if (!command.empty()) doc["command"] = command;
  doc["error"] = Json{{"code", code}, {"message", message}};
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Gauge geometry toolkit: transport, holonomy, triviality, reduction and cylinder functions."};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--steps", o.steps, "integration steps (default 10000)");
  app.add_option("--tol", o.tol, "check tolerance (default 1e-6)");
  app.add_option("--seed", o.seed, "random seed (default 0)");
  app.add_option("--scene", o.scene_file, "scene document (JSON)");
  app.add_option("--out", o.out_file, "write the result here instead of stdout");
  app.add_option("--connection", o.connection, "connection name");
  app.add_option("--path", o.path, "path name");
  app.add_option("--paths", o.paths, "path names for check-consistency")->delimiter(',');
  app.add_option("--reference", o.reference, "reference connection name, or canonical_flat");
  app.add_option("--cylinder", o.cylinder, "cylinder function name");
  app.add_option("--loop", o.loop, "transition loop name");
  app.add_option("--trials", o.trials, "random gauges for gauge-test (default 100)");
  app.add_option("--samples", o.samples, "overlap samples for trivial (default 256)");
  app.add_flag("--tabulated", o.tabulated, "check-consistency on a table built from the holonomies");
  app.add_option("--corrupt", o.corrupt, "path whose table entry is corrupted (with --tabulated)");
  for (const char* name : {"clifford-table", "transport", "holonomy", "compare", "check-consistency", "winding",
                           "trivial", "reduce", "cylinder", "gauge-test"}) {
    app.add_subcommand(name)->callback([&o, name] { o.command = name; });
  }

  std::vector<std::string> argv_storage{"gaugekit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  Outcome outcome;
  try {
    app.parse(int(argv.size()), argv.data());
    o.steps_given = app.count("--steps") > 0;
    o.tol_given = app.count("--tol") > 0;
    o.seed_given = app.count("--seed") > 0;
    if (o.command != "clifford-table" && o.scene_file.empty()) {
      throw Error(ErrorCode::InvalidArgument, "--scene is required for " + o.command);
    }
    outcome = run_command(o);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    outcome = {error_record(o.command, "InvalidArgument", e.what()), kExitInputError};
  } catch (const Error& e) {
    const bool check = e.code() == ErrorCode::ContractionFailed || e.code() == ErrorCode::NonConvergent;
    outcome = {error_record(o.command, to_string(e.code()), e.detail()), check ? kExitCheckFailed : kExitInputError};
  } catch (const std::exception& e) {
    outcome = {error_record(o.command, "InvalidArgument", e.what()), kExitInputError};
  }

  const std::string text = outcome.doc.dump(2) + "\n";
  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_file);
    if (!file) {
      out << error_record(o.command, "InvalidArgument", "cannot write '" + o.out_file + "'").dump(2) << "\n";
      return kExitInputError;
    }
    file << text;
  }
  return outcome.code;
}

}  // namespace gaugekit::cli
