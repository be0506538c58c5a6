#include "gaugekit/generalized_connection.hpp"

#include <algorithm>

#include "gaugekit/transport.hpp"

namespace gaugekit {

namespace {

bool composable(const Path& a, const Path& b) {
  return a.interpolation() == b.interpolation() && chart_distance(a.final(), b.initial()) <= kEndpointTolerance;
}

}  // namespace

GroupElement HolonomyBacked::assign(const Path& path) const { return transport(conn_, bundle_, path, steps_); }

TabulatedConnection TabulatedConnection::generate(GroupKind group,
                                                  const std::vector<std::pair<Path, GroupElement>>& generators) {
  TabulatedConnection out(group);
  std::vector<std::pair<Path, GroupElement>> base;
  for (const auto& [p, g] : generators) {
    if (g.kind() != group) throw Error(ErrorCode::TypeMismatch, "generator value of the wrong group");
    base.emplace_back(p, g);
    base.emplace_back(path_reverse(p), g.inverse());
  }
  for (const auto& [p, g] : base) out.table_.insert_or_assign(path_key(p), g);
  for (const auto& [p1, g1] : base) {
    for (const auto& [p2, g2] : base) {
      if (!composable(p1, p2)) continue;
      out.table_.emplace(path_key(path_compose(p1, p2)), g2 * g1);
    }
  }
  return out;
}

TabulatedConnection TabulatedConnection::with_entry(const Path& path, const GroupElement& value) const {
  TabulatedConnection out = *this;
  out.table_.insert_or_assign(path_key(path), value);
  return out;
}

GroupElement TabulatedConnection::assign(const Path& path) const {
  const auto it = table_.find(path_key(path));
  if (it == table_.end()) throw Error(ErrorCode::UnknownPath, "path not in the table");
  return it->second;
}

bool ConsistencyReport::pass() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.pass; });
}

ConsistencyReport consistency_check(const GeneralizedConnection& conn, std::span<const Path> paths, double tol) {
  if (paths.empty()) throw Error(ErrorCode::InvalidArgument, "consistency check needs paths");
  LawResult reparam{"reparametrization"}, inverse{"inverse"}, composition{"composition"};
  const auto record = [tol](LawResult& law, double d) {
    law.max_deviation = std::max(law.max_deviation, d);
    law.pass = law.pass && d <= tol;
    ++law.checks;
  };
  std::vector<GroupElement> values;
  for (const Path& p : paths) values.push_back(conn.assign(p));
  for (std::size_t a = 0; a < paths.size(); ++a) {
    const Path& p = paths[a];
    const int count = std::max<int>(33, int(p.size()));
    const Path q = path_reparametrize(p, [](double t) { return t * t * t; }, count);
    record(reparam, distance(conn.assign(q), values[a]));
    record(inverse, distance(conn.assign(path_reverse(p)), values[a].inverse()));
  }
  for (std::size_t a = 0; a < paths.size(); ++a) {
    for (std::size_t b = 0; b < paths.size(); ++b) {
      if (!composable(paths[a], paths[b])) continue;
      record(composition, distance(conn.assign(path_compose(paths[a], paths[b])), values[b] * values[a]));
    }
  }
  return {{reparam, inverse, composition}};
}

}  // namespace gaugekit
