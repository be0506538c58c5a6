#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gaugekit/bundle.hpp"
#include "gaugekit/connection.hpp"

namespace gaugekit {

/// Map from oriented paths to transporters.
class GeneralizedConnection {
 public:
  virtual ~GeneralizedConnection() = default;
  virtual GroupKind group() const = 0;
  virtual GroupElement assign(const Path& path) const = 0;
};

/// Transporters of a smooth connection.
class HolonomyBacked final : public GeneralizedConnection {
 public:
  HolonomyBacked(ConnectionForm conn, PrincipalBundle bundle, int steps = 10000)
      : conn_(std::move(conn)), bundle_(std::move(bundle)), steps_(steps) {}

  GroupKind group() const override { return conn_.group(); }
  GroupElement assign(const Path& path) const override;

 private:
  ConnectionForm conn_;
  PrincipalBundle bundle_;
  int steps_;
};

/// Finite table keyed by path_key.
class TabulatedConnection final : public GeneralizedConnection {
 public:
  /// Table holding the generators, their inverses, and every composable
  /// pair drawn from those, with values fixed by inverse -> inverse and
  /// (p1 then p2) -> T(p2) T(p1).
  static TabulatedConnection generate(GroupKind group, const std::vector<std::pair<Path, GroupElement>>& generators);

  /// Copy with one entry overwritten (or added).
  TabulatedConnection with_entry(const Path& path, const GroupElement& value) const;

  GroupKind group() const override { return group_; }
  /// Throws UnknownPath for keys outside the table.
  GroupElement assign(const Path& path) const override;
  std::size_t size() const { return table_.size(); }

 private:
  explicit TabulatedConnection(GroupKind group) : group_(group) {}

  GroupKind group_;
  std::map<std::string, GroupElement> table_;
};

struct LawResult {
  std::string law;
  double max_deviation = 0;
  bool pass = true;
  std::size_t checks = 0;
};

struct ConsistencyReport {
  std::vector<LawResult> laws;
  bool pass() const;
};

/// Checks reparametrization invariance (t -> t^3), inverse -> inverse and
/// composite -> composite over `paths`. Composable pairs are those whose
/// endpoints meet within 1e-9.
ConsistencyReport consistency_check(const GeneralizedConnection& conn, std::span<const Path> paths, double tol);

}  // namespace gaugekit
