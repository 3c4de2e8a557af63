#include "hecke/flotw.hpp"

#include <map>
#include <set>

#include "hecke/crystal.hpp"
#include "hecke/error.hpp"

namespace hecke {

FlotwReport is_flotw(const Multipartition& lambda, const ParamConfig& cfg) {
  require_order_usable(NodeOrder::Flotw, cfg);
  if (lambda.rank() != cfg.r()) throw PreconditionError("multipartition rank does not match r");
  const int e = *cfg.e();

  std::map<int, std::vector<int>> orbit_members;
  for (int c = 0; c < cfg.r(); ++c) orbit_members[cfg.charge(c).orbit].push_back(c);

  for (const auto& [orbit, members] : orbit_members) {
    const std::size_t t = members.size();
    // Cyclic row inequalities lambda^(j)_i >= lambda^(j+1)_(i + v_(j+1) - v_j),
    // the last component wrapping onto the first with offset e + v_first - v_last.
    for (std::size_t j = 0; j < t; ++j) {
      const int here = members[j];
      const int next = members[(j + 1) % t];
      const int offset = j + 1 < t ? cfg.charge(next).v - cfg.charge(here).v
                                   : e + cfg.charge(next).v - cfg.charge(here).v;
      const Partition& upper = lambda.component(here);
      const Partition& lower = lambda.component(next);
      for (int i = 1; i + offset <= lower.length(); ++i) {
        if (upper.part(i) < lower.part(i + offset)) {
          return {false, RowInequalityWitness{orbit, here, i}};
        }
      }
    }

    // For each occurring row length, some residue class must be missing
    // among the right ends of the rows of that length.
    std::map<int, std::set<int>> ends_by_length;
    for (int c : members) {
      const Partition& part = lambda.component(c);
      for (int a = 1; a <= part.length(); ++a) {
        const int len = part.part(a);
        ends_by_length[len].insert(cfg.reduce(static_cast<long long>(cfg.charge(c).v) + len - a));
      }
    }
    for (const auto& [len, ends] : ends_by_length) {
      if (static_cast<int>(ends.size()) == e) return {false, ResidueCoverWitness{orbit, len}};
    }
  }
  return {true, std::nullopt};
}

std::string describe(const FlotwReport& report) {
  if (report.member) return "member";
  if (const auto* row = std::get_if<RowInequalityWitness>(&*report.failed_condition)) {
    return "row inequality fails at component " + std::to_string(row->comp + 1) + ", row " + std::to_string(row->row) +
           " (orbit " + std::to_string(row->orbit) + ")";
  }
  const auto& cover = std::get<ResidueCoverWitness>(*report.failed_condition);
  return "rows of length " + std::to_string(cover.length) + " cover every residue of orbit " +
         std::to_string(cover.orbit);
}

Multipartition kappa_map(const Multipartition& lambda, KappaDirection dir, const ParamConfig& cfg) {
  require_order_usable(NodeOrder::Flotw, cfg);
  const NodeOrder from = dir == KappaDirection::Forward ? NodeOrder::Kleshchev : NodeOrder::Flotw;
  const NodeOrder to = dir == KappaDirection::Forward ? NodeOrder::Flotw : NodeOrder::Kleshchev;
  const auto path = path_to_empty(lambda, from, cfg);
  auto image = replay_path(path, to, cfg);
  if (!image) {
    throw InternalError("path of " + lambda.to_string() + " does not replay in the " + to_string(to) + " lattice");
  }
  return std::move(*image);
}

}  // namespace hecke
