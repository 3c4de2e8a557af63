#include "hecke/sigma.hpp"

#include <algorithm>

#include "hecke/error.hpp"
#include "hecke/flotw.hpp"

namespace hecke {

namespace {

const Case2Tag& require_case2(const ParamConfig& cfg) {
  const auto* tag = cfg.case2_tag();
  if (!tag) throw PreconditionError("operation needs a case2 configuration, got " + cfg.describe());
  return *tag;
}

}  // namespace

Multipartition h_from_path(std::span<const Residue> path, const ParamConfig& cfg, int power) {
  std::vector<Residue> twisted;
  twisted.reserve(path.size());
  for (const Residue& x : path) twisted.push_back(apply_eps(x, cfg, power));
  auto image = replay_path(twisted, NodeOrder::Kleshchev, cfg);
  if (!image) throw InternalError("epsilon-twisted path does not replay in the Kleshchev lattice");
  return std::move(*image);
}

Multipartition h_by_path(const Multipartition& lambda, const ParamConfig& cfg, int power) {
  const auto path = path_to_empty(lambda, NodeOrder::Kleshchev, cfg);
  return h_from_path(path, cfg, power);
}

std::vector<int> omega_perm(const ParamConfig& cfg) {
  const Case2Tag& tag = require_case2(cfg);
  const int block = tag.d0 * tag.d;
  std::vector<int> omega(static_cast<std::size_t>(cfg.r()));
  for (int c = 0; c < cfg.r(); ++c) {
    const int x = c / block;
    const int y = c % block;
    if (x < tag.k - 1) {
      omega[static_cast<std::size_t>(c)] = c + block;
    } else if (y < block - tag.d) {
      omega[static_cast<std::size_t>(c)] = tag.d + y;
    } else {
      omega[static_cast<std::size_t>(c)] = y - (block - tag.d);
    }
  }
  return omega;
}

Multipartition apply_omega(const Multipartition& mu, std::span<const int> omega) {
  if (static_cast<int>(omega.size()) != mu.rank()) throw PreconditionError("omega size does not match rank");
  std::vector<Partition> comps(omega.size());
  for (std::size_t c = 0; c < omega.size(); ++c) {
    comps[static_cast<std::size_t>(omega[c])] = mu.component(static_cast<int>(c));
  }
  return Multipartition(std::move(comps));
}

ParamConfig case2_block_config(const ParamConfig& cfg) {
  const Case2Tag& tag = require_case2(cfg);
  return ParamConfig::case2(1, tag.d0, tag.l, tag.d, tag.v);
}

Multipartition h_closed(const Multipartition& lambda, const ParamConfig& cfg) {
  if (lambda.rank() != cfg.r()) throw PreconditionError("multipartition rank does not match r");
  if (const auto* c1 = cfg.case1_tag()) {
    std::vector<Multipartition> blocks;
    blocks.push_back(lambda.slice((c1->p - 1) * c1->d, c1->d));
    for (int j = 0; j + 1 < c1->p; ++j) blocks.push_back(lambda.slice(j * c1->d, c1->d));
    return Multipartition::concat(blocks);
  }
  const Case2Tag& tag = require_case2(cfg);
  const int block = tag.d0 * tag.d;
  const ParamConfig single = case2_block_config(cfg);
  const auto omega = omega_perm(single);
  const Multipartition wrapped = lambda.slice((tag.k - 1) * block, block);
  const Multipartition flotw = kappa_map(wrapped, KappaDirection::Forward, single);

  std::vector<Multipartition> blocks;
  blocks.push_back(kappa_map(apply_omega(flotw, omega), KappaDirection::Inverse, single));
  for (int j = 0; j + 1 < tag.k; ++j) blocks.push_back(lambda.slice(j * block, block));
  return Multipartition::concat(blocks);
}

std::vector<std::size_t> h_permutation(std::span<const Multipartition> level, const ParamConfig& cfg, int power) {
  std::vector<std::size_t> perm(level.size());
  for (std::size_t i = 0; i < level.size(); ++i) {
    const Multipartition image = h_by_path(level[i], cfg, power);
    const auto pos = std::lower_bound(level.begin(), level.end(), image);
    if (pos == level.end() || *pos != image) {
      throw InternalError("h maps " + level[i].to_string() + " outside its level");
    }
    perm[i] = static_cast<std::size_t>(pos - level.begin());
  }
  return perm;
}

std::vector<int> h_cycle_lengths(std::span<const Multipartition> level, const ParamConfig& cfg) {
  const auto perm = h_permutation(level, cfg, 1);
  std::vector<int> lengths(level.size(), 0);
  for (std::size_t start = 0; start < level.size(); ++start) {
    if (lengths[start] != 0) continue;
    std::vector<std::size_t> cycle{start};
    for (std::size_t i = perm[start]; i != start; i = perm[i]) cycle.push_back(i);
    for (std::size_t i : cycle) lengths[i] = static_cast<int>(cycle.size());
  }
  return lengths;
}

OrbitDecomposition orbits_and_stabilizers(std::span<const Multipartition> level, const ParamConfig& cfg) {
  const auto perm = h_permutation(level, cfg, 1);
  std::vector<bool> seen(level.size(), false);
  OrbitDecomposition out;
  // Level is sorted, so the first unseen vertex is the minimum of its orbit.
  for (std::size_t start = 0; start < level.size(); ++start) {
    if (seen[start]) continue;
    int size = 0;
    std::size_t i = start;
    do {
      seen[i] = true;
      ++size;
      i = perm[i];
    } while (i != start);
    if (cfg.p() % size != 0) throw InternalError("h-orbit size does not divide p");
    out.orbits.push_back({level[start], size, cfg.p() / size});
  }
  return out;
}

OrbitDecomposition orbits_and_stabilizers(const ParamConfig& cfg, int n) {
  CrystalLattice lattice(cfg, NodeOrder::Kleshchev);
  return orbits_and_stabilizers(lattice.level(n), cfg);
}

std::optional<ParamConfig> lift_source_config(const ParamConfig& cfg, int m) {
  const Case2Tag& tag = require_case2(cfg);
  if (tag.k != 1) throw PreconditionError("the lift needs a case2 configuration with k = 1");
  if (m < 1 || cfg.p() % m != 0) throw PreconditionError("m must divide p");
  if (m * tag.l == 1) return std::nullopt;
  if (m == 1) return ParamConfig::single_orbit(tag.l, tag.v);
  return ParamConfig::case2(1, m, tag.l, tag.d, tag.v);
}

Multipartition eta_lift(const Multipartition& small, const ParamConfig& cfg, int m) {
  const auto source = lift_source_config(cfg, m);
  const Case2Tag& tag = *cfg.case2_tag();
  if (small.rank() != tag.d * m) throw PreconditionError("lift input must have d*m components");
  if (!source) {
    if (!small.empty()) throw NotInLattice(small.to_string() + " is not in the one-point source crystal");
    return Multipartition(cfg.r());
  }
  const int source_order = m * tag.l;
  std::vector<Residue> path;
  for (const Residue& x : path_to_empty(small, NodeOrder::Kleshchev, *source)) {
    for (int j = 0; j < cfg.p() / m; ++j) path.push_back({0, cfg.reduce(x.exp + j * source_order)});
  }
  auto lifted = replay_path(path, NodeOrder::Kleshchev, cfg);
  if (!lifted) throw InternalError("lifted path of " + small.to_string() + " does not replay");
  return std::move(*lifted);
}

}  // namespace hecke
