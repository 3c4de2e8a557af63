#include "hecke/crystal.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

namespace {

bool below_unchecked(const Node& lower, const Node& upper, NodeOrder order, const ParamConfig& cfg) {
  if (order == NodeOrder::Kleshchev) {
    return lower.comp > upper.comp || (lower.comp == upper.comp && lower.row > upper.row);
  }
  const long long lhs = static_cast<long long>(lower.content()) + cfg.charge(lower.comp).v;
  const long long rhs = static_cast<long long>(upper.content()) + cfg.charge(upper.comp).v;
  return lhs > rhs || (lhs == rhs && lower.comp < upper.comp);
}

struct ResidueNodes {
  std::vector<Node> removable;
  std::vector<Node> addable;
};

ResidueNodes nodes_of_residue(const Multipartition& lambda, Residue x, const ParamConfig& cfg) {
  BoundaryNodes all = boundary_nodes(lambda);
  ResidueNodes out;
  for (const Node& n : all.removable) {
    if (residue_of(n, cfg) == x) out.removable.push_back(n);
  }
  for (const Node& n : all.addable) {
    if (residue_of(n, cfg) == x) out.addable.push_back(n);
  }
  return out;
}

std::optional<Node> good_node_unchecked(const Multipartition& lambda, Residue x, NodeOrder order,
                                        const ParamConfig& cfg) {
  const ResidueNodes nodes = nodes_of_residue(lambda, x, cfg);
  auto below = [&](const Node& a, const Node& b) { return below_unchecked(a, b, order, cfg); };
  auto strictly_between = [&](const std::vector<Node>& pool, const Node& low, const Node& high) {
    return std::count_if(pool.begin(), pool.end(), [&](const Node& n) { return below(low, n) && below(n, high); });
  };

  std::optional<Node> best;
  for (const Node& gamma : nodes.removable) {
    bool normal = true;
    for (const Node& eta : nodes.addable) {
      if (!below(eta, gamma)) continue;
      if (strictly_between(nodes.removable, eta, gamma) <= strictly_between(nodes.addable, eta, gamma)) {
        normal = false;
        break;
      }
    }
    if (normal && (!best || below(*best, gamma))) best = gamma;
  }
  return best;
}

}  // namespace

const char* to_string(NodeOrder order) { return order == NodeOrder::Kleshchev ? "kleshchev" : "flotw"; }

void require_order_usable(NodeOrder order, const ParamConfig& cfg) {
  if (order != NodeOrder::Flotw) return;
  if (!cfg.finite()) throw PreconditionError("the FLOTW order needs finite e");
  if (!cfg.flotw_admissible()) {
    throw PreconditionError("the FLOTW order needs v nondecreasing within every q-orbit");
  }
}

bool is_below(const Node& lower, const Node& upper, NodeOrder order, const ParamConfig& cfg) {
  if (order == NodeOrder::Flotw) {
    require_order_usable(order, cfg);
    if (cfg.charge(lower.comp).orbit != cfg.charge(upper.comp).orbit) {
      throw PreconditionError("FLOTW order compares nodes of a single q-orbit only");
    }
  } else {
    cfg.charge(lower.comp);
    cfg.charge(upper.comp);
  }
  return below_unchecked(lower, upper, order, cfg);
}

std::optional<Node> good_node(const Multipartition& lambda, Residue x, NodeOrder order, const ParamConfig& cfg) {
  require_order_usable(order, cfg);
  return good_node_unchecked(lambda, x, order, cfg);
}

std::optional<Multipartition> crystal_step(const Multipartition& lambda, Residue x, Direction dir, NodeOrder order,
                                           const ParamConfig& cfg) {
  require_order_usable(order, cfg);
  if (lambda.rank() != cfg.r()) throw PreconditionError("multipartition rank does not match r");
  if (dir == Direction::Remove) {
    const auto gamma = good_node_unchecked(lambda, x, order, cfg);
    if (!gamma) return std::nullopt;
    return lambda.without_node(*gamma);
  }
  std::optional<Multipartition> result;
  for (const Node& gamma : nodes_of_residue(lambda, x, cfg).addable) {
    Multipartition grown = lambda.with_node(gamma);
    if (good_node_unchecked(grown, x, order, cfg) != gamma) continue;
    if (result) {
      throw InternalError("two addable " + to_string(x) + "-nodes of " + lambda.to_string() +
                          " are good after adding them");
    }
    result = std::move(grown);
  }
  return result;
}

std::vector<Residue> good_residues(const Multipartition& lambda, NodeOrder order, const ParamConfig& cfg) {
  require_order_usable(order, cfg);
  std::vector<Residue> candidates;
  for (const Node& n : boundary_nodes(lambda).removable) candidates.push_back(residue_of(n, cfg));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::erase_if(candidates, [&](const Residue& x) { return !good_node_unchecked(lambda, x, order, cfg); });
  return candidates;
}

std::vector<Residue> path_to_empty(const Multipartition& lambda, NodeOrder order, const ParamConfig& cfg) {
  require_order_usable(order, cfg);
  if (lambda.rank() != cfg.r()) throw PreconditionError("multipartition rank does not match r");
  std::vector<Residue> path;
  Multipartition current = lambda;
  while (!current.empty()) {
    const auto residues = good_residues(current, order, cfg);
    if (residues.empty()) {
      throw NotInLattice(lambda.to_string() + " is not in the " + to_string(order) + " good lattice (stuck at " +
                         current.to_string() + ")");
    }
    const Residue x = residues.front();
    current = current.without_node(*good_node_unchecked(current, x, order, cfg));
    path.push_back(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<Multipartition> replay_path(std::span<const Residue> path, NodeOrder order, const ParamConfig& cfg) {
  Multipartition current(cfg.r());
  for (const Residue& x : path) {
    auto next = crystal_step(current, x, Direction::Add, order, cfg);
    if (!next) return std::nullopt;
    current = std::move(*next);
  }
  return current;
}

std::size_t CrystalGraph::vertex_count() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  return total;
}

std::size_t CrystalGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& level : edges) total += level.size();
  return total;
}

CrystalLattice::CrystalLattice(ParamConfig cfg, NodeOrder order) : cfg_(std::move(cfg)), order_(order) {
  require_order_usable(order_, cfg_);
  levels_.push_back({Multipartition(cfg_.r())});
}

void CrystalLattice::grow() {
  const auto& current = levels_.back();
  struct Arrow {
    std::size_t source;
    Residue label;
    Multipartition target;
  };
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < current.size(); ++i) {
    const Multipartition& lambda = current[i];
    std::vector<Residue> labels;
    for (const Node& n : boundary_nodes(lambda).addable) labels.push_back(residue_of(n, cfg_));
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (const Residue& x : labels) {
      if (auto mu = crystal_step(lambda, x, Direction::Add, order_, cfg_)) arrows.push_back({i, x, std::move(*mu)});
    }
  }

  std::vector<Multipartition> next;
  next.reserve(arrows.size());
  for (const auto& a : arrows) next.push_back(a.target);
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());

  std::vector<Edge> edges;
  edges.reserve(arrows.size());
  for (const auto& a : arrows) {
    const auto pos = std::lower_bound(next.begin(), next.end(), a.target);
    edges.push_back({a.source, a.label, static_cast<std::size_t>(pos - next.begin())});
  }
  std::sort(edges.begin(), edges.end());
  edges_.push_back(std::move(edges));
  levels_.push_back(std::move(next));
}

void CrystalLattice::extend_to(int n) {
  if (n < 0) throw PreconditionError("lattice level must be nonnegative");
  while (depth() < n) grow();
}

const std::vector<Multipartition>& CrystalLattice::level(int n) {
  extend_to(n);
  return levels_[static_cast<std::size_t>(n)];
}

const std::vector<Edge>& CrystalLattice::edges_from(int n) {
  extend_to(n + 1);
  return edges_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> CrystalLattice::index_of(const Multipartition& lambda) {
  if (lambda.rank() != cfg_.r()) return std::nullopt;
  const auto& lvl = level(lambda.size());
  const auto pos = std::lower_bound(lvl.begin(), lvl.end(), lambda);
  if (pos == lvl.end() || *pos != lambda) return std::nullopt;
  return static_cast<std::size_t>(pos - lvl.begin());
}

CrystalGraph CrystalLattice::graph(int n_max) {
  extend_to(n_max);
  CrystalGraph out;
  out.levels.assign(levels_.begin(), levels_.begin() + n_max + 1);
  out.edges.assign(edges_.begin(), edges_.begin() + n_max);
  return out;
}

CrystalGraph generate_lattice(const ParamConfig& cfg, NodeOrder order, int n_max) {
  CrystalLattice lattice(cfg, order);
  return lattice.graph(n_max);
}

std::string to_dot(const CrystalGraph& graph, const std::string& name) {
  std::ostringstream out;
  out << "# crystal-hecke v1\n";
  out << "digraph \"" << name << "\" {\n";
  auto id = [](std::size_t level, std::size_t index) {
    return "v" + std::to_string(level) + "_" + std::to_string(index);
  };
  for (std::size_t n = 0; n < graph.levels.size(); ++n) {
    for (std::size_t i = 0; i < graph.levels[n].size(); ++i) {
      out << "  " << id(n, i) << " [label=\"" << graph.levels[n][i].to_string() << "\"];\n";
    }
  }
  for (std::size_t n = 0; n < graph.edges.size(); ++n) {
    for (const Edge& e : graph.edges[n]) {
      out << "  " << id(n, e.source) << " -> " << id(n + 1, e.target) << " [label=\"" << to_string(e.label)
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace hecke
