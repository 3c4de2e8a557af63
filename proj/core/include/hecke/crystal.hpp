#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hecke/config.hpp"
#include "hecke/partition.hpp"

namespace hecke {

/// Which total order on equal-residue nodes drives normal/good nodes.
enum class NodeOrder { Kleshchev, Flotw };

const char* to_string(NodeOrder order);

/// Throws PreconditionError when `order` cannot be used with `cfg`
/// (the FLOTW order needs finite e and FLOTW-admissible parameters).
void require_order_usable(NodeOrder order, const ParamConfig& cfg);

/// True when `lower` is strictly below `upper`.
///
/// Kleshchev: larger component, or same component and larger row.
/// FLOTW: larger b - a + v_c, or equal and smaller component; both nodes
/// must lie in the same q-orbit.
bool is_below(const Node& lower, const Node& upper, NodeOrder order, const ParamConfig& cfg);

/// The highest normal x-node of `lambda`, if any. Normality is checked
/// literally: for every addable x-node below the candidate, the removable
/// x-nodes strictly between must outnumber the addable ones strictly between.
std::optional<Node> good_node(const Multipartition& lambda, Residue x, NodeOrder order, const ParamConfig& cfg);

enum class Direction { Add, Remove };

/// The crystal operators: Add is f~_x, Remove is e~_x. Returns nullopt when
/// the operator is undefined at `lambda`.
std::optional<Multipartition> crystal_step(const Multipartition& lambda, Residue x, Direction dir, NodeOrder order,
                                           const ParamConfig& cfg);

/// Residues x for which e~_x(lambda) is defined, in increasing order.
std::vector<Residue> good_residues(const Multipartition& lambda, NodeOrder order, const ParamConfig& cfg);

/// Residue sequence of a path from the empty multipartition to `lambda`,
/// found by repeatedly removing the good node of the smallest admissible
/// residue. Throws NotInLattice when the descent gets stuck.
std::vector<Residue> path_to_empty(const Multipartition& lambda, NodeOrder order, const ParamConfig& cfg);

/// Folds f~ over `path` starting from the empty multipartition.
std::optional<Multipartition> replay_path(std::span<const Residue> path, NodeOrder order, const ParamConfig& cfg);

struct Edge {
  std::size_t source = 0;  // index into levels[n]
  Residue label;
  std::size_t target = 0;  // index into levels[n + 1]

  auto operator<=>(const Edge&) const = default;
};

struct CrystalGraph {
  /// levels[n] holds the vertices of size n in canonical order.
  std::vector<std::vector<Multipartition>> levels;
  /// edges[n] holds the arrows from level n to level n + 1.
  std::vector<std::vector<Edge>> edges;

  std::size_t vertex_count() const;
  std::size_t edge_count() const;
};

/// Good lattice of one configuration, generated level by level on demand.
///
/// Membership queries extend the lattice up to the size of the queried
/// multipartition. Not safe for concurrent mutation; share a const
/// CrystalGraph instead.
class CrystalLattice {
 public:
  CrystalLattice(ParamConfig cfg, NodeOrder order);

  const ParamConfig& config() const { return cfg_; }
  NodeOrder order() const { return order_; }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }

  void extend_to(int n);
  const std::vector<Multipartition>& level(int n);
  /// Arrows from level n to level n + 1.
  const std::vector<Edge>& edges_from(int n);

  std::optional<std::size_t> index_of(const Multipartition& lambda);
  bool contains(const Multipartition& lambda) { return index_of(lambda).has_value(); }

  CrystalGraph graph(int n_max);

 private:
  void grow();

  ParamConfig cfg_;
  NodeOrder order_;
  std::vector<std::vector<Multipartition>> levels_;
  std::vector<std::vector<Edge>> edges_;
};

CrystalGraph generate_lattice(const ParamConfig& cfg, NodeOrder order, int n_max);

/// Graphviz rendering. Vertex labels use Multipartition::to_string(), edge
/// labels "orbit.exp". The first line is the "# crystal-hecke v1" header.
std::string to_dot(const CrystalGraph& graph, const std::string& name = "lattice");

}  // namespace hecke
