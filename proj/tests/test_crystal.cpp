#include <doctest.h>

#include <set>

#include "grid.hpp"
#include "hecke/crystal.hpp"
#include "hecke/error.hpp"
#include "oracles.hpp"

using hecke::Direction;
using hecke::Multipartition;
using hecke::Node;
using hecke::NodeOrder;
using hecke::ParamConfig;
using hecke::Residue;

namespace {

const ParamConfig kR1E2 = ParamConfig::single_orbit(2, {0});

Multipartition mp(const char* text) { return Multipartition::parse(text); }

std::vector<Residue> all_residues(const ParamConfig& cfg, int span) {
  std::vector<Residue> out;
  for (int i = 0; i < cfg.s(); ++i) {
    if (cfg.finite()) {
      for (int t = 0; t < *cfg.e(); ++t) out.push_back({i, t});
    } else {
      for (int t = -span; t <= span; ++t) out.push_back({i, t});
    }
  }
  return out;
}

std::vector<NodeOrder> usable_orders(const ParamConfig& cfg) {
  std::vector<NodeOrder> out{NodeOrder::Kleshchev};
  if (cfg.finite() && cfg.flotw_admissible()) out.push_back(NodeOrder::Flotw);
  return out;
}

}  // namespace

TEST_CASE("node orders") {
  const auto c1 = ParamConfig::case1(2, 1, 3, {0});
  CHECK(hecke::is_below(Node{1, 1, 1}, Node{3, 5, 0}, NodeOrder::Kleshchev, c1));
  CHECK(hecke::is_below(Node{3, 1, 0}, Node{1, 1, 0}, NodeOrder::Kleshchev, c1));
  CHECK_FALSE(hecke::is_below(Node{1, 1, 0}, Node{1, 1, 0}, NodeOrder::Kleshchev, c1));

  const auto c2 = ParamConfig::case2(1, 2, 2, 1, {0});
  CHECK(hecke::is_below(Node{1, 1, 1}, Node{1, 1, 0}, NodeOrder::Flotw, c2));
  CHECK_FALSE(hecke::is_below(Node{1, 1, 0}, Node{1, 1, 1}, NodeOrder::Flotw, c2));
  // Ties on b - a + v_c go to the smaller component.
  const auto flat = ParamConfig::single_orbit(3, {0, 0});
  CHECK(hecke::is_below(Node{1, 1, 0}, Node{1, 1, 1}, NodeOrder::Flotw, flat));

  CHECK_THROWS_AS(hecke::is_below(Node{1, 1, 0}, Node{1, 1, 1}, NodeOrder::Flotw, c1), hecke::PreconditionError);
  CHECK_THROWS_AS(hecke::require_order_usable(NodeOrder::Flotw, ParamConfig::case1(1, 1, std::nullopt, {0})),
                  hecke::PreconditionError);
  CHECK_THROWS_AS(hecke::require_order_usable(NodeOrder::Flotw, ParamConfig::case1(2, 2, 3, {2, 0})),
                  hecke::PreconditionError);
}

TEST_CASE("good nodes at level one") {
  CHECK(hecke::good_node(mp("1"), {0, 0}, NodeOrder::Kleshchev, kR1E2) == Node{1, 1, 0});
  CHECK_FALSE(hecke::good_node(mp("2"), {0, 0}, NodeOrder::Kleshchev, kR1E2).has_value());
  CHECK(hecke::good_node(mp("2,1"), {0, 1}, NodeOrder::Kleshchev, kR1E2) == Node{1, 2, 0});
}

TEST_CASE("crystal operators") {
  CHECK(hecke::crystal_step(mp("-"), {0, 0}, Direction::Add, NodeOrder::Kleshchev, kR1E2) == mp("1"));
  CHECK_FALSE(hecke::crystal_step(mp("-"), {0, 1}, Direction::Add, NodeOrder::Kleshchev, kR1E2).has_value());
  CHECK(hecke::crystal_step(mp("2,1"), {0, 1}, Direction::Remove, NodeOrder::Kleshchev, kR1E2) == mp("1,1"));
  CHECK_THROWS_AS(hecke::crystal_step(mp("-|-"), {0, 0}, Direction::Add, NodeOrder::Kleshchev, kR1E2),
                  hecke::PreconditionError);
}

TEST_CASE("paths") {
  CHECK(hecke::path_to_empty(mp("1"), NodeOrder::Kleshchev, kR1E2) == std::vector<Residue>{{0, 0}});
  CHECK(hecke::path_to_empty(mp("2,1"), NodeOrder::Kleshchev, kR1E2) ==
        std::vector<Residue>{{0, 0}, {0, 1}, {0, 1}});
  CHECK(hecke::path_to_empty(mp("-"), NodeOrder::Kleshchev, kR1E2).empty());
  CHECK_THROWS_AS(hecke::path_to_empty(mp("2"), NodeOrder::Kleshchev, kR1E2), hecke::NotInLattice);

  const std::vector<Residue> path{{0, 0}, {0, 1}, {0, 1}};
  CHECK(hecke::replay_path(path, NodeOrder::Kleshchev, kR1E2) == mp("2,1"));
  CHECK(hecke::replay_path({}, NodeOrder::Kleshchev, kR1E2) == mp("-"));
  const std::vector<Residue> bad{{0, 1}};
  CHECK_FALSE(hecke::replay_path(bad, NodeOrder::Kleshchev, kR1E2).has_value());
}

TEST_CASE("small lattices") {
  auto g = hecke::generate_lattice(kR1E2, NodeOrder::Kleshchev, 3);
  REQUIRE(g.levels.size() == 4);
  CHECK(g.levels[0].size() == 1);
  CHECK(g.levels[1].size() == 1);
  CHECK(g.levels[2].size() == 1);
  CHECK(g.levels[3] == std::vector<Multipartition>{mp("2,1"), mp("1,1,1")});
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);

  g = hecke::generate_lattice(kR1E2, NodeOrder::Flotw, 2);
  CHECK(g.levels[2] == std::vector<Multipartition>{mp("2")});

  g = hecke::generate_lattice(ParamConfig::case1(2, 1, 3, {0}), NodeOrder::Kleshchev, 1);
  CHECK(g.levels[1] == std::vector<Multipartition>{mp("-|1"), mp("1|-")});

  hecke::CrystalLattice lat(kR1E2, NodeOrder::Kleshchev);
  CHECK(lat.contains(mp("2,1")));
  CHECK_FALSE(lat.contains(mp("3")));
  CHECK(lat.depth() == 3);
  CHECK_THROWS_AS(lat.extend_to(-1), hecke::PreconditionError);
}

TEST_CASE("dot export") {
  const auto g = hecke::generate_lattice(kR1E2, NodeOrder::Kleshchev, 3);
  const std::string dot = hecke::to_dot(g);
  CHECK(dot.rfind("# crystal-hecke v1\n", 0) == 0);
  CHECK(dot.find("v3_0 [label=\"2,1\"]") != std::string::npos);
  CHECK(dot.find("v2_0 -> v3_0 [label=\"0.1\"]") != std::string::npos);
  CHECK(dot == hecke::to_dot(hecke::generate_lattice(kR1E2, NodeOrder::Kleshchev, 3)));
}

TEST_CASE("good nodes agree with bracket cancellation") {
  for (const auto& entry : grid::configs()) {
    if (entry.cfg.r() > 4) continue;
    for (NodeOrder order : usable_orders(entry.cfg)) {
      CAPTURE(entry.name);
      CAPTURE(hecke::to_string(order));
      const int n_max = entry.cfg.r() <= 2 ? 5 : 4;
      const auto residues = all_residues(entry.cfg, n_max + 2);
      hecke::CrystalLattice lat(entry.cfg, order);
      for (int n = 0; n <= n_max; ++n) {
        for (const auto& lambda : lat.level(n)) {
          for (const auto& x : residues) {
            CHECK(hecke::good_node(lambda, x, order, entry.cfg) ==
                  oracle::signature_good_node(lambda, x, order, entry.cfg));
          }
        }
      }
      // Off-lattice multipartitions too: the definition is local.
      for (const auto& lambda : hecke::all_multipartitions(entry.cfg.r(), 3)) {
        for (const auto& x : residues) {
          CHECK(hecke::good_node(lambda, x, order, entry.cfg) ==
                oracle::signature_good_node(lambda, x, order, entry.cfg));
        }
      }
    }
  }
}

TEST_CASE("crystal axioms on generated lattices") {
  for (const auto& entry : grid::configs()) {
    if (entry.cfg.r() > 4) continue;
    for (NodeOrder order : usable_orders(entry.cfg)) {
      CAPTURE(entry.name);
      CAPTURE(hecke::to_string(order));
      const int n_max = 4;
      const auto residues = all_residues(entry.cfg, n_max + 2);
      const auto g = hecke::generate_lattice(entry.cfg, order, n_max);
      CHECK(g.levels[0] == std::vector<Multipartition>{Multipartition(entry.cfg.r())});
      for (int n = 0; n <= n_max; ++n) {
        const auto& level = g.levels[static_cast<std::size_t>(n)];
        CHECK(std::is_sorted(level.begin(), level.end()));
        const std::set<Multipartition> here(level.begin(), level.end());
        CHECK(here.size() == level.size());
        for (const auto& lambda : level) {
          for (const auto& x : residues) {
            // Inverse property in both directions.
            if (auto up = hecke::crystal_step(lambda, x, Direction::Add, order, entry.cfg)) {
              CHECK(hecke::crystal_step(*up, x, Direction::Remove, order, entry.cfg) == lambda);
            }
            if (auto down = hecke::crystal_step(lambda, x, Direction::Remove, order, entry.cfg)) {
              CHECK(hecke::crystal_step(*down, x, Direction::Add, order, entry.cfg) == lambda);
              // Closure: e~ stays inside the lattice.
              const auto& below = g.levels[static_cast<std::size_t>(n - 1)];
              CHECK(std::binary_search(below.begin(), below.end(), *down));
            }
            // Uniqueness of the addable node that becomes good.
            int good_addable = 0;
            for (const auto& gamma : hecke::boundary_nodes(lambda).addable) {
              if (hecke::residue_of(gamma, entry.cfg) != x) continue;
              if (hecke::good_node(lambda.with_node(gamma), x, order, entry.cfg) == gamma) ++good_addable;
            }
            CHECK(good_addable <= 1);
          }
        }
        if (n < n_max) {
          // Every vertex above has an incoming edge; one edge per (vertex, residue).
          const auto& edges = g.edges[static_cast<std::size_t>(n)];
          std::set<std::size_t> hit;
          std::set<std::pair<std::size_t, Residue>> keys;
          for (const auto& e : edges) {
            hit.insert(e.target);
            CHECK(keys.insert({e.source, e.label}).second);
          }
          CHECK(hit.size() == g.levels[static_cast<std::size_t>(n + 1)].size());
        }
      }
    }
  }
}

TEST_CASE("lattice generation is deterministic") {
  const auto cfg = ParamConfig::case2(1, 2, 2, 2, {0, 1});
  const auto a = hecke::generate_lattice(cfg, NodeOrder::Kleshchev, 5);
  const auto b = hecke::generate_lattice(cfg, NodeOrder::Kleshchev, 5);
  CHECK(a.levels == b.levels);
  CHECK(a.edges == b.edges);
}
