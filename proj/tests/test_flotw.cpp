#include <doctest.h>

#include <set>

#include "grid.hpp"
#include "hecke/crystal.hpp"
#include "hecke/error.hpp"
#include "hecke/flotw.hpp"

using hecke::Direction;
using hecke::KappaDirection;
using hecke::Multipartition;
using hecke::NodeOrder;
using hecke::ParamConfig;

namespace {

Multipartition mp(const char* text) { return Multipartition::parse(text); }

bool flotw_usable(const ParamConfig& cfg) { return cfg.finite() && cfg.flotw_admissible(); }

}  // namespace

TEST_CASE("closed-form membership examples") {
  const auto cfg = ParamConfig::single_orbit(2, {0});
  auto rep = hecke::is_flotw(mp("1,1"), cfg);
  CHECK_FALSE(rep.member);
  REQUIRE(rep.failed_condition.has_value());
  CHECK(std::get<hecke::ResidueCoverWitness>(*rep.failed_condition) == hecke::ResidueCoverWitness{0, 1});
  CHECK(hecke::is_flotw(mp("2"), cfg).member);
  CHECK(hecke::is_flotw(mp("-"), cfg).member);
  CHECK(hecke::is_flotw(Multipartition(4), ParamConfig::case2(2, 2, 1, 1, {0})).member);
  CHECK(hecke::describe(hecke::is_flotw(mp("2"), cfg)) == "member");

  // Two components with v = (0, 0): the second may not poke out past the first.
  const auto two = ParamConfig::single_orbit(3, {0, 0});
  rep = hecke::is_flotw(mp("-|1"), two);
  CHECK_FALSE(rep.member);
  CHECK(std::get<hecke::RowInequalityWitness>(*rep.failed_condition) == hecke::RowInequalityWitness{0, 0, 1});
  CHECK(hecke::describe(rep) == "row inequality fails at component 1, row 1 (orbit 0)");
}

TEST_CASE("membership needs finite admissible parameters") {
  CHECK_THROWS_AS(hecke::is_flotw(mp("1"), ParamConfig::case1(1, 1, std::nullopt, {0})), hecke::PreconditionError);
  CHECK_THROWS_AS(hecke::is_flotw(mp("1|-"), ParamConfig::single_orbit(3, {1, 0})), hecke::PreconditionError);
  CHECK_THROWS_AS(hecke::is_flotw(mp("1|-"), ParamConfig::single_orbit(3, {0})), hecke::PreconditionError);
}

TEST_CASE("kappa examples") {
  const auto cfg = ParamConfig::single_orbit(2, {0});
  CHECK(hecke::kappa_map(mp("-"), KappaDirection::Forward, cfg) == mp("-"));
  CHECK(hecke::kappa_map(mp("1,1"), KappaDirection::Forward, cfg) == mp("2"));
  CHECK(hecke::kappa_map(mp("1"), KappaDirection::Forward, cfg) == mp("1"));
  CHECK(hecke::kappa_map(mp("2"), KappaDirection::Inverse, cfg) == mp("1,1"));
  CHECK_THROWS_AS(hecke::kappa_map(mp("2"), KappaDirection::Forward, cfg), hecke::NotInLattice);
  CHECK_THROWS_AS(hecke::kappa_map(mp("1,1"), KappaDirection::Inverse, cfg), hecke::NotInLattice);
}

TEST_CASE("closed form equals generated FLOTW lattice") {
  for (const auto& entry : grid::configs()) {
    if (!flotw_usable(entry.cfg) || entry.cfg.r() > 4) continue;
    CAPTURE(entry.name);
    hecke::CrystalLattice lat(entry.cfg, NodeOrder::Flotw);
    const int n_max = entry.cfg.r() <= 2 ? 6 : 4;
    for (int n = 0; n <= n_max; ++n) {
      std::vector<Multipartition> closed;
      for (const auto& mu : hecke::all_multipartitions(entry.cfg.r(), n)) {
        if (hecke::is_flotw(mu, entry.cfg).member) closed.push_back(mu);
      }
      CHECK(closed == lat.level(n));
    }
  }
}

TEST_CASE("kappa is a crystal isomorphism") {
  for (const auto& entry : grid::configs()) {
    if (!flotw_usable(entry.cfg) || entry.cfg.r() > 4) continue;
    CAPTURE(entry.name);
    const auto& cfg = entry.cfg;
    hecke::CrystalLattice kl(cfg, NodeOrder::Kleshchev);
    hecke::CrystalLattice fl(cfg, NodeOrder::Flotw);
    for (int n = 0; n <= 4; ++n) {
      std::set<Multipartition> image;
      for (const auto& lambda : kl.level(n)) {
        const auto mu = hecke::kappa_map(lambda, KappaDirection::Forward, cfg);
        CHECK(fl.contains(mu));
        CHECK(hecke::kappa_map(mu, KappaDirection::Inverse, cfg) == lambda);
        image.insert(mu);
        for (int i = 0; i < cfg.s(); ++i) {
          for (int t = 0; t < *cfg.e(); ++t) {
            const auto up = hecke::crystal_step(lambda, {i, t}, Direction::Add, NodeOrder::Kleshchev, cfg);
            const auto up_mu = hecke::crystal_step(mu, {i, t}, Direction::Add, NodeOrder::Flotw, cfg);
            CHECK(up.has_value() == up_mu.has_value());
            if (up && up_mu) CHECK(hecke::kappa_map(*up, KappaDirection::Forward, cfg) == *up_mu);
          }
        }
      }
      CHECK(image.size() == fl.level(n).size());
    }
  }
}

TEST_CASE("FLOTW order on equal residues follows content in Case 2") {
  for (const auto& cfg : {ParamConfig::case2(1, 2, 2, 1, {0}), ParamConfig::case2(1, 3, 1, 2, {0, 0}),
                          ParamConfig::case2(2, 2, 1, 1, {0})}) {
    hecke::CrystalLattice fl(cfg, NodeOrder::Flotw);
    for (int n = 0; n <= 4; ++n) {
      for (const auto& lambda : fl.level(n)) {
        const auto bd = hecke::boundary_nodes(lambda);
        std::vector<hecke::Node> nodes = bd.removable;
        nodes.insert(nodes.end(), bd.addable.begin(), bd.addable.end());
        for (const auto& g : nodes) {
          for (const auto& h : nodes) {
            if (g.content() == h.content() || hecke::residue_of(g, cfg) != hecke::residue_of(h, cfg)) continue;
            CHECK((g.content() > h.content()) == hecke::is_below(g, h, NodeOrder::Flotw, cfg));
          }
        }
      }
    }
  }
}
