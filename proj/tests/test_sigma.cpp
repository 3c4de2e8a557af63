#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "grid.hpp"
#include "hecke/crystal.hpp"
#include "hecke/error.hpp"
#include "hecke/flotw.hpp"
#include "hecke/sigma.hpp"
#include "oracles.hpp"

using hecke::KappaDirection;
using hecke::Multipartition;
using hecke::NodeOrder;
using hecke::ParamConfig;
using hecke::Residue;

namespace {

Multipartition mp(const char* text) { return Multipartition::parse(text); }

// A path to the empty multipartition choosing a random good residue at every step.
std::vector<Residue> random_path(Multipartition lambda, const ParamConfig& cfg, std::mt19937_64& rng) {
  std::vector<Residue> path;
  while (!lambda.empty()) {
    const auto xs = hecke::good_residues(lambda, NodeOrder::Kleshchev, cfg);
    REQUIRE_FALSE(xs.empty());
    std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
    const Residue x = xs[pick(rng)];
    lambda = *hecke::crystal_step(lambda, x, hecke::Direction::Remove, NodeOrder::Kleshchev, cfg);
    path.push_back(x);
  }
  return {path.rbegin(), path.rend()};
}

}  // namespace

TEST_CASE("h examples") {
  CHECK(hecke::h_by_path(mp("-|-"), ParamConfig::case1(2, 1, 3, {0})) == mp("-|-"));
  CHECK(hecke::h_by_path(mp("1|-"), ParamConfig::case1(2, 1, 2, {0})) == mp("-|1"));
  CHECK(hecke::h_by_path(mp("1|-"), ParamConfig::case2(1, 2, 1, 1, {0})) == mp("-|1"));
  CHECK(hecke::h_closed(mp("1|-"), ParamConfig::case1(2, 1, 2, {0})) == mp("-|1"));
  CHECK(hecke::h_closed(mp("1|1"), ParamConfig::case2(1, 2, 2, 1, {0})) == mp("1|1"));
  CHECK(hecke::h_closed(mp("1|2|3|4"), ParamConfig::case1(4, 1, 3, {0})) == mp("4|1|2|3"));
  CHECK_THROWS_AS(hecke::h_by_path(mp("2|-"), ParamConfig::case1(2, 1, 2, {0})), hecke::NotInLattice);
}

TEST_CASE("h closed form needs a case tag") {
  const hecke::RawConfig raw{3, 2, {{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
  CHECK_THROWS_AS(hecke::h_closed(mp("1|-"), ParamConfig::validate(raw)), hecke::PreconditionError);
  CHECK_THROWS_AS(hecke::omega_perm(ParamConfig::case1(2, 1, 2, {0})), hecke::PreconditionError);
}

TEST_CASE("omega permutations") {
  CHECK(hecke::omega_perm(ParamConfig::case2(1, 2, 1, 1, {0})) == std::vector<int>{1, 0});
  CHECK(hecke::omega_perm(ParamConfig::case2(1, 3, 1, 1, {0})) == std::vector<int>{1, 2, 0});
  CHECK(hecke::omega_perm(ParamConfig::case2(2, 2, 1, 1, {0})) == std::vector<int>{2, 3, 1, 0});
  const std::vector<int> omega{1, 2, 0};
  CHECK(hecke::apply_omega(mp("1|2|3"), omega) == mp("3|1|2"));
  // epsilon * Q_c = Q_omega(c).
  for (const auto& cfg : {ParamConfig::case2(2, 2, 1, 2, {0, 0}), ParamConfig::case2(1, 3, 2, 2, {0, 1})}) {
    const auto w = hecke::omega_perm(cfg);
    for (int c = 0; c < cfg.r(); ++c) {
      const auto q = cfg.charge(c);
      const auto image = hecke::apply_eps({q.orbit, q.v}, cfg);
      const auto target = cfg.charge(w[static_cast<std::size_t>(c)]);
      CHECK(image == Residue{target.orbit, target.v});
    }
  }
}

TEST_CASE("orbit decomposition examples") {
  auto dec = hecke::orbits_and_stabilizers(ParamConfig::case1(2, 1, 3, {0}), 1);
  REQUIRE(dec.orbits.size() == 1);
  CHECK(dec.orbits[0].size == 2);
  CHECK(dec.orbits[0].stabilizer == 1);

  dec = hecke::orbits_and_stabilizers(ParamConfig::case1(1, 2, 3, {0, 1}), 3);
  for (const auto& o : dec.orbits) CHECK((o.size == 1 && o.stabilizer == 1));

  const auto cfg = ParamConfig::case2(1, 2, 2, 1, {0});
  dec = hecke::orbits_and_stabilizers(cfg, 2);
  hecke::CrystalLattice lat(cfg, NodeOrder::Kleshchev);
  int total = 0;
  bool found = false;
  for (const auto& o : dec.orbits) {
    total += o.size;
    CHECK(o.size * o.stabilizer == cfg.p());
    CHECK(oracle::h_orbit_length(o.representative, cfg) == o.size);
    if (o.representative == mp("1|1")) {
      found = true;
      CHECK(o.size == 1);
      CHECK(o.stabilizer == 2);
    }
  }
  CHECK(found);
  CHECK(total == static_cast<int>(lat.level(2).size()));
}

TEST_CASE("h is a permutation of order dividing p") {
  for (const auto& entry : grid::configs()) {
    CAPTURE(entry.name);
    const auto& cfg = entry.cfg;
    hecke::CrystalLattice lat(cfg, NodeOrder::Kleshchev);
    const int n_max = cfg.r() <= 2 ? 5 : 3;
    for (int n = 0; n <= n_max; ++n) {
      const auto& level = lat.level(n);
      const auto perm = hecke::h_permutation(level, cfg);
      CHECK(std::set<std::size_t>(perm.begin(), perm.end()).size() == level.size());
      const auto lengths = hecke::h_cycle_lengths(level, cfg);
      for (std::size_t i = 0; i < level.size(); ++i) {
        const auto& lambda = level[i];
        CHECK(hecke::h_by_path(lambda, cfg, cfg.p()) == lambda);
        CHECK(hecke::h_by_path(lambda, cfg, 0) == lambda);
        CHECK(hecke::h_closed(lambda, cfg) == hecke::h_by_path(lambda, cfg));
        CHECK(lengths[i] == oracle::h_orbit_length(lambda, cfg));
        // Powers compose.
        const auto once = hecke::h_by_path(lambda, cfg, 1);
        CHECK(hecke::h_by_path(once, cfg, 1) == hecke::h_by_path(lambda, cfg, 2));
        CHECK(hecke::h_by_path(once, cfg, -1) == lambda);
      }
    }
  }
}

TEST_CASE("kappa conjugates h to omega for k = 1") {
  for (const auto& entry : grid::configs()) {
    const auto* tag = entry.cfg.case2_tag();
    if (!tag || tag->k != 1) continue;
    CAPTURE(entry.name);
    const auto& cfg = entry.cfg;
    const auto omega = hecke::omega_perm(cfg);
    hecke::CrystalLattice kl(cfg, NodeOrder::Kleshchev);
    hecke::CrystalLattice fl(cfg, NodeOrder::Flotw);
    for (int n = 0; n <= 4; ++n) {
      for (const auto& lambda : kl.level(n)) {
        const auto lhs = hecke::kappa_map(hecke::h_by_path(lambda, cfg), KappaDirection::Forward, cfg);
        const auto rhs = hecke::apply_omega(hecke::kappa_map(lambda, KappaDirection::Forward, cfg), omega);
        CHECK(lhs == rhs);
      }
      for (const auto& mu : fl.level(n)) CHECK(hecke::is_flotw(hecke::apply_omega(mu, omega), cfg).member);
    }
  }
}

TEST_CASE("path independence of h") {
  std::mt19937_64 rng(20240611);
  int distinct_pairs = 0;
  for (const auto& entry : grid::configs()) {
    if (entry.cfg.r() > 4) continue;
    CAPTURE(entry.name);
    const auto& cfg = entry.cfg;
    hecke::CrystalLattice lat(cfg, NodeOrder::Kleshchev);
    for (int n = 2; n <= 4; ++n) {
      for (const auto& lambda : lat.level(n)) {
        const auto a = random_path(lambda, cfg, rng);
        const auto b = random_path(lambda, cfg, rng);
        CHECK(hecke::replay_path(a, NodeOrder::Kleshchev, cfg) == lambda);
        if (a == b) continue;
        ++distinct_pairs;
        CHECK(hecke::h_from_path(a, cfg) == hecke::h_from_path(b, cfg));
      }
    }
  }
  CHECK(distinct_pairs >= 100);
}

TEST_CASE("reordering Q conjugates h") {
  // Same residues as Case1(p=2, d=2, e=3, v=[0,1]) with each block reversed.
  const auto cfg = ParamConfig::case1(2, 2, 3, {0, 1});
  hecke::RawConfig raw = cfg.raw();
  std::swap(raw.charges[0], raw.charges[1]);
  std::swap(raw.charges[2], raw.charges[3]);
  const auto other = ParamConfig::validate(raw);
  hecke::CrystalLattice lat(cfg, NodeOrder::Kleshchev);
  hecke::CrystalLattice lat2(other, NodeOrder::Kleshchev);
  for (int n = 0; n <= 4; ++n) {
    CHECK(lat.level(n).size() == lat2.level(n).size());
    for (const auto& lambda : lat.level(n)) {
      const auto path = hecke::path_to_empty(lambda, NodeOrder::Kleshchev, cfg);
      const auto theta = hecke::replay_path(path, NodeOrder::Kleshchev, other);
      REQUIRE(theta.has_value());
      const auto h_then_theta =
          hecke::replay_path(hecke::path_to_empty(hecke::h_by_path(lambda, cfg), NodeOrder::Kleshchev, cfg),
                             NodeOrder::Kleshchev, other);
      CHECK(h_then_theta == hecke::h_by_path(*theta, other));
    }
  }
}

TEST_CASE("h acts blockwise on concatenated classes") {
  const auto first = ParamConfig::case1(2, 1, 3, {0});
  const auto second = ParamConfig::case1(2, 1, 3, {1});
  const auto both = hecke::concatenate_classes(first, second);
  hecke::CrystalLattice lat(both, NodeOrder::Kleshchev);
  hecke::CrystalLattice a(first, NodeOrder::Kleshchev);
  hecke::CrystalLattice b(second, NodeOrder::Kleshchev);
  for (int n = 0; n <= 4; ++n) {
    for (const auto& lambda : lat.level(n)) {
      const auto left = lambda.slice(0, 2);
      const auto right = lambda.slice(2, 2);
      CHECK(a.contains(left));
      CHECK(b.contains(right));
      const std::vector<Multipartition> parts{hecke::h_by_path(left, first), hecke::h_by_path(right, second)};
      CHECK(hecke::h_by_path(lambda, both) == Multipartition::concat(parts));
    }
  }
}

TEST_CASE("eta lift examples") {
  const auto cfg = ParamConfig::case2(1, 2, 2, 1, {0});
  CHECK(hecke::eta_lift(mp("-"), cfg, 1) == mp("-|-"));
  CHECK(hecke::eta_lift(mp("1"), cfg, 1) == mp("1|1"));
  CHECK(hecke::eta_lift(mp("1|1"), cfg, 2) == mp("1|1"));
  CHECK_THROWS_AS(hecke::eta_lift(mp("1"), ParamConfig::case2(2, 2, 1, 1, {0}), 1), hecke::PreconditionError);
  CHECK_THROWS_AS(hecke::eta_lift(mp("1"), cfg, 3), hecke::PreconditionError);
  CHECK_THROWS_AS(hecke::eta_lift(mp("1|1"), cfg, 1), hecke::PreconditionError);
  CHECK_FALSE(hecke::lift_source_config(ParamConfig::case2(1, 2, 1, 1, {0}), 1).has_value());
}

TEST_CASE("eta lift hits exactly the fixed points") {
  for (const auto& entry : grid::configs()) {
    const auto* tag = entry.cfg.case2_tag();
    if (!tag || tag->k != 1) continue;
    CAPTURE(entry.name);
    const auto& cfg = entry.cfg;
    hecke::CrystalLattice lat(cfg, NodeOrder::Kleshchev);
    for (int m : {1, cfg.p()}) {
      const auto source = hecke::lift_source_config(cfg, m);
      std::optional<hecke::CrystalLattice> small;
      if (source) small.emplace(*source, NodeOrder::Kleshchev);
      for (int n = 0; n <= 4; ++n) {
        std::vector<Multipartition> fixed;
        for (const auto& lambda : lat.level(n)) {
          if (hecke::h_by_path(lambda, cfg, m) == lambda) fixed.push_back(lambda);
        }
        std::vector<Multipartition> lifted;
        if ((n * m) % cfg.p() == 0) {
          const int small_n = n * m / cfg.p();
          if (small) {
            for (const auto& mu : small->level(small_n)) lifted.push_back(hecke::eta_lift(mu, cfg, m));
          } else if (small_n == 0) {
            lifted.push_back(hecke::eta_lift(Multipartition(tag->d * m), cfg, m));
          }
        }
        std::sort(lifted.begin(), lifted.end());
        CHECK(std::adjacent_find(lifted.begin(), lifted.end()) == lifted.end());
        CHECK(lifted == fixed);
      }
    }
  }
}
