#include <algorithm>
#include <functional>
#include <set>

#include "hecke/counting.hpp"
#include "hecke/crystal.hpp"
#include "hecke/error.hpp"
#include "hecke/flotw.hpp"
#include "hecke/sigma.hpp"
#include "hecke_cli/cli.hpp"

namespace hecke::cli {

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  // Records the first failure only.
  void expect(bool ok, const std::string& witness) {
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.witness = witness;
    }
  }
  bool failed() const { return !result_.pass; }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::vector<Residue> residues_near(const ParamConfig& cfg, int span) {
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

// Descent that always removes at the largest admissible residue.
std::vector<Residue> largest_first_path(Multipartition lambda, const ParamConfig& cfg) {
  std::vector<Residue> path;
  while (!lambda.empty()) {
    const auto xs = good_residues(lambda, NodeOrder::Kleshchev, cfg);
    if (xs.empty()) throw NotInLattice(lambda.to_string());
    lambda = *crystal_step(lambda, xs.back(), Direction::Remove, NodeOrder::Kleshchev, cfg);
    path.push_back(xs.back());
  }
  return {path.rbegin(), path.rend()};
}

std::string at(const Multipartition& lambda) { return "at " + lambda.to_string(); }

CheckResult check_crystal(CrystalLattice& lat, int n_max) {
  const ParamConfig& cfg = lat.config();
  Check check(std::string("crystal axioms (") + to_string(lat.order()) + ")");
  const auto residues = residues_near(cfg, n_max + 2);
  for (int n = 0; n <= n_max && !check.failed(); ++n) {
    for (const auto& lambda : lat.level(n)) {
      for (const auto& x : residues) {
        if (auto up = crystal_step(lambda, x, Direction::Add, lat.order(), cfg)) {
          check.expect(crystal_step(*up, x, Direction::Remove, lat.order(), cfg) == lambda,
                       "e~f~ != id " + at(lambda) + " residue " + to_string(x));
        }
        if (n > 0) {
          if (auto down = crystal_step(lambda, x, Direction::Remove, lat.order(), cfg)) {
            check.expect(lat.contains(*down), "e~ leaves the lattice " + at(lambda));
            check.expect(crystal_step(*down, x, Direction::Add, lat.order(), cfg) == lambda,
                         "f~e~ != id " + at(lambda) + " residue " + to_string(x));
          }
        }
      }
    }
  }
  return check.done();
}

CheckResult check_flotw(CrystalLattice& kl, CrystalLattice& fl, int n_max) {
  const ParamConfig& cfg = kl.config();
  Check check("flotw closed form and kappa");
  for (int n = 0; n <= n_max && !check.failed(); ++n) {
    std::vector<Multipartition> closed;
    for (const auto& mu : all_multipartitions(cfg.r(), n)) {
      if (is_flotw(mu, cfg).member) closed.push_back(mu);
    }
    check.expect(closed == fl.level(n), "closed form differs from generation at n = " + std::to_string(n));
    std::set<Multipartition> image;
    for (const auto& lambda : kl.level(n)) {
      const auto mu = kappa_map(lambda, KappaDirection::Forward, cfg);
      image.insert(mu);
      check.expect(kappa_map(mu, KappaDirection::Inverse, cfg) == lambda, "kappa^-1 kappa != id " + at(lambda));
    }
    check.expect(std::equal(image.begin(), image.end(), fl.level(n).begin(), fl.level(n).end()),
                 "kappa is not onto the FLOTW level n = " + std::to_string(n));
  }
  return check.done();
}

CheckResult check_h(CrystalLattice& kl, int n_max) {
  const ParamConfig& cfg = kl.config();
  Check check("h coherence");
  const bool tagged = cfg.case1_tag() || cfg.case2_tag();
  for (int n = 0; n <= n_max && !check.failed(); ++n) {
    const auto& level = kl.level(n);
    h_permutation(level, cfg);
    for (const auto& lambda : level) {
      const auto image = h_by_path(lambda, cfg);
      check.expect(h_by_path(lambda, cfg, cfg.p()) == lambda, "h^p != id " + at(lambda));
      check.expect(h_from_path(largest_first_path(lambda, cfg), cfg) == image, "path dependence " + at(lambda));
      if (tagged) check.expect(h_closed(lambda, cfg) == image, "closed form differs " + at(lambda));
    }
  }
  return check.done();
}

CheckResult check_omega(CrystalLattice& kl, int n_max) {
  const ParamConfig& cfg = kl.config();
  Check check("kappa h = omega kappa");
  const auto omega = omega_perm(cfg);
  for (int n = 0; n <= n_max && !check.failed(); ++n) {
    for (const auto& lambda : kl.level(n)) {
      const auto lhs = kappa_map(h_by_path(lambda, cfg), KappaDirection::Forward, cfg);
      const auto rhs = apply_omega(kappa_map(lambda, KappaDirection::Forward, cfg), omega);
      check.expect(lhs == rhs, at(lambda));
    }
  }
  return check.done();
}

CheckResult check_lift(CrystalLattice& kl, int n_max) {
  const ParamConfig& cfg = kl.config();
  Check check("eta lift");
  const int d = cfg.case2_tag()->d;
  for (int m : divisors(cfg.p())) {
    const auto source = lift_source_config(cfg, m);
    std::optional<CrystalLattice> small;
    if (source) small.emplace(*source, NodeOrder::Kleshchev);
    for (int n = 0; n <= n_max && !check.failed(); ++n) {
      std::vector<Multipartition> fixed;
      for (const auto& lambda : kl.level(n)) {
        if (h_by_path(lambda, cfg, m) == lambda) fixed.push_back(lambda);
      }
      std::vector<Multipartition> lifted;
      if ((n * m) % cfg.p() == 0) {
        const int small_n = n * m / cfg.p();
        if (small) {
          for (const auto& mu : small->level(small_n)) lifted.push_back(eta_lift(mu, cfg, m));
        } else if (small_n == 0) {
          lifted.push_back(eta_lift(Multipartition(d * m), cfg, m));
        }
      }
      std::sort(lifted.begin(), lifted.end());
      check.expect(std::adjacent_find(lifted.begin(), lifted.end()) == lifted.end(),
                   "lift not injective, m = " + std::to_string(m) + ", n = " + std::to_string(n));
      check.expect(lifted == fixed, "lift image differs from h^m fixed points, m = " + std::to_string(m) +
                                        ", n = " + std::to_string(n));
    }
  }
  return check.done();
}

CheckResult check_counts(const ParamConfig& cfg, int n_max) {
  Check check("counting");
  const bool tagged = cfg.case1_tag() || cfg.case2_tag();
  for (int n = 1; n <= n_max && !check.failed(); ++n) {
    const auto brute = count_report(cfg, n, CountMethod::Brute);
    const std::string where = " at n = " + std::to_string(n);
    check.expect(brute.irr_grpn_formula == brute.irr_grpn_direct,
                 "formula " + std::to_string(brute.irr_grpn_formula) + " != direct " +
                     std::to_string(brute.irr_grpn_direct) + where);
    if (tagged) {
      const auto formula = count_report(cfg, n, CountMethod::Formula);
      for (const auto& [m, count] : brute.n_tilde) {
        check.expect(formula.n_tilde.at(m) == count, "Ntilde(" + std::to_string(m) + ") brute " +
                                                         std::to_string(count) + " != formula " +
                                                         std::to_string(formula.n_tilde.at(m)) + where);
      }
    }
  }
  return check.done();
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& err) {
    return {name, false, err.what()};
  }
}

}  // namespace

std::vector<CheckResult> verify_suite(const ParamConfig& cfg, int n_max) {
  std::vector<CheckResult> out;
  CrystalLattice kl(cfg, NodeOrder::Kleshchev);
  out.push_back(guarded("crystal axioms (kleshchev)", [&] { return check_crystal(kl, n_max); }));
  const bool flotw = cfg.finite() && cfg.flotw_admissible();
  std::optional<CrystalLattice> fl;
  if (flotw) {
    fl.emplace(cfg, NodeOrder::Flotw);
    out.push_back(guarded("crystal axioms (flotw)", [&] { return check_crystal(*fl, n_max); }));
    out.push_back(guarded("flotw closed form and kappa", [&] { return check_flotw(kl, *fl, n_max); }));
  }
  out.push_back(guarded("h coherence", [&] { return check_h(kl, n_max); }));
  const auto* c2 = cfg.case2_tag();
  if (c2 && c2->k == 1) {
    out.push_back(guarded("kappa h = omega kappa", [&] { return check_omega(kl, n_max); }));
    out.push_back(guarded("eta lift", [&] { return check_lift(kl, n_max); }));
  }
  out.push_back(guarded("counting", [&] { return check_counts(cfg, n_max); }));
  return out;
}

}  // namespace hecke::cli
