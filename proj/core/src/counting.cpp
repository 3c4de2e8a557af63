#include "hecke/counting.hpp"

#include <numeric>

#include "hecke/crystal.hpp"
#include "hecke/error.hpp"
#include "hecke/sigma.hpp"

namespace hecke {

namespace {

void require_divisor(const ParamConfig& cfg, int m) {
  if (m < 1 || cfg.p() % m != 0) {
    throw PreconditionError("m = " + std::to_string(m) + " does not divide p = " + std::to_string(cfg.p()));
  }
}

/// Number of ordered tuples (n_1..n_parts) summing to `total`, weighted by
/// prod factor[n_i].
Count composition_sum(const std::vector<Count>& factor, int parts, int total) {
  std::vector<Count> acc(static_cast<std::size_t>(total + 1), 0);
  acc[0] = 1;
  for (int step = 0; step < parts; ++step) {
    std::vector<Count> next(acc.size(), 0);
    for (int used = 0; used <= total; ++used) {
      if (acc[static_cast<std::size_t>(used)] == 0) continue;
      for (int add = 0; used + add <= total; ++add) {
        next[static_cast<std::size_t>(used + add)] +=
            acc[static_cast<std::size_t>(used)] * factor[static_cast<std::size_t>(add)];
      }
    }
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(total)];
}

std::vector<Count> level_sizes(const ParamConfig& cfg, int n_max) {
  CrystalLattice lattice(cfg, NodeOrder::Kleshchev);
  std::vector<Count> out;
  for (int j = 0; j <= n_max; ++j) out.push_back(static_cast<Count>(lattice.level(j).size()));
  return out;
}

Count n_tilde_case1(const Case1Tag& tag, int n, int m) {
  if ((static_cast<long long>(m) * n) % tag.p != 0) return 0;
  const int total = n * m / tag.p;
  const auto factor = level_sizes(ParamConfig::single_orbit(tag.e, tag.v), total);
  return composition_sum(factor, m, total);
}

Count n_tilde_case2(const Case2Tag& tag, int n, int m) {
  const int a = std::gcd(m, tag.k);
  const int dt = std::gcd(m / a, tag.d0);
  if ((static_cast<long long>(n) * a) % tag.k != 0) return 0;
  const int total = n * a / tag.k;
  const int order = dt * tag.l;

  std::vector<Count> sub_sizes;
  const int max_sub = dt * total / tag.d0;
  if (order == 1) {
    // q'' = 1: the crystal of the orbit Lie algebra is a single point.
    sub_sizes.assign(static_cast<std::size_t>(max_sub + 1), 0);
    sub_sizes[0] = 1;
  } else {
    std::vector<int> exps;
    for (int j = 0; j < dt; ++j) {
      for (int v : tag.v) exps.push_back(v + j * tag.l);
    }
    sub_sizes = level_sizes(ParamConfig::single_orbit(order, exps), max_sub);
  }

  std::vector<Count> factor(static_cast<std::size_t>(total + 1), 0);
  for (int j = 0; j <= total; ++j) {
    if ((dt * j) % tag.d0 != 0) continue;
    factor[static_cast<std::size_t>(j)] = sub_sizes[static_cast<std::size_t>(dt * j / tag.d0)];
  }
  return composition_sum(factor, a, total);
}

Count n_tilde_formula(const ParamConfig& cfg, int n, int m) {
  if (const auto* c1 = cfg.case1_tag()) return n_tilde_case1(*c1, n, m);
  if (const auto* c2 = cfg.case2_tag()) return n_tilde_case2(*c2, n, m);
  throw PreconditionError("formula method needs a case-tagged configuration, got " + cfg.describe());
}

Count fixed_points(const std::vector<int>& cycle_lengths, int m) {
  Count out = 0;
  for (int len : cycle_lengths) out += (m % len == 0) ? 1 : 0;
  return out;
}

std::map<int, Count> invert(const std::map<int, Count>& tilde) {
  std::map<int, Count> out;
  for (const auto& [m, _] : tilde) {
    Count total = 0;
    for (int d : divisors(m)) total += mobius(m / d) * tilde.at(d);
    out[m] = total;
  }
  return out;
}

}  // namespace

int mobius(long long n) {
  if (n <= 0) throw PreconditionError("the Moebius function needs a positive argument");
  int sign = 1;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<int> divisors(int n) {
  if (n < 1) throw PreconditionError("divisors needs a positive argument");
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

const char* to_string(CountMethod method) { return method == CountMethod::Brute ? "brute" : "formula"; }

Count count_kleshchev(const ParamConfig& cfg, int n) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  CrystalLattice lattice(cfg, NodeOrder::Kleshchev);
  return static_cast<Count>(lattice.level(n).size());
}

Count n_tilde(const ParamConfig& cfg, int n, int m, CountMethod method) {
  require_divisor(cfg, m);
  if (n < 0) throw PreconditionError("n must be nonnegative");
  if (method == CountMethod::Formula) return n_tilde_formula(cfg, n, m);
  CrystalLattice lattice(cfg, NodeOrder::Kleshchev);
  return fixed_points(h_cycle_lengths(lattice.level(n), cfg), m);
}

Count n_of(const ParamConfig& cfg, int n, int m, CountMethod method) {
  require_divisor(cfg, m);
  Count total = 0;
  for (int d : divisors(m)) total += mobius(m / d) * n_tilde(cfg, n, d, method);
  return total;
}

Count simple_count_from(const ParamConfig& cfg, Count irr_big, const std::map<int, Count>& exact_period_counts) {
  const int p = cfg.p();
  Count free_part = irr_big;
  Count fixed_part = 0;
  for (const auto& [m, count] : exact_period_counts) {
    if (m == p) continue;
    free_part -= count;
    if (count % m != 0) {
      throw ArithmeticInconsistency("N(" + std::to_string(m) + ") = " + std::to_string(count) +
                                    " is not divisible by " + std::to_string(m));
    }
    fixed_part += (count / m) * (p / m);
  }
  if (free_part % p != 0) {
    throw ArithmeticInconsistency("orbit count " + std::to_string(free_part) + " is not divisible by p = " +
                                  std::to_string(p));
  }
  return free_part / p + fixed_part;
}

CountReport count_report(const ParamConfig& cfg, int n, CountMethod method) {
  if (n < 1) throw PreconditionError("simple-module counts need n >= 1");
  CrystalLattice lattice(cfg, NodeOrder::Kleshchev);
  const auto& level = lattice.level(n);
  const auto lengths = h_cycle_lengths(level, cfg);

  CountReport report;
  report.n = n;
  report.irr_big = static_cast<Count>(level.size());
  for (int m : divisors(cfg.p())) {
    report.n_tilde[m] = method == CountMethod::Brute ? fixed_points(lengths, m) : n_tilde_formula(cfg, n, m);
  }
  report.n_of = invert(report.n_tilde);
  report.irr_grpn_formula = simple_count_from(cfg, report.irr_big, report.n_of);
  for (const Orbit& orbit : orbits_and_stabilizers(level, cfg).orbits) report.irr_grpn_direct += orbit.stabilizer;
  return report;
}

Count count_simple(const ParamConfig& cfg, int n, SimpleCountMethod method) {
  if (n < 1) throw PreconditionError("simple-module counts need n >= 1");
  if (method == SimpleCountMethod::Direct) {
    Count total = 0;
    for (const Orbit& orbit : orbits_and_stabilizers(cfg, n).orbits) total += orbit.stabilizer;
    return total;
  }
  const bool tagged = cfg.case1_tag() || cfg.case2_tag();
  const CountMethod tilde_method = tagged ? CountMethod::Formula : CountMethod::Brute;
  std::map<int, Count> tilde;
  for (int m : divisors(cfg.p())) tilde[m] = n_tilde(cfg, n, m, tilde_method);
  return simple_count_from(cfg, count_kleshchev(cfg, n), invert(tilde));
}

}  // namespace hecke
