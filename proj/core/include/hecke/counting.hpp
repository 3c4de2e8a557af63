#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hecke/config.hpp"

namespace hecke {

using Count = std::int64_t;

/// Classical Moebius function. Throws PreconditionError for n <= 0.
int mobius(long long n);

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

/// Number of Kleshchev multipartitions of n (size of lattice level n).
Count count_kleshchev(const ParamConfig& cfg, int n);

enum class CountMethod { Brute, Formula };

const char* to_string(CountMethod method);

/// Number of Kleshchev multipartitions of n fixed by h^m, for m dividing p.
/// Brute counts fixed points directly; Formula uses the closed sums over
/// compositions and needs a case-tagged configuration.
Count n_tilde(const ParamConfig& cfg, int n, int m, CountMethod method);

/// Moebius inversion of n_tilde over the divisors of m: the number of
/// multipartitions whose h-orbit has size exactly m.
Count n_of(const ParamConfig& cfg, int n, int m, CountMethod method = CountMethod::Brute);

enum class SimpleCountMethod { Formula, Direct };

/// Number of simple modules of the G(r,p,n) algebra. Formula evaluates the
/// Moebius-inverted orbit count (closed forms for n_tilde when the
/// configuration is tagged, brute force otherwise); Direct sums stabilizer
/// orders over h-orbits. Throws PreconditionError for n = 0 and
/// ArithmeticInconsistency if an intermediate division is not exact.
Count count_simple(const ParamConfig& cfg, int n, SimpleCountMethod method);

struct CountReport {
  int n = 0;
  Count irr_big = 0;
  std::map<int, Count> n_tilde;
  std::map<int, Count> n_of;
  Count irr_grpn_formula = 0;
  Count irr_grpn_direct = 0;
};

/// Everything in one pass over a single lattice. `method` selects how the
/// n_tilde / n_of columns and the formula count are computed.
CountReport count_report(const ParamConfig& cfg, int n, CountMethod method);

/// Evaluates the orbit-count formula from |K_n| and the N(m) values.
Count simple_count_from(const ParamConfig& cfg, Count irr_big, const std::map<int, Count>& exact_period_counts);

}  // namespace hecke
