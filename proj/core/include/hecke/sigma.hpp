#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hecke/config.hpp"
#include "hecke/crystal.hpp"
#include "hecke/partition.hpp"

namespace hecke {

/// h^power(lambda): take a Kleshchev path of lambda, multiply every residue
/// by epsilon^power and replay it. Throws NotInLattice for non-Kleshchev
/// input and InternalError if the twisted path fails to replay.
Multipartition h_by_path(const Multipartition& lambda, const ParamConfig& cfg, int power = 1);

/// Same as h_by_path but starting from a caller-supplied path of lambda.
Multipartition h_from_path(std::span<const Residue> path, const ParamConfig& cfg, int power = 1);

/// Closed forms for h on case-tagged configurations.
///
/// Case 1 rotates the p blocks of d components to the right. Case 2 rotates
/// the k blocks of d0*d components and applies the single-orbit map
/// kappa^-1 . omega . kappa to the wrapped block.
Multipartition h_closed(const Multipartition& lambda, const ParamConfig& cfg);

/// The component permutation omega of a Case 2 configuration, with
/// epsilon * Q_c = Q_omega(c). Entry c holds omega(c); both 0-based.
std::vector<int> omega_perm(const ParamConfig& cfg);

/// Moves component c of mu to position omega[c].
Multipartition apply_omega(const Multipartition& mu, std::span<const int> omega);

/// The k = 1 configuration carried by a single q-orbit block of a Case 2
/// configuration (components with exponents v_i + c*l).
ParamConfig case2_block_config(const ParamConfig& cfg);

struct Orbit {
  Multipartition representative;
  int size = 0;
  int stabilizer = 0;
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;
};

/// Index permutation of h^power on a canonically sorted Kleshchev level.
std::vector<std::size_t> h_permutation(std::span<const Multipartition> level, const ParamConfig& cfg, int power = 1);

/// Length of the h-cycle through each vertex of a sorted Kleshchev level.
std::vector<int> h_cycle_lengths(std::span<const Multipartition> level, const ParamConfig& cfg);

/// C_p-orbits on the Kleshchev level n, representatives being the canonical minimum.
OrbitDecomposition orbits_and_stabilizers(const ParamConfig& cfg, int n);
OrbitDecomposition orbits_and_stabilizers(std::span<const Multipartition> level, const ParamConfig& cfg);

/// Source configuration of the lift for a Case 2, k = 1 configuration and a
/// divisor m of p: one q-orbit, e' = m*l and exponents v_i + j*l for j < m.
/// Returns nullopt when m*l = 1, where the source crystal is a single point.
std::optional<ParamConfig> lift_source_config(const ParamConfig& cfg, int m);

/// Lifts a Kleshchev multipartition of the source configuration to an
/// h^m-fixed Kleshchev multipartition of `cfg`, expanding each residue t of
/// its path into t, m*l + t, ..., (p - m)*l + t.
Multipartition eta_lift(const Multipartition& small, const ParamConfig& cfg, int m);

}  // namespace hecke
