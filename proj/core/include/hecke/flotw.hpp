#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hecke/config.hpp"
#include "hecke/partition.hpp"

namespace hecke {

/// Cyclic row inequality failure: lambda^(comp)_row is smaller than the row
/// it is compared with in the next component of the same q-orbit.
struct RowInequalityWitness {
  int orbit = 0;
  int comp = 0;  // 0-based component index
  int row = 1;

  bool operator==(const RowInequalityWitness&) const = default;
};

/// The right ends of the rows of this length cover every residue of the orbit.
struct ResidueCoverWitness {
  int orbit = 0;
  int length = 1;

  bool operator==(const ResidueCoverWitness&) const = default;
};

using FlotwWitness = std::variant<RowInequalityWitness, ResidueCoverWitness>;

struct FlotwReport {
  bool member = true;
  std::optional<FlotwWitness> failed_condition;
};

/// Closed-form FLOTW test, applied orbit by orbit to the restriction of
/// `lambda`. Needs finite e and FLOTW-admissible parameters.
FlotwReport is_flotw(const Multipartition& lambda, const ParamConfig& cfg);

std::string describe(const FlotwReport& report);

enum class KappaDirection { Forward, Inverse };

/// The crystal isomorphism between the Kleshchev and the FLOTW good
/// lattices: replays a path of `lambda` in the other lattice.
/// Throws NotInLattice when `lambda` is not in the source lattice.
Multipartition kappa_map(const Multipartition& lambda, KappaDirection dir, const ParamConfig& cfg);

}  // namespace hecke
