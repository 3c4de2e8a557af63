#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hecke/partition.hpp"

namespace hecke {

/// Multiplicative order of q. `std::nullopt` stands for e = infinity.
using QuantumOrder = std::optional<int>;

/// A residue z_orbit * q^exp. The exponent is reduced mod e when e is finite.
struct Residue {
  int orbit = 0;
  int exp = 0;

  auto operator<=>(const Residue&) const = default;
};

std::string to_string(const Residue& x);

/// Per-component parameter Q_c = z_orbit * q^v.
struct Charge {
  int orbit = 0;
  int v = 0;

  auto operator<=>(const Charge&) const = default;
};

/// Multiplication by epsilon on residues: orbit i goes to orbit_perm[i] and
/// the exponent grows by orbit_shift[i].
struct EpsilonAction {
  std::vector<int> orbit_perm;
  std::vector<int> orbit_shift;

  bool operator==(const EpsilonAction&) const = default;
};

struct Case1Tag {
  int p = 1;
  int d = 1;
  QuantumOrder e;
  std::vector<int> v;

  bool operator==(const Case1Tag&) const = default;
};

struct Case2Tag {
  int k = 1;
  int d0 = 2;
  int l = 1;
  int d = 1;
  std::vector<int> v;

  bool operator==(const Case2Tag&) const = default;
};

using CaseTag = std::variant<std::monostate, Case1Tag, Case2Tag>;

/// Unchecked parameter datum, as read from a file or assembled by hand.
struct RawConfig {
  QuantumOrder e;
  int p = 1;
  std::vector<Charge> charges;
  EpsilonAction eps;
};

/// Validated and fully expanded parameters (q, Q_1..Q_r, epsilon).
///
/// Instances are immutable. The only ways to obtain one are validate(),
/// the two case constructors and the helpers below, all of which run the
/// same invariant checks.
class ParamConfig {
 public:
  /// Throws ConfigError when an invariant fails.
  static ParamConfig validate(const RawConfig& raw);
  static ParamConfig case1(int p, int d, QuantumOrder e, std::vector<int> v);
  static ParamConfig case2(int k, int d0, int l, int d, std::vector<int> v);
  /// One q-orbit with the given exponents and trivial epsilon (p = 1).
  static ParamConfig single_orbit(QuantumOrder e, std::vector<int> exponents);

  QuantumOrder e() const { return e_; }
  bool finite() const { return e_.has_value(); }
  int p() const { return p_; }
  int r() const { return static_cast<int>(charges_.size()); }
  int s() const { return static_cast<int>(eps_.orbit_perm.size()); }

  const std::vector<Charge>& charges() const { return charges_; }
  const Charge& charge(int comp) const;
  const EpsilonAction& eps() const { return eps_; }
  const CaseTag& tag() const { return tag_; }
  const Case1Tag* case1_tag() const { return std::get_if<Case1Tag>(&tag_); }
  const Case2Tag* case2_tag() const { return std::get_if<Case2Tag>(&tag_); }

  /// Within every q-orbit the v values are nondecreasing in component order.
  bool flotw_admissible() const { return flotw_admissible_; }

  /// Reduces an exponent mod e (identity when e is infinite).
  int reduce(long long exponent) const;

  RawConfig raw() const;
  std::string describe() const;

  bool operator==(const ParamConfig&) const = default;

 private:
  ParamConfig() = default;

  QuantumOrder e_;
  int p_ = 1;
  std::vector<Charge> charges_;
  EpsilonAction eps_;
  CaseTag tag_;
  bool flotw_admissible_ = false;
};

/// Residue z_orbit(c) * q^(v_c + b - a) of a node.
Residue residue_of(const Node& node, const ParamConfig& cfg);

/// Multiplies a residue by epsilon^power (power may be negative).
Residue apply_eps(Residue x, const ParamConfig& cfg, int power = 1);

/// Concatenates two configurations as separate (epsilon, q)-orbit classes.
/// Orbit indices of `second` are shifted past those of `first`; e and p must agree.
ParamConfig concatenate_classes(const ParamConfig& first, const ParamConfig& second);

/// Parses the JSON config document ({"case1":...}, {"case2":...} or {"raw":...}).
/// Throws ConfigError on malformed input or failed validation.
ParamConfig config_from_json(std::string_view text);

}  // namespace hecke
