// The acceptance configuration grid, shared by property tests and the
// acceptance runner.
#pragma once

#include <string>
#include <vector>

#include "hecke/config.hpp"

namespace grid {

struct Entry {
  std::string name;
  hecke::ParamConfig cfg;
};

inline std::vector<Entry> configs() {
  using hecke::ParamConfig;
  std::vector<Entry> out;
  for (int e : {2, 3, 4}) {
    out.push_back({"r1 e=" + std::to_string(e), ParamConfig::case1(1, 1, e, {0})});
  }
  for (int p : {2, 3}) {
    for (int d : {1, 2}) {
      for (hecke::QuantumOrder e : {hecke::QuantumOrder(2), hecke::QuantumOrder(3), hecke::QuantumOrder(4),
                                    hecke::QuantumOrder()}) {
        const std::string es = e ? std::to_string(*e) : "inf";
        const std::string prefix = "case1 p=" + std::to_string(p) + " d=" + std::to_string(d) + " e=" + es;
        out.push_back({prefix + " v=0", ParamConfig::case1(p, d, e, std::vector<int>(static_cast<std::size_t>(d), 0))});
        // The [0,1] pattern, truncated to d entries.
        if (d == 2) out.push_back({prefix + " v=0,1", ParamConfig::case1(p, d, e, {0, 1})});
      }
    }
  }
  struct K {
    int k, d0, l;
  };
  for (K t : {K{1, 2, 1}, K{1, 2, 2}, K{1, 3, 1}, K{2, 2, 1}}) {
    for (int d : {1, 2}) {
      const std::string prefix = "case2 k=" + std::to_string(t.k) + " d0=" + std::to_string(t.d0) +
                                 " l=" + std::to_string(t.l) + " d=" + std::to_string(d);
      out.push_back({prefix + " v=0", ParamConfig::case2(t.k, t.d0, t.l, d, std::vector<int>(static_cast<std::size_t>(d), 0))});
      if (d == 2 && t.l >= 2) out.push_back({prefix + " v=0,1", ParamConfig::case2(t.k, t.d0, t.l, d, {0, 1})});
    }
  }
  return out;
}

}  // namespace grid
