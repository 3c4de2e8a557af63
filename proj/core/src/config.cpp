#include "hecke/config.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

namespace {

std::string order_text(QuantumOrder e) { return e ? std::to_string(*e) : std::string("infinity"); }

std::string list_text(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

}  // namespace

std::string to_string(const Residue& x) { return std::to_string(x.orbit) + "." + std::to_string(x.exp); }

const Charge& ParamConfig::charge(int comp) const {
  if (comp < 0 || comp >= r()) {
    throw PreconditionError("component index " + std::to_string(comp + 1) + " out of range 1.." + std::to_string(r()));
  }
  return charges_[static_cast<std::size_t>(comp)];
}

int ParamConfig::reduce(long long exponent) const {
  if (!e_) return static_cast<int>(exponent);
  const long long m = *e_;
  return static_cast<int>(((exponent % m) + m) % m);
}

ParamConfig ParamConfig::validate(const RawConfig& raw) {
  if (raw.e && *raw.e < 2) throw ConfigError("e must be at least 2 or infinity");
  if (raw.p < 1) throw ConfigError("p must be at least 1");
  if (raw.charges.empty()) throw ConfigError("Q must contain at least one component");

  const auto& perm = raw.eps.orbit_perm;
  const int s = static_cast<int>(perm.size());
  if (s == 0) throw ConfigError("epsilon action must act on at least one orbit");
  if (raw.eps.orbit_shift.size() != perm.size()) throw ConfigError("eps_orbit_shift must have one entry per orbit");
  std::vector<bool> seen(static_cast<std::size_t>(s), false);
  for (int image : perm) {
    if (image < 0 || image >= s || seen[static_cast<std::size_t>(image)]) {
      throw ConfigError("eps_orbit_perm is not a permutation of 0.." + std::to_string(s - 1));
    }
    seen[static_cast<std::size_t>(image)] = true;
  }

  ParamConfig cfg;
  cfg.e_ = raw.e;
  cfg.p_ = raw.p;
  cfg.eps_ = raw.eps;
  for (const Charge& ch : raw.charges) {
    if (ch.orbit < 0 || ch.orbit >= s) {
      throw ConfigError("orbit index " + std::to_string(ch.orbit) + " out of range 0.." + std::to_string(s - 1));
    }
    if (raw.e && (ch.v < 0 || ch.v >= *raw.e)) {
      throw ConfigError("v = " + std::to_string(ch.v) + " out of range 0.." + std::to_string(*raw.e - 1));
    }
  }
  cfg.charges_ = raw.charges;

  // epsilon^p must fix every residue.
  for (int i = 0; i < s; ++i) {
    int orbit = i;
    long long shift = 0;
    for (int step = 0; step < raw.p; ++step) {
      shift += raw.eps.orbit_shift[static_cast<std::size_t>(orbit)];
      orbit = perm[static_cast<std::size_t>(orbit)];
    }
    if (orbit != i || cfg.reduce(shift) != 0) {
      throw ConfigError("epsilon action is not the identity at power p = " + std::to_string(raw.p));
    }
  }

  std::map<Charge, int> multiset;
  for (const Charge& ch : cfg.charges_) ++multiset[ch];
  std::map<Charge, int> image;
  for (const Charge& ch : cfg.charges_) {
    const Residue moved = apply_eps(Residue{ch.orbit, ch.v}, cfg, 1);
    ++image[Charge{moved.orbit, moved.exp}];
  }
  if (multiset != image) throw ConfigError("the multiset Q is not invariant under epsilon");

  cfg.flotw_admissible_ = true;
  std::map<int, int> last_v;
  for (const Charge& ch : cfg.charges_) {
    auto it = last_v.find(ch.orbit);
    if (it != last_v.end() && it->second > ch.v) cfg.flotw_admissible_ = false;
    last_v[ch.orbit] = ch.v;
  }
  return cfg;
}

ParamConfig ParamConfig::case1(int p, int d, QuantumOrder e, std::vector<int> v) {
  if (p < 1 || d < 1) throw ConfigError("case1 needs p >= 1 and d >= 1");
  if (static_cast<int>(v.size()) != d) throw ConfigError("case1 needs exactly d exponents v");
  for (int x : v) {
    if (x < 0 || (e && x >= *e)) {
      throw ConfigError("v = " + std::to_string(x) + " out of range 0.." + (e ? std::to_string(*e - 1) : "infinity"));
    }
  }
  RawConfig raw;
  raw.e = e;
  raw.p = p;
  for (int j = 0; j < p; ++j) {
    for (int x : v) raw.charges.push_back({j, x});
    raw.eps.orbit_perm.push_back((j + 1) % p);
    raw.eps.orbit_shift.push_back(0);
  }
  ParamConfig cfg = validate(raw);
  cfg.tag_ = Case1Tag{p, d, e, std::move(v)};
  return cfg;
}

ParamConfig ParamConfig::case2(int k, int d0, int l, int d, std::vector<int> v) {
  if (k < 1 || d0 < 2 || l < 1 || d < 1) throw ConfigError("case2 needs k >= 1, d0 >= 2, l >= 1 and d >= 1");
  if (static_cast<int>(v.size()) != d) throw ConfigError("case2 needs exactly d exponents v");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= l) {
      throw ConfigError("v = " + std::to_string(v[i]) + " out of range 0.." + std::to_string(l - 1));
    }
    if (i > 0 && v[i] < v[i - 1]) throw ConfigError("case2 needs v_1 <= ... <= v_d");
  }
  RawConfig raw;
  raw.e = d0 * l;
  raw.p = d0 * k;
  for (int j = 0; j < k; ++j) {
    for (int c = 0; c < d0; ++c) {
      for (int x : v) raw.charges.push_back({j, x + c * l});
    }
    raw.eps.orbit_perm.push_back((j + 1) % k);
    raw.eps.orbit_shift.push_back(j == k - 1 ? l : 0);
  }
  ParamConfig cfg = validate(raw);
  cfg.tag_ = Case2Tag{k, d0, l, d, std::move(v)};
  return cfg;
}

ParamConfig ParamConfig::single_orbit(QuantumOrder e, std::vector<int> exponents) {
  RawConfig raw;
  raw.e = e;
  raw.p = 1;
  for (int x : exponents) raw.charges.push_back({0, x});
  raw.eps = {{0}, {0}};
  return validate(raw);
}

RawConfig ParamConfig::raw() const { return RawConfig{e_, p_, charges_, eps_}; }

std::string ParamConfig::describe() const {
  std::ostringstream out;
  if (const auto* c1 = case1_tag()) {
    out << "case1(p=" << c1->p << ",d=" << c1->d << ",e=" << order_text(c1->e) << ",v=" << list_text(c1->v) << ")";
  } else if (const auto* c2 = case2_tag()) {
    out << "case2(k=" << c2->k << ",d0=" << c2->d0 << ",l=" << c2->l << ",d=" << c2->d << ",v=" << list_text(c2->v)
        << ")";
  } else {
    out << "raw(e=" << order_text(e_) << ",p=" << p_ << ",Q=[";
    for (std::size_t i = 0; i < charges_.size(); ++i) {
      if (i > 0) out << ',';
      out << '(' << charges_[i].orbit << ',' << charges_[i].v << ')';
    }
    out << "],perm=" << list_text(eps_.orbit_perm) << ",shift=" << list_text(eps_.orbit_shift) << ")";
  }
  return out.str();
}

Residue residue_of(const Node& node, const ParamConfig& cfg) {
  const Charge& ch = cfg.charge(node.comp);
  return Residue{ch.orbit, cfg.reduce(static_cast<long long>(ch.v) + node.col - node.row)};
}

Residue apply_eps(Residue x, const ParamConfig& cfg, int power) {
  const int p = cfg.p();
  const int steps = ((power % p) + p) % p;
  const auto& eps = cfg.eps();
  long long exp = x.exp;
  int orbit = x.orbit;
  for (int i = 0; i < steps; ++i) {
    exp += eps.orbit_shift[static_cast<std::size_t>(orbit)];
    orbit = eps.orbit_perm[static_cast<std::size_t>(orbit)];
  }
  return Residue{orbit, cfg.reduce(exp)};
}

ParamConfig concatenate_classes(const ParamConfig& first, const ParamConfig& second) {
  if (first.e() != second.e() || first.p() != second.p()) {
    throw ConfigError("concatenated classes must share e and p");
  }
  RawConfig raw = first.raw();
  const int offset = first.s();
  for (const Charge& ch : second.charges()) raw.charges.push_back({ch.orbit + offset, ch.v});
  for (int i = 0; i < second.s(); ++i) {
    raw.eps.orbit_perm.push_back(second.eps().orbit_perm[static_cast<std::size_t>(i)] + offset);
    raw.eps.orbit_shift.push_back(second.eps().orbit_shift[static_cast<std::size_t>(i)]);
  }
  return ParamConfig::validate(raw);
}

}  // namespace hecke
