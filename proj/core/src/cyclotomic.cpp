#include "hecke/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "hecke/error.hpp"

namespace hecke {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rational(const IntPoly& p) {
  RatPoly out;
  out.reserve(p.size());
  for (long long c : p) out.emplace_back(static_cast<long>(c));
  return out;
}

/// Quotient and remainder of num / den over Q; den must be nonzero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  trim(num);
  if (num.size() < den.size()) return {RatPoly{}, num};
  RatPoly quot(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (std::size_t i = num.size(); i-- >= den.size();) {
    if (num[i] == 0) continue;
    const Rational factor = num[i] / lead;
    quot[i - (den.size() - 1)] = factor;
    for (std::size_t j = 0; j < den.size(); ++j) num[i - (den.size() - 1) + j] -= factor * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  trim(quot);
  return {quot, num};
}

RatPoly poly_sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly out = a;
  if (q.empty() || b.empty()) return out;
  out.resize(std::max(a.size(), q.size() + b.size() - 1));
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

/// In-place reduction modulo the monic integer polynomial `mod`.
void reduce_mod(RatPoly& p, const IntPoly& mod) {
  const std::size_t deg = mod.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (mod[j] != 0) p[i - deg + j] -= c * static_cast<long>(mod[j]);
    }
    p[i] = 0;
  }
  p.resize(deg);
}

}  // namespace

IntPoly cyclotomic_poly(int r) {
  if (r < 1) throw PreconditionError("cyclotomic polynomials need r >= 1");
  IntPoly num(static_cast<std::size_t>(r + 1), 0);
  num[0] = -1;
  num[static_cast<std::size_t>(r)] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    const IntPoly den = cyclotomic_poly(d);
    // Exact division by a monic integer polynomial.
    IntPoly quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = num.size(); i-- >= den.size();) {
      const long long factor = num[i];
      quot[i - (den.size() - 1)] = factor;
      for (std::size_t j = 0; j < den.size(); ++j) num[i - (den.size() - 1) + j] -= factor * den[j];
    }
    for (std::size_t i = 0; i + 1 < den.size(); ++i) {
      if (num[i] != 0) throw InternalError("cyclotomic division left a remainder");
    }
    num = std::move(quot);
  }
  return num;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::of(int r) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[r];
  if (!slot) slot.reset(new CyclotomicField(r, cyclotomic_poly(r)));
  return slot;
}

CycElement::CycElement(int r) : field_(CyclotomicField::of(r)), coeffs_(static_cast<std::size_t>(field_->degree())) {}

CycElement::CycElement(int r, std::vector<Rational> coeffs) : field_(CyclotomicField::of(r)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  if (coeffs_.size() < static_cast<std::size_t>(field_->degree())) coeffs_.resize(static_cast<std::size_t>(field_->degree()));
  reduce_mod(coeffs_, field_->modulus());
}

CycElement CycElement::integer(int r, long long value) {
  return CycElement(r, std::vector<Rational>{Rational(static_cast<long>(value))});
}

CycElement CycElement::epsilon(int r) { return epsilon_power(r, 1); }

CycElement CycElement::epsilon_power(int r, long long k) {
  const long long exp = ((k % r) + r) % r;
  std::vector<Rational> coeffs(static_cast<std::size_t>(exp + 1));
  coeffs.back() = 1;
  return CycElement(r, std::move(coeffs));
}

bool CycElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void CycElement::check_same_field(const CycElement& rhs) const {
  if (field_ != rhs.field_) throw PreconditionError("elements of different cyclotomic fields");
}

CycElement CycElement::operator-() const {
  CycElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycElement& CycElement::operator+=(const CycElement& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycElement& CycElement::operator-=(const CycElement& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycElement& CycElement::operator*=(const CycElement& rhs) {
  check_same_field(rhs);
  RatPoly product(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] != 0) product[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  reduce_mod(product, field_->modulus());
  coeffs_ = std::move(product);
  return *this;
}

CycElement CycElement::inverse() const {
  if (is_zero()) throw PreconditionError("zero has no inverse");
  // Extended Euclid on (Phi_r, a): tracks s with s * a = remainder mod Phi_r.
  RatPoly r0 = to_rational(field_->modulus());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1);
    RatPoly s2 = poly_sub_mul(s0, quot, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw InternalError("cyclotomic modulus is not irreducible");
  for (auto& c : s0) c /= r0[0];
  return CycElement(order(), std::move(s0));
}

CycElement CycElement::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  CycElement result = integer(order(), 1);
  CycElement base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool CycElement::operator==(const CycElement& rhs) const {
  return field_->order() == rhs.field_->order() && coeffs_ == rhs.coeffs_;
}

std::string CycElement::to_string() const {
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "ε";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CycMatrix::CycMatrix(int r, std::size_t rows, std::size_t cols)
    : order_(r), rows_(rows), cols_(cols), entries_(rows * cols, CycElement(r)) {}

CycMatrix CycMatrix::identity(int r, std::size_t n) {
  CycMatrix out(r, n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = CycElement::integer(r, 1);
  return out;
}

CycMatrix CycMatrix::from_integers(int r, const std::vector<std::vector<long long>>& entries) {
  const std::size_t rows = entries.size();
  const std::size_t cols = rows == 0 ? 0 : entries[0].size();
  CycMatrix out(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw PreconditionError("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = CycElement::integer(r, entries[i][j]);
  }
  return out;
}

void CycMatrix::set_block(std::size_t row0, std::size_t col0, const CycMatrix& block) {
  if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_) throw PreconditionError("block out of range");
  for (std::size_t i = 0; i < block.rows_; ++i) {
    for (std::size_t j = 0; j < block.cols_; ++j) at(row0 + i, col0 + j) = block.at(i, j);
  }
}

CycMatrix CycMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw PreconditionError("block out of range");
  CycMatrix out(order_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = at(row0 + i, col0 + j);
  }
  return out;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
  if (cols_ != rhs.rows_ || order_ != rhs.order_) throw PreconditionError("matrix shapes do not match");
  CycMatrix out(order_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycElement& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const CycElement& b = rhs.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

CycMatrix CycMatrix::scaled(const CycElement& factor) const {
  CycMatrix out = *this;
  for (auto& x : out.entries_) {
    if (!x.is_zero()) x *= factor;
  }
  return out;
}

CycMatrix CycMatrix::pow(unsigned k) const {
  if (!square()) throw PreconditionError("matrix power needs a square matrix");
  CycMatrix result = identity(order_, rows_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

bool CycMatrix::operator==(const CycMatrix& rhs) const {
  return order_ == rhs.order_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

CycElement det_exact(const CycMatrix& input) {
  if (!input.square()) throw PreconditionError("determinant needs a square matrix");
  const std::size_t n = input.rows();
  CycMatrix a = input;
  CycElement det = CycElement::integer(input.order(), 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return CycElement(input.order());
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      det = -det;
    }
    det *= a.at(k, k);
    const CycElement inv = a.at(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      const CycElement factor = a.at(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!a.at(k, j).is_zero()) a.at(i, j) -= factor * a.at(k, j);
      }
      a.at(i, k) = CycElement(input.order());
    }
  }
  return det;
}

AppendixBlocks build_blocks(const CycMatrix& c, int r, int s) {
  if (r < 1 || s < 1) throw PreconditionError("build_blocks needs r >= 1 and s >= 1");
  if (c.rows() != static_cast<std::size_t>(s) || !c.square() || c.order() != r) {
    throw PreconditionError("C must be an s x s matrix over Q(epsilon_r)");
  }
  if (det_exact(c).is_zero()) throw PreconditionError("C is singular");

  const auto ur = static_cast<std::size_t>(r);
  const auto us = static_cast<std::size_t>(s);
  const std::size_t rs = ur * us;
  AppendixBlocks out{c,
                     CycMatrix(r, rs, rs),
                     CycMatrix(r, ur * rs, ur * rs),
                     CycMatrix(r, ur * rs, ur * rs),
                     CycMatrix(r, ur * rs, ur * rs),
                     CycMatrix(r, ur * rs, ur * rs)};

  // Companion shape: C in the top-right corner, identities on the subdiagonal.
  out.m01.set_block(0, (ur - 1) * us, c);
  for (std::size_t i = 0; i + 1 < ur; ++i) out.m01.set_block((i + 1) * us, i * us, CycMatrix::identity(r, us));

  std::vector<CycMatrix> powers{CycMatrix::identity(r, rs)};
  for (std::size_t i = 1; i < ur; ++i) powers.push_back(powers.back() * out.m01);

  const CycMatrix id = CycMatrix::identity(r, rs);
  for (std::size_t j = 0; j < ur; ++j) {
    out.d.set_block(j * rs, j * rs, powers[j]);
    for (std::size_t i = 0; i < ur; ++i) {
      const CycElement twist = CycElement::epsilon_power(r, static_cast<long long>(i * j));
      out.vr.set_block(j * rs, i * rs, id.scaled(twist));
      out.m.set_block(j * rs, i * rs, powers[i].scaled(twist));
    }
  }

  // Basis images: b_{i1} a^{i2} (x) a^{i3} -> sum_j eps^{j i3} (b_{i1} a^{i2+i3})_(j),
  // with b_{i1} a^r = sum_k C[k][i1] b_k.
  for (std::size_t i3 = 0; i3 < ur; ++i3) {
    for (std::size_t i2 = 0; i2 < ur; ++i2) {
      for (std::size_t i1 = 0; i1 < us; ++i1) {
        const std::size_t col = i3 * rs + i2 * us + i1;
        const std::size_t t = i2 + i3;
        for (std::size_t j = 0; j < ur; ++j) {
          const CycElement twist = CycElement::epsilon_power(r, static_cast<long long>(j * i3));
          if (t < ur) {
            out.m_basis.at(j * rs + t * us + i1, col) += twist;
          } else {
            for (std::size_t k = 0; k < us; ++k) {
              out.m_basis.at(j * rs + (t - ur) * us + k, col) += twist * c.at(k, i1);
            }
          }
        }
      }
    }
  }
  return out;
}

CycElement vandermonde_closed_form(int r, int s) {
  long long exponent = 0;
  for (int a = 1; a <= r - 2; ++a) exponent += static_cast<long long>(a) * (a + 1) / 2;
  CycElement base = CycElement::epsilon_power(r, exponent);
  const CycElement one = CycElement::integer(r, 1);
  for (int b = 1; b <= r - 1; ++b) {
    for (int t = 1; t <= b; ++t) base *= CycElement::epsilon_power(r, t) - one;
  }
  return base.pow(static_cast<long long>(r) * s);
}

BimoduleReport verify_bimodule_iso(const CycMatrix& c, int r, int s) {
  const AppendixBlocks blocks = build_blocks(c, r, s);
  BimoduleReport rep{false, false, false, false, false, false,
                     det_exact(blocks.m), det_exact(blocks.vr), det_exact(blocks.m01), det_exact(c),
                     CycElement(r), {}};
  rep.predicted_det_m = rep.det_vr * rep.det_m01.pow(static_cast<long long>(r) * (r - 1) / 2);
  rep.det_identity = rep.det_m == rep.predicted_det_m;
  rep.det_nonzero = !rep.det_m.is_zero();
  rep.constructions_agree = blocks.m == blocks.m_basis;
  rep.factorization = blocks.m == blocks.vr * blocks.d;
  const long long sign_exp = static_cast<long long>(r - 1) * s * s;
  const CycElement sign = CycElement::integer(r, sign_exp % 2 == 0 ? 1 : -1);
  rep.companion_det = rep.det_m01 == sign * rep.det_c;
  if (!rep.det_identity) {
    rep.witness = "det M = " + rep.det_m.to_string() + " but det V_r * det(M01)^(r(r-1)/2) = " +
                  rep.predicted_det_m.to_string();
  } else if (!rep.det_nonzero) {
    rep.witness = "det M is zero";
  } else if (!rep.constructions_agree) {
    rep.witness = "block formula and basis images disagree";
  } else if (!rep.factorization) {
    rep.witness = "M differs from V_r * D";
  } else if (!rep.companion_det) {
    rep.witness = "det M01 = " + rep.det_m01.to_string() + " but (-1)^((r-1)s^2) det C = " +
                  (sign * rep.det_c).to_string();
  }
  rep.pass = rep.witness.empty();
  return rep;
}

IdentityReport verify_identities(int r, int s) {
  if (r < 2 || s < 1) throw PreconditionError("verify_identities needs r >= 2 and s >= 1");
  IdentityReport rep{false, false, false, CycElement::integer(r, 1), CycElement(r), vandermonde_closed_form(r, s)};
  const CycElement one = CycElement::integer(r, 1);
  for (int j = 1; j < r; ++j) rep.unit_product *= one - CycElement::epsilon_power(r, j);
  rep.unit_identity = rep.unit_product == CycElement::integer(r, r);

  const auto rs = static_cast<std::size_t>(r) * static_cast<std::size_t>(s);
  CycMatrix vr(r, static_cast<std::size_t>(r) * rs, static_cast<std::size_t>(r) * rs);
  const CycMatrix id = CycMatrix::identity(r, rs);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) {
      vr.set_block(static_cast<std::size_t>(j) * rs, static_cast<std::size_t>(i) * rs,
                   id.scaled(CycElement::epsilon_power(r, static_cast<long long>(i) * j)));
    }
  }
  rep.det_vr = det_exact(vr);
  rep.vandermonde = rep.det_vr == rep.det_vr_closed;
  rep.pass = rep.unit_identity && rep.vandermonde;
  return rep;
}

CycMatrix random_nonsingular_integer_matrix(int r, int s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    std::vector<std::vector<long long>> rows(static_cast<std::size_t>(s), std::vector<long long>(static_cast<std::size_t>(s)));
    for (auto& row : rows) {
      for (auto& x : row) x = entry(rng);
    }
    CycMatrix c = CycMatrix::from_integers(r, rows);
    if (!det_exact(c).is_zero()) return c;
  }
}

}  // namespace hecke
