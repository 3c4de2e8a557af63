#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace hecke {

using Rational = mpq_class;

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<long long>;

/// The r-th cyclotomic polynomial, obtained by dividing x^r - 1 by the
/// cyclotomic polynomials of the proper divisors of r.
IntPoly cyclotomic_poly(int r);

/// Q(epsilon_r) realised as Q[x] / Phi_r(x).
class CyclotomicField {
 public:
  /// Shared, immutable field data for order r >= 1.
  static std::shared_ptr<const CyclotomicField> of(int r);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const IntPoly& modulus() const { return modulus_; }

 private:
  CyclotomicField(int r, IntPoly modulus) : order_(r), modulus_(std::move(modulus)) {}

  int order_;
  IntPoly modulus_;
};

/// Exact element of Q(epsilon_r) in reduced form (degree < phi(r)).
class CycElement {
 public:
  explicit CycElement(int r);  // zero
  /// Reduces an arbitrary polynomial in epsilon modulo Phi_r.
  CycElement(int r, std::vector<Rational> coeffs);

  static CycElement integer(int r, long long value);
  static CycElement epsilon(int r);
  /// epsilon^k for any integer k.
  static CycElement epsilon_power(int r, long long k);

  int order() const { return field_->order(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycElement operator-() const;
  CycElement& operator+=(const CycElement& rhs);
  CycElement& operator-=(const CycElement& rhs);
  CycElement& operator*=(const CycElement& rhs);
  friend CycElement operator+(CycElement lhs, const CycElement& rhs) { return lhs += rhs; }
  friend CycElement operator-(CycElement lhs, const CycElement& rhs) { return lhs -= rhs; }
  friend CycElement operator*(CycElement lhs, const CycElement& rhs) { return lhs *= rhs; }

  /// Multiplicative inverse; throws PreconditionError for zero.
  CycElement inverse() const;
  CycElement pow(long long k) const;

  bool operator==(const CycElement& rhs) const;

  /// Polynomial in epsilon, highest power first, e.g. "2*ε^2 - ε + 1/3".
  std::string to_string() const;

 private:
  void check_same_field(const CycElement& rhs) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

/// Dense matrix over Q(epsilon_r).
class CycMatrix {
 public:
  CycMatrix(int r, std::size_t rows, std::size_t cols);
  static CycMatrix identity(int r, std::size_t n);
  static CycMatrix from_integers(int r, const std::vector<std::vector<long long>>& entries);

  int order() const { return order_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  CycElement& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const CycElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Copies `block` into this matrix with its top-left corner at (row0, col0).
  void set_block(std::size_t row0, std::size_t col0, const CycMatrix& block);
  CycMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  CycMatrix operator*(const CycMatrix& rhs) const;
  CycMatrix scaled(const CycElement& factor) const;
  CycMatrix pow(unsigned k) const;

  bool operator==(const CycMatrix& rhs) const;

 private:
  int order_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CycElement> entries_;
};

/// Exact determinant by Gaussian elimination over the field.
/// Throws PreconditionError for non-square input.
CycElement det_exact(const CycMatrix& m);

/// Matrices of the bimodule map phi: A (x)_B A -> sum_j A^(sigma^j) for the
/// graded algebra A = sum_j a^j B with b * a^r expressed through C.
struct AppendixBlocks {
  CycMatrix c;
  CycMatrix m01;      // rs x rs block companion of C
  CycMatrix vr;       // block Vandermonde in powers of epsilon
  CycMatrix d;        // block diagonal of powers of m01
  CycMatrix m;        // blocks epsilon^(ji) * m01^i
  CycMatrix m_basis;  // same matrix read off the images of the basis
};

/// Builds every matrix for an s x s matrix C over Q(epsilon_r).
/// Throws PreconditionError when C is singular or has the wrong shape.
AppendixBlocks build_blocks(const CycMatrix& c, int r, int s);

struct BimoduleReport {
  bool pass = false;
  bool det_identity = false;        // det M = det V_r * (det M01)^(r(r-1)/2)
  bool det_nonzero = false;         // det M != 0
  bool constructions_agree = false; // block formula == basis images
  bool factorization = false;       // M == V_r * D
  bool companion_det = false;       // det M01 = (-1)^((r-1)s^2) det C
  CycElement det_m;
  CycElement det_vr;
  CycElement det_m01;
  CycElement det_c;
  CycElement predicted_det_m;
  std::string witness;  // first failing check, empty on success
};

BimoduleReport verify_bimodule_iso(const CycMatrix& c, int r, int s);

struct IdentityReport {
  bool pass = false;
  bool unit_identity = false;  // prod_{0<j<r} (1 - epsilon^j) = r
  bool vandermonde = false;    // det V_r equals its closed form
  CycElement unit_product;
  CycElement det_vr;
  CycElement det_vr_closed;
};

IdentityReport verify_identities(int r, int s);

/// Closed form of det V_r as a power of the scalar Vandermonde product.
CycElement vandermonde_closed_form(int r, int s);

/// Integer s x s matrix with entries in [-3, 3], resampled until nonsingular.
CycMatrix random_nonsingular_integer_matrix(int r, int s, std::mt19937_64& rng);

}  // namespace hecke
