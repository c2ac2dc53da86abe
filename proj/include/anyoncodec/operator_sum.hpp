#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "anyoncodec/pauli.hpp"

namespace anyoncodec {

/// Exact Gaussian dyadic rational (re + i im) / 2^shift, kept reduced so that
/// equal values compare equal. Overflow of the 64-bit numerators throws.
class DyadicComplex {
 public:
  constexpr DyadicComplex() = default;
  DyadicComplex(std::int64_t re, std::int64_t im = 0, unsigned shift = 0);

  static DyadicComplex i_power(unsigned exponent);

  std::int64_t re() const { return re_; }
  std::int64_t im() const { return im_; }
  unsigned shift() const { return shift_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  DyadicComplex conj() const { return {re_, -im_, shift_}; }
  DyadicComplex halved(unsigned times = 1) const { return {re_, im_, shift_ + times}; }
  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend DyadicComplex operator+(const DyadicComplex& a, const DyadicComplex& b);
  friend DyadicComplex operator-(const DyadicComplex& a) { return {-a.re_, -a.im_, a.shift_}; }
  friend DyadicComplex operator-(const DyadicComplex& a, const DyadicComplex& b) { return a + (-b); }
  friend DyadicComplex operator*(const DyadicComplex& a, const DyadicComplex& b);
  DyadicComplex& operator+=(const DyadicComplex& b) { return *this = *this + b; }

  friend bool operator==(const DyadicComplex&, const DyadicComplex&) = default;

 private:
  void normalize();

  std::int64_t re_ = 0;
  std::int64_t im_ = 0;
  unsigned shift_ = 0;
};

/// Finite sum of Pauli strings with exact coefficients. Each key (x, z)
/// stands for the phase-free product X^x Z^z; zero coefficients are never
/// stored.
class OperatorSum {
 public:
  using Key = std::pair<BitVector, BitVector>;

  OperatorSum() = default;
  explicit OperatorSum(std::size_t qubits) : qubits_(qubits) {}
  OperatorSum(const PauliTerm& term);  // NOLINT(google-explicit-constructor)

  static OperatorSum identity(std::size_t qubits) { return OperatorSum(PauliTerm::identity(qubits)); }

  std::size_t qubits() const { return qubits_; }
  const std::map<Key, DyadicComplex>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const PauliTerm& term, const DyadicComplex& coeff = DyadicComplex(1));
  /// Coefficient of X^x Z^z (zero when absent).
  DyadicComplex coefficient(const BitVector& x, const BitVector& z) const;
  /// Normalized trace tr(A) / 2^n, the identity coefficient.
  DyadicComplex normalized_trace() const;

  OperatorSum adjoint() const;
  OperatorSum scaled(const DyadicComplex& c) const;

  OperatorSum& operator+=(const OperatorSum& rhs);
  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
  friend OperatorSum operator-(const OperatorSum& a, const OperatorSum& b) { return a + b.scaled(DyadicComplex(-1)); }
  friend OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);

  friend bool operator==(const OperatorSum&, const OperatorSum&) = default;

 private:
  std::size_t qubits_ = 0;
  std::map<Key, DyadicComplex> terms_;
};

}  // namespace anyoncodec
