#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "anyoncodec/bitvector.hpp"

namespace anyoncodec {

/// An n-qubit Pauli string i^phase * X^x * Z^z, with all X factors to the
/// left of all Z factors. Qubit 0 is the leftmost character of the text form
/// and the most significant bit of a dense basis index.
class PauliTerm {
 public:
  PauliTerm() = default;
  explicit PauliTerm(std::size_t qubits) : x_(qubits), z_(qubits) {}
  PauliTerm(BitVector x_mask, BitVector z_mask, unsigned phase_exponent = 0);

  static PauliTerm identity(std::size_t qubits) { return PauliTerm(qubits); }
  /// Single-qubit letter ('I', 'X', 'Y', 'Z') on `qubit`, identity elsewhere.
  static PauliTerm single(std::size_t qubits, std::size_t qubit, char letter);
  /// Parses "<phase> <letters>" with phase in {+1,+i,-1,-i}; the phase token
  /// may be omitted for +1.
  static PauliTerm parse(std::string_view text);

  std::size_t qubits() const { return x_.size(); }
  unsigned phase_exponent() const { return phase_; }
  const BitVector& x_mask() const { return x_; }
  const BitVector& z_mask() const { return z_; }

  /// Letter on `qubit` in {I, X, Y, Z}.
  char letter(std::size_t qubit) const;
  /// Exponent e such that the operator equals i^e times the letter string.
  unsigned letter_phase() const;
  std::string to_string() const;

  bool is_identity_up_to_phase() const { return x_.is_zero() && z_.is_zero(); }
  bool is_hermitian() const;
  bool commutes_with(const PauliTerm& other) const;

  PauliTerm adjoint() const;
  PauliTerm times_phase(unsigned exponent) const { return PauliTerm(x_, z_, phase_ + exponent); }

  PauliTerm& operator*=(const PauliTerm& rhs);
  friend PauliTerm operator*(PauliTerm lhs, const PauliTerm& rhs) { return lhs *= rhs; }

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  BitVector x_;
  BitVector z_;
  unsigned phase_ = 0;  // mod 4
};

/// Phase token for i^e: "+1", "+i", "-1", "-i".
std::string phase_token(unsigned exponent);

}  // namespace anyoncodec
