#include "anyoncodec/clifford.hpp"

#include <cmath>

#include "anyoncodec/errors.hpp"
#include "anyoncodec/qgeometry.hpp"

namespace anyoncodec {

PauliTerm majorana(std::size_t index, std::size_t modes) {
  if (modes < 2) throw InputError("majorana requires at least 2 modes");
  if (index < 1 || index > modes) {
    throw InputError("majorana index " + std::to_string(index) + " out of range 1.." + std::to_string(modes));
  }
  const std::size_t n = qubits_for_modes(modes);
  if (index == 2 * n + 1) return parity_operator(2 * n);

  const std::size_t qubit = (index - 1) / 2;
  PauliTerm p = PauliTerm::identity(n);
  for (std::size_t q = 0; q < qubit; ++q) p *= PauliTerm::single(n, q, 'Z');
  p *= PauliTerm::single(n, qubit, index % 2 == 1 ? 'X' : 'Y');
  return p;
}

PauliTerm gamma_of(const BitVector& x) {
  const std::size_t modes = x.size();
  PauliTerm p = PauliTerm::identity(qubits_for_modes(modes));
  const auto support = x.support();
  for (std::size_t i : support) p *= majorana(i + 1, modes);
  const std::size_t w = support.size();
  return p.times_phase(static_cast<unsigned>((w * (w - 1) / 2) % 4));
}

bool commutation_sign(const BitVector& x, const BitVector& y) { return q_form(x, y); }

PauliTerm parity_operator(std::size_t modes) {
  if (modes < 2 || modes % 2 != 0) throw InputError("parity operator requires an even mode count >= 2");
  const std::size_t n = modes / 2;
  PauliTerm p = PauliTerm::identity(n);
  for (std::size_t i = 1; i <= modes; ++i) p *= majorana(i, modes);
  return p.times_phase(static_cast<unsigned>(n % 4));
}

OperatorSum braid_numerator(std::size_t i, std::size_t j, std::size_t modes) {
  if (!(i < j)) throw InputError("braid requires i < j");
  if (j > modes) throw InputError("braid mode index out of range");
  OperatorSum u = OperatorSum::identity(qubits_for_modes(modes));
  u.add(majorana(i, modes) * majorana(j, modes));
  return u;
}

DenseOperator<double> braid_unitary(std::size_t i, std::size_t j, std::size_t modes, double alpha,
                                    std::size_t max_qubits) {
  const OperatorSum numerator = braid_numerator(i, j, modes);
  const std::complex<double> prefactor = std::polar(1.0 / std::sqrt(2.0), alpha);
  return prefactor * realize<double>(numerator, max_qubits);
}

std::pair<DenseOperator<double>, DenseOperator<double>> chirality_split(std::size_t modes, std::size_t max_qubits) {
  const DenseOperator<double> parity = realize<double>(parity_operator(modes), max_qubits);
  const DenseOperator<double> id = DenseOperator<double>::Identity(parity.rows(), parity.cols());
  return {0.5 * (id + parity), 0.5 * (id - parity)};
}

PauliTerm compress_to_chirality(const PauliTerm& term, std::size_t modes, Chirality block) {
  const std::size_t n = qubits_for_modes(modes);
  if (modes % 2 != 0 || n < 2) throw InputError("chirality compression requires an even mode count >= 4");
  if (term.qubits() != n) throw InputError("chirality compression: qubit count mismatch");
  if (!term.commutes_with(parity_operator(modes))) {
    throw PreconditionError("operator " + term.to_string() + " does not preserve parity");
  }
  // The parity operator is (-1)^n Z..Z, so on the chosen block the last bit
  // of a basis state is (n + sigma + parity of the first n-1 bits) mod 2.
  const bool sigma = block == Chirality::Minus;
  const bool z_last = term.z_mask().get(n - 1);
  BitVector x = term.x_mask().erased(n - 1);
  BitVector z = term.z_mask().erased(n - 1);
  if (z_last) z ^= BitVector::ones(n - 1);
  const unsigned extra = (z_last && ((n % 2 == 1) != sigma)) ? 2u : 0u;
  return PauliTerm(std::move(x), std::move(z), term.phase_exponent() + extra);
}

}  // namespace anyoncodec
