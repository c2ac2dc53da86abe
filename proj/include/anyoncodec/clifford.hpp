#pragma once

#include <utility>

#include "anyoncodec/bitvector.hpp"
#include "anyoncodec/dense.hpp"
#include "anyoncodec/operator_sum.hpp"
#include "anyoncodec/pauli.hpp"

namespace anyoncodec {

/// Qubits used to represent m Majorana modes: floor(m / 2).
inline std::size_t qubits_for_modes(std::size_t modes) { return modes / 2; }

/// Jordan-Wigner Majorana operator gamma_index (1-based) among `modes`:
///   gamma_{2j+1} = Z..Z X_j,  gamma_{2j+2} = Z..Z Y_j  (j = 0-based qubit).
/// For odd `modes` the last generator is the parity operator of the first
/// modes - 1; that representation of Cl(2n+1) is not faithful.
PauliTerm majorana(std::size_t index, std::size_t modes);

/// Gamma_x = i^{w(w-1)/2} gamma_{i1} ... gamma_{iw} over the set bits of x
/// in increasing order. Hermitian with Gamma_x^2 = I.
PauliTerm gamma_of(const BitVector& x);

/// 0 when Gamma_x and Gamma_y commute, 1 when they anticommute; equals q(x, y).
bool commutation_sign(const BitVector& x, const BitVector& y);

/// i^n gamma_1 ... gamma_{2n}.
PauliTerm parity_operator(std::size_t modes);

/// Dense e^{i alpha} / sqrt(2) (I + gamma_i gamma_j) for 1 <= i < j <= modes.
/// Conjugation sends gamma_i to -gamma_j and gamma_j to gamma_i.
DenseOperator<double> braid_unitary(std::size_t i, std::size_t j, std::size_t modes, double alpha = 0.0,
                                    std::size_t max_qubits = kDefaultMaxDenseQubits);

/// Exact form of the braid (I + gamma_i gamma_j) / sqrt(2) without the
/// 1/sqrt(2): returns I + gamma_i gamma_j.
OperatorSum braid_numerator(std::size_t i, std::size_t j, std::size_t modes);

/// The (+1, -1) eigenprojectors (I +- P)/2 of the parity operator.
std::pair<DenseOperator<double>, DenseOperator<double>> chirality_split(
    std::size_t modes, std::size_t max_qubits = kDefaultMaxDenseQubits);

enum class Chirality { Plus, Minus };

/// Restriction of a parity-preserving Pauli string on n qubits to one
/// eigenspace of the parity operator, as an (n-1)-qubit Pauli string. The
/// block basis is the eigenspace's computational states in increasing
/// order, which is indexed by the first n-1 qubits.
PauliTerm compress_to_chirality(const PauliTerm& term, std::size_t modes, Chirality block);

}  // namespace anyoncodec
