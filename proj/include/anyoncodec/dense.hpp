#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "anyoncodec/errors.hpp"
#include "anyoncodec/operator_sum.hpp"
#include "anyoncodec/pauli.hpp"

namespace anyoncodec {

inline constexpr std::size_t kDefaultMaxDenseQubits = 12;
inline constexpr double kDenseTolerance = 1e-9;

template <typename Real = double>
using DenseOperator = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

inline void check_dense_cap(std::size_t qubits, std::size_t max_qubits) {
  if (qubits > max_qubits) {
    throw CapacityError("dense realization of " + std::to_string(qubits) + " qubits exceeds the cap of " +
                        std::to_string(max_qubits));
  }
}

/// Packs a qubit mask into a basis index with qubit 0 as the most significant bit.
inline std::uint64_t mask_index(const BitVector& mask) {
  std::uint64_t idx = 0;
  const std::size_t n = mask.size();
  for (std::size_t q = 0; q < n; ++q) {
    if (mask.get(q)) idx |= std::uint64_t{1} << (n - 1 - q);
  }
  return idx;
}

template <typename Real>
std::complex<Real> i_power(unsigned e) {
  switch (e % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

/// Adds coeff * X^x Z^z into `out`: column c maps to row c ^ x with sign (-1)^{z.c}.
template <typename Real>
void accumulate_pauli(DenseOperator<Real>& out, std::uint64_t x, std::uint64_t z, std::complex<Real> coeff) {
  const auto dim = static_cast<std::uint64_t>(out.cols());
  for (std::uint64_t c = 0; c < dim; ++c) {
    const bool negative = std::popcount(z & c) & 1;
    out(static_cast<Eigen::Index>(c ^ x), static_cast<Eigen::Index>(c)) += negative ? -coeff : coeff;
  }
}

}  // namespace detail

template <typename Real = double>
DenseOperator<Real> realize(const PauliTerm& p, std::size_t max_qubits = kDefaultMaxDenseQubits) {
  detail::check_dense_cap(p.qubits(), max_qubits);
  const Eigen::Index dim = Eigen::Index{1} << p.qubits();
  DenseOperator<Real> out = DenseOperator<Real>::Zero(dim, dim);
  detail::accumulate_pauli<Real>(out, detail::mask_index(p.x_mask()), detail::mask_index(p.z_mask()),
                                 detail::i_power<Real>(p.phase_exponent()));
  return out;
}

template <typename Real = double>
DenseOperator<Real> realize(const OperatorSum& op, std::size_t max_qubits = kDefaultMaxDenseQubits) {
  detail::check_dense_cap(op.qubits(), max_qubits);
  const Eigen::Index dim = Eigen::Index{1} << op.qubits();
  DenseOperator<Real> out = DenseOperator<Real>::Zero(dim, dim);
  for (const auto& [key, c] : op.terms()) {
    const std::complex<double> v = c.to_complex();
    detail::accumulate_pauli<Real>(out, detail::mask_index(key.first), detail::mask_index(key.second),
                                   std::complex<Real>(static_cast<Real>(v.real()), static_cast<Real>(v.imag())));
  }
  return out;
}

/// Entrywise absolute comparison.
template <typename DerivedA, typename DerivedB>
bool is_close(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
              double tolerance = kDenseTolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tolerance;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tolerance = kDenseTolerance) {
  using Matrix = typename Derived::PlainObject;
  return is_close(u.adjoint() * u, Matrix::Identity(u.rows(), u.cols()), tolerance);
}

/// Numerical rank of a set of operators viewed as vectors in C^{d^2}:
/// singular values above `threshold` times the largest one.
template <typename Real>
std::size_t dense_rank(const std::vector<DenseOperator<Real>>& ops, double threshold = 1e-7) {
  if (ops.empty()) return 0;
  const Eigen::Index len = ops.front().size();
  DenseOperator<Real> stacked(len, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    stacked.col(static_cast<Eigen::Index>(k)) = ops[k].reshaped();
  }
  Eigen::JacobiSVD<DenseOperator<Real>> svd(stacked);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == Real(0)) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold * sv(0)) ++rank;
  }
  return rank;
}

}  // namespace anyoncodec
