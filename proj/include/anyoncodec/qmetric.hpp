#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "anyoncodec/clifford.hpp"
#include "anyoncodec/dense.hpp"
#include "anyoncodec/operator_sum.hpp"

namespace anyoncodec {

inline constexpr std::size_t kMaxMetricQubits = 6;

/// Generating space E of a graph metric: the span of `generators`, which
/// always includes the identity.
struct GeneratingSet {
  std::string label;
  std::size_t size = 0;    // qubits or modes, as named by the label
  std::size_t qubits = 0;  // operators act on 2^qubits dimensions
  std::vector<OperatorSum> generators;

  std::uint64_t ambient_dim() const { return std::uint64_t{1} << (2 * qubits); }
};

GeneratingSet gen_quantum_hamming(std::size_t qubits);
GeneratingSet gen_full_clifford(std::size_t modes);
/// Identity plus the Hermitian pair products Gamma_{e_k + e_l}, k < l.
GeneratingSet gen_spinorial(std::size_t modes);
/// gen_spinorial(modes) restricted to one chirality block.
GeneratingSet gen_semispinorial(std::size_t modes, Chirality block = Chirality::Plus);

/// Linear span of operators over Q(i), maintained in echelon form on the
/// Pauli-string basis; ranks are exact.
class ExactSpan {
 public:
  explicit ExactSpan(std::size_t qubits);
  ExactSpan(const ExactSpan& other);
  ExactSpan& operator=(const ExactSpan& other);
  ExactSpan(ExactSpan&&) noexcept;
  ExactSpan& operator=(ExactSpan&&) noexcept;
  ~ExactSpan();

  std::size_t qubits() const;
  std::size_t dimension() const;
  /// Adds `op`; returns true if the dimension grew.
  bool insert(const OperatorSum& op);
  bool contains(const OperatorSum& op) const;
  /// Echelon basis rows in insertion order, realized as dense matrices.
  std::vector<DenseOperator<double>> dense_basis(std::size_t max_qubits = kDefaultMaxDenseQubits) const;

  struct Impl;
  const Impl& impl() const { return *impl_; }

 private:
  std::unique_ptr<Impl> impl_;
};

struct FiltrationReport {
  std::string label;
  std::vector<std::uint64_t> dims;  // dims[t] = dim E_t, t = 0..t_max
  std::optional<std::size_t> saturation_level;
  std::uint64_t ambient_dim = 0;
};

/// Exact dimensions of E_0 ⊆ E_1 ⊆ ... ⊆ E_{t_max}. Throws CapacityError
/// beyond kMaxMetricQubits.
FiltrationReport filtration(const GeneratingSet& gen, std::size_t t_max);

/// Spans E_0..E_{t_max} themselves.
std::vector<ExactSpan> filtration_levels(const GeneratingSet& gen, std::size_t t_max);

struct AxiomReport {
  bool identity_level = false;   // dim E_0 = 1
  bool adjoint_closed = false;   // each level closed under adjoint
  bool products_nested = false;  // sampled E_s E_t ⊆ E_{s+t}
  bool generators_adjoint_closed = false;
  bool all() const { return identity_level && adjoint_closed && products_nested && generators_adjoint_closed; }
};

AxiomReport check_axioms(const GeneratingSet& gen, std::size_t t_max, std::size_t samples = 32,
                         std::uint64_t seed = 1);

struct IsometryResult {
  bool is_isometry = true;
  std::optional<std::size_t> failing_level;
};

/// Whether U E_t U^† ⊆ E_t for t = 1..t_max, checked numerically on a basis
/// of each level.
IsometryResult isometry_check(const GeneratingSet& gen, const DenseOperator<double>& unitary, std::size_t t_max,
                              double tolerance = 1e-7);

}  // namespace anyoncodec
