#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anyoncodec/binary_code.hpp"
#include "anyoncodec/operator_sum.hpp"
#include "anyoncodec/qgeometry.hpp"

namespace anyoncodec {

enum class DetectVerdict { Stabilizer, Detectable, Logical };

std::string to_string(DetectVerdict v);

/// Clifford stabilizer code on `modes` = 2n Majorana modes defined by a
/// q-isotropic subspace C of F_2^{2n} and a sign c_x = +-1 per RREF basis
/// vector of C. The code space is the image of
///   P = 2^{-dim C} prod_x (I + c_x Gamma_x).
class StabilizerCode {
 public:
  /// `signs[i]` pairs with `subspace.code.basis()[i]`; empty means all +1.
  StabilizerCode(QSubspace subspace, std::vector<int> signs = {});

  std::size_t modes() const { return subspace_.length(); }
  std::size_t n() const { return modes() / 2; }
  std::size_t k() const { return n() - subspace_.dimension(); }
  std::size_t stabilizer_dimension() const { return subspace_.dimension(); }

  const QSubspace& subspace() const { return subspace_; }
  const BinaryCode& stabilizer() const { return subspace_.code; }
  const BinaryCode& complement() const { return complement_; }
  const std::vector<int>& signs() const { return signs_; }
  /// True when the stabilizer contains odd-weight (parity-flipping) elements.
  bool parity_violating() const { return subspace_.parity_class == ParityClass::MixedParity; }

  /// c_x Gamma_x for each basis vector.
  std::vector<PauliTerm> stabilizer_generators() const;

  /// Exact expansion of the product formula.
  OperatorSum projector() const;
  /// 2^{-dim C} sum_{g in C} sign(g) Gamma_g with sign(g) read off the
  /// product of signed generators; an independent route to projector().
  OperatorSum projector_by_group_sum() const;

  DetectVerdict detect(const BitVector& y) const;

 private:
  QSubspace subspace_;
  std::vector<int> signs_;
  BinaryCode complement_;
};

/// Minimum-weight vector of C^{perp_q} \ C, with ties broken by support order.
struct DistanceResult {
  std::optional<std::size_t> distance;  // absent: no logical vector
  std::optional<BitVector> witness;
  std::optional<std::size_t> even_distance;  // restricted to even-weight y
  std::optional<BitVector> even_witness;
};

/// Enumerates the 2^{dim C^{perp_q}} elements of the q-complement. Throws
/// CapacityError beyond max_enum_bits.
DistanceResult clifford_distance(const StabilizerCode& code, std::size_t max_enum_bits = kDefaultMaxEnumBits);

/// Searches F_2^{2n} by increasing weight up to `max_weight`, testing
/// membership in C^{perp_q} \ C. Distances beyond max_weight are reported absent.
DistanceResult clifford_distance_by_weight(const StabilizerCode& code, std::size_t max_weight);

struct VerdictCensus {
  std::uint64_t stabilizer = 0;
  std::uint64_t detectable = 0;
  std::uint64_t logical = 0;
  bool exhaustive = false;
};

/// Counts verdicts over all 2^{2n} vectors: by scanning when 2n <= max_enum_bits,
/// otherwise from the subspace dimensions.
VerdictCensus verdict_census(const StabilizerCode& code, std::size_t max_enum_bits = kDefaultMaxEnumBits);

/// span{(x, x) : x in C'} + span{(1_n, 0_n)} for C' the simplex code of
/// length n = 2^s - 1. The odd representative is (1_n, 0_n).
QSubspace build_hamming_subspace(std::size_t s);

}  // namespace anyoncodec
