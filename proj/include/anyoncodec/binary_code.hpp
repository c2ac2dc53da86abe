#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "anyoncodec/bitvector.hpp"

namespace anyoncodec {

inline constexpr std::size_t kDefaultMaxEnumBits = 28;

/// A linear subspace of F_2^n. The generator list is kept as given; the basis
/// is its reduced row-echelon form with pivots leftmost, so two codes are equal
/// exactly when their bases are.
class BinaryCode {
 public:
  BinaryCode() = default;
  BinaryCode(std::size_t length, std::vector<BitVector> generators);

  static BinaryCode zero(std::size_t length) { return BinaryCode(length, {}); }
  static BinaryCode full(std::size_t length);

  std::size_t length() const { return length_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BitVector>& generators() const { return generators_; }
  const std::vector<BitVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const BitVector& v) const;
  /// Reduces `v` in place against the basis; the result is zero iff v was in the code.
  void reduce(BitVector& v) const;
  bool is_subcode_of(const BinaryCode& other) const;

  /// Codeword for coefficient vector `coeffs` (bit j selects basis row j).
  BitVector codeword(std::uint64_t coeffs) const;

  friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
    return a.length_ == b.length_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t length_ = 0;
  std::vector<BitVector> generators_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

BinaryCode make_code(std::size_t length, std::vector<BitVector> generators);

/// Standard dual {x : x.c = 0 for all c}.
BinaryCode dual(const BinaryCode& code);

/// Visits every codeword once in Gray-code order, starting with zero. The
/// visited vector is reused between calls.
void for_each_codeword(const BinaryCode& code, const std::function<void(const BitVector&)>& visit,
                       std::size_t max_enum_bits = kDefaultMaxEnumBits);

struct WeightProfile {
  std::vector<std::uint64_t> counts;  // counts[w] = number of codewords of weight w
  std::optional<std::size_t> min_nonzero_weight;
};

/// Exhaustive weight enumeration. Throws CapacityError when dim > max_enum_bits.
WeightProfile min_distance(const BinaryCode& code, std::size_t max_enum_bits = kDefaultMaxEnumBits);

/// The largest L such that every L-1 columns of a generator matrix are
/// linearly independent; absent ("unbounded") when all columns are
/// independent, i.e. the dual code is zero.
struct DualDistance {
  std::optional<std::size_t> value;

  bool unbounded() const { return !value.has_value(); }
  std::string to_string() const { return value ? std::to_string(*value) : "unbounded"; }
  friend bool operator==(const DualDistance&, const DualDistance&) = default;
};

DualDistance dual_distance_by_columns(const BinaryCode& code);
/// Same criterion on an arbitrary generator matrix given by its rows.
DualDistance dual_distance_by_columns(std::size_t length, const std::vector<BitVector>& rows);

/// Columns of the basis matrix as vectors of length dimension().
std::vector<BitVector> basis_columns(const BinaryCode& code);

/// Gram matrix of the basis under the standard dot product; row i as a BitVector.
std::vector<BitVector> gram_matrix(const BinaryCode& code);
bool is_self_orthogonal(const BinaryCode& code);
bool is_all_even(const BinaryCode& code);

/// Simplex code: s x (2^s - 1) generator whose column j is the s-bit binary
/// expansion of j + 1 (most significant bit in row 0).
BinaryCode hamming_dual(std::size_t s);

/// Hamming code of length 2^s - 1, the dual of hamming_dual(s).
inline BinaryCode hamming_code(std::size_t s) { return dual(hamming_dual(s)); }

}  // namespace anyoncodec
