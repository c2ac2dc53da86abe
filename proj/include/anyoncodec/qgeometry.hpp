#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "anyoncodec/binary_code.hpp"

namespace anyoncodec {

/// q(x, y) = x.y + wt(x) wt(y) mod 2. Symmetric and bilinear; q(x, x) = 0.
bool q_form(const BitVector& x, const BitVector& y);

/// A pair of basis vectors with q(x, y) = 1, if any.
std::optional<std::pair<BitVector, BitVector>> q_witness(const BinaryCode& code);

/// Checks q on basis pairs only; bilinearity makes that sufficient.
bool is_q_isotropic(const BinaryCode& code);

/// {x : q(x, c) = 0 for all c in code}, computed as the standard dual of
/// span{c + wt(c) 1 : c in basis}.
BinaryCode q_complement(const BinaryCode& code);

/// The image c -> c + wt(c) 1 of the basis; its standard dual is q_complement.
BinaryCode q_twist(const BinaryCode& code);

enum class ParityClass { AllEven, MixedParity };

std::string to_string(ParityClass c);

/// A q-isotropic subspace together with its even-weight subcode and, in the
/// mixed-parity case, an odd coset representative u with code = even ∪ (even + u).
struct QSubspace {
  BinaryCode code;
  ParityClass parity_class = ParityClass::AllEven;
  BinaryCode even_part;
  std::optional<BitVector> odd_coset_rep;

  std::size_t length() const { return code.length(); }
  std::size_t dimension() const { return code.dimension(); }
};

/// Splits a code into its even-weight subcode and an odd-weight word. The odd
/// word is the first odd-weight generator in the order given, so callers
/// control which representative is reported.
std::pair<BinaryCode, std::optional<BitVector>> even_subcode(const BinaryCode& code);

/// Classifies a q-isotropic subspace as all-even or mixed-parity. Throws
/// PreconditionError naming a witness pair when the input is not q-isotropic.
QSubspace classify(const BinaryCode& subspace);

/// {(x, wt(x) mod 2) : x in S}: an all-even self-orthogonal code of length n+1.
BinaryCode extend(const QSubspace& subspace);

/// Deletes `coordinate` (default: last) from an all-even self-orthogonal code.
/// The result is q-isotropic. Throws PreconditionError with a witness otherwise.
QSubspace puncture(const BinaryCode& code, std::optional<std::size_t> coordinate = std::nullopt);

/// Uniformly random element of `code` from raw generator bits.
BitVector random_codeword(const BinaryCode& code, std::mt19937_64& rng);

/// Random q-isotropic subspace of F_2^n grown by sampling from the current
/// q-complement. Stops early when no extension exists; may return fewer than
/// `dimension` dimensions.
BinaryCode random_q_isotropic(std::size_t n, std::size_t dimension, std::mt19937_64& rng);

/// Randomized greedy search for an all-even self-orthogonal code in
/// F_2^{n+1} with dual distance at least `target_dual_distance`, returned
/// punctured on the last coordinate. `budget` bounds the number of candidate
/// draws. Deterministic per seed.
std::optional<QSubspace> search_self_orthogonal(std::size_t n, std::size_t target_dual_distance,
                                                std::uint64_t budget, std::uint64_t seed);

}  // namespace anyoncodec
