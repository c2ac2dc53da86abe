#include "anyoncodec/stab_code.hpp"

#include <bit>
#include <stdexcept>

#include "anyoncodec/clifford.hpp"
#include "anyoncodec/errors.hpp"

namespace anyoncodec {

std::string to_string(DetectVerdict v) {
  switch (v) {
    case DetectVerdict::Stabilizer:
      return "Stabilizer";
    case DetectVerdict::Detectable:
      return "Detectable";
    case DetectVerdict::Logical:
      return "Logical";
  }
  return "?";
}

StabilizerCode::StabilizerCode(QSubspace subspace, std::vector<int> signs)
    : subspace_(std::move(subspace)), signs_(std::move(signs)) {
  const std::size_t len = subspace_.length();
  if (len < 2 || len % 2 != 0) {
    throw InputError("stabilizer codes need an even ambient length, got " + std::to_string(len));
  }
  if (auto w = q_witness(subspace_.code)) {
    throw PreconditionError("subspace is not q-isotropic: q(" + w->first.to_string() + ", " +
                            w->second.to_string() + ") = 1");
  }
  const std::size_t dim = subspace_.dimension();
  if (signs_.empty()) signs_.assign(dim, +1);
  if (signs_.size() != dim) {
    throw InputError("sign table has " + std::to_string(signs_.size()) + " entries for " + std::to_string(dim) +
                     " basis vectors");
  }
  for (int c : signs_) {
    if (c != 1 && c != -1) throw InputError("signs must be +1 or -1");
  }
  complement_ = q_complement(subspace_.code);

  const auto gens = stabilizer_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_hermitian()) throw std::logic_error("stabilizer generator is not Hermitian");
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].commutes_with(gens[j])) {
        throw PreconditionError("generators " + subspace_.code.basis()[i].to_string() + " and " +
                                subspace_.code.basis()[j].to_string() + " anticommute");
      }
    }
  }
}

std::vector<PauliTerm> StabilizerCode::stabilizer_generators() const {
  std::vector<PauliTerm> out;
  const auto& basis = subspace_.code.basis();
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.push_back(gamma_of(basis[i]).times_phase(signs_[i] < 0 ? 2u : 0u));
  }
  return out;
}

OperatorSum StabilizerCode::projector() const {
  const std::size_t qubits = n();
  OperatorSum p = OperatorSum::identity(qubits);
  for (const auto& g : stabilizer_generators()) {
    OperatorSum factor = OperatorSum::identity(qubits);
    factor.add(g);
    p = p * factor;
  }
  return p.scaled(DyadicComplex(1, 0, static_cast<unsigned>(stabilizer_dimension())));
}

OperatorSum StabilizerCode::projector_by_group_sum() const {
  const std::size_t dim = stabilizer_dimension();
  if (dim >= 31) throw CapacityError("stabilizer group too large to enumerate");
  const auto gens = stabilizer_generators();
  const auto& code = subspace_.code;
  OperatorSum sum(n());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    PauliTerm product = PauliTerm::identity(n());
    for (std::size_t i = 0; i < dim; ++i) {
      if ((mask >> i) & 1u) product *= gens[i];
    }
    const PauliTerm reference = gamma_of(code.codeword(mask));
    if (product.x_mask() != reference.x_mask() || product.z_mask() != reference.z_mask()) {
      throw std::logic_error("stabilizer product lands on the wrong Majorana monomial");
    }
    const unsigned relative = (product.phase_exponent() + 4 - reference.phase_exponent()) % 4;
    if (relative % 2 != 0) throw std::logic_error("stabilizer group element carries an imaginary sign");
    sum.add(reference, DyadicComplex(relative == 0 ? 1 : -1));
  }
  return sum.scaled(DyadicComplex(1, 0, static_cast<unsigned>(dim)));
}

DetectVerdict StabilizerCode::detect(const BitVector& y) const {
  if (y.size() != modes()) {
    throw InputError("error vector has length " + std::to_string(y.size()) + ", expected " +
                     std::to_string(modes()));
  }
  if (subspace_.code.contains(y)) return DetectVerdict::Stabilizer;
  for (const auto& c : subspace_.code.basis()) {
    if (q_form(y, c)) return DetectVerdict::Detectable;
  }
  return DetectVerdict::Logical;
}

namespace {

void offer(std::optional<std::size_t>& best_weight, std::optional<BitVector>& best, const BitVector& v) {
  if (!best || support_precedes(v, *best)) {
    best_weight = v.weight();
    best = v;
  }
}

}  // namespace

DistanceResult clifford_distance(const StabilizerCode& code, std::size_t max_enum_bits) {
  DistanceResult result;
  const BinaryCode& stab = code.stabilizer();
  for_each_codeword(
      code.complement(),
      [&](const BitVector& v) {
        const std::size_t w = v.weight();
        if (w == 0) return;
        const bool improves_all = !result.distance || w <= *result.distance;
        const bool improves_even = w % 2 == 0 && (!result.even_distance || w <= *result.even_distance);
        if (!improves_all && !improves_even) return;
        if (stab.contains(v)) return;
        if (improves_all) offer(result.distance, result.witness, v);
        if (improves_even) offer(result.even_distance, result.even_witness, v);
      },
      max_enum_bits);
  return result;
}

DistanceResult clifford_distance_by_weight(const StabilizerCode& code, std::size_t max_weight) {
  DistanceResult result;
  const std::size_t len = code.modes();
  const auto& basis = code.stabilizer().basis();
  auto is_logical = [&](const BitVector& y) {
    for (const auto& c : basis) {
      if (q_form(y, c)) return false;
    }
    return !code.stabilizer().contains(y);
  };

  for (std::size_t w = 1; w <= std::min(max_weight, len); ++w) {
    if (result.distance && result.even_distance) break;
    const bool need_all = !result.distance;
    const bool need_even = !result.even_distance && w % 2 == 0;
    if (!need_all && !need_even) continue;
    // Index tuples in lexicographic order, which is support order within a weight.
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      BitVector y(len);
      for (std::size_t i : idx) y.set(i);
      if (is_logical(y)) {
        if (need_all) {
          result.distance = w;
          result.witness = y;
        }
        if (need_even) {
          result.even_distance = w;
          result.even_witness = y;
        }
        break;
      }
      std::size_t i = w;
      while (i > 0 && idx[i - 1] == len - w + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return result;
}

VerdictCensus verdict_census(const StabilizerCode& code, std::size_t max_enum_bits) {
  VerdictCensus census;
  const std::size_t len = code.modes();
  const std::size_t stab_dim = code.stabilizer_dimension();
  const std::size_t comp_dim = code.complement().dimension();
  if (len > max_enum_bits || len >= 64) {
    census.stabilizer = std::uint64_t{1} << stab_dim;
    census.logical = (std::uint64_t{1} << comp_dim) - census.stabilizer;
    census.detectable = len >= 64 ? 0 : (std::uint64_t{1} << len) - (std::uint64_t{1} << comp_dim);
    return census;
  }

  // Packed single-word scan: y is in C^{perp_q} iff y is orthogonal to every
  // twisted basis vector; y is in C iff it reduces to zero on the RREF pivots.
  auto pack = [](const BitVector& v) { return v.words().empty() ? std::uint64_t{0} : v.words()[0]; };
  std::vector<std::uint64_t> twisted;
  const BinaryCode twist = q_twist(code.stabilizer());
  for (const auto& t : twist.basis()) twisted.push_back(pack(t));
  std::vector<std::uint64_t> rows;
  std::vector<std::uint64_t> pivot_bits;
  for (std::size_t r = 0; r < stab_dim; ++r) {
    rows.push_back(pack(code.stabilizer().basis()[r]));
    pivot_bits.push_back(std::uint64_t{1} << code.stabilizer().pivots()[r]);
  }

  census.exhaustive = true;
  const std::uint64_t total = std::uint64_t{1} << len;
  for (std::uint64_t y = 0; y < total; ++y) {
    std::uint64_t r = y;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (r & pivot_bits[i]) r ^= rows[i];
    }
    if (r == 0) {
      ++census.stabilizer;
      continue;
    }
    bool in_complement = true;
    for (std::uint64_t t : twisted) {
      if (std::popcount(y & t) & 1) {
        in_complement = false;
        break;
      }
    }
    if (in_complement) {
      ++census.logical;
    } else {
      ++census.detectable;
    }
  }
  return census;
}

QSubspace build_hamming_subspace(std::size_t s) {
  if (s < 2) throw InputError("Clifford Hamming construction requires s >= 2");
  const BinaryCode simplex = hamming_dual(s);
  const std::size_t n = simplex.length();
  std::vector<BitVector> gens;
  for (const auto& x : simplex.generators()) gens.push_back(x.concat(x));
  gens.push_back(BitVector::ones(n).concat(BitVector(n)));
  return classify(BinaryCode(2 * n, std::move(gens)));
}

}  // namespace anyoncodec
