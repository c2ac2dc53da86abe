#include "anyoncodec/qgeometry.hpp"

#include "anyoncodec/errors.hpp"

namespace anyoncodec {

bool q_form(const BitVector& x, const BitVector& y) {
  require_same_length(x, y, "q_form");
  return dot(x, y) ^ (x.parity() && y.parity());
}

std::optional<std::pair<BitVector, BitVector>> q_witness(const BinaryCode& code) {
  const auto& b = code.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (q_form(b[i], b[j])) return std::make_pair(b[i], b[j]);
    }
  }
  return std::nullopt;
}

bool is_q_isotropic(const BinaryCode& code) { return !q_witness(code).has_value(); }

BinaryCode q_twist(const BinaryCode& code) {
  const BitVector all_ones = BitVector::ones(code.length());
  std::vector<BitVector> rows;
  rows.reserve(code.dimension());
  for (const auto& c : code.basis()) rows.push_back(c.parity() ? c ^ all_ones : c);
  return BinaryCode(code.length(), std::move(rows));
}

BinaryCode q_complement(const BinaryCode& code) { return dual(q_twist(code)); }

std::string to_string(ParityClass c) { return c == ParityClass::AllEven ? "AllEven" : "MixedParity"; }

std::pair<BinaryCode, std::optional<BitVector>> even_subcode(const BinaryCode& code) {
  std::optional<BitVector> u;
  for (const auto& g : code.generators()) {
    if (g.parity()) {
      u = g;
      break;
    }
  }
  if (!u) return {code, std::nullopt};

  std::vector<BitVector> rows;
  rows.reserve(code.dimension());
  for (const auto& b : code.basis()) {
    BitVector e = b.parity() ? b ^ *u : b;
    if (!e.is_zero()) rows.push_back(std::move(e));
  }
  return {BinaryCode(code.length(), std::move(rows)), u};
}

QSubspace classify(const BinaryCode& subspace) {
  if (auto w = q_witness(subspace)) {
    throw PreconditionError("subspace is not q-isotropic: q(" + w->first.to_string() + ", " + w->second.to_string() +
                            ") = 1");
  }
  QSubspace out;
  out.code = subspace;
  auto [even, u] = even_subcode(subspace);
  out.even_part = std::move(even);
  out.odd_coset_rep = std::move(u);
  out.parity_class = out.odd_coset_rep ? ParityClass::MixedParity : ParityClass::AllEven;
  if (out.parity_class == ParityClass::AllEven && !is_self_orthogonal(out.code)) {
    // Unreachable for an isotropic all-even space, where q reduces to the dot product.
    throw PreconditionError("all-even q-isotropic subspace failed self-orthogonality");
  }
  return out;
}

BinaryCode extend(const QSubspace& subspace) {
  std::vector<BitVector> rows;
  rows.reserve(subspace.dimension());
  for (const auto& x : subspace.code.basis()) rows.push_back(x.appended(x.parity()));
  return BinaryCode(subspace.length() + 1, std::move(rows));
}

QSubspace puncture(const BinaryCode& code, std::optional<std::size_t> coordinate) {
  if (code.length() < 2) throw InputError("puncture requires length at least 2");
  const std::size_t coord = coordinate.value_or(code.length() - 1);
  if (coord >= code.length()) throw InputError("puncture coordinate " + std::to_string(coord) + " out of range");
  const auto& b = code.basis();
  for (const auto& row : b) {
    if (row.parity()) throw PreconditionError("code is not all-even: " + row.to_string() + " has odd weight");
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (dot(b[i], b[j])) {
        throw PreconditionError("code is not self-orthogonal: " + b[i].to_string() + " . " + b[j].to_string() +
                                " = 1");
      }
    }
  }
  std::vector<BitVector> rows;
  rows.reserve(b.size());
  for (const auto& row : b) rows.push_back(row.erased(coord));
  return classify(BinaryCode(code.length() - 1, std::move(rows)));
}

BitVector random_codeword(const BinaryCode& code, std::mt19937_64& rng) {
  BitVector v(code.length());
  std::uint64_t bits = 0;
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    if (r % 64 == 0) bits = rng();
    if (bits & 1u) v ^= code.basis()[r];
    bits >>= 1;
  }
  return v;
}

BinaryCode random_q_isotropic(std::size_t n, std::size_t dimension, std::mt19937_64& rng) {
  std::vector<BitVector> rows;
  BinaryCode current = BinaryCode::zero(n);
  while (current.dimension() < dimension) {
    const BinaryCode room = q_complement(current);
    if (room.dimension() == current.dimension()) break;
    BitVector v = random_codeword(room, rng);
    if (current.contains(v)) continue;
    rows.push_back(std::move(v));
    current = BinaryCode(n, rows);
  }
  return current;
}

std::optional<QSubspace> search_self_orthogonal(std::size_t n, std::size_t target_dual_distance,
                                                std::uint64_t budget, std::uint64_t seed) {
  if (n < 2 || target_dual_distance < 2) throw InputError("search requires n >= 2 and d >= 2");
  const std::size_t length = n + 1;
  // A nonzero dual has a word of weight at most `length`.
  if (target_dual_distance > length) return std::nullopt;

  std::mt19937_64 rng(seed);
  const BitVector all_ones = BitVector::ones(length);
  std::vector<BitVector> rows;
  BinaryCode current = BinaryCode::zero(length);

  for (std::uint64_t draw = 0; draw < budget; ++draw) {
    // Candidates: even-weight vectors orthogonal to everything chosen so far.
    std::vector<BitVector> constraints = current.basis();
    constraints.push_back(all_ones);
    const BinaryCode room = dual(BinaryCode(length, std::move(constraints)));
    if (room.dimension() == current.dimension()) {
      rows.clear();
      current = BinaryCode::zero(length);
      continue;
    }
    BitVector v = random_codeword(room, rng);
    if (current.contains(v)) continue;
    rows.push_back(std::move(v));
    current = BinaryCode(length, rows);
    const DualDistance dd = dual_distance_by_columns(current);
    if (dd.unbounded() || *dd.value >= target_dual_distance) return puncture(current);
  }
  return std::nullopt;
}

}  // namespace anyoncodec
