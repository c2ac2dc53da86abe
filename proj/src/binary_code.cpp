#include "anyoncodec/binary_code.hpp"

#include <algorithm>
#include <bit>

#include "anyoncodec/errors.hpp"

namespace anyoncodec {

BinaryCode::BinaryCode(std::size_t length, std::vector<BitVector> generators)
    : length_(length), generators_(std::move(generators)) {
  if (length_ == 0) throw InputError("code length must be at least 1");
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (generators_[g].size() != length_) {
      throw InputError("generator " + std::to_string(g) + " has length " + std::to_string(generators_[g].size()) +
                       ", expected " + std::to_string(length_));
    }
  }

  std::vector<BitVector> rows = generators_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < length_ && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    pivots_.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  basis_ = std::move(rows);
}

BinaryCode BinaryCode::full(std::size_t length) {
  std::vector<BitVector> rows;
  rows.reserve(length);
  for (std::size_t i = 0; i < length; ++i) rows.push_back(BitVector::unit(length, i));
  return BinaryCode(length, std::move(rows));
}

void BinaryCode::reduce(BitVector& v) const {
  if (v.size() != length_) throw InputError("code membership: length mismatch");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (v.get(pivots_[r])) v ^= basis_[r];
  }
}

bool BinaryCode::contains(const BitVector& v) const {
  BitVector w = v;
  reduce(w);
  return w.is_zero();
}

bool BinaryCode::is_subcode_of(const BinaryCode& other) const {
  if (other.length_ != length_) return false;
  for (const auto& b : basis_) {
    if (!other.contains(b)) return false;
  }
  return true;
}

BitVector BinaryCode::codeword(std::uint64_t coeffs) const {
  BitVector v(length_);
  for (std::size_t r = 0; r < basis_.size() && coeffs != 0; ++r, coeffs >>= 1) {
    if (coeffs & 1u) v ^= basis_[r];
  }
  return v;
}

BinaryCode make_code(std::size_t length, std::vector<BitVector> generators) {
  return BinaryCode(length, std::move(generators));
}

BinaryCode dual(const BinaryCode& code) {
  const std::size_t n = code.length();
  const auto& basis = code.basis();
  const auto& pivots = code.pivots();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  // With G = [I | A] up to column order, the dual is spanned by, for each free
  // column f, e_f plus the pivots of the rows that have a one in column f.
  std::vector<BitVector> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector v = BitVector::unit(n, f);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (basis[r].get(f)) v.set(pivots[r]);
    }
    rows.push_back(std::move(v));
  }
  return BinaryCode(n, std::move(rows));
}

void for_each_codeword(const BinaryCode& code, const std::function<void(const BitVector&)>& visit,
                       std::size_t max_enum_bits) {
  const std::size_t k = code.dimension();
  if (k > max_enum_bits || k >= 63) {
    throw CapacityError("enumeration of 2^" + std::to_string(k) + " codewords exceeds the cap of 2^" +
                        std::to_string(max_enum_bits));
  }
  BitVector word(code.length());
  visit(word);
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= code.basis()[static_cast<std::size_t>(std::countr_zero(i))];
    visit(word);
  }
}

WeightProfile min_distance(const BinaryCode& code, std::size_t max_enum_bits) {
  WeightProfile profile;
  profile.counts.assign(code.length() + 1, 0);
  for_each_codeword(
      code, [&](const BitVector& w) { ++profile.counts[w.weight()]; }, max_enum_bits);
  for (std::size_t w = 1; w < profile.counts.size(); ++w) {
    if (profile.counts[w] != 0) {
      profile.min_nonzero_weight = w;
      break;
    }
  }
  return profile;
}

std::vector<BitVector> basis_columns(const BinaryCode& code) {
  const std::size_t k = code.dimension();
  std::vector<BitVector> cols(code.length(), BitVector(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c : code.basis()[r].support()) cols[c].set(r);
  }
  return cols;
}

namespace {

// True if some `remaining`-subset of columns starting at `start` xors with `acc` to zero.
bool has_zero_sum_subset(const std::vector<BitVector>& cols, std::size_t start, std::size_t remaining,
                         const BitVector& acc) {
  if (remaining == 0) return acc.is_zero();
  for (std::size_t c = start; c + remaining <= cols.size(); ++c) {
    if (has_zero_sum_subset(cols, c + 1, remaining - 1, acc ^ cols[c])) return true;
  }
  return false;
}

}  // namespace

DualDistance dual_distance_by_columns(std::size_t length, const std::vector<BitVector>& rows) {
  const std::size_t k = rows.size();
  std::vector<BitVector> cols(length, BitVector(k));
  for (std::size_t r = 0; r < k; ++r) {
    if (rows[r].size() != length) throw InputError("generator matrix rows have inconsistent lengths");
    for (std::size_t c : rows[r].support()) cols[c].set(r);
  }
  // If every (t-1)-subset is independent, a t-subset is dependent exactly when
  // its full sum vanishes, so the first t with a zero-sum t-subset is L.
  // The column rank is at most k, so a dependency shows up by t = k + 1
  // unless there are at most k columns.
  for (std::size_t t = 1; t <= std::min(k + 1, length); ++t) {
    if (has_zero_sum_subset(cols, 0, t, BitVector(k))) return {t};
  }
  return {};
}

DualDistance dual_distance_by_columns(const BinaryCode& code) {
  return dual_distance_by_columns(code.length(), code.basis());
}

std::vector<BitVector> gram_matrix(const BinaryCode& code) {
  const auto& b = code.basis();
  std::vector<BitVector> g(b.size(), BitVector(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) g[i].set(j, dot(b[i], b[j]));
  }
  return g;
}

bool is_self_orthogonal(const BinaryCode& code) {
  const auto& b = code.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) {
      if (dot(b[i], b[j])) return false;
    }
  }
  return true;
}

bool is_all_even(const BinaryCode& code) {
  for (const auto& b : code.basis()) {
    if (b.parity()) return false;
  }
  return true;
}

BinaryCode hamming_dual(std::size_t s) {
  if (s < 2 || s > 20) throw InputError("hamming_dual requires 2 <= s <= 20");
  const std::size_t n = (std::size_t{1} << s) - 1;
  std::vector<BitVector> rows(s, BitVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t value = j + 1;
    for (std::size_t r = 0; r < s; ++r) {
      if ((value >> (s - 1 - r)) & 1u) rows[r].set(j);
    }
  }
  return BinaryCode(n, std::move(rows));
}

}  // namespace anyoncodec
