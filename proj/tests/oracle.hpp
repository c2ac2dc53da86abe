#pragma once

// Brute-force references used by the tests. Nothing here calls into the
// library except for BitVector conversion.

#include <bit>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "anyoncodec/bitvector.hpp"

namespace oracle {

using Mask = std::uint64_t;
using Matrix = Eigen::MatrixXcd;

inline Mask to_mask(const anyoncodec::BitVector& v) {
  Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i) m |= Mask{v.get(i)} << i;
  return m;
}

inline anyoncodec::BitVector to_bits(Mask m, std::size_t n) {
  anyoncodec::BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, (m >> i) & 1);
  return v;
}

inline std::vector<Mask> to_masks(const std::vector<anyoncodec::BitVector>& rows) {
  std::vector<Mask> out;
  for (const auto& r : rows) out.push_back(to_mask(r));
  return out;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline bool q(Mask x, Mask y) { return ((popcount(x & y) + popcount(x) * popcount(y)) & 1) != 0; }

// Every XOR combination of the rows, as a set.
inline std::set<Mask> span(const std::vector<Mask>& rows) {
  std::set<Mask> words{0};
  for (Mask r : rows) {
    std::set<Mask> next = words;
    for (Mask w : words) next.insert(w ^ r);
    words = std::move(next);
  }
  return words;
}

inline std::size_t rank(const std::vector<Mask>& rows) {
  return static_cast<std::size_t>(std::countr_zero(span(rows).size()));
}

inline std::set<Mask> dual(const std::vector<Mask>& rows, std::size_t n) {
  std::set<Mask> out;
  for (Mask v = 0; v < (Mask{1} << n); ++v) {
    bool ok = true;
    for (Mask r : rows) ok = ok && (popcount(v & r) % 2 == 0);
    if (ok) out.insert(v);
  }
  return out;
}

inline std::set<Mask> q_dual(const std::vector<Mask>& rows, std::size_t n) {
  std::set<Mask> out;
  for (Mask v = 0; v < (Mask{1} << n); ++v) {
    bool ok = true;
    for (Mask r : rows) ok = ok && !q(v, r);
    if (ok) out.insert(v);
  }
  return out;
}

// 0 when the set has no nonzero word.
inline int min_nonzero_weight(const std::set<Mask>& words) {
  int best = 0;
  for (Mask w : words) {
    if (w != 0 && (best == 0 || popcount(w) < best)) best = popcount(w);
  }
  return best;
}

inline std::vector<Mask> random_rows(std::size_t count, std::size_t n, std::mt19937_64& rng) {
  std::vector<Mask> rows;
  for (std::size_t i = 0; i < count; ++i) rows.push_back(rng() & ((Mask{1} << n) - 1));
  return rows;
}

inline Matrix pauli2(char letter) {
  Matrix m(2, 2);
  const std::complex<double> i(0, 1);
  switch (letter) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  }
  return out;
}

// Qubit 0 is the leftmost tensor factor.
inline Matrix pauli_string(const std::string& letters) {
  Matrix out = Matrix::Identity(1, 1);
  for (char c : letters) out = kron(out, pauli2(c));
  return out;
}

// Jordan-Wigner gamma_index (1-based) among `modes`, from its definition.
inline Matrix majorana(std::size_t index, std::size_t modes) {
  const std::size_t n = modes / 2;
  if (index == modes && modes % 2 == 1) {
    // i^n gamma_1 ... gamma_2n
    Matrix prod = Matrix::Identity(std::size_t{1} << n, std::size_t{1} << n);
    for (std::size_t k = 1; k <= 2 * n; ++k) prod = prod * majorana(k, 2 * n);
    std::complex<double> phase(1, 0);
    for (std::size_t k = 0; k < n; ++k) phase *= std::complex<double>(0, 1);
    return phase * prod;
  }
  const std::size_t j = (index - 1) / 2;
  std::string letters(n, 'I');
  for (std::size_t k = 0; k < j; ++k) letters[k] = 'Z';
  letters[j] = (index % 2 == 1) ? 'X' : 'Y';
  return pauli_string(letters);
}

// Gamma_x = i^{w(w-1)/2} prod gamma over set bits of x, mode i <-> bit i-1.
inline Matrix gamma(Mask x, std::size_t modes) {
  const std::size_t dim = std::size_t{1} << (modes / 2);
  Matrix out = Matrix::Identity(dim, dim);
  int w = 0;
  for (std::size_t i = 0; i < modes; ++i) {
    if ((x >> i) & 1) {
      out = out * majorana(i + 1, modes);
      ++w;
    }
  }
  std::complex<double> phase(1, 0);
  for (int k = 0; k < (w * (w - 1) / 2) % 4; ++k) phase *= std::complex<double>(0, 1);
  return phase * out;
}

inline bool close(const Matrix& a, const Matrix& b, double tol = 1e-9) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

inline std::size_t dense_rank(const std::vector<Matrix>& ops) {
  if (ops.empty()) return 0;
  Matrix stacked(ops[0].size(), static_cast<Eigen::Index>(ops.size()));
  for (std::size_t c = 0; c < ops.size(); ++c) {
    stacked.col(static_cast<Eigen::Index>(c)) = Eigen::Map<const Eigen::VectorXcd>(ops[c].data(), ops[c].size());
  }
  Eigen::FullPivLU<Matrix> lu(stacked);
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(lu.rank());
}

}  // namespace oracle
