#include <gtest/gtest.h>

#include "anyoncodec/clifford.hpp"
#include "anyoncodec/errors.hpp"
#include "anyoncodec/qgeometry.hpp"
#include "oracle.hpp"

using namespace anyoncodec;
using oracle::Matrix;

namespace {

const std::complex<double> I(0, 1);

PauliTerm random_pauli(std::size_t qubits, std::mt19937_64& rng) {
  BitVector x(qubits), z(qubits);
  for (std::size_t q = 0; q < qubits; ++q) {
    x.set(q, rng() & 1);
    z.set(q, rng() & 1);
  }
  return PauliTerm(x, z, static_cast<unsigned>(rng() % 4));
}

Matrix letters_matrix(const PauliTerm& p) {
  std::string letters;
  for (std::size_t q = 0; q < p.qubits(); ++q) letters.push_back(p.letter(q));
  std::complex<double> phase(1, 0);
  for (unsigned k = 0; k < p.letter_phase(); ++k) phase *= I;
  return phase * oracle::pauli_string(letters);
}

// Columns: computational states of the chosen parity eigenspace, increasing.
Matrix block_isometry(std::size_t modes, Chirality block) {
  const std::size_t n = modes / 2;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::size_t> states;
  for (std::size_t b = 0; b < dim; ++b) {
    const int eigen = ((n + std::popcount(b)) % 2 == 0) ? 1 : -1;
    if ((eigen == 1) == (block == Chirality::Plus)) states.push_back(b);
  }
  Matrix v = Matrix::Zero(dim, states.size());
  for (std::size_t c = 0; c < states.size(); ++c) v(states[c], c) = 1;
  return v;
}

}  // namespace

TEST(Pauli, ParseAndPrint) {
  const PauliTerm p = PauliTerm::parse("-i XZIY");
  EXPECT_EQ(p.letter(0), 'X');
  EXPECT_EQ(p.letter(3), 'Y');
  EXPECT_EQ(p.to_string(), "-i XZIY");
  EXPECT_EQ(PauliTerm::parse("XY").to_string(), "+1 XY");
  EXPECT_THROW(PauliTerm::parse("+2 XX"), InputError);
  EXPECT_THROW(PauliTerm::parse("XQ"), InputError);
  EXPECT_EQ(phase_token(3), "-i");
}

TEST(Pauli, RealizeMatchesKron) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const PauliTerm p = random_pauli(n, rng);
    EXPECT_TRUE(oracle::close(realize(p), letters_matrix(p))) << p.to_string();
  }
  EXPECT_TRUE(oracle::close(realize(PauliTerm::identity(3)), Matrix::Identity(8, 8)));
}

TEST(Pauli, ProductIsHomomorphism) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const PauliTerm a = random_pauli(n, rng);
    const PauliTerm b = random_pauli(n, rng);
    const Matrix ma = realize(a), mb = realize(b);
    EXPECT_TRUE(oracle::close(realize(a * b), ma * mb));
    EXPECT_TRUE(oracle::close(realize(a.adjoint()), ma.adjoint()));
    EXPECT_EQ(a.commutes_with(b), oracle::close(ma * mb, mb * ma));
    EXPECT_EQ(a.is_hermitian(), oracle::close(ma, ma.adjoint()));
  }
}

TEST(OperatorSumTest, ArithmeticMatchesDense) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 3;
    OperatorSum a(n), b(n);
    for (int k = 0; k < 4; ++k) {
      a.add(random_pauli(n, rng), DyadicComplex(static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 5) - 2, rng() % 3));
      b.add(random_pauli(n, rng), DyadicComplex(static_cast<int>(rng() % 7) - 3, 0, rng() % 2));
    }
    const Matrix ma = realize(a), mb = realize(b);
    EXPECT_TRUE(oracle::close(realize(a * b), ma * mb));
    EXPECT_TRUE(oracle::close(realize(a + b), ma + mb));
    EXPECT_TRUE(oracle::close(realize(a - b), ma - mb));
    EXPECT_TRUE(oracle::close(realize(a.adjoint()), ma.adjoint()));
    const std::complex<double> tr = ma.trace() / static_cast<double>(ma.rows());
    EXPECT_NEAR(std::abs(a.normalized_trace().to_complex() - tr), 0.0, 1e-12);
  }
  EXPECT_TRUE((OperatorSum(PauliTerm::parse("XX")) - OperatorSum(PauliTerm::parse("XX"))).is_zero());
}

TEST(DyadicComplexTest, Normalization) {
  EXPECT_EQ(DyadicComplex(2, 4, 1), DyadicComplex(1, 2, 0));
  EXPECT_EQ(DyadicComplex(1, 0, 1) + DyadicComplex(1, 0, 1), DyadicComplex(1));
  EXPECT_EQ(DyadicComplex::i_power(1) * DyadicComplex::i_power(1), DyadicComplex(-1));
  EXPECT_EQ(DyadicComplex(0, 0, 5).shift(), 0u);
}

TEST(Majorana, MatchesJordanWigner) {
  for (std::size_t m = 1; m <= 9; ++m) {
    for (std::size_t i = 1; i <= m; ++i) {
      if (m == 1) continue;
      EXPECT_TRUE(oracle::close(realize(majorana(i, m)), oracle::majorana(i, m))) << i << "/" << m;
    }
  }
  EXPECT_TRUE(oracle::close(realize(majorana(1, 2)), oracle::pauli2('X')));
  EXPECT_TRUE(oracle::close(realize(majorana(2, 2)), oracle::pauli2('Y')));
  EXPECT_TRUE(oracle::close(realize(majorana(1, 2) * majorana(2, 2)), I * oracle::pauli2('Z')));
}

TEST(Majorana, Relations) {
  for (std::size_t m : {2u, 4u, 6u, 8u}) {
    const std::size_t dim = std::size_t{1} << (m / 2);
    for (std::size_t i = 1; i <= m; ++i) {
      const Matrix gi = realize(majorana(i, m));
      EXPECT_TRUE(oracle::close(gi * gi, Matrix::Identity(dim, dim)));
      EXPECT_TRUE(oracle::close(gi, gi.adjoint()));
      for (std::size_t j = i + 1; j <= m; ++j) {
        const Matrix gj = realize(majorana(j, m));
        EXPECT_TRUE(oracle::close(gi * gj + gj * gi, Matrix::Zero(dim, dim)));
      }
    }
  }
}

TEST(Gamma, MatchesDefinition) {
  EXPECT_EQ(gamma_of(BitVector(4)), PauliTerm::identity(2));
  EXPECT_TRUE(oracle::close(realize(gamma_of(BitVector::from_string("11"))), -oracle::pauli2('Z')));
  for (std::size_t m : {2u, 4u, 6u}) {
    const std::size_t dim = std::size_t{1} << (m / 2);
    for (oracle::Mask x = 0; x < (oracle::Mask{1} << m); ++x) {
      const Matrix g = realize(gamma_of(oracle::to_bits(x, m)));
      EXPECT_TRUE(oracle::close(g, oracle::gamma(x, m)));
      EXPECT_TRUE(oracle::close(g, g.adjoint()));
      EXPECT_TRUE(oracle::close(g * g, Matrix::Identity(dim, dim)));
    }
  }
}

TEST(Gamma, CommutationSignIsQForm) {
  // m = 4 against dense matrices, all pairs
  for (oracle::Mask x = 0; x < 16; ++x) {
    for (oracle::Mask y = 0; y < 16; ++y) {
      const Matrix gx = oracle::gamma(x, 4), gy = oracle::gamma(y, 4);
      const bool anticommute = !oracle::close(gx * gy, gy * gx);
      EXPECT_EQ(commutation_sign(oracle::to_bits(x, 4), oracle::to_bits(y, 4)), anticommute);
    }
  }
  EXPECT_TRUE(commutation_sign(BitVector::from_string("1100"), BitVector::from_string("1010")));
  EXPECT_TRUE(!oracle::close(oracle::gamma(0b0011, 4) * oracle::gamma(0b0101, 4),
                             oracle::gamma(0b0101, 4) * oracle::gamma(0b0011, 4)));
  // m = 6 exhaustive against exact Pauli arithmetic
  std::vector<PauliTerm> gammas;
  for (oracle::Mask x = 0; x < 64; ++x) gammas.push_back(gamma_of(oracle::to_bits(x, 6)));
  for (oracle::Mask x = 0; x < 64; ++x) {
    for (oracle::Mask y = 0; y < 64; ++y) {
      EXPECT_EQ(!gammas[x].commutes_with(gammas[y]), oracle::q(x, y));
    }
  }
}

TEST(Parity, OperatorAndBehavior) {
  EXPECT_TRUE(oracle::close(realize(parity_operator(2)), -oracle::pauli2('Z')));
  for (std::size_t m : {2u, 4u, 6u, 8u, 10u}) {
    const std::size_t dim = std::size_t{1} << (m / 2);
    const Matrix p = realize(parity_operator(m));
    EXPECT_TRUE(oracle::close(p * p, Matrix::Identity(dim, dim)));
    for (std::size_t i = 1; i <= m; ++i) {
      const Matrix g = realize(majorana(i, m));
      EXPECT_TRUE(oracle::close(p * g, -g * p));
    }
  }
}

TEST(Braid, UnitaryAndConjugation) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 30; ++t) {
    const std::size_t m = 2 * (1 + rng() % 4);
    const std::size_t i = 1 + rng() % (m - 1);
    const std::size_t j = i + 1 + rng() % (m - i);
    const double alpha = static_cast<double>(rng() % 1000) / 100.0;
    const Matrix u = braid_unitary(i, j, m, alpha);
    const std::size_t dim = std::size_t{1} << (m / 2);
    EXPECT_TRUE(oracle::close(u.adjoint() * u, Matrix::Identity(dim, dim)));
    const Matrix gi = oracle::majorana(i, m), gj = oracle::majorana(j, m);
    EXPECT_TRUE(oracle::close(u * gi * u.adjoint(), -gj));
    EXPECT_TRUE(oracle::close(u * gj * u.adjoint(), gi));
    // U^2 is proportional to gamma_i gamma_j
    const Matrix u2 = u * u;
    const Matrix gg = gi * gj;
    const std::complex<double> ratio = (gg.adjoint() * u2).trace() / static_cast<double>(dim);
    EXPECT_NEAR(std::abs(ratio), 1.0, 1e-9);
    EXPECT_TRUE(oracle::close(u2, ratio * gg));
    const Matrix num = realize(braid_numerator(i, j, m));
    EXPECT_TRUE(oracle::close(num, Matrix::Identity(dim, dim) + gi * gj));
  }
  EXPECT_THROW(braid_unitary(2, 2, 4), InputError);
}

TEST(Chirality, SplitProjectors) {
  for (std::size_t m : {2u, 4u, 6u, 8u, 10u}) {
    const std::size_t dim = std::size_t{1} << (m / 2);
    const auto [plus, minus] = chirality_split(m);
    EXPECT_TRUE(oracle::close(plus + minus, Matrix::Identity(dim, dim)));
    EXPECT_TRUE(oracle::close(plus * plus, plus));
    EXPECT_TRUE(oracle::close(minus * minus, minus));
    EXPECT_EQ(oracle::dense_rank({plus}), 1u);
    Eigen::SelfAdjointEigenSolver<Matrix> es(plus);
    int ones = 0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) ones += es.eigenvalues()(k) > 0.5;
    EXPECT_EQ(static_cast<std::size_t>(ones), dim / 2);
    for (oracle::Mask x = 0; x < (oracle::Mask{1} << m); x += 3) {
      if (oracle::popcount(x) % 2 != 0) continue;
      const Matrix g = oracle::gamma(x, m);
      EXPECT_TRUE(oracle::close(plus * g, g * plus));
    }
  }
}

TEST(Chirality, CompressionMatchesBlockRestriction) {
  for (std::size_t m : {4u, 6u, 8u}) {
    for (Chirality block : {Chirality::Plus, Chirality::Minus}) {
      const Matrix v = block_isometry(m, block);
      for (oracle::Mask x = 0; x < (oracle::Mask{1} << m); ++x) {
        const PauliTerm g = gamma_of(oracle::to_bits(x, m));
        if (oracle::popcount(x) % 2 != 0) {
          EXPECT_THROW(compress_to_chirality(g, m, block), PreconditionError);
          continue;
        }
        const Matrix expected = v.adjoint() * oracle::gamma(x, m) * v;
        EXPECT_TRUE(oracle::close(realize(compress_to_chirality(g, m, block)), expected)) << x << " m=" << m;
      }
    }
  }
}
