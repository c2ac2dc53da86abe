#include <gtest/gtest.h>

#include "anyoncodec/binary_code.hpp"
#include "anyoncodec/errors.hpp"
#include "oracle.hpp"

using namespace anyoncodec;

namespace {

BinaryCode from_masks(const std::vector<oracle::Mask>& rows, std::size_t n) {
  std::vector<BitVector> gens;
  for (auto r : rows) gens.push_back(oracle::to_bits(r, n));
  return BinaryCode(n, gens);
}

std::set<oracle::Mask> all_words(const BinaryCode& code) {
  std::set<oracle::Mask> out;
  for_each_codeword(code, [&](const BitVector& v) { out.insert(oracle::to_mask(v)); });
  return out;
}

BinaryCode repetition(std::size_t n) { return BinaryCode(n, {BitVector::ones(n)}); }

}  // namespace

TEST(BitVector, BasicOperations) {
  BitVector v = BitVector::from_string("10110");
  EXPECT_EQ(v.size(), 5u);
  EXPECT_EQ(v.weight(), 3u);
  EXPECT_TRUE(v.parity());
  EXPECT_EQ(v.first_set(), 0u);
  EXPECT_EQ(v.support(), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_EQ(v.to_string(), "10110");
  EXPECT_EQ(v.erased(0).to_string(), "0110");
  EXPECT_EQ(v.appended(true).to_string(), "101101");
  EXPECT_EQ(v.concat(BitVector::ones(2)).to_string(), "1011011");
  EXPECT_EQ(BitVector(4).first_set(), 4u);
  EXPECT_THROW(BitVector::from_string("102"), InputError);
}

TEST(BitVector, MultiWordMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 60 + rng() % 100;
    BitVector a(n), b(n);
    std::vector<int> ra(n), rb(n);
    for (std::size_t i = 0; i < n; ++i) {
      ra[i] = rng() & 1;
      rb[i] = rng() & 1;
      a.set(i, ra[i]);
      b.set(i, rb[i]);
    }
    int dot_ref = 0, wt_ref = 0;
    for (std::size_t i = 0; i < n; ++i) {
      dot_ref ^= ra[i] & rb[i];
      wt_ref += ra[i];
    }
    EXPECT_EQ(dot(a, b), dot_ref != 0);
    EXPECT_EQ(a.weight(), static_cast<std::size_t>(wt_ref));
    const BitVector c = a ^ b;
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(c.get(i), (ra[i] ^ rb[i]) != 0);
    const std::size_t cut = rng() % n;
    const BitVector e = a.erased(cut);
    for (std::size_t i = 0; i + 1 < n; ++i) EXPECT_EQ(e.get(i), ra[i < cut ? i : i + 1] != 0);
  }
}

TEST(BitVector, SupportOrder) {
  EXPECT_TRUE(support_precedes(BitVector::from_string("0001"), BitVector::from_string("1100")));
  EXPECT_TRUE(support_precedes(BitVector::from_string("1100"), BitVector::from_string("1010")));
  EXPECT_FALSE(support_precedes(BitVector::from_string("1010"), BitVector::from_string("1100")));
}

TEST(BinaryCode, Examples) {
  const BinaryCode dup(4, {BitVector::from_string("1100"), BitVector::from_string("1100")});
  EXPECT_EQ(dup.dimension(), 1u);
  EXPECT_EQ(dup.basis()[0].to_string(), "1100");
  EXPECT_EQ(BinaryCode(3, {}).dimension(), 0u);
  EXPECT_EQ(hamming_dual(3).dimension(), 3u);
  EXPECT_THROW(BinaryCode(3, {BitVector::from_string("11")}), InputError);
}

TEST(BinaryCode, RrefMatchesBruteForceSpan) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto rows = oracle::random_rows(rng() % 8, n, rng);
    const BinaryCode code = from_masks(rows, n);
    const auto ref = oracle::span(rows);
    EXPECT_EQ(code.dimension(), oracle::rank(rows));
    EXPECT_EQ(all_words(code), ref);
    for (oracle::Mask v = 0; v < (oracle::Mask{1} << n); ++v) {
      EXPECT_EQ(code.contains(oracle::to_bits(v, n)), ref.count(v) == 1);
    }
    // pivots leftmost and unique
    for (std::size_t r = 0; r < code.dimension(); ++r) {
      EXPECT_EQ(code.basis()[r].first_set(), code.pivots()[r]);
      for (std::size_t s = 0; s < code.dimension(); ++s) {
        if (s != r) EXPECT_FALSE(code.basis()[s].get(code.pivots()[r]));
      }
    }
  }
}

TEST(BinaryCode, DualMatchesBruteForce) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto rows = oracle::random_rows(rng() % 8, n, rng);
    const BinaryCode d = dual(from_masks(rows, n));
    EXPECT_EQ(all_words(d), oracle::dual(rows, n));
  }
  EXPECT_EQ(dual(BinaryCode::zero(5)), BinaryCode::full(5));
  const BinaryCode even = dual(repetition(6));
  EXPECT_EQ(even.dimension(), 5u);
  EXPECT_TRUE(is_all_even(even));
}

TEST(BinaryCode, HammingDualIsSimplex) {
  const BinaryCode simplex = dual(hamming_code(3));
  EXPECT_EQ(simplex, hamming_dual(3));
  const WeightProfile p = min_distance(simplex);
  EXPECT_EQ(p.counts[0], 1u);
  EXPECT_EQ(p.counts[4], 7u);
  EXPECT_EQ(p.min_nonzero_weight, 4u);
  const WeightProfile h = min_distance(hamming_code(3));
  EXPECT_EQ(h.min_nonzero_weight, 3u);
  EXPECT_EQ(min_distance(repetition(9)).min_nonzero_weight, 9u);

  const WeightProfile s2 = min_distance(hamming_dual(2));
  EXPECT_EQ(hamming_dual(2).length(), 3u);
  EXPECT_EQ(s2.counts[0], 1u);
  EXPECT_EQ(s2.counts[2], 3u);

  // column j of the simplex generator is the binary expansion of j + 1
  const BinaryCode simplex3 = hamming_dual(3);
  const auto& g = simplex3.generators();
  ASSERT_EQ(basis_columns(simplex3).size(), 7u);
  for (std::size_t j = 0; j < 7; ++j) {
    const unsigned value = (g[0].get(j) << 2) | (g[1].get(j) << 1) | g[2].get(j);
    EXPECT_EQ(value, j + 1);
  }
  EXPECT_THROW(hamming_dual(1), InputError);
}

TEST(BinaryCode, MinDistanceMatchesOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto rows = oracle::random_rows(1 + rng() % 6, n, rng);
    const auto words = oracle::span(rows);
    const WeightProfile p = min_distance(from_masks(rows, n));
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (auto w : words) ++counts[oracle::popcount(w)];
    EXPECT_EQ(p.counts, counts);
    const int ref = oracle::min_nonzero_weight(words);
    if (ref == 0) {
      EXPECT_FALSE(p.min_nonzero_weight);
    } else {
      EXPECT_EQ(p.min_nonzero_weight, static_cast<std::size_t>(ref));
    }
  }
}

TEST(BinaryCode, EnumerationCap) {
  EXPECT_THROW(min_distance(BinaryCode::full(20), 10), CapacityError);
}

TEST(DualDistance, Examples) {
  EXPECT_EQ(dual_distance_by_columns(repetition(5)).value, 2u);
  EXPECT_EQ(dual_distance_by_columns(hamming_dual(3)).value, 3u);
  EXPECT_EQ(dual_distance_by_columns(hamming_dual(3)).value, min_distance(dual(hamming_dual(3))).min_nonzero_weight);
  EXPECT_TRUE(dual_distance_by_columns(BinaryCode::full(6)).unbounded());
  EXPECT_EQ(dual_distance_by_columns(BinaryCode::full(6)).to_string(), "unbounded");
  // zero column: a single dependent column
  EXPECT_EQ(dual_distance_by_columns(BinaryCode(3, {BitVector::from_string("110")})).value, 1u);
}

TEST(DualDistance, MatchesDualMinWeight) {
  std::mt19937_64 rng(14);
  int degenerate_unbounded = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto rows = oracle::random_rows(1 + rng() % 8, n, rng);
    const DualDistance got = dual_distance_by_columns(from_masks(rows, n));
    const int ref = oracle::min_nonzero_weight(oracle::dual(rows, n));
    if (ref == 0) {
      EXPECT_TRUE(got.unbounded());
      ++degenerate_unbounded;
    } else {
      EXPECT_EQ(got.value, static_cast<std::size_t>(ref));
    }
    // raw rows, possibly dependent, give the same answer
    std::vector<BitVector> raw;
    for (auto r : rows) raw.push_back(oracle::to_bits(r, n));
    EXPECT_EQ(dual_distance_by_columns(n, raw), got);
  }
  EXPECT_GT(degenerate_unbounded, 0);
}

TEST(BinaryCode, GramAndEvenness) {
  const BinaryCode so(6, {BitVector::from_string("111100"), BitVector::from_string("001111")});
  EXPECT_TRUE(is_self_orthogonal(so));
  EXPECT_TRUE(is_all_even(so));
  const BinaryCode not_so(3, {BitVector::from_string("110"), BitVector::from_string("011")});
  EXPECT_FALSE(is_self_orthogonal(not_so));
  const auto gram = gram_matrix(not_so);
  EXPECT_TRUE(gram[0].get(1));
  EXPECT_FALSE(is_all_even(BinaryCode(3, {BitVector::from_string("100")})));
}
