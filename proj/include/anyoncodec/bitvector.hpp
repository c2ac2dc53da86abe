#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace anyoncodec {

/// A vector in F_2^n, packed 64 bits per word. Bit i lives in word i / 64 at
/// position i % 64; padding bits above `size()` are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  /// Parses a string over {0,1}; character i becomes bit i.
  static BitVector from_string(std::string_view bits);
  static BitVector ones(std::size_t length);
  static BitVector unit(std::size_t length, std::size_t index);
  /// Low `length` bits of `value`, bit i of the integer becoming coordinate i.
  static BitVector from_integer(std::size_t length, std::uint64_t value);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  bool operator[](std::size_t i) const { return get(i); }

  std::size_t weight() const;
  bool parity() const { return weight() & 1u; }
  bool is_zero() const;
  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const;
  std::vector<std::size_t> support() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  /// Copy with coordinate `index` removed.
  BitVector erased(std::size_t index) const;
  /// Copy with `bit` appended as a new last coordinate.
  BitVector appended(bool bit) const;
  /// Concatenation (this, tail).
  BitVector concat(const BitVector& tail) const;

  std::string to_string() const;

  const std::vector<Word>& words() const { return words_; }
  std::vector<Word>& words() { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Container ordering (length first, then packed words). Use
  /// `support_precedes` for a human-meaningful tie-break.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

/// Standard dot product over F_2.
bool dot(const BitVector& a, const BitVector& b);

inline std::size_t weight(const BitVector& v) { return v.weight(); }

/// Witness order: lighter first, then the vector whose support is
/// lexicographically smaller as a sorted index list.
bool support_precedes(const BitVector& a, const BitVector& b);

void require_same_length(const BitVector& a, const BitVector& b, const char* context);

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept;
};

}  // namespace anyoncodec
