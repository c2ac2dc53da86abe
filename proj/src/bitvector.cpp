#include "anyoncodec/bitvector.hpp"

#include <algorithm>

#include "anyoncodec/errors.hpp"

namespace anyoncodec {

namespace {

std::size_t word_count(std::size_t length) { return (length + BitVector::kWordBits - 1) / BitVector::kWordBits; }

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw InputError("bit string contains '" + std::string(1, bits[i]) + "' at position " + std::to_string(i));
    }
  }
  return v;
}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  for (auto& w : v.words_) w = ~Word{0};
  if (length % kWordBits != 0) {
    v.words_.back() = (Word{1} << (length % kWordBits)) - 1;
  }
  return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  if (index >= length) throw InputError("unit vector index out of range");
  BitVector v(length);
  v.set(index);
  return v;
}

BitVector BitVector::from_integer(std::size_t length, std::uint64_t value) {
  BitVector v(length);
  if (length == 0) return v;
  if (length < kWordBits) value &= (Word{1} << length) - 1;
  v.words_[0] = value;
  return v;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (Word word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return length_;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    Word w = words_[k];
    while (w != 0) {
      out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other, "xor");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_length(*this, other, "and");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

BitVector BitVector::erased(std::size_t index) const {
  if (index >= length_) throw InputError("coordinate " + std::to_string(index) + " out of range");
  BitVector out(length_ - 1);
  for (std::size_t i = 0, j = 0; i < length_; ++i) {
    if (i == index) continue;
    if (get(i)) out.set(j);
    ++j;
  }
  return out;
}

BitVector BitVector::appended(bool bit) const {
  BitVector out(length_ + 1);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  out.set(length_, bit);
  return out;
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector out(length_ + tail.length_);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  for (std::size_t i : tail.support()) out.set(length_ + i);
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  return a.words_ <=> b.words_;
}

bool dot(const BitVector& a, const BitVector& b) {
  require_same_length(a, b, "dot product");
  BitVector::Word acc = 0;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t k = 0; k < wa.size(); ++k) acc ^= wa[k] & wb[k];
  return std::popcount(acc) & 1;
}

bool support_precedes(const BitVector& a, const BitVector& b) {
  const std::size_t wa = a.weight();
  const std::size_t wb = b.weight();
  if (wa != wb) return wa < wb;
  BitVector diff = a ^ b;
  const std::size_t i = diff.first_set();
  if (i == diff.size()) return false;
  return a.get(i);
}

void require_same_length(const BitVector& a, const BitVector& b, const char* context) {
  if (a.size() != b.size()) {
    throw InputError(std::string(context) + ": length mismatch (" + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  }
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(v.size());
  for (auto w : v.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace anyoncodec
