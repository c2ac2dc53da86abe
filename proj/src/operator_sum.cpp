#include "anyoncodec/operator_sum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "anyoncodec/errors.hpp"

namespace anyoncodec {

namespace {

std::int64_t checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("DyadicComplex numerator overflow");
  }
  return static_cast<std::int64_t>(v);
}

__int128 shifted(std::int64_t v, unsigned by) {
  if (by >= 62) throw std::overflow_error("DyadicComplex shift overflow");
  return static_cast<__int128>(v) << by;
}

}  // namespace

DyadicComplex::DyadicComplex(std::int64_t re, std::int64_t im, unsigned shift) : re_(re), im_(im), shift_(shift) {
  normalize();
}

void DyadicComplex::normalize() {
  if (re_ == 0 && im_ == 0) {
    shift_ = 0;
    return;
  }
  while (shift_ > 0 && (re_ % 2 == 0) && (im_ % 2 == 0)) {
    re_ /= 2;
    im_ /= 2;
    --shift_;
  }
}

DyadicComplex DyadicComplex::i_power(unsigned exponent) {
  switch (exponent % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

std::complex<double> DyadicComplex::to_complex() const {
  const double scale = std::ldexp(1.0, -static_cast<int>(shift_));
  return {static_cast<double>(re_) * scale, static_cast<double>(im_) * scale};
}

std::string DyadicComplex::to_string() const {
  std::string s = "(" + std::to_string(re_) + (im_ < 0 ? "-" : "+") + std::to_string(im_ < 0 ? -im_ : im_) + "i)";
  if (shift_ > 0) s += "/2^" + std::to_string(shift_);
  return s;
}

DyadicComplex operator+(const DyadicComplex& a, const DyadicComplex& b) {
  const unsigned s = std::max(a.shift_, b.shift_);
  const __int128 re = shifted(a.re_, s - a.shift_) + shifted(b.re_, s - b.shift_);
  const __int128 im = shifted(a.im_, s - a.shift_) + shifted(b.im_, s - b.shift_);
  return {checked(re), checked(im), s};
}

DyadicComplex operator*(const DyadicComplex& a, const DyadicComplex& b) {
  const __int128 re = static_cast<__int128>(a.re_) * b.re_ - static_cast<__int128>(a.im_) * b.im_;
  const __int128 im = static_cast<__int128>(a.re_) * b.im_ + static_cast<__int128>(a.im_) * b.re_;
  return {checked(re), checked(im), a.shift_ + b.shift_};
}

OperatorSum::OperatorSum(const PauliTerm& term) : qubits_(term.qubits()) { add(term); }

void OperatorSum::add(const PauliTerm& term, const DyadicComplex& coeff) {
  if (term.qubits() != qubits_) throw InputError("OperatorSum: qubit count mismatch");
  if (coeff.is_zero()) return;
  Key key{term.x_mask(), term.z_mask()};
  const DyadicComplex value = coeff * DyadicComplex::i_power(term.phase_exponent());
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

DyadicComplex OperatorSum::coefficient(const BitVector& x, const BitVector& z) const {
  auto it = terms_.find(Key{x, z});
  return it == terms_.end() ? DyadicComplex() : it->second;
}

DyadicComplex OperatorSum::normalized_trace() const { return coefficient(BitVector(qubits_), BitVector(qubits_)); }

OperatorSum OperatorSum::adjoint() const {
  OperatorSum out(qubits_);
  for (const auto& [key, c] : terms_) out.add(PauliTerm(key.first, key.second).adjoint(), c.conj());
  return out;
}

OperatorSum OperatorSum::scaled(const DyadicComplex& c) const {
  OperatorSum out(qubits_);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
  return out;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& rhs) {
  if (rhs.qubits_ != qubits_) throw InputError("OperatorSum: qubit count mismatch");
  for (const auto& [key, c] : rhs.terms_) add(PauliTerm(key.first, key.second), c);
  return *this;
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  if (a.qubits_ != b.qubits_) throw InputError("OperatorSum: qubit count mismatch");
  OperatorSum out(a.qubits_);
  for (const auto& [ka, ca] : a.terms_) {
    const PauliTerm pa(ka.first, ka.second);
    for (const auto& [kb, cb] : b.terms_) {
      out.add(pa * PauliTerm(kb.first, kb.second), ca * cb);
    }
  }
  return out;
}

}  // namespace anyoncodec
