#include "anyoncodec/pauli.hpp"

#include "anyoncodec/errors.hpp"

namespace anyoncodec {

PauliTerm::PauliTerm(BitVector x_mask, BitVector z_mask, unsigned phase_exponent)
    : x_(std::move(x_mask)), z_(std::move(z_mask)), phase_(phase_exponent % 4) {
  require_same_length(x_, z_, "PauliTerm masks");
}

PauliTerm PauliTerm::single(std::size_t qubits, std::size_t qubit, char letter) {
  if (qubit >= qubits) throw InputError("qubit index out of range");
  PauliTerm p(qubits);
  switch (letter) {
    case 'I':
      break;
    case 'X':
      p.x_.set(qubit);
      break;
    case 'Z':
      p.z_.set(qubit);
      break;
    case 'Y':
      // Y = i X Z
      p.x_.set(qubit);
      p.z_.set(qubit);
      p.phase_ = 1;
      break;
    default:
      throw InputError(std::string("unknown Pauli letter '") + letter + "'");
  }
  return p;
}

std::string phase_token(unsigned exponent) {
  static constexpr const char* kTokens[] = {"+1", "+i", "-1", "-i"};
  return kTokens[exponent % 4];
}

PauliTerm PauliTerm::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  unsigned token_phase = 0;
  if (auto space = text.find_first_of(" \t"); space != std::string_view::npos) {
    const std::string_view tok = text.substr(0, space);
    if (tok == "+1" || tok == "1") {
      token_phase = 0;
    } else if (tok == "+i" || tok == "i") {
      token_phase = 1;
    } else if (tok == "-1") {
      token_phase = 2;
    } else if (tok == "-i") {
      token_phase = 3;
    } else {
      throw InputError("unknown phase token '" + std::string(tok) + "'");
    }
    text = trim(text.substr(space));
  }
  if (text.empty()) throw InputError("empty Pauli string");
  PauliTerm p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) p *= single(text.size(), q, text[q]);
  return p.times_phase(token_phase);
}

char PauliTerm::letter(std::size_t qubit) const {
  const bool x = x_.get(qubit);
  const bool z = z_.get(qubit);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

unsigned PauliTerm::letter_phase() const {
  // X Z = -i Y on each Y position.
  const unsigned y_count = static_cast<unsigned>((x_ & z_).weight() % 4);
  return (phase_ + 4 - y_count) % 4;
}

std::string PauliTerm::to_string() const {
  std::string s = phase_token(letter_phase());
  s.push_back(' ');
  for (std::size_t q = 0; q < qubits(); ++q) s.push_back(letter(q));
  return s;
}

bool PauliTerm::is_hermitian() const {
  // (i^a X^x Z^z)^† = i^{-a} (-1)^{x.z} X^x Z^z
  const unsigned adj_phase = (4 - phase_ + (dot(x_, z_) ? 2 : 0)) % 4;
  return adj_phase == phase_;
}

bool PauliTerm::commutes_with(const PauliTerm& other) const {
  require_same_length(x_, other.x_, "Pauli commutation");
  return dot(x_, other.z_) == dot(z_, other.x_);
}

PauliTerm PauliTerm::adjoint() const { return PauliTerm(x_, z_, 4 - phase_ + (dot(x_, z_) ? 2 : 0)); }

PauliTerm& PauliTerm::operator*=(const PauliTerm& rhs) {
  require_same_length(x_, rhs.x_, "Pauli product");
  // Z^z1 X^x2 = (-1)^{z1.x2} X^x2 Z^z1
  phase_ = (phase_ + rhs.phase_ + (dot(z_, rhs.x_) ? 2 : 0)) % 4;
  x_ ^= rhs.x_;
  z_ ^= rhs.z_;
  return *this;
}

}  // namespace anyoncodec
