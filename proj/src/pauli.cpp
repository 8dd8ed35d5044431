// Copyright 2026 The hamlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamlearn/pauli.hpp"

namespace hamlearn {

PauliString PauliString::from_string(const std::string& letters) {
  int n = static_cast<int>(letters.size());
  if (n < 1 || n > 32) throw std::invalid_argument("PauliString: bad letter count");
  uint64_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    switch (letters[q]) {
      case 'I': break;
      case 'X': x |= 1ULL << q; break;
      case 'Y': x |= 1ULL << q; z |= 1ULL << q; break;
      case 'Z': z |= 1ULL << q; break;
      default: throw std::invalid_argument("PauliString: letter must be one of I,X,Y,Z");
    }
  }
  return PauliString(n, x, z);
}

PauliString PauliString::single(int n, int qubit, PauliLetter letter) {
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("PauliString: qubit index out of range");
  uint64_t bit = 1ULL << qubit;
  switch (letter) {
    case PauliLetter::I: return PauliString(n, 0, 0);
    case PauliLetter::X: return PauliString(n, bit, 0);
    case PauliLetter::Y: return PauliString(n, bit, bit);
    case PauliLetter::Z: return PauliString(n, 0, bit);
  }
  throw std::invalid_argument("PauliString: bad letter");
}

std::string PauliString::str() const {
  std::string s(n_, 'I');
  for (int q = 0; q < n_; ++q) s[q] = letter_char(letter(q));
  return s;
}

std::pair<PauliPhase, PauliString> pauli_mul(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits())
    throw std::invalid_argument("pauli_mul: mismatched qubit counts");
  uint64_t x1 = p.x_bits(), z1 = p.z_bits(), x2 = q.x_bits(), z2 = q.z_bits();
  uint64_t x3 = x1 ^ x2, z3 = z1 ^ z2;
  // Per qubit, with W(x,z) = i^{xz} X^x Z^z: the product phase exponent is
  // x1 z1 + x2 z2 + 2 z1 x2 - x3 z3 (mod 4), summed over qubits.
  int k = __builtin_popcountll(x1 & z1) + __builtin_popcountll(x2 & z2) -
          __builtin_popcountll(x3 & z3) + 2 * __builtin_popcountll(z1 & x2);
  return {PauliPhase(k), PauliString(p.num_qubits(), x3, z3)};
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits())
    throw std::invalid_argument("commutes: mismatched qubit counts");
  int parity = __builtin_popcountll(p.x_bits() & q.z_bits()) +
               __builtin_popcountll(p.z_bits() & q.x_bits());
  return (parity & 1) == 0;
}

PauliString bell_outcome_to_pauli(const std::vector<int>& bits) {
  if (bits.empty() || bits.size() % 2 != 0)
    throw std::invalid_argument("bell_outcome_to_pauli: bit record length must be 2n");
  int n = static_cast<int>(bits.size() / 2);
  uint64_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    if (bits[2 * q]) x |= 1ULL << q;
    if (bits[2 * q + 1]) z |= 1ULL << q;
  }
  return PauliString(n, x, z);
}

std::vector<int> pauli_to_bell_outcome(const PauliString& p) {
  std::vector<int> bits(2 * p.num_qubits(), 0);
  for (int q = 0; q < p.num_qubits(); ++q) {
    bits[2 * q] = (p.x_bits() >> q) & 1;
    bits[2 * q + 1] = (p.z_bits() >> q) & 1;
  }
  return bits;
}

}  // namespace hamlearn
