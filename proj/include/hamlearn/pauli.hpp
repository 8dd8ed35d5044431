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

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamlearn {

enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// An n-qubit Pauli operator in symplectic (X-mask, Z-mask) form.
///
/// Per qubit q the letter is decoded from ((x >> q) & 1, (z >> q) & 1):
/// (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z. No global phase is stored; products
/// return their i^k phase separately (see pauli_mul). Qubit 0 is the leftmost
/// letter of the canonical text form and the least-significant mask bit.
class PauliString {
 public:
  PauliString() = default;

  PauliString(int n, uint64_t x_bits, uint64_t z_bits)
      : n_(n), x_(x_bits), z_(z_bits) {
    if (n < 1 || n > 32) throw std::invalid_argument("PauliString: qubit count out of range");
    uint64_t mask = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    if ((x_ & ~mask) || (z_ & ~mask)) throw std::invalid_argument("PauliString: mask bits beyond n");
  }

  static PauliString identity(int n) { return PauliString(n, 0, 0); }

  /// Builds from the canonical text form, e.g. "IZZXI" (leftmost = qubit 0).
  static PauliString from_string(const std::string& letters);

  static PauliString single(int n, int qubit, PauliLetter letter);

  int num_qubits() const { return n_; }
  uint64_t x_bits() const { return x_; }
  uint64_t z_bits() const { return z_; }

  bool is_identity() const { return x_ == 0 && z_ == 0; }

  /// Number of non-identity letters.
  int weight() const { return __builtin_popcountll(x_ | z_); }

  /// Index of the first non-identity qubit; -1 for the identity.
  int first_support() const {
    uint64_t s = x_ | z_;
    return s ? __builtin_ctzll(s) : -1;
  }

  PauliLetter letter(int qubit) const {
    int x = (x_ >> qubit) & 1, z = (z_ >> qubit) & 1;
    if (x && z) return PauliLetter::Y;
    if (x) return PauliLetter::X;
    if (z) return PauliLetter::Z;
    return PauliLetter::I;
  }

  std::string str() const;

  bool operator==(const PauliString& o) const { return n_ == o.n_ && x_ == o.x_ && z_ == o.z_; }
  bool operator!=(const PauliString& o) const { return !(*this == o); }
  bool operator<(const PauliString& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (z_ != o.z_) return z_ < o.z_;
    return x_ < o.x_;
  }

 private:
  int n_ = 1;
  uint64_t x_ = 0;
  uint64_t z_ = 0;
};

/// Phase i^k accumulated by Pauli products; multiplication adds k mod 4.
class PauliPhase {
 public:
  PauliPhase() = default;
  explicit PauliPhase(int power_of_i) : k_(((power_of_i % 4) + 4) % 4) {}

  int power_of_i() const { return k_; }

  std::complex<double> value() const {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k_];
  }

  PauliPhase operator*(PauliPhase o) const { return PauliPhase(k_ + o.k_); }
  bool operator==(PauliPhase o) const { return k_ == o.k_; }

 private:
  int k_ = 0;
};

/// p * q = i^phase * r as a matrix identity; r's masks are the XOR of the inputs.
std::pair<PauliPhase, PauliString> pauli_mul(const PauliString& p, const PauliString& q);

/// True iff the symplectic inner product <p.x,q.z> + <p.z,q.x> is even.
bool commutes(const PauliString& p, const PauliString& q);

/// Decodes a Bell-basis measurement record into the Pauli label of the outcome.
///
/// `bits` holds one (system-bit, ancilla-bit) pair per qubit in qubit order;
/// per pair (0,0)->I, (1,0)->X, (1,1)->Y, (0,1)->Z.
PauliString bell_outcome_to_pauli(const std::vector<int>& bits);

/// Inverse of bell_outcome_to_pauli.
std::vector<int> pauli_to_bell_outcome(const PauliString& p);

inline char letter_char(PauliLetter l) { return "IXYZ"[static_cast<int>(l)]; }

}  // namespace hamlearn
