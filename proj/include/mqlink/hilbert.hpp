// Copyright 2026 The mqlink Authors
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

#ifndef MQLINK_HILBERT_HPP
#define MQLINK_HILBERT_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mqlink {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Composite Hilbert space as an ordered list of labeled tensor factors.
/// Factor order matches the Kronecker-product convention used throughout:
/// the first factor is the slowest-varying index.
class HilbertSpace {
 public:
  HilbertSpace() = default;
  explicit HilbertSpace(std::vector<std::pair<std::string, int>> factors);

  const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }
  int total_dim() const { return total_dim_; }
  std::size_t num_factors() const { return factors_.size(); }

  int factor_index(const std::string& label) const;
  int factor_dim(std::size_t index) const { return factors_.at(index).second; }
  bool has_factor(const std::string& label) const;

  bool operator==(const HilbertSpace& other) const {
    return factors_ == other.factors_;
  }

  /// Concatenation of the factor lists of both spaces.
  static HilbertSpace join(const HilbertSpace& a, const HilbertSpace& b);

  static HilbertSpace single(const std::string& label, int dim) {
    return HilbertSpace({{label, dim}});
  }

 private:
  std::vector<std::pair<std::string, int>> factors_;
  int total_dim_ = 1;
};

/// Dense complex operator attached to a space.
struct ComplexOperator {
  HilbertSpace space;
  Matrix entries;

  ComplexOperator() = default;
  ComplexOperator(HilbertSpace s, Matrix m);

  int dim() const { return static_cast<int>(entries.rows()); }

  ComplexOperator adjoint() const { return {space, entries.adjoint()}; }
};

/// Kronecker product of the listed operators; the result lives on the
/// concatenation of the factor spaces.
ComplexOperator tensor(const std::vector<ComplexOperator>& operators);

/// Plain Kronecker product of matrices, first factor slowest.
Matrix kron(const Matrix& a, const Matrix& b);

/// Embeds `op` (acting on a single factor) into `space` by tensoring
/// identities on every other factor.
Matrix embed(const HilbertSpace& space, const std::string& label, const Matrix& op);

/// Partial trace keeping only the listed factor labels, in their original
/// order. Throws on unknown labels.
Matrix partial_trace(const HilbertSpace& space, const Matrix& rho,
                     const std::vector<std::string>& keep,
                     HilbertSpace* reduced_space = nullptr);

// Elementary operators.
Matrix identity_matrix(int dim);
/// |ket><bra| on a `dim`-dimensional factor.
Matrix ketbra(int dim, int ket, int bra);
/// Annihilation operator truncated to `dim` Fock states (0..dim-1).
Matrix fock_annihilation(int dim);

// Qubit Pauli matrices.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// The eight Gell-Mann matrices in the conventional lambda_1..lambda_8 order.
std::vector<Matrix> gell_mann_matrices();

}  // namespace mqlink

#endif  // MQLINK_HILBERT_HPP
