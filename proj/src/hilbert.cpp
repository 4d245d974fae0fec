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

#include "mqlink/hilbert.hpp"

#include <algorithm>
#include <numeric>

namespace mqlink {

HilbertSpace::HilbertSpace(std::vector<std::pair<std::string, int>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw std::invalid_argument("HilbertSpace: factor list is empty");
  }
  total_dim_ = 1;
  for (const auto& [label, dim] : factors_) {
    if (dim < 2) {
      throw std::invalid_argument("HilbertSpace: factor '" + label +
                                  "' has dimension < 2");
    }
    total_dim_ *= dim;
  }
}

int HilbertSpace::factor_index(const std::string& label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].first == label) return static_cast<int>(i);
  }
  throw std::invalid_argument("HilbertSpace: unknown factor label '" + label + "'");
}

bool HilbertSpace::has_factor(const std::string& label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const auto& f) { return f.first == label; });
}

HilbertSpace HilbertSpace::join(const HilbertSpace& a, const HilbertSpace& b) {
  auto factors = a.factors();
  const auto& bf = b.factors();
  factors.insert(factors.end(), bf.begin(), bf.end());
  return HilbertSpace(std::move(factors));
}

ComplexOperator::ComplexOperator(HilbertSpace s, Matrix m)
    : space(std::move(s)), entries(std::move(m)) {
  if (entries.rows() != entries.cols()) {
    throw std::invalid_argument("ComplexOperator: matrix is not square");
  }
  if (entries.rows() != space.total_dim()) {
    throw std::invalid_argument("ComplexOperator: matrix dimension " +
                                std::to_string(entries.rows()) +
                                " does not match space dimension " +
                                std::to_string(space.total_dim()));
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexOperator tensor(const std::vector<ComplexOperator>& operators) {
  if (operators.empty()) {
    throw std::invalid_argument("tensor: operator list is empty");
  }
  HilbertSpace space = operators.front().space;
  Matrix m = operators.front().entries;
  for (std::size_t i = 1; i < operators.size(); ++i) {
    space = HilbertSpace::join(space, operators[i].space);
    m = kron(m, operators[i].entries);
  }
  return {space, std::move(m)};
}

Matrix embed(const HilbertSpace& space, const std::string& label, const Matrix& op) {
  const int target = space.factor_index(label);
  if (op.rows() != space.factor_dim(target)) {
    throw std::invalid_argument("embed: operator dimension does not match factor '" +
                                label + "'");
  }
  Matrix m = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < space.num_factors(); ++i) {
    if (static_cast<int>(i) == target) {
      m = kron(m, op);
    } else {
      m = kron(m, identity_matrix(space.factor_dim(i)));
    }
  }
  return m;
}

Matrix partial_trace(const HilbertSpace& space, const Matrix& rho,
                     const std::vector<std::string>& keep,
                     HilbertSpace* reduced_space) {
  if (rho.rows() != space.total_dim() || rho.cols() != space.total_dim()) {
    throw std::invalid_argument("partial_trace: matrix does not match space");
  }
  const std::size_t n = space.num_factors();
  std::vector<bool> kept(n, false);
  for (const auto& label : keep) {
    kept[static_cast<std::size_t>(space.factor_index(label))] = true;
  }

  std::vector<int> dims(n);
  for (std::size_t i = 0; i < n; ++i) dims[i] = space.factor_dim(i);

  int keep_dim = 1, trace_dim = 1;
  std::vector<std::pair<std::string, int>> kept_factors;
  for (std::size_t i = 0; i < n; ++i) {
    if (kept[i]) {
      keep_dim *= dims[i];
      kept_factors.push_back(space.factors()[i]);
    } else {
      trace_dim *= dims[i];
    }
  }

  // Strides of each factor in the row-major composite index.
  std::vector<long> stride(n, 1);
  for (std::size_t i = n; i-- > 1;) {
    stride[i - 1] = stride[i] * dims[i];
  }

  // Maps (kept multi-index k, traced multi-index t) -> full index.
  auto full_index = [&](int k, int t) {
    long idx = 0;
    int kk = k, tt = t;
    for (std::size_t i = n; i-- > 0;) {
      const int d = dims[i];
      if (kept[i]) {
        idx += static_cast<long>(kk % d) * stride[i];
        kk /= d;
      } else {
        idx += static_cast<long>(tt % d) * stride[i];
        tt /= d;
      }
    }
    return idx;
  };

  Matrix out = Matrix::Zero(keep_dim, keep_dim);
  for (int a = 0; a < keep_dim; ++a) {
    for (int b = 0; b < keep_dim; ++b) {
      Complex sum = 0.0;
      for (int t = 0; t < trace_dim; ++t) {
        sum += rho(full_index(a, t), full_index(b, t));
      }
      out(a, b) = sum;
    }
  }
  if (reduced_space != nullptr) {
    *reduced_space = HilbertSpace(kept_factors);
  }
  return out;
}

Matrix identity_matrix(int dim) { return Matrix::Identity(dim, dim); }

Matrix ketbra(int dim, int ket, int bra) {
  Matrix m = Matrix::Zero(dim, dim);
  m(ket, bra) = 1.0;
  return m;
}

Matrix fock_annihilation(int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

std::vector<Matrix> gell_mann_matrices() {
  const Complex i(0, 1);
  std::vector<Matrix> g(8, Matrix::Zero(3, 3));
  g[0](0, 1) = 1;
  g[0](1, 0) = 1;
  g[1](0, 1) = -i;
  g[1](1, 0) = i;
  g[2](0, 0) = 1;
  g[2](1, 1) = -1;
  g[3](0, 2) = 1;
  g[3](2, 0) = 1;
  g[4](0, 2) = -i;
  g[4](2, 0) = i;
  g[5](1, 2) = 1;
  g[5](2, 1) = 1;
  g[6](1, 2) = -i;
  g[6](2, 1) = i;
  const double s = 1.0 / std::sqrt(3.0);
  g[7](0, 0) = s;
  g[7](1, 1) = s;
  g[7](2, 2) = -2.0 * s;
  return g;
}

}  // namespace mqlink
