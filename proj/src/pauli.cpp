#include "telebath/pauli.hpp"

#include <array>
#include <stdexcept>

namespace telebath {

namespace {

std::array<Eigen::Matrix2cd, 4> make_paulis() {
  const Complex i(0.0, 1.0);
  std::array<Eigen::Matrix2cd, 4> s;
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -i, i, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

std::array<Eigen::Matrix4cd, 16> make_two_qubit_paulis() {
  std::array<Eigen::Matrix4cd, 16> out;
  for (int u = 0; u < 16; ++u)
    out[u] = kron(pauli(u / 4), pauli(u % 4));
  return out;
}

}  // namespace

const Eigen::Matrix2cd& pauli(int k) {
  static const auto matrices = make_paulis();
  if (k < 0 || k > 3) throw std::invalid_argument("pauli: index out of range");
  return matrices[static_cast<std::size_t>(k)];
}

const Eigen::Matrix4cd& two_qubit_pauli(int u) {
  static const auto matrices = make_two_qubit_paulis();
  if (u < 0 || u > 15)
    throw std::invalid_argument("two_qubit_pauli: index out of range");
  return matrices[static_cast<std::size_t>(u)];
}

const Eigen::Matrix4cd& pauli_basis_element(int u) {
  static const auto matrices = [] {
    std::array<Eigen::Matrix4cd, 16> out;
    for (int v = 0; v < 16; ++v) out[v] = 0.5 * two_qubit_pauli(v);
    return out;
  }();
  if (u < 0 || u > 15)
    throw std::invalid_argument("pauli_basis_element: index out of range");
  return matrices[static_cast<std::size_t>(u)];
}

Eigen::MatrixXcd partial_trace_back(const Eigen::MatrixXcd& rho,
                                    Eigen::Index back_dim) {
  if (back_dim <= 0 || rho.rows() != rho.cols() || rho.rows() % back_dim != 0)
    throw std::invalid_argument("partial_trace_back: incompatible dimensions");
  const Eigen::Index front = rho.rows() / back_dim;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(front, front);
  for (Eigen::Index i = 0; i < front; ++i)
    for (Eigen::Index j = 0; j < front; ++j)
      for (Eigen::Index b = 0; b < back_dim; ++b)
        out(i, j) += rho(i * back_dim + b, j * back_dim + b);
  return out;
}

Eigen::MatrixXcd partial_trace_front(const Eigen::MatrixXcd& rho,
                                     Eigen::Index front_dim) {
  if (front_dim <= 0 || rho.rows() != rho.cols() ||
      rho.rows() % front_dim != 0)
    throw std::invalid_argument("partial_trace_front: incompatible dimensions");
  const Eigen::Index back = rho.rows() / front_dim;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(back, back);
  for (Eigen::Index b = 0; b < back; ++b)
    for (Eigen::Index c = 0; c < back; ++c)
      for (Eigen::Index f = 0; f < front_dim; ++f)
        out(b, c) += rho(f * back + b, f * back + c);
  return out;
}

}  // namespace telebath
