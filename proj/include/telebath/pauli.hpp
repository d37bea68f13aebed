#pragma once

#include <complex>

#include <Eigen/Dense>

namespace telebath {

using Complex = std::complex<double>;

/// Pauli matrix sigma_k for k in {0,1,2,3} = {identity, x, y, z}.
const Eigen::Matrix2cd& pauli(int k);

/// Two-qubit Pauli product sigma_{u/4} (x) sigma_{u%4} for u in 0..15.
const Eigen::Matrix4cd& two_qubit_pauli(int u);

/// Orthonormal two-qubit operator basis B_u = two_qubit_pauli(u) / 2,
/// satisfying Tr[B_u B_v] = delta_uv.
const Eigen::Matrix4cd& pauli_basis_element(int u);

/// Kronecker (tensor) product, row-major composite ordering: the left
/// factor owns the slow index.
template <typename DerivedA, typename DerivedB>
Eigen::MatrixXcd kron(const Eigen::MatrixBase<DerivedA>& a,
                      const Eigen::MatrixBase<DerivedB>& b) {
  const Eigen::MatrixXcd bc = b.derived().template cast<Complex>();
  Eigen::MatrixXcd out(a.rows() * bc.rows(), a.cols() * bc.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * bc.rows(), j * bc.cols(), bc.rows(), bc.cols()) =
          Complex(a(i, j)) * bc;
  return out;
}

/// Trace out the trailing tensor factor of dimension `back_dim`.
Eigen::MatrixXcd partial_trace_back(const Eigen::MatrixXcd& rho,
                                    Eigen::Index back_dim);

/// Trace out the leading tensor factor of dimension `front_dim`.
Eigen::MatrixXcd partial_trace_front(const Eigen::MatrixXcd& rho,
                                     Eigen::Index front_dim);

}  // namespace telebath
