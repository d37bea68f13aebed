#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "telebath/pauli.hpp"

namespace telebath {

/// Exact half-integer spin quantum number, stored as 2j.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt whole(int j) { return HalfInt(2 * j); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  /// Dimension of the spin-j multiplet, 2j + 1.
  constexpr int multiplet_dim() const { return twice_ + 1; }
  /// j(j + 1), exact in units of 1/4: returns (2j)(2j + 2) / 4.
  constexpr double casimir() const {
    return 0.25 * static_cast<double>(twice_) * (twice_ + 2);
  }
  constexpr bool is_whole() const { return twice_ % 2 == 0; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// Cartesian spin operators for a single spin-j multiplet in the
/// |j, m> basis ordered m = j, j-1, ..., -j (hbar = 1).
struct SpinOperators {
  Eigen::MatrixXcd x, y, z;
};

SpinOperators spin_operators(HalfInt j);

/// Exact binomial coefficient; throws std::invalid_argument outside
/// 0 <= k <= n or if the value overflows 64 bits.
std::uint64_t binomial(int n, int k);

/// Number of distinct total-spin-I multiplets in a bath of n spin-1/2:
/// C(n, n/2 - I) - C(n, n/2 - I - 1).  Throws on invalid (n, I) pairs
/// (negative, out of range, or mismatched parity).
std::int64_t sector_multiplicity(int n_spins, HalfInt total_spin);

/// Internal state assigned to a total-spin sector.
enum class SectorState {
  Unpolarized,    ///< maximally mixed within the multiplet, Id/(2I+1)
  MaxPolarizedZ,  ///< stretched state |I; m = I>
};

/// Statistical model for the bath's initial density matrix.
enum class BathModel {
  Unpolarized,           ///< rho_E = Id / 2^N
  PolarizedGaussianI2,   ///< weights ~ I^2 exp(-2 I^2 / N), state |I; I>
};

std::string_view to_string(BathModel model);
BathModel bath_model_from_string(std::string_view name);

/// One total-spin sector of the bath decomposition.
struct SectorSpec {
  HalfInt total_spin;
  std::int64_t multiplicity = 0;  ///< number of equivalent multiplets
  double weight = 0.0;            ///< statistical weight, sums to 1 over a bath
  SectorState internal_state = SectorState::Unpolarized;
};

/// Complete sector decomposition of a spin-1/2 bath.
struct BathSpec {
  int n_spins = 0;
  BathModel model = BathModel::Unpolarized;
  std::vector<SectorSpec> sectors;  ///< ascending total_spin
};

/// Weights lambda_I = multiplicity * (2I+1) / 2^N for the fully mixed
/// bath; pairs (I, lambda_I) ascending in I, including I with zero spin.
std::vector<std::pair<HalfInt, double>> unpolarized_sector_weights(int n_spins);

/// Weights proportional to I^2 exp(-2 I^2 / N), normalized over the
/// allowed sectors; the I = 0 sector (n even) carries zero weight.
std::vector<std::pair<HalfInt, double>> polarized_sector_weights(int n_spins);

BathSpec unpolarized_bath(int n_spins);
BathSpec polarized_bath(int n_spins);

/// Throws std::invalid_argument unless the weights sum to 1 within
/// `tol` and the sectors are valid for `n_spins`.
void validate_bath(const BathSpec& bath, double tol = 1e-12);

}  // namespace telebath
