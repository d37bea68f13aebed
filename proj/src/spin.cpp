#include "telebath/spin.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace telebath {

SpinOperators spin_operators(HalfInt j) {
  if (j.twice() < 0)
    throw std::invalid_argument("spin_operators: negative spin");
  const int dim = j.multiplet_dim();
  const double jj = j.value();

  // Ladder operator J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1> in the
  // basis ordered m = j, ..., -j (so J+ is superdiagonal).
  Eigen::MatrixXcd plus = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const double m = jj - row;
    z(row, row) = m;
    if (row + 1 < dim) {
      const double m_low = m - 1.0;
      plus(row, row + 1) = std::sqrt(jj * (jj + 1.0) - m_low * (m_low + 1.0));
    }
  }
  const Eigen::MatrixXcd minus = plus.adjoint();

  SpinOperators ops;
  ops.x = 0.5 * (plus + minus);
  ops.y = Complex(0.0, -0.5) * (plus - minus);
  ops.z = z;
  return ops;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("binomial: require 0 <= k <= n");
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= static_cast<unsigned>(n - k + i);
    result /= static_cast<unsigned>(i);  // exact: result is C(n-k+i, i)
    if (result > static_cast<unsigned __int128>(UINT64_MAX))
      throw std::invalid_argument("binomial: value overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

std::int64_t sector_multiplicity(int n_spins, HalfInt total_spin) {
  if (n_spins <= 0)
    throw std::invalid_argument("sector_multiplicity: need at least one spin");
  const int twice_i = total_spin.twice();
  if (twice_i < 0 || twice_i > n_spins)
    throw std::invalid_argument("sector_multiplicity: spin out of range");
  if ((n_spins - twice_i) % 2 != 0)
    throw std::invalid_argument(
        "sector_multiplicity: spin parity incompatible with bath size");
  const int k = (n_spins - twice_i) / 2;
  const std::int64_t first = static_cast<std::int64_t>(binomial(n_spins, k));
  const std::int64_t second =
      k >= 1 ? static_cast<std::int64_t>(binomial(n_spins, k - 1)) : 0;
  return first - second;
}

std::string_view to_string(BathModel model) {
  switch (model) {
    case BathModel::Unpolarized: return "unpolarized";
    case BathModel::PolarizedGaussianI2: return "polarized";
  }
  throw std::invalid_argument("to_string: unknown bath model");
}

BathModel bath_model_from_string(std::string_view name) {
  if (name == "unpolarized") return BathModel::Unpolarized;
  if (name == "polarized") return BathModel::PolarizedGaussianI2;
  throw std::invalid_argument("unknown bath model: " + std::string(name));
}

namespace {

std::vector<HalfInt> sector_spins(int n_spins) {
  std::vector<HalfInt> spins;
  for (int twice_i = n_spins % 2; twice_i <= n_spins; twice_i += 2)
    spins.push_back(HalfInt::from_twice(twice_i));
  return spins;
}

}  // namespace

std::vector<std::pair<HalfInt, double>> unpolarized_sector_weights(
    int n_spins) {
  if (n_spins <= 0 || n_spins > 62)
    throw std::invalid_argument("unpolarized_sector_weights: bath size");
  std::vector<std::pair<HalfInt, double>> weights;
  const double total = std::pow(2.0, n_spins);
  for (HalfInt spin : sector_spins(n_spins)) {
    const double g = static_cast<double>(sector_multiplicity(n_spins, spin));
    weights.emplace_back(spin, g * spin.multiplet_dim() / total);
  }
  return weights;
}

std::vector<std::pair<HalfInt, double>> polarized_sector_weights(int n_spins) {
  if (n_spins <= 0 || n_spins > 62)
    throw std::invalid_argument("polarized_sector_weights: bath size");
  std::vector<std::pair<HalfInt, double>> weights;
  double sum = 0.0;
  for (HalfInt spin : sector_spins(n_spins)) {
    const double value = spin.value();
    const double raw =
        value * value * std::exp(-2.0 * value * value / n_spins);
    weights.emplace_back(spin, raw);
    sum += raw;
  }
  if (sum <= 0.0)
    throw std::invalid_argument("polarized_sector_weights: degenerate bath");
  for (auto& [spin, weight] : weights) weight /= sum;
  return weights;
}

namespace {

BathSpec make_bath(int n_spins, BathModel model) {
  BathSpec bath;
  bath.n_spins = n_spins;
  bath.model = model;
  const auto weights = model == BathModel::Unpolarized
                           ? unpolarized_sector_weights(n_spins)
                           : polarized_sector_weights(n_spins);
  const SectorState state = model == BathModel::Unpolarized
                                ? SectorState::Unpolarized
                                : SectorState::MaxPolarizedZ;
  for (const auto& [spin, weight] : weights) {
    SectorSpec sector;
    sector.total_spin = spin;
    sector.multiplicity = sector_multiplicity(n_spins, spin);
    sector.weight = weight;
    sector.internal_state = state;
    bath.sectors.push_back(sector);
  }
  return bath;
}

}  // namespace

BathSpec unpolarized_bath(int n_spins) {
  return make_bath(n_spins, BathModel::Unpolarized);
}

BathSpec polarized_bath(int n_spins) {
  return make_bath(n_spins, BathModel::PolarizedGaussianI2);
}

void validate_bath(const BathSpec& bath, double tol) {
  if (bath.n_spins <= 0)
    throw std::invalid_argument("validate_bath: bath size must be positive");
  double sum = 0.0;
  HalfInt previous = HalfInt::from_twice(-1);
  for (const SectorSpec& sector : bath.sectors) {
    if (sector.total_spin <= previous)
      throw std::invalid_argument("validate_bath: sectors must ascend in I");
    if (sector.total_spin.twice() > bath.n_spins ||
        (bath.n_spins - sector.total_spin.twice()) % 2 != 0)
      throw std::invalid_argument("validate_bath: sector spin invalid");
    if (sector.weight < -tol)
      throw std::invalid_argument("validate_bath: negative sector weight");
    previous = sector.total_spin;
    sum += sector.weight;
  }
  if (std::abs(sum - 1.0) > tol)
    throw std::invalid_argument("validate_bath: weights must sum to 1");
}

}  // namespace telebath
