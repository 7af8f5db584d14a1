#include "torcay/spectra.hpp"

#include "torcay/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace torcay {

double bond_sum_sq(double theta1, double theta2) {
  // Expanded form of |e^{i t1} + e^{i t2} + e^{i(t1+t2)}|^2; clamped at zero
  // because the exact value is nonnegative.
  const double v = 3.0 + 2.0 * std::cos(theta1) + 2.0 * std::cos(theta2) +
                   2.0 * std::cos(theta1 - theta2);
  return v < 0.0 ? 0.0 : v;
}

double bond_sum_sq_min(double theta) {
  if (!(theta >= -pi - 1e-9 && theta <= pi + 1e-9)) {
    throw std::domain_error("bond_sum_sq_min: theta outside [-pi, pi]");
  }
  const double v = 3.0 + 2.0 * std::cos(theta) - 4.0 * std::cos(0.5 * theta);
  return v < 0.0 ? 0.0 : v;
}

bool is_zero_character(const Character& chi) {
  const Rational third(1, 3);
  const Rational two_thirds(2, 3);
  return (chi.r1 == third && chi.r2 == two_thirds) ||
         (chi.r1 == two_thirds && chi.r2 == third);
}

double character_eigenvalue(const Character& chi) {
  if (chi.trivial()) return 3.0;
  if (is_zero_character(chi)) return 0.0;
  return std::sqrt(bond_sum_sq(chi.theta1(), chi.theta2()));
}

SpectrumReport closed_form_spectrum(const Lattice& lattice) {
  SpectrumReport report;
  report.source = SpectrumSource::ClosedForm;
  report.index = lattice.index();
  report.eigenvalues.reserve(static_cast<std::size_t>(2 * lattice.index()));
  for (const Character& chi : characters(lattice)) {
    const double value = character_eigenvalue(chi);
    report.eigenvalues.push_back(value);
    report.eigenvalues.push_back(value == 0.0 ? 0.0 : -value);  // avoid -0.0
  }
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(), std::greater<double>());
  report.gap = gap_from_sorted_spectrum(report.eigenvalues);
  return report;
}

double homo_lumo_gap(const Lattice& lattice) {
  double least = 3.0;  // the trivial character's value
  for (const Character& chi : characters(lattice)) {
    least = std::min(least, character_eigenvalue(chi));
  }
  return 2.0 * least;
}

std::vector<Character> gap_minimizers(const Lattice& lattice, double tol) {
  const auto chars = characters(lattice);
  double least = 3.0;
  for (const Character& chi : chars) least = std::min(least, character_eigenvalue(chi));
  std::vector<Character> minimizers;
  for (const Character& chi : chars) {
    if (character_eigenvalue(chi) <= least + tol) minimizers.push_back(chi);
  }
  return minimizers;
}

double gap_from_sorted_spectrum(std::span<const double> eigenvalues) {
  const std::size_t m = eigenvalues.size();
  if (m == 0 || m % 2 != 0) {
    throw std::invalid_argument("gap_from_sorted_spectrum: even positive length required");
  }
  const double gap = eigenvalues[m / 2 - 1] - eigenvalues[m / 2];
  return gap == 0.0 ? 0.0 : gap;  // avoid -0.0
}

SpectrumReport oracle_spectrum(const FullereneGraph& graph) {
  const Eigen::Index size = graph.adjacency.rows();
  if (size > 4000) {
    throw std::invalid_argument("oracle_spectrum: matrix larger than the 4000-vertex cap");
  }
  SpectrumReport report;
  report.source = SpectrumSource::Oracle;
  report.index = graph.lattice.index();
  report.eigenvalues = jacobi_eigenvalues<double>(graph.adjacency.cast<double>());
  report.gap = gap_from_sorted_spectrum(report.eigenvalues);
  return report;
}

bool check_lower_envelope(std::span<const double> theta_samples,
                          std::span<const double> x_samples, double tol) {
  for (double theta : theta_samples) {
    const double envelope = bond_sum_sq_min(theta);
    if (std::abs(bond_sum_sq(theta, theta / 2.0 + pi) - envelope) > tol) return false;
    for (double x : x_samples) {
      if (bond_sum_sq(theta, x) < envelope - tol) return false;
    }
  }
  return true;
}

}  // namespace torcay
