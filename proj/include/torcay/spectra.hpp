#pragma once

#include "torcay/cayley.hpp"
#include "torcay/lattice.hpp"
#include "torcay/types.hpp"

#include <span>
#include <vector>

namespace torcay {

/// |e^{i t1} + e^{i t2} + e^{i (t1+t2)}|^2, the squared modulus of the
/// three-bond character sum. Values lie in [0, 9].
double bond_sum_sq(double theta1, double theta2);

/// min over x of bond_sum_sq(theta, x), attained at x = theta/2 + pi;
/// equals 3 + 2 cos(theta) - 4 cos(theta/2). Requires theta in [-pi, pi].
double bond_sum_sq_min(double theta);

/// Exact test for bond_sum_sq(theta1, theta2) == 0: the three phases must be
/// the three cube roots of unity, i.e. (r1, r2) = (1/3, 2/3) or (2/3, 1/3).
bool is_zero_character(const Character& chi);

/// Nonnegative eigenvalue contributed by one character. The exact zeros and
/// the trivial character are special-cased so ties and zero gaps are decided
/// without float noise.
double character_eigenvalue(const Character& chi);

enum class SpectrumSource { ClosedForm, Oracle };

struct SpectrumReport {
  std::vector<double> eigenvalues;  // sorted descending, 2n values
  SpectrumSource source;
  double gap;  // difference between ranks n and n+1
  Int index;   // lattice index n
};

/// Spectrum of X_N from the character formula: one +/- pair per character.
SpectrumReport closed_form_spectrum(const Lattice& lattice);

/// 2 * min over characters of the character eigenvalue. Exact zero whenever
/// a character hits the zero of the bond sum.
double homo_lumo_gap(const Lattice& lattice);

/// Characters attaining the minimum character eigenvalue (ties within tol).
std::vector<Character> gap_minimizers(const Lattice& lattice, double tol = 1e-9);

/// Difference between the (M/2)-th and (M/2+1)-th largest entries of a
/// descending-sorted even-length spectrum. Throws on odd or empty input.
double gap_from_sorted_spectrum(std::span<const double> eigenvalues);

/// Independent check: all eigenvalues of the adjacency matrix via cyclic
/// Jacobi rotations. Caps the size at 4000 vertices.
SpectrumReport oracle_spectrum(const FullereneGraph& graph);

/// Grid check that bond_sum_sq(theta, x) >= bond_sum_sq_min(theta) for all
/// sampled pairs, with equality at x = theta/2 + pi. Thetas in [-pi, pi].
bool check_lower_envelope(std::span<const double> theta_samples,
                          std::span<const double> x_samples, double tol = 1e-12);

}  // namespace torcay
