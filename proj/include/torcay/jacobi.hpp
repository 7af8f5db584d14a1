#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace torcay {

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi sweeps. Each
/// rotation annihilates one off-diagonal pair; a sweep visits the whole
/// upper triangle. Stops when the off-diagonal Frobenius norm drops below
/// rel_tol times the Frobenius norm of the input, throws if the sweep
/// budget is exhausted first. Returns eigenvalues sorted descending.
template <typename Scalar>
std::vector<Scalar> jacobi_eigenvalues(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m,
                                       int max_sweeps = 50, Scalar rel_tol = Scalar(1e-12)) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) {
    throw std::invalid_argument("jacobi_eigenvalues: matrix is not square");
  }
  const Scalar total = m.norm();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > rel_tol * total) {
    throw std::invalid_argument("jacobi_eigenvalues: matrix is not symmetric");
  }

  auto collect = [&m, n]() {
    std::vector<Scalar> values(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = m(i, i);
    std::sort(values.begin(), values.end(), std::greater<Scalar>());
    return values;
  };
  if (total == Scalar(0)) return collect();

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Scalar off2 = Scalar(0);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) off2 += m(i, j) * m(i, j);
    }
    if (std::sqrt(Scalar(2) * off2) < rel_tol * total) return collect();

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = m(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar app = m(p, p);
        const Scalar aqq = m(q, q);
        const Scalar theta = (aqq - app) / (Scalar(2) * apq);
        const Scalar sign = theta >= Scalar(0) ? Scalar(1) : Scalar(-1);
        const Scalar t = sign / (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;

        m(p, p) = app - t * apq;
        m(q, q) = aqq + t * apq;
        m(p, q) = m(q, p) = Scalar(0);
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Scalar akp = m(k, p);
          const Scalar akq = m(k, q);
          m(k, p) = m(p, k) = c * akp - s * akq;
          m(k, q) = m(q, k) = s * akp + c * akq;
        }
      }
    }
  }
  throw std::runtime_error("jacobi_eigenvalues: no convergence within the sweep budget");
}

}  // namespace torcay
