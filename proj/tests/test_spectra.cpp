#include "torcay/spectra.hpp"

#include "torcay/jacobi.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace torcay;

namespace {

Lattice family(Int p, Int q) {
  Mat2 m;
  m << p, -q, 0, 2 * q;
  return Lattice(m);
}

std::vector<Lattice> all_lattices_up_to(Int max_index) {
  std::vector<Lattice> lattices;
  for (Int n = 1; n <= max_index; ++n) {
    for (Int h11 = 1; h11 <= n; ++h11) {
      if (n % h11 != 0) continue;
      const Int h22 = n / h11;
      for (Int h21 = 0; h21 < h22; ++h21) {
        Mat2 m;
        m << h11, 0, h21, h22;
        lattices.push_back(Lattice(m));
      }
    }
  }
  return lattices;
}

}  // namespace

TEST_SUITE_BEGIN("spectra");

TEST_CASE("bond_sum_sq: anchor values") {
  CHECK(bond_sum_sq(0.0, 0.0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(bond_sum_sq(0.0, pi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bond_sum_sq(2.0 * pi / 3.0, 4.0 * pi / 3.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("bond_sum_sq: range and complex-modulus cross-check") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> angle(-two_pi, two_pi);
  for (int trial = 0; trial < 2000; ++trial) {
    const double t1 = angle(rng);
    const double t2 = angle(rng);
    const double value = bond_sum_sq(t1, t2);
    CHECK(value >= 0.0);
    CHECK(value <= 9.0 + 1e-12);
    const auto direct = std::polar(1.0, t1) + std::polar(1.0, t2) + std::polar(1.0, t1 + t2);
    CHECK(value == doctest::Approx(std::norm(direct)).epsilon(1e-12));
  }
}

TEST_CASE("bond_sum_sq_min: anchor values, evenness, domain") {
  CHECK(bond_sum_sq_min(0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bond_sum_sq_min(2.0 * pi / 3.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(bond_sum_sq_min(pi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(bond_sum_sq_min(3.5), std::domain_error);

  std::mt19937 rng(9);
  std::uniform_real_distribution<double> angle(0.0, pi);
  for (int trial = 0; trial < 500; ++trial) {
    const double theta = angle(rng);
    CHECK(bond_sum_sq_min(theta) == doctest::Approx(bond_sum_sq_min(-theta)).epsilon(1e-14));
  }
}

TEST_CASE("closed_form_spectrum: smallest quotients") {
  const SpectrumReport full = closed_form_spectrum(Lattice(Mat2::Identity()));
  CHECK(full.eigenvalues == std::vector<double>{3.0, -3.0});
  CHECK(full.gap == 6.0);

  const SpectrumReport small = closed_form_spectrum(family(1, 1));
  REQUIRE(small.eigenvalues.size() == 4);
  CHECK(small.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(small.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(small.eigenvalues[2] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(small.eigenvalues[3] == doctest::Approx(-3.0).epsilon(1e-14));
}

TEST_CASE("closed_form_spectrum: agrees with the oracle on X_{2,1}") {
  const Lattice n = family(2, 1);
  const SpectrumReport closed = closed_form_spectrum(n);
  FullereneGraph g = build_graph(n);
  const SpectrumReport oracle = oracle_spectrum(g);
  REQUIRE(closed.eigenvalues.size() == 8);
  REQUIRE(oracle.eigenvalues.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(closed.eigenvalues[i] == doctest::Approx(oracle.eigenvalues[i]).epsilon(1e-10));
  }
}

TEST_CASE("homo_lumo_gap: anchor lattices") {
  CHECK(homo_lumo_gap(Lattice(Mat2::Identity())) == 6.0);
  CHECK(homo_lumo_gap(family(1, 1)) == doctest::Approx(2.0).epsilon(1e-14));
  for (Int q : {1, 2, 5}) {
    CHECK(homo_lumo_gap(family(3, q)) == 0.0);  // exact zero, not approximate
  }
}

TEST_CASE("gap_from_sorted_spectrum") {
  const std::vector<double> a{3, 1, -1, -3};
  const std::vector<double> b{3, 0, 0, -3};
  const std::vector<double> c{1, 1, -1, -1};
  CHECK(gap_from_sorted_spectrum(a) == 2.0);
  CHECK(gap_from_sorted_spectrum(b) == 0.0);
  CHECK(gap_from_sorted_spectrum(c) == 2.0);
  const std::vector<double> odd{3, 0, -3};
  CHECK_THROWS_AS(gap_from_sorted_spectrum(odd), std::invalid_argument);
  CHECK_THROWS_AS(gap_from_sorted_spectrum(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("jacobi_eigenvalues: analytic cases") {
  Eigen::MatrixXd two(2, 2);
  two << 0, 3, 3, 0;
  const auto pair = jacobi_eigenvalues(two);
  CHECK(pair[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(pair[1] == doctest::Approx(-3.0).epsilon(1e-12));

  // 6-cycle: circulant spectrum 2 cos(2 pi k / 6).
  Eigen::MatrixXd ring = Eigen::MatrixXd::Zero(6, 6);
  for (int i = 0; i < 6; ++i) {
    ring(i, (i + 1) % 6) = 1;
    ring((i + 1) % 6, i) = 1;
  }
  const auto cycle = jacobi_eigenvalues(ring);
  const std::vector<double> expected{2, 1, 1, -1, -1, -2};
  REQUIRE(cycle.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(cycle[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }

  FullereneGraph g = build_graph(family(1, 1));
  const auto quartet = jacobi_eigenvalues<double>(g.adjacency.cast<double>());
  const std::vector<double> expected4{3, 1, -1, -3};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(quartet[i] == doctest::Approx(expected4[i]).epsilon(1e-12));
  }
}

TEST_CASE("jacobi_eigenvalues: random symmetric matrices against Eigen") {
  std::mt19937 rng(31);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const int size = 10 + 7 * trial;
    Eigen::MatrixXd m(size, size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = gauss(rng);
    }
    const auto ours = jacobi_eigenvalues(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> reference(m, Eigen::EigenvaluesOnly);
    for (int i = 0; i < size; ++i) {
      CHECK(ours[static_cast<std::size_t>(i)] ==
            doctest::Approx(reference.eigenvalues()(size - 1 - i)).epsilon(1e-9));
    }
  }
}

TEST_CASE("jacobi_eigenvalues: input validation") {
  Eigen::MatrixXd rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(jacobi_eigenvalues(rect), std::invalid_argument);
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(jacobi_eigenvalues(asym), std::invalid_argument);
}

TEST_CASE("oracle_spectrum: rejects oversized graphs only by the cap") {
  FullereneGraph g = build_graph(family(1, 1));
  CHECK_NOTHROW(oracle_spectrum(g));
}

TEST_CASE("spectrum invariants across every lattice of index <= 10") {
  for (const Lattice& n : all_lattices_up_to(10)) {
    FullereneGraph g = build_graph(n);
    const ValidityReport validity = is_simple_fullerene(g);
    const SpectrumReport closed = closed_form_spectrum(n);
    const SpectrumReport oracle = oracle_spectrum(g);
    const std::size_t m = closed.eigenvalues.size();
    REQUIRE(m == static_cast<std::size_t>(2 * n.index()));
    REQUIRE(oracle.eigenvalues.size() == m);

    double max_diff = 0.0;
    double sum_closed = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      max_diff = std::max(max_diff, std::abs(closed.eigenvalues[i] - oracle.eigenvalues[i]));
      sum_closed += closed.eigenvalues[i];
      sum_sq += closed.eigenvalues[i] * closed.eigenvalues[i];
      // negation symmetry is exact in the closed form
      CHECK(closed.eigenvalues[i] == -closed.eigenvalues[m - 1 - i]);
    }
    CHECK(max_diff <= 1e-8);
    CHECK(std::abs(sum_closed) <= 1e-9);
    if (validity.simple) {
      CHECK(sum_sq == doctest::Approx(6.0 * static_cast<double>(n.index())).epsilon(1e-9));
    }
    CHECK(closed.eigenvalues[0] == 3.0);
    CHECK(closed.eigenvalues[1] < 3.0);  // multiplicity one
    CHECK(homo_lumo_gap(n) == closed.gap);
  }
}

TEST_CASE("maximum eigenvalue comes from the trivial character only") {
  for (const Lattice& n : all_lattices_up_to(12)) {
    for (const Character& chi : characters(n)) {
      if (chi.trivial()) {
        CHECK(character_eigenvalue(chi) == 3.0);
      } else {
        CHECK(character_eigenvalue(chi) < 3.0 - 1e-6);
      }
    }
  }
}

TEST_CASE("check_lower_envelope on a coarse grid") {
  std::vector<double> thetas, xs;
  for (int i = 0; i <= 100; ++i) thetas.push_back(-pi + two_pi * i / 100.0);
  for (int i = 0; i <= 100; ++i) xs.push_back(-pi + two_pi * i / 100.0);
  CHECK(check_lower_envelope(thetas, xs));

  // theta = 0 slice: 5 + 4 cos(x), minimum 1 at x = pi.
  CHECK(bond_sum_sq(0.0, pi) == doctest::Approx(bond_sum_sq_min(0.0)).epsilon(1e-14));
  CHECK(bond_sum_sq(2.0 * pi / 3.0, pi / 3.0 + pi) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("gap_minimizers: ridge location for X_{5,1}") {
  const auto minimizers = gap_minimizers(family(5, 1));
  REQUIRE(minimizers.size() == 2);  // one ridge point and its conjugate
  for (const Character& chi : minimizers) {
    // theta1 = 2 pi u / 5 with u in {2, 3} (the ceil candidate and its mirror)
    CHECK(chi.r1.den == 5);
    CHECK((chi.r1.num == 2 || chi.r1.num == 3));
    // theta2 = theta1/2 + pi with theta1 taken in (-pi, pi]
    const Int principal = 2 * chi.r1.num <= chi.r1.den ? chi.r1.num : chi.r1.num - chi.r1.den;
    const Rational expected = Rational(principal, 2 * chi.r1.den) + Rational(1, 2);
    CHECK(chi.r2 == expected);
  }
}

TEST_SUITE_END();
