#include "torcay/families.hpp"

#include "torcay/spectra.hpp"

#include <cmath>
#include <stdexcept>

namespace torcay {

namespace {

void require_positive(Int p, Int q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("family parameters p, q must be positive");
  }
}

}  // namespace

Lattice family_lattice(Int p, Int q) {
  require_positive(p, q);
  Mat2 basis;
  basis << p, -q, 0, 2 * q;
  return Lattice(basis);
}

double gap_pq(Int p, Int q) {
  require_positive(p, q);
  if (p % 3 == 0) return 0.0;  // a character lands on the zero of the bond sum

  const auto reduced_angle = [p](Int u) {
    double theta = two_pi * static_cast<double>(u) / static_cast<double>(p);
    if (theta > pi) theta -= two_pi;  // the envelope is even, one wrap suffices
    return theta;
  };
  const double lo = bond_sum_sq_min(reduced_angle(p / 3));
  const double hi = bond_sum_sq_min(reduced_angle(p / 3 + 1));
  return 2.0 * std::sqrt(std::min(lo, hi));
}

double gap_asymptote(Int p) { return two_pi / (std::sqrt(3.0) * static_cast<double>(p)); }

double asymptotic_deviation(Int p) {
  if (p < 1) throw std::invalid_argument("asymptotic_deviation: p must be positive");
  if (p % 3 == 0) {
    throw std::domain_error("asymptotic_deviation: undefined when 3 divides p");
  }
  return static_cast<double>(p) * static_cast<double>(p) *
         std::abs(gap_pq(p, 1) - gap_asymptote(p));
}

std::vector<FamilyPoint> scan(Int p_max, std::span<const Int> q_list, double tol) {
  if (p_max < 1) throw std::invalid_argument("scan: p_max must be positive");
  std::vector<FamilyPoint> rows;
  rows.reserve(static_cast<std::size_t>(p_max) * q_list.size());
  for (Int p = 1; p <= p_max; ++p) {
    for (Int q : q_list) {
      FamilyPoint row;
      row.p = p;
      row.q = q;
      row.lattice = family_lattice(p, q);
      row.vertices = 2 * row.lattice.index();
      row.gap = gap_pq(p, q);
      row.character_gap = homo_lumo_gap(row.lattice);
      row.asymptote = gap_asymptote(p);
      row.deviation = std::abs(row.gap - row.asymptote);
      row.consistent = std::abs(row.gap - row.character_gap) <= tol;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace torcay
