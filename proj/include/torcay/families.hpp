#pragma once

#include "torcay/lattice.hpp"
#include "torcay/types.hpp"

#include <span>
#include <vector>

namespace torcay {

/// The sublattice N_{p,q} generated by (p, 0) and (-q, 2q); index 2pq.
Lattice family_lattice(Int p, Int q);

/// HOMO-LUMO gap of X_{p,q} in closed form: twice the smaller of the
/// envelope values at 2*pi*floor(p/3)/p and 2*pi*ceil(p/3)/p, arguments
/// reduced into [-pi, pi]. Independent of q; exactly 0 when 3 | p.
double gap_pq(Int p, Int q);

/// Large-p gap asymptote 2*pi/(sqrt(3)*p).
double gap_asymptote(Int p);

/// p^2 * |gap_pq(p, 1) - gap_asymptote(p)|, the second-order coefficient
/// witness; bounded in p. Requires 3 not dividing p.
double asymptotic_deviation(Int p);

struct FamilyPoint {
  Int p = 0;
  Int q = 0;
  Lattice lattice{Mat2::Identity()};
  Int vertices = 0;  // 4pq
  double gap = 0.0;            // closed form (gap_pq)
  double character_gap = 0.0;  // full character minimum, for cross-checking
  double asymptote = 0.0;
  double deviation = 0.0;  // |gap - asymptote|
  bool consistent = true;  // |gap - character_gap| <= tol
};

/// One row per (p, q) with p <= p_max, q from q_list, gap computed by both
/// routes; rows are flagged when the routes disagree beyond tol.
std::vector<FamilyPoint> scan(Int p_max, std::span<const Int> q_list, double tol = 1e-12);

}  // namespace torcay
