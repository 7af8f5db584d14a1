#pragma once

#include "torcay/types.hpp"

#include <vector>

namespace torcay {

/// Column-style Hermite normal form [[h11, 0], [h21, h22]] with
/// h11, h22 > 0 and 0 <= h21 < h22. Unique per lattice; the input columns
/// and the result generate the same lattice. Throws on a singular basis.
Mat2 hermite_normal_form(const Mat2& basis);

/// Rank-2 integer sublattice N of Z^2, given by the columns of a basis
/// matrix. Coordinates are with respect to the translation generators
/// v1, v2 of the tiling. Immutable after construction.
class Lattice {
 public:
  explicit Lattice(const Mat2& basis);

  static Lattice from_columns(const Vec2& c1, const Vec2& c2);

  const Mat2& basis() const { return basis_; }
  const Mat2& hnf() const { return hnf_; }
  /// Index n = |Z^2 / N| = |det(basis)|.
  Int index() const { return index_; }

  /// True iff w is an integer combination of the basis columns.
  bool contains(const Vec2& w) const;

  /// Canonical representative of w + N, with 0 <= x < h11 and 0 <= y < h22.
  Vec2 reduce(const Vec2& w) const;

  /// Position of a canonical representative in coset_reps() order.
  Int rep_index(const Vec2& reduced) const;

  /// All n canonical representatives; (0,0) first, x-major order.
  std::vector<Vec2> coset_reps() const;

 private:
  Mat2 basis_;
  Mat2 hnf_;
  Int index_;
};

/// Character of Z^2/N, stored as an exact pair of rationals in [0,1):
/// the value on x*v1 + y*v2 is exp(2*pi*i*(r1*x + r2*y)).
struct Character {
  Rational r1;
  Rational r2;

  double theta1() const { return r1.angle(); }
  double theta2() const { return r2.angle(); }

  /// Exact exponent r1*x + r2*y mod 1.
  Rational pairing(const Vec2& w) const { return r1 * w(0) + r2 * w(1); }

  bool trivial() const { return r1.zero() && r2.zero(); }

  friend bool operator==(const Character& a, const Character& b) {
    return a.r1 == b.r1 && a.r2 == b.r2;
  }
};

/// The n characters of Z^2/N (the dual group). The trivial character comes
/// first; the list is closed under negation mod 1. Enumerated through the
/// HNF of the transposed basis: r = B^-T k over coset representatives k.
std::vector<Character> characters(const Lattice& lattice);

}  // namespace torcay
